#pragma once

#include <string_view>
#include <vector>

#include "braidops/pddo.hpp"

namespace braidops {

enum class Provenance { MainCase1, MainCase2, DegenT, WithVanQ0, ZetaPair, UserSupplied };

std::string_view to_string(Provenance p);

/// Operators pi_1..pi_{n-1} acting on n variables.
struct OperatorFamily {
    int n = 0;
    std::vector<Pddo> ops;  // ops[i - 1] is pi_i
    Provenance provenance = Provenance::UserSupplied;

    const Pddo& op(int i) const { return ops.at(static_cast<std::size_t>(i - 1)); }
    int size() const { return static_cast<int>(ops.size()); }
};

/// Checks that ops.size() == n - 1 and n >= 2.
void validate_shape(const OperatorFamily& fam);

}  // namespace braidops
