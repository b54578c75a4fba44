#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "braidops/family.hpp"

namespace braidops {

/// Outcome of comparing pi varpi pi with varpi pi varpi, where pi acts on (x, y) and varpi
/// on (y, z). Both sides are expanded as sums c_g * g f over the six permutations g of
/// {x, y, z}, with every c_g written over (x-y)^2 (x-z) (y-z)^2.
struct CubicReport {
    // Order of the flags and labels: f, sf, σf, sσf, σsf, sσsf (= σsσf).
    static const std::array<std::string, 6> labels;

    std::array<bool, 6> coefficient_equal{};
    bool pass = false;
    // First failing coefficient: LHS numerator minus RHS numerator in x1, x2, x3.
    std::optional<std::string> failing_label;
    std::optional<MultiPoly> difference;
};

CubicReport cubic_braid_check(const Pddo& pi, const Pddo& varpi);

/// pi_i pi_k = pi_k pi_i on all monomials in x_i, x_{i+1}, x_k, x_{k+1} of degree <= 2 in
/// each variable. Throws ConstraintViolation unless |k - i| >= 2.
bool quad_commute_check(const Pddo& pi_i, const Pddo& pi_k, int i, int k, int n);

/// Q(x,y) Qt(x,z) Q(y,z) == Qt(x,y) Q(x,z) Qt(y,z). Throws Error on a zero argument.
bool almost_equal(const SlotPoly& Q, const SlotPoly& Qt);

struct CubicRelation {
    int i = 0;  // pi_i pi_{i+1} pi_i = pi_{i+1} pi_i pi_{i+1}
    CubicReport report;
};

struct QuadRelation {
    int i = 0;
    int k = 0;
    bool pass = false;
};

struct FamilyReport {
    std::vector<CubicRelation> cubic;
    std::vector<QuadRelation> quad;
    bool pass = false;

    /// Index of the first failing cubic relation, if any.
    std::optional<int> first_cubic_failure() const;
};

/// Every consecutive and every distant pair of the family, relations checked in parallel.
FamilyReport family_braid_check(const OperatorFamily& fam);
/// Same checks, one relation after another.
FamilyReport family_braid_check_serial(const OperatorFamily& fam);

}  // namespace braidops
