#pragma once

#include "braidops/multipoly.hpp"

namespace braidops {

/// Divided difference (f - s_i f) / (x_i - x_{i+1}). The result is symmetric in x_i, x_{i+1}.
MultiPoly ddiff(const MultiPoly& f, int i);

/// Divided difference in the slots, (p(u,v) - p(v,u)) / (u - v).
SlotPoly ddiff(const SlotPoly& p);

struct DPositiveSplit {
    SlotPoly sym;  // invariant under u <-> v
    SlotPoly pos;  // only monomials u^r v^s with r > s
};

/// Unique decomposition p = sym + pos into a symmetric and a d-positive part.
DPositiveSplit dpositive_split(const SlotPoly& p);

bool is_dpositive(const SlotPoly& p);

/// The unique d-positive g with ddiff(g) = phi. Throws Error if phi is not symmetric.
SlotPoly dpositive_lift(const SlotPoly& phi);

}  // namespace braidops
