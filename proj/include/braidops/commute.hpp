#pragma once

#include <vector>

#include "braidops/family.hpp"

namespace braidops {

/// Whether op1 and op2 commute when acting on the same pair of variables.
bool commutes_same_index(const Pddo& op1, const Pddo& op2);

enum class IndexRelation { Equal, Consecutive, Distant };

struct CommutePair {
    int i = 0;  // index in the first family
    int k = 0;  // index in the second family
    IndexRelation relation = IndexRelation::Equal;
    bool commutes = false;
};

struct CommuteReport {
    std::vector<CommutePair> pairs;
    bool equal_pass = false;
    bool distant_pass = false;
    bool consecutive_pass = false;
    bool pass = false;
};

/// pi_i vs hat-pi_k for every i, k. Consecutive pairs are compared on all monomials of
/// degree <= 4 in each of the three variables involved.
CommuteReport cross_family_commute(const OperatorFamily& fam1, const OperatorFamily& fam2);
CommuteReport cross_family_commute_serial(const OperatorFamily& fam1, const OperatorFamily& fam2);

/// pi_i(pi_k f) == pi_k(pi_i f) for |i - k| = 1 on monomials of degree <= max_degree in each of
/// x_min, .., x_max+1.
bool consecutive_commute_probe(const Pddo& pi_i, const Pddo& pi_k, int i, int k, int n, int max_degree = 4);

}  // namespace braidops
