#include "braidops/commute.hpp"

#include <exception>
#include <mutex>

#include "braidops/braid.hpp"
#include "braidops/divdiff.hpp"
#include "braidops/error.hpp"

namespace braidops {

bool commutes_same_index(const Pddo& op1, const Pddo& op2) {
    if (op1.degeneracy() != Degeneracy::NonDegenerate || op2.degeneracy() != Degeneracy::NonDegenerate) {
        return compose_same_index(op1, op2) == compose_same_index(op2, op1);
    }
    const SlotPoly& q = op1.Q0();
    const SlotPoly& qh = op2.Q0();
    return q * ddiff(qh) == qh * ddiff(q) && q * ddiff(op2.R0()) == qh * ddiff(op1.R0());
}

bool consecutive_commute_probe(const Pddo& pi_i, const Pddo& pi_k, int i, int k, int n, int max_degree) {
    if (std::abs(i - k) != 1) throw ConstraintViolation("consecutive probe needs |i - k| = 1");
    if (i < 1 || k < 1 || i >= n || k >= n) throw IndexError("operator index outside 1..n-1");
    const int lo = std::min(i, k);
    const int base = max_degree + 1;
    Exponent e(n, 0);
    for (int code = 0; code < base * base * base; ++code) {
        e[lo - 1] = code % base;
        e[lo] = (code / base) % base;
        e[lo + 1] = code / (base * base);
        const MultiPoly m = MultiPoly::monomial(e);
        if (pi_i.apply(i, pi_k.apply(k, m)) != pi_k.apply(k, pi_i.apply(i, m))) return false;
    }
    return true;
}

namespace {

CommuteReport skeleton(const OperatorFamily& fam1, const OperatorFamily& fam2) {
    validate_shape(fam1);
    validate_shape(fam2);
    if (fam1.n != fam2.n) {
        throw DimensionMismatch("families act on " + std::to_string(fam1.n) + " and " + std::to_string(fam2.n) +
                                " variables");
    }
    CommuteReport report;
    for (int i = 1; i < fam1.n; ++i) {
        for (int k = 1; k < fam1.n; ++k) {
            const int gap = std::abs(i - k);
            const IndexRelation rel =
                gap == 0 ? IndexRelation::Equal : (gap == 1 ? IndexRelation::Consecutive : IndexRelation::Distant);
            report.pairs.push_back({i, k, rel, false});
        }
    }
    return report;
}

void run_pair(const OperatorFamily& fam1, const OperatorFamily& fam2, CommutePair& p) {
    const Pddo& a = fam1.op(p.i);
    const Pddo& b = fam2.op(p.k);
    switch (p.relation) {
        case IndexRelation::Equal:
            p.commutes = commutes_same_index(a, b);
            break;
        case IndexRelation::Distant:
            p.commutes = quad_commute_check(a, b, p.i, p.k, fam1.n);
            break;
        case IndexRelation::Consecutive:
            p.commutes = consecutive_commute_probe(a, b, p.i, p.k, fam1.n);
            break;
    }
}

void summarize(CommuteReport& report) {
    report.equal_pass = report.distant_pass = report.consecutive_pass = true;
    for (const auto& p : report.pairs) {
        bool& slot = p.relation == IndexRelation::Equal
                         ? report.equal_pass
                         : (p.relation == IndexRelation::Distant ? report.distant_pass : report.consecutive_pass);
        slot = slot && p.commutes;
    }
    report.pass = report.equal_pass && report.distant_pass && report.consecutive_pass;
}

}  // namespace

CommuteReport cross_family_commute(const OperatorFamily& fam1, const OperatorFamily& fam2) {
    CommuteReport report = skeleton(fam1, fam2);
    const auto count = static_cast<long>(report.pairs.size());
    std::exception_ptr failure;
    std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < count; ++j) {
        try {
            run_pair(fam1, fam2, report.pairs[static_cast<std::size_t>(j)]);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    summarize(report);
    return report;
}

CommuteReport cross_family_commute_serial(const OperatorFamily& fam1, const OperatorFamily& fam2) {
    CommuteReport report = skeleton(fam1, fam2);
    for (auto& p : report.pairs) run_pair(fam1, fam2, p);
    summarize(report);
    return report;
}

}  // namespace braidops
