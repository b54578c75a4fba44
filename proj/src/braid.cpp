#include "braidops/braid.hpp"

#include <exception>
#include <map>
#include <mutex>

#include "braidops/error.hpp"

namespace braidops {

const std::array<std::string, 6> CubicReport::labels{"f", "sf", "σf", "sσf", "σsf", "sσsf"};

namespace {

// A permutation g of the variables {x1, x2, x3} (0-based), acting on polynomials by
// sending x_k to x_{g[k]}. Composition (g h)[k] = g[h[k]] means "apply h, then g".
using Perm3 = std::array<int, 3>;

constexpr Perm3 kId{0, 1, 2};
constexpr Perm3 kS{1, 0, 2};      // s = s_i
constexpr Perm3 kSigma{0, 2, 1};  // σ = s_{i+1}

Perm3 compose(const Perm3& g, const Perm3& h) { return {g[h[0]], g[h[1]], g[h[2]]}; }

// Exponents of (x1-x2), (x1-x3), (x2-x3).
using DenExp = std::array<int, 3>;

int pair_index(int a, int b) { return a == 0 ? b - 1 : 2; }

const std::array<MultiPoly, 3>& differences() {
    static const std::array<MultiPoly, 3> d{
        MultiPoly::variable(3, 1) - MultiPoly::variable(3, 2),
        MultiPoly::variable(3, 1) - MultiPoly::variable(3, 3),
        MultiPoly::variable(3, 2) - MultiPoly::variable(3, 3),
    };
    return d;
}

MultiPoly permute(const MultiPoly& f, const Perm3& g) {
    MultiPoly out(3);
    Exponent e(3);
    for (const auto& [fe, c] : f.terms()) {
        for (int k = 0; k < 3; ++k) e[g[k]] = fe[k];
        out.add_term(e, c);
    }
    return out;
}

// coefficient num / prod (difference_j)^den[j]
struct Coef {
    MultiPoly num{3};
    DenExp den{0, 0, 0};
};

MultiPoly raise_to(const Coef& c, const DenExp& target) {
    MultiPoly out = c.num;
    for (int j = 0; j < 3; ++j) {
        for (int p = c.den[j]; p < target[j]; ++p) out = out * differences()[j];
    }
    return out;
}

// Element of the twisted group algebra: sum of coef_g * g.
using Element = std::map<Perm3, Coef>;

void accumulate(Element& acc, const Perm3& g, Coef c) {
    auto it = acc.find(g);
    if (it == acc.end()) {
        acc.emplace(g, std::move(c));
        return;
    }
    DenExp common;
    for (int j = 0; j < 3; ++j) common[j] = std::max(it->second.den[j], c.den[j]);
    it->second.num = raise_to(it->second, common) + raise_to(c, common);
    it->second.den = common;
}

// g applied to a coefficient, including its denominator.
Coef act(const Perm3& g, const Coef& c) {
    Coef out{permute(c.num, g), {0, 0, 0}};
    bool negate = false;
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (int j = 0; j < 3; ++j) {
        int a = g[pairs[j].first];
        int b = g[pairs[j].second];
        if (a > b) {
            std::swap(a, b);
            if (c.den[j] % 2 == 1) negate = !negate;
        }
        out.den[pair_index(a, b)] += c.den[j];
    }
    if (negate) out.num = -out.num;
    return out;
}

Element multiply(const Element& lhs, const Element& rhs) {
    Element out;
    for (const auto& [g, a] : lhs) {
        for (const auto& [h, b] : rhs) {
            Coef moved = act(g, b);
            Coef prod{a.num * moved.num, {a.den[0] + moved.den[0], a.den[1] + moved.den[1], a.den[2] + moved.den[2]}};
            accumulate(out, compose(g, h), std::move(prod));
        }
    }
    return out;
}

// pi f = (T f - Q0 t f) / (difference), t the transposition of the two slots.
Element as_element(const Pddo& op, int first, int second, const Perm3& t) {
    Element e;
    if (op.is_zero()) return e;
    DenExp den{0, 0, 0};
    den[pair_index(first, second)] = 1;
    if (!op.T().is_zero()) e.emplace(kId, Coef{op.T().instantiate(first + 1, second + 1, 3), den});
    if (!op.Q0().is_zero()) e.emplace(t, Coef{-op.Q0().instantiate(first + 1, second + 1, 3), den});
    return e;
}

}  // namespace

CubicReport cubic_braid_check(const Pddo& pi, const Pddo& varpi) {
    const Element p = as_element(pi, 0, 1, kS);
    const Element w = as_element(varpi, 1, 2, kSigma);
    const Element lhs = multiply(p, multiply(w, p));
    const Element rhs = multiply(w, multiply(p, w));

    const std::array<Perm3, 6> order{kId,
                                     kS,
                                     kSigma,
                                     compose(kS, kSigma),
                                     compose(kSigma, kS),
                                     compose(kS, compose(kSigma, kS))};
    const DenExp common{2, 1, 2};
    auto numerator = [&](const Element& side, const Perm3& g) {
        auto it = side.find(g);
        return it == side.end() ? MultiPoly(3) : raise_to(it->second, common);
    };

    CubicReport report;
    report.pass = true;
    for (std::size_t k = 0; k < order.size(); ++k) {
        MultiPoly diff = numerator(lhs, order[k]) - numerator(rhs, order[k]);
        report.coefficient_equal[k] = diff.is_zero();
        if (!diff.is_zero() && report.pass) {
            report.pass = false;
            report.failing_label = CubicReport::labels[k];
            report.difference = std::move(diff);
        }
    }
    return report;
}

bool quad_commute_check(const Pddo& pi_i, const Pddo& pi_k, int i, int k, int n) {
    if (std::abs(k - i) < 2) {
        throw ConstraintViolation("quadratic relation needs |k - i| >= 2, got i = " + std::to_string(i) +
                                  ", k = " + std::to_string(k));
    }
    if (i < 1 || k < 1 || i >= n || k >= n) throw IndexError("operator index outside 1..n-1");
    const std::array<int, 4> vars{i, i + 1, k, k + 1};
    Exponent e(n, 0);
    for (int code = 0; code < 81; ++code) {
        int rest = code;
        for (int v : vars) {
            e[v - 1] = rest % 3;
            rest /= 3;
        }
        const MultiPoly m = MultiPoly::monomial(e);
        if (pi_i.apply(i, pi_k.apply(k, m)) != pi_k.apply(k, pi_i.apply(i, m))) return false;
    }
    return true;
}

bool almost_equal(const SlotPoly& Q, const SlotPoly& Qt) {
    if (Q.is_zero() || Qt.is_zero()) throw Error("almost_equal is only defined for nonzero polynomials");
    const MultiPoly lhs = Q.instantiate(1, 2, 3) * Qt.instantiate(1, 3, 3) * Q.instantiate(2, 3, 3);
    const MultiPoly rhs = Qt.instantiate(1, 2, 3) * Q.instantiate(1, 3, 3) * Qt.instantiate(2, 3, 3);
    return lhs == rhs;
}

std::optional<int> FamilyReport::first_cubic_failure() const {
    for (const auto& rel : cubic) {
        if (!rel.report.pass) return rel.i;
    }
    return std::nullopt;
}

namespace {

FamilyReport skeleton(const OperatorFamily& fam) {
    validate_shape(fam);
    if (fam.size() < 2) throw ConstraintViolation("braid relations need at least two operators (n >= 3)");
    FamilyReport report;
    for (int i = 1; i + 1 <= fam.size(); ++i) report.cubic.push_back({i, {}});
    for (int i = 1; i <= fam.size(); ++i) {
        for (int k = i + 2; k <= fam.size(); ++k) report.quad.push_back({i, k, false});
    }
    return report;
}

void run_job(const OperatorFamily& fam, FamilyReport& report, std::size_t job) {
    if (job < report.cubic.size()) {
        auto& rel = report.cubic[job];
        rel.report = cubic_braid_check(fam.op(rel.i), fam.op(rel.i + 1));
    } else {
        auto& rel = report.quad[job - report.cubic.size()];
        rel.pass = quad_commute_check(fam.op(rel.i), fam.op(rel.k), rel.i, rel.k, fam.n);
    }
}

void summarize(FamilyReport& report) {
    report.pass = true;
    for (const auto& rel : report.cubic) report.pass = report.pass && rel.report.pass;
    for (const auto& rel : report.quad) report.pass = report.pass && rel.pass;
}

}  // namespace

FamilyReport family_braid_check(const OperatorFamily& fam) {
    FamilyReport report = skeleton(fam);
    const auto jobs = static_cast<long>(report.cubic.size() + report.quad.size());
    std::exception_ptr failure;
    std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic)
    for (long job = 0; job < jobs; ++job) {
        try {
            run_job(fam, report, static_cast<std::size_t>(job));
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    summarize(report);
    return report;
}

FamilyReport family_braid_check_serial(const OperatorFamily& fam) {
    FamilyReport report = skeleton(fam);
    for (std::size_t job = 0; job < report.cubic.size() + report.quad.size(); ++job) run_job(fam, report, job);
    summarize(report);
    return report;
}

}  // namespace braidops
