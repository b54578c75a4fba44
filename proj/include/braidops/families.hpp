#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "braidops/family.hpp"

namespace braidops {

enum class Case2Line { Line1 = 1, Line2, Line3, Line4 };

std::string to_string(Case2Line line);
/// Accepts "1".."4" or "l1".."l4".
Case2Line parse_case2_line(std::string_view text);

/// Throws ConstraintViolation unless (a, b, c, d) are not all zero and ad = bc.
void validate_abcd(const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d);

/// pi f = (b-c-e) d(x_i f) + [a x_i x_{i+1} + (c+e) x_i + c x_{i+1} + d] d f, without any check on
/// the parameters. Every e is allowed here (the extended first case).
Pddo case1_operator(const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d,
                    const FieldElement& e);

/// One operator of the second case, built from (P^+, Q_+, R_+) of the given line. No checks.
Pddo case2_operator(const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d,
                    Case2Line line);

OperatorFamily main_case1(int n, const FieldElement& a, const FieldElement& b, const FieldElement& c,
                          const FieldElement& d, const FieldElement& e);

OperatorFamily main_case2(int n, const FieldElement& a, const FieldElement& b, const FieldElement& c,
                          const FieldElement& d, const std::vector<Case2Line>& lines);

/// Pairs of lines that give the same operator for these parameters.
std::vector<std::pair<Case2Line, Case2Line>> coinciding_lines(const FieldElement& a, const FieldElement& b,
                                                              const FieldElement& c, const FieldElement& d);

/// Univariate polynomials q_l, q_r, both written in the slot u.
struct FactorPair {
    SlotPoly left;
    SlotPoly right;
};

/// pi_i f = R_i s_i f with R_i(u, v) = q_l^i(u) q_r^i(v) Qhat(u, v). Every pair must multiply to p.
OperatorFamily degenerate_t_family(int n, const SlotPoly& qhat, const SlotPoly& p,
                                   const std::vector<FactorPair>& pairs);

struct ZetaPair {
    Pddo pi;     // acts on (x, y)
    Pddo varpi;  // acts on (y, z): varpi f = a(y + b) f
};

/// The four pairs over Q(z) in which the second operator is a multiplication operator.
ZetaPair zeta_pair(const FieldElement& a, const FieldElement& b, int variant);

/// {pi, varpi} as a family in three variables.
OperatorFamily zeta_family(const FieldElement& a, const FieldElement& b, int variant);

struct IsolatedSpec {
    int index = 0;
    SlotPoly phi;
    SlotPoly psi;
};

struct IntervalSpec {
    int first = 0;
    int last = 0;
    FieldElement a, b, c, d;
    std::vector<Case2Line> lines;  // one per index in first..last
};

/// Indices not listed in either vector form the complement, where pi_i = mu Id.
struct VanQ0Layout {
    std::vector<IsolatedSpec> isolated;
    std::vector<IntervalSpec> intervals;
};

OperatorFamily with_vanishing_q0(int n, const FieldElement& mu, const VanQ0Layout& layout);

/// Layout from a pattern with one character per index: 'c' complement, 'i' isolated with
/// (phi, psi) = (1, mu u), and '1'..'4' for an index of an interval using that line. Maximal runs
/// of digits form the intervals, all sharing the parameters (a, b, c, d).
VanQ0Layout vanq0_layout(std::string_view pattern, const FieldElement& mu, const FieldElement& a,
                         const FieldElement& b, const FieldElement& c, const FieldElement& d);

OperatorFamily preset_pure_ddiff(int n, const FieldElement& d);
OperatorFamily preset_demazure(int n);
OperatorFamily preset_grothendieck(int n, const FieldElement& beta);

/// Small random rationals: numerators in [-10, 10], denominators in [1, 10].
class ParamSampler {
public:
    explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

    FieldElement rational();
    FieldElement nonzero_rational();
    int uniform(int lo, int hi);

    struct Abcd {
        FieldElement a, b, c, d;
    };
    struct Case1Params {
        FieldElement a, b, c, d, e;
    };

    /// Not all zero, ad = bc.
    Abcd abcd();
    /// abcd() plus e outside {0, b - c}.
    Case1Params case1();
    /// ad = bc with b - c = mu (mu nonzero).
    Abcd abcd_with_difference(const FieldElement& mu);
    std::vector<Case2Line> lines(int count);
    /// Random (phi, psi) with d(phi psi) = mu.
    std::pair<SlotPoly, SlotPoly> phi_psi(const FieldElement& mu);
    /// Nonzero polynomial in u of degree at most max_degree.
    SlotPoly univariate(int max_degree);
    /// Nonzero slot polynomial of total degree at most max_degree.
    SlotPoly slot_poly(int max_degree);

    struct DegenT {
        SlotPoly qhat;
        SlotPoly p;
        std::vector<FactorPair> pairs;
    };
    /// A shared product p of two linear factors, split differently for each of count indices.
    DegenT degen_t(int count);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace braidops
