#include "braidops/families.hpp"

#include <algorithm>
#include <set>

#include "braidops/divdiff.hpp"
#include "braidops/error.hpp"

namespace braidops {

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::MainCase1: return "main_case1";
        case Provenance::MainCase2: return "main_case2";
        case Provenance::DegenT: return "degen_t";
        case Provenance::WithVanQ0: return "with_vanishing_q0";
        case Provenance::ZetaPair: return "zeta_pair";
        case Provenance::UserSupplied: return "user";
    }
    return "?";
}

void validate_shape(const OperatorFamily& fam) {
    if (fam.n < 2) throw ConstraintViolation("a family needs n >= 2 variables");
    if (fam.size() != fam.n - 1) {
        throw DimensionMismatch("family on " + std::to_string(fam.n) + " variables needs " +
                                std::to_string(fam.n - 1) + " operators, got " + std::to_string(fam.size()));
    }
}

std::string to_string(Case2Line line) { return "l" + std::to_string(static_cast<int>(line)); }

Case2Line parse_case2_line(std::string_view text) {
    if (!text.empty() && (text.front() == 'l' || text.front() == 'L')) text.remove_prefix(1);
    if (text.size() == 1 && text[0] >= '1' && text[0] <= '4') return static_cast<Case2Line>(text[0] - '0');
    throw ParseError("unknown case-2 line '" + std::string(text) + "' (expected l1..l4)");
}

namespace {

const SlotPoly U = SlotPoly::u();
const SlotPoly V = SlotPoly::v();
const SlotPoly UV = SlotPoly::u() * SlotPoly::v();
const SlotPoly U2 = SlotPoly::u() * SlotPoly::u();

SlotPoly k(const FieldElement& c) { return SlotPoly(c); }

void require_n(int n, int min_n) {
    if (n < min_n) throw ConstraintViolation("n must be at least " + std::to_string(min_n));
}

void require_univariate(const SlotPoly& q, const std::string& what) {
    if (q.is_zero()) throw ConstraintViolation(what + " must be nonzero");
    if (q.degree_in_v() > 0) throw ConstraintViolation(what + " must be a polynomial in u alone");
}

}  // namespace

void validate_abcd(const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d) {
    if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero()) {
        throw ConstraintViolation("a, b, c, d must not all be 0");
    }
    const FieldElement det = a * d - b * c;
    if (!det.is_zero()) throw ConstraintViolation("ad−bc ≠ 0 (ad−bc = " + det.to_string() + ")");
}

Pddo case1_operator(const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d,
                    const FieldElement& e) {
    const SlotPoly P = k(b - c - e) * U;
    const SlotPoly Q = k(a) * UV + k(c + e) * U + k(c) * V + k(d);
    return Pddo::from_pqrs(P, Q, SlotPoly(), SlotPoly());
}

Pddo case2_operator(const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d,
                    Case2Line line) {
    SlotPoly P, Q, R;
    switch (line) {
        case Case2Line::Line1:
            P = k(a) * UV + k(b) * U + k(c) * V + k(d);
            break;
        case Case2Line::Line2:
            P = k(a) * UV + k(c) * U + k(c) * V + k(d);
            Q = k(b - c) * U;
            break;
        case Case2Line::Line3:
            P = k(a) * U2 + k(b + c) * U + k(c) * V + k(d);
            Q = k(-c) * U;
            R = k(-a) * U;
            break;
        case Case2Line::Line4:
            P = k(c) * V + k(d);
            Q = k(a) * U2 + k(b) * U;
            R = k(-a) * U;
            break;
    }
    return Pddo::from_pqrs(P, Q, R, SlotPoly());
}

OperatorFamily main_case1(int n, const FieldElement& a, const FieldElement& b, const FieldElement& c,
                          const FieldElement& d, const FieldElement& e) {
    require_n(n, 2);
    validate_abcd(a, b, c, d);
    if (e.is_zero() || e == b - c) {
        throw ConstraintViolation("e = " + e.to_string() +
                                  " lies in {0, b−c}; those operators are lines 1 and 2 of main_case2");
    }
    const Pddo op = case1_operator(a, b, c, d, e);
    return {n, std::vector<Pddo>(static_cast<std::size_t>(n - 1), op), Provenance::MainCase1};
}

OperatorFamily main_case2(int n, const FieldElement& a, const FieldElement& b, const FieldElement& c,
                          const FieldElement& d, const std::vector<Case2Line>& lines) {
    require_n(n, 2);
    validate_abcd(a, b, c, d);
    if (static_cast<int>(lines.size()) != n - 1) {
        throw DimensionMismatch("main_case2 needs " + std::to_string(n - 1) + " lines, got " +
                                std::to_string(lines.size()));
    }
    OperatorFamily fam{n, {}, Provenance::MainCase2};
    for (Case2Line line : lines) fam.ops.push_back(case2_operator(a, b, c, d, line));
    return fam;
}

std::vector<std::pair<Case2Line, Case2Line>> coinciding_lines(const FieldElement& a, const FieldElement& b,
                                                              const FieldElement& c, const FieldElement& d) {
    const std::array<Case2Line, 4> all{Case2Line::Line1, Case2Line::Line2, Case2Line::Line3, Case2Line::Line4};
    std::array<Pddo, 4> ops;
    for (std::size_t j = 0; j < 4; ++j) ops[j] = case2_operator(a, b, c, d, all[j]);
    std::vector<std::pair<Case2Line, Case2Line>> out;
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t l = j + 1; l < 4; ++l) {
            if (ops[j] == ops[l]) out.emplace_back(all[j], all[l]);
        }
    }
    return out;
}

OperatorFamily degenerate_t_family(int n, const SlotPoly& qhat, const SlotPoly& p,
                                   const std::vector<FactorPair>& pairs) {
    require_n(n, 2);
    if (qhat.is_zero()) throw ConstraintViolation("Qhat must be nonzero");
    require_univariate(p, "p");
    if (static_cast<int>(pairs.size()) != n - 1) {
        throw DimensionMismatch("degenerate_t_family needs " + std::to_string(n - 1) + " factor pairs");
    }
    OperatorFamily fam{n, {}, Provenance::DegenT};
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        const auto& [ql, qr] = pairs[j];
        const std::string where = " at index " + std::to_string(j + 1);
        require_univariate(ql, "q_l" + where);
        require_univariate(qr, "q_r" + where);
        if (ql * qr != p) {
            throw ConstraintViolation("product property violated" + where + ": q_l q_r = " + (ql * qr).to_string() +
                                      " but p = " + p.to_string());
        }
        fam.ops.push_back(Pddo::times_swap(ql * qr.swapped() * qhat));
    }
    return fam;
}

ZetaPair zeta_pair(const FieldElement& a, const FieldElement& b, int variant) {
    if (a.is_zero()) throw ConstraintViolation("zeta_pair needs a ≠ 0");
    const FieldElement z = FieldElement::zeta();
    const FieldElement zb = FieldElement::zeta_bar();
    const SlotPoly ub = U + k(b);
    const SlotPoly vb = V + k(b);
    SlotPoly q0, r0;
    switch (variant) {
        case 1:
            q0 = k(a) * ub * (k(z) * U + k(zb) * V + k(b));
            r0 = k(a * zb) * ub;
            break;
        case 2:
            q0 = k(a) * ub * (k(zb) * U + k(z) * V + k(b));
            r0 = k(a * z) * ub;
            break;
        case 3:
            q0 = k(a) * vb * (k(z) * U + k(zb) * V + k(b));
            r0 = k(a) * (U + k(zb) * V + k((1 + zb) * b));
            break;
        case 4:
            q0 = k(a) * vb * (k(zb) * U + k(z) * V + k(b));
            r0 = k(a) * (U + k(z) * V + k((1 + z) * b));
            break;
        default:
            throw ConstraintViolation("zeta_pair variant must be 1..4, got " + std::to_string(variant));
    }
    // The multiplication operator reads its first slot, which is the shared variable.
    return {Pddo::from_q0_r0(q0, r0), Pddo::from_q0_r0(SlotPoly(), k(a) * ub)};
}

OperatorFamily zeta_family(const FieldElement& a, const FieldElement& b, int variant) {
    auto [pi, varpi] = zeta_pair(a, b, variant);
    return {3, {pi, varpi}, Provenance::ZetaPair};
}

OperatorFamily with_vanishing_q0(int n, const FieldElement& mu, const VanQ0Layout& layout) {
    require_n(n, 4);
    if (mu.is_zero()) throw ConstraintViolation("mu must be nonzero");

    std::set<int> in_i;
    auto claim = [&](int idx) {
        if (idx < 1 || idx > n - 1) throw IndexError("index " + std::to_string(idx) + " outside 1..n-1");
        if (!in_i.insert(idx).second) throw ConstraintViolation("index " + std::to_string(idx) + " listed twice");
    };
    for (const auto& iso : layout.isolated) claim(iso.index);
    for (const auto& iv : layout.intervals) {
        if (iv.last - iv.first < 1) {
            throw ConstraintViolation("interval " + std::to_string(iv.first) + ".." + std::to_string(iv.last) +
                                      " has fewer than two indices");
        }
        for (int idx = iv.first; idx <= iv.last; ++idx) claim(idx);
    }
    if (static_cast<int>(in_i.size()) == n - 1) throw ConstraintViolation("the complement of I is empty");
    for (const auto& iso : layout.isolated) {
        if (in_i.count(iso.index - 1) || in_i.count(iso.index + 1)) {
            throw ConstraintViolation("index " + std::to_string(iso.index) + " has a neighbour in I, not isolated");
        }
    }
    for (const auto& iv : layout.intervals) {
        if (in_i.count(iv.first - 1) || in_i.count(iv.last + 1)) {
            throw ConstraintViolation("interval " + std::to_string(iv.first) + ".." + std::to_string(iv.last) +
                                      " is not maximal");
        }
    }

    OperatorFamily fam{n, std::vector<Pddo>(static_cast<std::size_t>(n - 1), Pddo::identity(mu)),
                       Provenance::WithVanQ0};
    for (const auto& iso : layout.isolated) {
        const SlotPoly prod_d = ddiff(iso.phi * iso.psi);
        if (prod_d != SlotPoly(mu)) {
            throw ConstraintViolation("∂(φψ) = " + prod_d.to_string() + " ≠ μ = " + mu.to_string() + " at index " +
                                      std::to_string(iso.index));
        }
        fam.ops[static_cast<std::size_t>(iso.index - 1)] = Pddo::phi_ddiff_psi(iso.phi, iso.psi);
    }
    for (const auto& iv : layout.intervals) {
        validate_abcd(iv.a, iv.b, iv.c, iv.d);
        if (iv.b - iv.c != mu) {
            throw ConstraintViolation("b − c = " + (iv.b - iv.c).to_string() + " ≠ μ = " + mu.to_string());
        }
        if (static_cast<int>(iv.lines.size()) != iv.last - iv.first + 1) {
            throw DimensionMismatch("interval needs one line per index");
        }
        for (int idx = iv.first; idx <= iv.last; ++idx) {
            fam.ops[static_cast<std::size_t>(idx - 1)] =
                case2_operator(iv.a, iv.b, iv.c, iv.d, iv.lines[static_cast<std::size_t>(idx - iv.first)]);
        }
    }
    return fam;
}

VanQ0Layout vanq0_layout(std::string_view pattern, const FieldElement& mu, const FieldElement& a,
                         const FieldElement& b, const FieldElement& c, const FieldElement& d) {
    VanQ0Layout layout;
    const int len = static_cast<int>(pattern.size());
    for (int j = 0; j < len;) {
        const char ch = pattern[static_cast<std::size_t>(j)];
        if (ch == 'c') {
            ++j;
        } else if (ch == 'i') {
            layout.isolated.push_back({j + 1, SlotPoly(1), k(mu) * U});
            ++j;
        } else if (ch >= '1' && ch <= '4') {
            IntervalSpec iv{j + 1, j + 1, a, b, c, d, {}};
            while (j < len && pattern[static_cast<std::size_t>(j)] >= '1' && pattern[static_cast<std::size_t>(j)] <= '4') {
                iv.lines.push_back(static_cast<Case2Line>(pattern[static_cast<std::size_t>(j)] - '0'));
                iv.last = ++j;
            }
            layout.intervals.push_back(std::move(iv));
        } else {
            throw ParseError(std::string("layout character '") + ch + "' is not one of c, i, 1, 2, 3, 4");
        }
    }
    return layout;
}

OperatorFamily preset_pure_ddiff(int n, const FieldElement& d) {
    if (d.is_zero()) throw ConstraintViolation("pure_ddiff needs d ≠ 0");
    return main_case2(n, 0, 0, 0, d, std::vector<Case2Line>(static_cast<std::size_t>(n - 1), Case2Line::Line1));
}

OperatorFamily preset_demazure(int n) {
    return main_case2(n, 0, 1, 0, 0, std::vector<Case2Line>(static_cast<std::size_t>(n - 1), Case2Line::Line1));
}

OperatorFamily preset_grothendieck(int n, const FieldElement& beta) {
    return main_case2(n, 0, 0, beta, 1,
                      std::vector<Case2Line>(static_cast<std::size_t>(n - 1), Case2Line::Line1));
}

int ParamSampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

FieldElement ParamSampler::rational() { return FieldElement::rational(uniform(-10, 10), uniform(1, 10)); }

FieldElement ParamSampler::nonzero_rational() {
    FieldElement x;
    do {
        x = rational();
    } while (x.is_zero());
    return x;
}

ParamSampler::Abcd ParamSampler::abcd() {
    for (;;) {
        Abcd p{rational(), rational(), rational(), 0};
        if (!p.a.is_zero()) {
            p.d = p.b * p.c / p.a;
        } else {
            (uniform(0, 1) == 0 ? p.b : p.c) = 0;
            p.d = rational();
        }
        if (!(p.a.is_zero() && p.b.is_zero() && p.c.is_zero() && p.d.is_zero())) return p;
    }
}

ParamSampler::Case1Params ParamSampler::case1() {
    const Abcd p = abcd();
    FieldElement e;
    do {
        e = rational();
    } while (e.is_zero() || e == p.b - p.c);
    return {p.a, p.b, p.c, p.d, e};
}

ParamSampler::Abcd ParamSampler::abcd_with_difference(const FieldElement& mu) {
    Abcd p{rational(), 0, rational(), 0};
    if (p.a.is_zero()) {
        p.c = uniform(0, 1) == 0 ? FieldElement() : -mu;
        p.d = rational();
    }
    p.b = p.c + mu;
    if (!p.a.is_zero()) p.d = p.b * p.c / p.a;
    return p;
}

std::vector<Case2Line> ParamSampler::lines(int count) {
    std::vector<Case2Line> out;
    for (int j = 0; j < count; ++j) out.push_back(static_cast<Case2Line>(uniform(1, 4)));
    return out;
}

std::pair<SlotPoly, SlotPoly> ParamSampler::phi_psi(const FieldElement& mu) {
    switch (uniform(0, 2)) {
        case 0: {
            // constant phi, psi = (mu / lambda) u + symmetric
            const FieldElement lambda = nonzero_rational();
            const SlotPoly sym = k(rational()) + k(rational()) * (U + V) + k(rational()) * UV;
            return {k(lambda), k(mu / lambda) * U + sym};
        }
        case 1: {
            const FieldElement alpha = rational();
            FieldElement beta;
            do {
                beta = rational();
            } while (beta == alpha);
            return {k(mu / (beta - alpha)) * (U + k(alpha)), V + k(beta)};
        }
        default: {
            const FieldElement alpha = rational();
            FieldElement beta;
            do {
                beta = rational();
            } while (beta == alpha);
            return {k(mu / (alpha - beta)) * (V + k(alpha)), U + k(beta)};
        }
    }
}

SlotPoly ParamSampler::univariate(int max_degree) {
    for (;;) {
        SlotPoly q;
        const int deg = uniform(0, max_degree);
        for (int r = 0; r <= deg; ++r) q += SlotPoly::monomial(r, 0, rational());
        if (!q.is_zero()) return q;
    }
}

ParamSampler::DegenT ParamSampler::degen_t(int count) {
    const SlotPoly l1 = k(nonzero_rational()) * (U + k(rational()));
    const SlotPoly l2 = U + k(rational());
    DegenT out{slot_poly(1), l1 * l2, {}};
    for (int j = 0; j < count; ++j) {
        const FieldElement lambda = nonzero_rational();
        FactorPair pair;
        switch (uniform(0, 3)) {
            case 0: pair = {SlotPoly(1), out.p}; break;
            case 1: pair = {out.p, SlotPoly(1)}; break;
            case 2: pair = {l1, l2}; break;
            default: pair = {l2, l1}; break;
        }
        out.pairs.push_back({k(lambda) * pair.left, k(lambda.inverse()) * pair.right});
    }
    return out;
}

SlotPoly ParamSampler::slot_poly(int max_degree) {
    for (;;) {
        SlotPoly q;
        for (int deg = 0; deg <= max_degree; ++deg) {
            for (int r = 0; r <= deg; ++r) {
                if (uniform(0, 1) == 1) q += SlotPoly::monomial(r, deg - r, rational());
            }
        }
        if (!q.is_zero()) return q;
    }
}

}  // namespace braidops
