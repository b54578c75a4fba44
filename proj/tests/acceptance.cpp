// Acceptance run: one PASS/FAIL line per criterion. With an argument N only criterion N runs.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <braidops/braid.hpp>
#include <braidops/commute.hpp>
#include <braidops/divdiff.hpp>
#include <braidops/error.hpp>
#include <braidops/families.hpp>
#include <braidops/table.hpp>

#include "../tools/cli.hpp"
#include "oracle/probes.hpp"
#include "oracle/qpoly.hpp"
#include "oracle/recursion.hpp"
#include "sameindex.hpp"

using namespace braidops;

namespace {

const SlotPoly U = SlotPoly::u();
const SlotPoly V = SlotPoly::v();

// Collects failures; a criterion passes when none were recorded.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    bool pass() const { return failed_ == 0 && checks_ > 0; }
    std::string summary() const {
        std::ostringstream s;
        s << checks_ - failed_ << "/" << checks_ << " checks";
        for (const auto& f : failures_) s << "; " << f;
        return s.str();
    }

private:
    long checks_ = 0;
    long failed_ = 0;
    std::vector<std::string> failures_;
};

bool cubic_fails(const OperatorFamily& fam) { return family_braid_check(fam).first_cubic_failure().has_value(); }

OperatorFamily repeat(int n, const Pddo& op, Provenance p) {
    return {n, std::vector<Pddo>(static_cast<std::size_t>(n - 1), op), p};
}

// Valid layouts for n = 4, cycled by draw number.
VanQ0Layout vanq0_draw(ParamSampler& s, const FieldElement& mu, int draw) {
    VanQ0Layout layout;
    const auto iso = [&](int index) {
        auto [phi, psi] = s.phi_psi(mu);
        layout.isolated.push_back({index, phi, psi});
    };
    const auto interval = [&](int first, int last) {
        const auto p = s.abcd_with_difference(mu);
        layout.intervals.push_back({first, last, p.a, p.b, p.c, p.d, s.lines(last - first + 1)});
    };
    switch (draw % 6) {
        case 0: iso(1); iso(3); break;
        case 1: iso(1); break;
        case 2: iso(2); break;
        case 3: iso(3); break;
        case 4: interval(1, 2); break;
        default: interval(2, 3); break;
    }
    return layout;
}

// One family per constructor with random valid parameters.
std::vector<OperatorFamily> classified_sample(ParamSampler& s, int draw) {
    std::vector<OperatorFamily> out;
    const auto c1 = s.case1();
    out.push_back(main_case1(4, c1.a, c1.b, c1.c, c1.d, c1.e));
    const auto c2 = s.abcd();
    out.push_back(main_case2(4, c2.a, c2.b, c2.c, c2.d, s.lines(3)));
    const auto dt = s.degen_t(3);
    out.push_back(degenerate_t_family(4, dt.qhat, dt.p, dt.pairs));
    const FieldElement mu = s.nonzero_rational();
    out.push_back(with_vanishing_q0(4, mu, vanq0_draw(s, mu, draw)));
    out.push_back(zeta_family(s.nonzero_rational(), s.rational(), 1 + draw % 4));
    return out;
}

Pddo random_pqrs_op(ParamSampler& s) {
    return Pddo::from_pqrs(s.slot_poly(2), s.slot_poly(2), s.slot_poly(2), s.slot_poly(2));
}

// ---------------------------------------------------------------------------------------------

std::string criterion1(Tally& t) {
    ParamSampler s(101);
    const int draws = 20;
    for (int k = 0; k < draws; ++k) {
        const auto p = s.case1();
        t.check(family_braid_check(main_case1(4, p.a, p.b, p.c, p.d, p.e)).pass, "main_case1");
    }
    const std::vector<Case2Line> lines = {Case2Line::Line1, Case2Line::Line2, Case2Line::Line3, Case2Line::Line4};
    for (const Case2Line line : lines) {
        for (int k = 0; k < draws; ++k) {
            const auto p = s.abcd();
            t.check(family_braid_check(main_case2(4, p.a, p.b, p.c, p.d, {line, line, line})).pass,
                    "main_case2 equal lines " + to_string(line));
        }
    }
    for (int m = 0; m < 10; ++m) {
        const auto mixture = s.lines(3);
        for (int k = 0; k < draws; ++k) {
            const auto p = s.abcd();
            t.check(family_braid_check(main_case2(4, p.a, p.b, p.c, p.d, mixture)).pass, "main_case2 mixture");
        }
    }
    for (int k = 0; k < draws; ++k) {
        const auto dt = s.degen_t(3);
        t.check(family_braid_check(degenerate_t_family(4, dt.qhat, dt.p, dt.pairs)).pass, "degenerate_t_family");
    }
    for (int k = 0; k < draws; ++k) {
        const FieldElement mu = s.nonzero_rational();
        t.check(family_braid_check(with_vanishing_q0(4, mu, vanq0_draw(s, mu, k))).pass, "with_vanishing_q0");
    }
    for (int k = 0; k < draws; ++k) {
        t.check(family_braid_check(zeta_family(s.nonzero_rational(), s.rational(), 1 + k % 4)).pass, "zeta_pair");
    }
    return "20 draws per constructor, main_case2 with 4 equal-line and 10 mixed layouts";
}

std::string criterion2(Tally& t) {
    ParamSampler s(102);
    const int draws = 10;
    int detected = 0;
    // ad != bc, otherwise valid.
    for (int k = 0; k < draws; ++k) {
        FieldElement a, b, c, d;
        do {
            a = s.rational(), b = s.rational(), c = s.rational(), d = s.rational();
        } while (a * d == b * c);
        FieldElement e;
        do {
            e = s.rational();
        } while (e.is_zero() || e == b - c);
        const bool f1 = cubic_fails(repeat(4, case1_operator(a, b, c, d, e), Provenance::UserSupplied));
        const bool f2 = cubic_fails(repeat(4, case2_operator(a, b, c, d, s.lines(1)[0]), Provenance::UserSupplied));
        t.check(f1 && f2, "ad != bc not detected");
        detected += f1 && f2;
    }
    // Two e values in Case (1).
    for (int k = 0; k < draws; ++k) {
        const auto p = s.case1();
        FieldElement e2;
        do {
            e2 = s.rational();
        } while (e2.is_zero() || e2 == p.b - p.c || e2 == p.e);
        const Pddo a = case1_operator(p.a, p.b, p.c, p.d, p.e);
        const Pddo b = case1_operator(p.a, p.b, p.c, p.d, e2);
        const bool f = cubic_fails({4, {a, b, a}, Provenance::UserSupplied});
        t.check(f, "mixed e not detected");
        detected += f;
    }
    // Product property broken at one index.
    for (int k = 0; k < draws; ++k) {
        auto dt = s.degen_t(3);
        dt.pairs[1].left = dt.pairs[1].left * (U + SlotPoly(s.rational()));
        std::vector<Pddo> ops;
        for (const auto& pr : dt.pairs) ops.push_back(Pddo::times_swap(pr.left * pr.right.swapped() * dt.qhat));
        const bool f = cubic_fails({4, ops, Provenance::UserSupplied});
        t.check(f, "product property violation not detected");
        detected += f;
    }
    // d(phi psi) = 2 mu at an isolated index.
    for (int k = 0; k < draws; ++k) {
        const FieldElement mu = s.nonzero_rational();
        auto [phi, psi] = s.phi_psi(mu);
        VanQ0Layout layout;
        layout.isolated.push_back({1, phi, psi});
        auto fam = with_vanishing_q0(4, mu, layout);
        fam.ops[0] = Pddo::phi_ddiff_psi(SlotPoly(2) * phi, psi);
        const bool f = cubic_fails(fam);
        t.check(f, "d(phi psi) != mu not detected");
        detected += f;
    }
    return std::to_string(detected) + "/40 violations detected";
}

std::string criterion3(Tally& t) {
    ParamSampler s(103);
    const auto check_op = [&](const Pddo& op, const FieldElement& mu, const FieldElement& nu, const std::string& what) {
        const auto h = hecke_params(op);
        t.check(h && h->mu == mu && h->nu == nu, what + " parameters");
        t.check(oracle::hecke_on_monomials(op, mu, nu, 4), what + " relation on monomials");
    };
    for (int k = 0; k < 20; ++k) {
        const auto p = s.case1();
        const auto fam = main_case1(4, p.a, p.b, p.c, p.d, p.e);
        for (const auto& op : fam.ops) check_op(op, p.b - p.c, p.e * (p.e + p.c - p.b), "case1");
    }
    for (int k = 0; k < 20; ++k) {
        const auto p = s.abcd();
        const auto fam = main_case2(4, p.a, p.b, p.c, p.d, s.lines(3));
        for (const auto& op : fam.ops) check_op(op, p.b - p.c, 0, "case2");
    }
    for (int k = 0; k < 20; ++k) {
        const FieldElement mu = s.nonzero_rational();
        const auto fam = with_vanishing_q0(4, mu, vanq0_draw(s, mu, k));
        for (const auto& op : fam.ops) check_op(op, mu, 0, "vanq0");
    }
    return "20 draws each of case1, case2, vanq0; relation on monomials of degree <= 4";
}

std::string criterion4(Tally& t) {
    ParamSampler s(104);
    // Polynomial identities on 200 random polynomials.
    for (int k = 0; k < 200; ++k) {
        MultiPoly f(3), g(3);
        for (int j = 0; j < 4; ++j) {
            f.add_term({s.uniform(0, 3), s.uniform(0, 3), s.uniform(0, 3)}, s.rational());
            g.add_term({s.uniform(0, 3), s.uniform(0, 3), s.uniform(0, 3)}, s.rational());
        }
        for (int i = 1; i <= 2; ++i) {
            const MultiPoly df = ddiff(f, i);
            t.check(oracle::same(oracle::ddiff(oracle::from_library(f), i), df), "ddiff vs oracle");
            t.check(ddiff(f * g, i) == df * g + swap_vars(f, i) * ddiff(g, i), "Leibniz");
            t.check(ddiff(df, i).is_zero(), "d^2 = 0");
            t.check(swap_vars(df, i) == df, "symmetric image");
        }
        const SlotPoly p = s.slot_poly(4);
        const auto split = dpositive_split(p);
        t.check(split.sym + split.pos == p && split.sym.is_symmetric() && is_dpositive(split.pos), "split");
        const SlotPoly phi = p + p.swapped();
        const SlotPoly lift = dpositive_lift(phi);
        t.check(is_dpositive(lift) && ddiff(lift) == phi, "lift");
        t.check(dpositive_lift(ddiff(split.pos)) == split.pos, "lift of d(pos)");
    }
    // Canonical forms and probes on 100 quadruples, against the definition of the action.
    for (int k = 0; k < 100; ++k) {
        const SlotPoly P = s.slot_poly(2), Q = s.slot_poly(2), R = s.slot_poly(2), S = s.slot_poly(2);
        const Pddo op = Pddo::from_pqrs(P, Q, R, S);
        const auto cf = canonical_forms(op);
        t.check(Pddo::from_q0_r0(cf.Q0, cf.R0) == op, "first form");
        t.check(is_dpositive(cf.P_plus) && is_dpositive(cf.R_plus) &&
                    Pddo::from_pqrs(cf.P_plus, cf.Q_sup, cf.R_plus, 0) == op,
                "second form");
        t.check(is_dpositive(cf.Q_plus) && Pddo::from_pqrs(cf.P_sup, cf.Q_plus, cf.R_plus, 0) == op, "third form");
        const oracle::QPoly one = oracle::monomial({0, 0});
        const oracle::QPoly xi = oracle::monomial({1, 0});
        const oracle::QPoly pi1 = oracle::pqrs_action(P, Q, R, S, 1, 2, one);
        const oracle::QPoly pix = oracle::pqrs_action(P, Q, R, S, 1, 2, xi);
        const oracle::QPoly y = oracle::monomial({0, 1});
        t.check(oracle::same(oracle::add(pix, oracle::scale(oracle::mul(y, pi1), -1)), op.T().poly()), "T probe");
        t.check(oracle::same(oracle::add(pix, oracle::scale(oracle::mul(xi, pi1), -1)), op.Q0().poly()), "Q0 probe");
        const auto pr = probe(op, 1, 2);
        t.check(oracle::same(pi1, pr.pi_1) && oracle::same(pix, pr.pi_x), "probe");
        for (int a = 0; a <= 3; ++a) {
            for (int b = 0; b <= 3; ++b) {
                const auto m = MultiPoly::monomial({a, b});
                t.check(oracle::same(oracle::pqrs_action(P, Q, R, S, 1, 2, oracle::from_library(m)), op.apply(1, m)),
                        "action vs definition");
            }
        }
    }
    // Cubic check against the monomial oracle.
    int families = 0, passing_pairs = 0, failing_pairs = 0;
    for (int draw = 0; draw < 12; ++draw) {
        for (const auto& fam : classified_sample(s, draw)) {
            ++families;
            for (int i = 1; i + 1 < fam.n; ++i) {
                const bool lib = cubic_braid_check(fam.op(i), fam.op(i + 1)).pass;
                t.check(lib == oracle::braid_by_monomials(fam.op(i), fam.op(i + 1), 4), "cubic vs oracle (family)");
                t.check(lib, "classified pair passes");
            }
        }
    }
    for (int k = 0; k < 100; ++k) {
        Pddo a, b;
        if (k % 2 == 0) {
            a = random_pqrs_op(s);
            b = random_pqrs_op(s);
        } else {
            // A passing pair with one coefficient nudged, or left intact.
            const auto p = s.case1();
            a = case1_operator(p.a, p.b, p.c, p.d, p.e);
            b = k % 4 == 1 ? a : a + Pddo::from_q0_r0(SlotPoly(s.nonzero_rational()) * U, 0);
        }
        const bool lib = cubic_braid_check(a, b).pass;
        t.check(lib == oracle::braid_by_monomials(a, b, 4), "cubic vs oracle (random pair)");
        (lib ? passing_pairs : failing_pairs)++;
    }
    return "200 polynomials, 100 quadruples, " + std::to_string(families) + " families, 100 pairs (" +
           std::to_string(passing_pairs) + " braid, " + std::to_string(failing_pairs) + " do not)";
}

mpq_class eval_slot(const SlotPoly& p, const mpq_class& a, const mpq_class& b) {
    mpq_class total = 0;
    for (const auto& [e, c] : p.terms()) {
        mpq_class m = c.rat_part();
        for (int k = 0; k < e[0]; ++k) m *= a;
        for (int k = 0; k < e[1]; ++k) m *= b;
        total += m;
    }
    return total;
}

// A rational point where the two triple products differ, if one is found.
bool falsified_by_points(const SlotPoly& Q, const SlotPoly& Qt, ParamSampler& s) {
    for (int k = 0; k < 20; ++k) {
        const mpq_class x = s.rational().rat_part(), y = s.rational().rat_part(), z = s.rational().rat_part();
        if (eval_slot(Q, x, y) * eval_slot(Qt, x, z) * eval_slot(Q, y, z) !=
            eval_slot(Qt, x, y) * eval_slot(Q, x, z) * eval_slot(Qt, y, z)) {
            return true;
        }
    }
    return false;
}

std::string criterion5(Tally& t) {
    ParamSampler s(105);
    int pairs = 0;
    for (int draw = 0; draw < 20; ++draw) {
        for (const auto& fam : classified_sample(s, draw)) {
            if (!family_braid_check(fam).pass) {
                t.check(false, "sample family fails");
                continue;
            }
            for (int i = 1; i + 1 < fam.n; ++i) {
                const Pddo& a = fam.op(i);
                const Pddo& b = fam.op(i + 1);
                if (a.Q0().is_zero() || b.Q0().is_zero()) continue;
                ++pairs;
                t.check(a.T() == b.T(), "T equality");
                t.check(almost_equal(a.Q0(), b.Q0()), "almost_equal on consecutive Q0");
            }
        }
    }
    // Positive instances: Q = q_l(u) q_r(v) Qhat, Qt = ql~(u) qr~(v) Qhat with equal products.
    for (int k = 0; k < 50; ++k) {
        const FieldElement c1 = s.nonzero_rational(), c2 = s.nonzero_rational(), c3 = s.nonzero_rational();
        SlotPoly ql = SlotPoly(c1), qr = SlotPoly(c2), qtl = SlotPoly(c3), qtr = SlotPoly(c1 * c2 / c3);
        const int count = s.uniform(1, 4);
        for (int j = 0; j < count; ++j) {
            const SlotPoly f = U + SlotPoly(s.rational());
            SlotPoly& side = s.uniform(0, 1) ? ql : qr;
            side = side * f;
            SlotPoly& other = s.uniform(0, 1) ? qtl : qtr;
            other = other * f;
        }
        const SlotPoly qhat = s.slot_poly(2);
        const SlotPoly Q = ql * qr.swapped() * qhat;
        const SlotPoly Qt = qtl * qtr.swapped() * qhat;
        t.check(almost_equal(Q, Qt), "positive instance");
        t.check(!falsified_by_points(Q, Qt, s), "positive instance by points");
    }
    // Negative instances: random pairs confirmed by evaluation first.
    int negatives = 0;
    while (negatives < 50) {
        const SlotPoly Q = s.slot_poly(2), Qt = s.slot_poly(2);
        if (!falsified_by_points(Q, Qt, s)) continue;
        ++negatives;
        t.check(!almost_equal(Q, Qt), "negative instance");
    }
    return std::to_string(pairs) + " consecutive pairs, 50 positive and 50 negative instances";
}

std::string criterion6(Tally& t) {
    ParamSampler s(106);
    for (int shape = 1; shape <= 4; ++shape) {
        for (int k = 0; k < 10; ++k) {
            const auto p = sameindex::make(shape, s);
            const std::string tag = "shape " + std::to_string(shape);
            t.check(commutes_same_index(p.pi, p.pi_hat), tag + " commutes");
            t.check(compose_same_index(p.pi, p.pi_hat) == compose_same_index(p.pi_hat, p.pi), tag + " by composition");
            t.check(!commutes_same_index(p.pi, p.pi_hat_perturbed), tag + " perturbed");
            t.check(compose_same_index(p.pi, p.pi_hat_perturbed) != compose_same_index(p.pi_hat_perturbed, p.pi),
                    tag + " perturbed by composition");
        }
    }
    for (int draw = 0; draw < 4; ++draw) {
        for (const auto& fam : classified_sample(s, draw)) {
            const auto scalar = repeat(fam.n, Pddo::identity(s.nonzero_rational()), Provenance::UserSupplied);
            t.check(cross_family_commute(fam, scalar).pass, "commutes with a scalar family");
        }
    }
    const auto dem = preset_demazure(4);
    const auto report = cross_family_commute(dem, dem);
    t.check(report.equal_pass && report.distant_pass && !report.consecutive_pass, "demazure consecutive");
    return "4 shapes x 10 draws, scalar family vs every constructor, demazure consecutive failure";
}

std::string criterion7(Tally& t) {
    const std::vector<std::string> args = {"table", "--n", "3", "--family", "preset:pure_ddiff",
                                           "--params", "1", "--output", "json"};
    std::ostringstream out1, err1, out2, err2;
    const int code1 = cli::cli_main(args, out1, err1);
    const int code2 = cli::cli_main(args, out2, err2);
    t.check(code1 == 0 && code2 == 0, "exit codes " + std::to_string(code1) + ", " + std::to_string(code2));
    t.check(out1.str() == out2.str(), "byte-identical output");
    const json doc = json::parse(out1.str());
    const auto& entries = doc.at("entries");
    t.check(doc.at("n") == 3 && entries.size() == 6, "six entries");

    const oracle::QPoly seed = oracle::monomial({2, 1, 0});
    const auto step = [](const oracle::QPoly& f, int i) { return oracle::ddiff(f, i); };
    const std::vector<oracle::QPoly> expected_set = {
        seed, oracle::monomial({2, 0, 0}), oracle::monomial({1, 1, 0}),
        oracle::add(oracle::monomial({1, 0, 0}), oracle::monomial({0, 1, 0})), oracle::monomial({1, 0, 0}),
        oracle::monomial({0, 0, 0})};
    std::set<oracle::QPoly> seen;
    int multi_word = 0;
    for (const auto& entry : entries) {
        const auto perm = entry.at("perm").get<std::vector<int>>();
        const auto word = entry.at("word").get<std::vector<int>>();
        const MultiPoly poly = poly_from_json(entry.at("poly"), 3);
        const auto rec = oracle::recursion_entry(perm, seed, step);
        multi_word += rec.word_count > 1;
        t.check(oracle::same(rec.poly, poly), "entry matches recursion oracle");
        t.check(oracle::word_product(3, word) == oracle::inverse_times_longest(perm) &&
                    static_cast<int>(word.size()) == oracle::inversions(oracle::inverse_times_longest(perm)),
                "witness word is reduced for w^-1 w0");
        seen.insert(oracle::from_library(poly));
    }
    t.check(seen == std::set<oracle::QPoly>(expected_set.begin(), expected_set.end()), "the six polynomials");
    t.check(multi_word >= 1, "some entry has several reduced words");
    return "6 entries, recursion oracle over all reduced words (" + std::to_string(multi_word) +
           " with more than one), identical across runs";
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<std::string(Tally&)>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                                      criterion5, criterion6, criterion7};
    std::vector<int> selected;
    if (argc > 1) {
        const int k = std::atoi(argv[1]);
        if (k < 1 || k > 7) {
            std::cerr << "usage: acceptance [1-7]\n";
            return 2;
        }
        selected.push_back(k);
    } else {
        for (int k = 1; k <= 7; ++k) selected.push_back(k);
    }
    bool all = true;
    for (int k : selected) {
        Tally tally;
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        try {
            detail = criteria[static_cast<std::size_t>(k - 1)](tally);
        } catch (const std::exception& ex) {
            tally.check(false, std::string("exception: ") + ex.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = tally.pass();
        all = all && pass;
        std::cout << "criterion " << k << ": " << (pass ? "PASS" : "FAIL") << " (" << tally.summary();
        if (!detail.empty()) std::cout << "; " << detail;
        std::cout << "; " << static_cast<int>(secs * 1000) << " ms)" << std::endl;
    }
    return all ? 0 : 1;
}
