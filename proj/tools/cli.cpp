#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <braidops/braid.hpp>
#include <braidops/commute.hpp>
#include <braidops/error.hpp>
#include <braidops/families.hpp>

namespace braidops::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    if (text.find_first_not_of(" \t") == std::string::npos) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    return out;
}

FieldElement field_from_json(const json& j) {
    if (j.is_string()) return FieldElement::parse(j.get<std::string>());
    if (j.is_number_integer()) return FieldElement(j.get<long>());
    throw ParseError("expected a field element such as \"-1/2\" or \"1+1z\", got " + j.dump());
}

std::vector<FieldElement> params_of(const json& desc) {
    std::vector<FieldElement> out;
    if (!desc.contains("params")) return out;
    for (const auto& p : desc["params"]) out.push_back(field_from_json(p));
    return out;
}

void need_params(const std::vector<FieldElement>& params, std::size_t count, const std::string& family,
                 const std::string& names) {
    if (params.size() != count) {
        throw ConstraintViolation(family + " takes " + std::to_string(count) + " parameters (" + names + "), got " +
                                  std::to_string(params.size()));
    }
}

std::vector<Case2Line> lines_of(const json& desc, int count) {
    if (!desc.contains("lines")) return std::vector<Case2Line>(static_cast<std::size_t>(count), Case2Line::Line1);
    std::vector<Case2Line> out;
    for (const auto& l : desc["lines"]) out.push_back(parse_case2_line(l.is_string() ? l.get<std::string>() : l.dump()));
    return out;
}

// Univariate polynomial in u, from one- or two-variable term lists.
SlotPoly univariate_from_json(const json& terms) {
    if (terms.is_array() && !terms.empty() && terms[0].contains("e") && terms[0]["e"].size() == 1) {
        const MultiPoly q = poly_from_json(terms, 1);
        SlotPoly out;
        for (const auto& [e, c] : q.terms()) out += SlotPoly::monomial(e[0], 0, c);
        return out;
    }
    return slot_from_json(terms);
}

Pddo op_from_json(const json& j) {
    auto part = [&](const char* key) { return j.contains(key) ? slot_from_json(j[key]) : SlotPoly(); };
    if (j.contains("T") || j.contains("Q0")) return Pddo::from_t_q0(part("T"), part("Q0"));
    return Pddo::from_pqrs(part("P"), part("Q"), part("R"), part("S"));
}

VanQ0Layout explicit_layout(const json& desc) {
    VanQ0Layout layout;
    for (const auto& iso : desc.value("isolated", json::array())) {
        layout.isolated.push_back({iso.at("index").get<int>(), slot_from_json(iso.at("phi")), slot_from_json(iso.at("psi"))});
    }
    for (const auto& iv : desc.value("intervals", json::array())) {
        IntervalSpec spec;
        spec.first = iv.at("first").get<int>();
        spec.last = iv.at("last").get<int>();
        const auto p = params_of(iv);
        need_params(p, 4, "vanq0 interval", "a,b,c,d");
        spec.a = p[0];
        spec.b = p[1];
        spec.c = p[2];
        spec.d = p[3];
        spec.lines = lines_of(iv, spec.last - spec.first + 1);
        layout.intervals.push_back(std::move(spec));
    }
    return layout;
}

std::string default_layout(int n) { return "i" + std::string(static_cast<std::size_t>(std::max(n - 2, 0)), 'c'); }

}  // namespace

BuiltFamily family_from_descriptor(const json& desc_in) {
    if (!desc_in.is_object() || !desc_in.contains("family")) throw ParseError("family descriptor needs a \"family\" key");
    BuiltFamily built;
    json desc = desc_in;
    const std::string kind = desc["family"].get<std::string>();
    if (kind == "zeta" && !desc.contains("n")) desc["n"] = 3;
    const int n = desc.value("n", 0);
    if (n < 2) throw ConstraintViolation("--n must be at least 2");
    const auto params = params_of(desc);

    if (kind == "case1") {
        need_params(params, 5, kind, "a,b,c,d,e");
        const auto& [a, b, c, d, e] = std::tie(params[0], params[1], params[2], params[3], params[4]);
        validate_abcd(a, b, c, d);
        if (e.is_zero() || e == b - c) {
            const Case2Line line = e.is_zero() ? Case2Line::Line1 : Case2Line::Line2;
            built.notes.push_back("e = " + e.to_string() + " lies in {0, b−c}: building the equal-line family " +
                                  to_string(line) + " of case2");
            built.family = main_case2(n, a, b, c, d, std::vector<Case2Line>(static_cast<std::size_t>(n - 1), line));
        } else {
            built.family = main_case1(n, a, b, c, d, e);
        }
    } else if (kind == "case2") {
        need_params(params, 4, kind, "a,b,c,d");
        built.family = main_case2(n, params[0], params[1], params[2], params[3], lines_of(desc, n - 1));
        for (const auto& [l1, l2] : coinciding_lines(params[0], params[1], params[2], params[3])) {
            built.notes.push_back("lines " + to_string(l1) + " and " + to_string(l2) + " coincide for these parameters");
        }
    } else if (kind == "degen-t") {
        const SlotPoly qhat = desc.contains("qhat") ? slot_from_json(desc["qhat"]) : SlotPoly(1);
        std::vector<FactorPair> pairs;
        if (desc.contains("pairs")) {
            for (const auto& pr : desc["pairs"]) {
                if (!pr.is_array() || pr.size() != 2) throw ParseError("each factor pair is [q_l, q_r]");
                pairs.push_back({univariate_from_json(pr[0]), univariate_from_json(pr[1])});
            }
        } else {
            pairs.assign(static_cast<std::size_t>(n - 1), {SlotPoly(1), SlotPoly(1)});
        }
        SlotPoly p;
        if (desc.contains("p")) {
            p = univariate_from_json(desc["p"]);
        } else if (!pairs.empty()) {
            p = pairs[0].left * pairs[0].right;
        }
        built.family = degenerate_t_family(n, qhat, p, pairs);
    } else if (kind == "vanq0") {
        if (params.empty()) throw ConstraintViolation("vanq0 takes mu[,a,b,c,d]");
        if (params.size() != 1 && params.size() != 5) need_params(params, 5, kind, "mu,a,b,c,d");
        const FieldElement mu = params[0];
        VanQ0Layout layout;
        if (desc.contains("isolated") || desc.contains("intervals")) {
            layout = explicit_layout(desc);
        } else {
            const std::string pattern = desc.value("layout", default_layout(n));
            if (static_cast<int>(pattern.size()) != n - 1) {
                throw ConstraintViolation("layout '" + pattern + "' needs one character per index 1.." +
                                          std::to_string(n - 1));
            }
            const FieldElement zero;
            layout = params.size() == 5 ? vanq0_layout(pattern, mu, params[1], params[2], params[3], params[4])
                                        : vanq0_layout(pattern, mu, zero, zero, zero, zero);
        }
        built.family = with_vanishing_q0(n, mu, layout);
    } else if (kind == "zeta") {
        need_params(params, 2, kind, "a,b");
        if (n != 3) throw ConstraintViolation("zeta pairs live in n = 3");
        built.family = zeta_family(params[0], params[1], desc.value("variant", 1));
    } else if (kind == "user") {
        if (!desc.contains("ops")) throw ParseError("user family needs an \"ops\" array");
        built.family = OperatorFamily{n, {}, Provenance::UserSupplied};
        for (const auto& op : desc["ops"]) built.family.ops.push_back(op_from_json(op));
        validate_shape(built.family);
    } else if (kind == "preset:pure_ddiff") {
        if (params.size() > 1) need_params(params, 1, kind, "d");
        built.family = preset_pure_ddiff(n, params.empty() ? FieldElement(1) : params[0]);
    } else if (kind == "preset:demazure") {
        need_params(params, 0, kind, "none");
        built.family = preset_demazure(n);
    } else if (kind == "preset:grothendieck") {
        need_params(params, 1, kind, "beta");
        built.family = preset_grothendieck(n, params[0]);
    } else {
        throw ParseError("unknown family '" + kind +
                         "' (case1, case2, degen-t, vanq0, zeta, user, preset:pure_ddiff, preset:demazure, "
                         "preset:grothendieck)");
    }
    built.descriptor = desc;
    return built;
}

namespace {

struct FamilyFlags {
    std::string family;
    std::string params;
    std::string lines;
    std::string layout;
    std::string qhat;
    std::string pairs;
    std::string config;
    std::optional<int> variant;
};

struct Globals {
    int n = 0;
    std::string output = "text";
    int random_trials = 0;
    std::uint64_t rng_seed = 1;
};

void add_family_options(CLI::App* sub, FamilyFlags& f, const std::string& suffix) {
    sub->add_option("--family" + suffix, f.family,
                    "case1|case2|degen-t|vanq0|zeta|user|preset:pure_ddiff|preset:demazure|preset:grothendieck");
    sub->add_option("--params" + suffix, f.params, "comma-separated field elements, e.g. 1,2,1/2,2,1");
    sub->add_option("--lines" + suffix, f.lines, "case2 lines per index, e.g. l1,l4,l2");
    sub->add_option("--layout" + suffix, f.layout, "vanq0 layout: c complement, i isolated, 1-4 interval lines");
    sub->add_option("--variant" + suffix, f.variant, "zeta pair variant 1..4");
    sub->add_option("--qhat" + suffix, f.qhat, "degen-t: Qhat as a JSON term list in (u, v)");
    sub->add_option("--pairs" + suffix, f.pairs, "degen-t: JSON list of [q_l, q_r] term lists");
    sub->add_option("--config" + suffix, f.config, "JSON family descriptor (inline or file)");
}

json descriptor_from_flags(const FamilyFlags& f, int n) {
    json desc;
    if (!f.config.empty()) {
        desc = load_json_argument(f.config);
        if (!desc.is_object()) throw ParseError("--config must hold a JSON object");
    }
    if (!f.family.empty()) desc["family"] = f.family;
    if (!desc.contains("family")) throw ParseError("no family given (use --family or --config)");
    if (n > 0) desc["n"] = n;
    if (!f.params.empty()) desc["params"] = split_commas(f.params);
    if (!f.lines.empty()) desc["lines"] = split_commas(f.lines);
    if (!f.layout.empty()) desc["layout"] = f.layout;
    if (f.variant) desc["variant"] = *f.variant;
    if (!f.qhat.empty()) desc["qhat"] = load_json_argument(f.qhat);
    if (!f.pairs.empty()) desc["pairs"] = load_json_argument(f.pairs);
    return desc;
}

std::vector<std::string> field_strings(std::initializer_list<FieldElement> xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}

json random_descriptor(const FamilyFlags& f, int n, ParamSampler& sampler) {
    json desc{{"family", f.family}, {"n", n}};
    const std::string& kind = f.family;
    if (kind == "case1") {
        const auto p = sampler.case1();
        desc["params"] = field_strings({p.a, p.b, p.c, p.d, p.e});
    } else if (kind == "case2") {
        const auto p = sampler.abcd();
        desc["params"] = field_strings({p.a, p.b, p.c, p.d});
        std::vector<std::string> lines = split_commas(f.lines);
        if (lines.empty()) {
            for (Case2Line l : sampler.lines(n - 1)) lines.push_back(to_string(l));
        }
        desc["lines"] = lines;
    } else if (kind == "degen-t") {
        const auto d = sampler.degen_t(n - 1);
        desc["qhat"] = slot_to_json(d.qhat);
        desc["p"] = slot_to_json(d.p);
        json pairs = json::array();
        for (const auto& pr : d.pairs) pairs.push_back({slot_to_json(pr.left), slot_to_json(pr.right)});
        desc["pairs"] = pairs;
    } else if (kind == "vanq0") {
        const FieldElement mu = sampler.nonzero_rational();
        const auto p = sampler.abcd_with_difference(mu);
        const std::string pattern = f.layout.empty() ? default_layout(n) : f.layout;
        VanQ0Layout layout = vanq0_layout(pattern, mu, p.a, p.b, p.c, p.d);
        desc["params"] = field_strings({mu});
        desc["layout"] = pattern;
        desc["isolated"] = json::array();
        for (auto& iso : layout.isolated) {
            auto [phi, psi] = sampler.phi_psi(mu);
            desc["isolated"].push_back({{"index", iso.index}, {"phi", slot_to_json(phi)}, {"psi", slot_to_json(psi)}});
        }
        desc["intervals"] = json::array();
        for (const auto& iv : layout.intervals) {
            std::vector<std::string> lines;
            for (Case2Line l : iv.lines) lines.push_back(to_string(l));
            desc["intervals"].push_back({{"first", iv.first},
                                         {"last", iv.last},
                                         {"params", field_strings({iv.a, iv.b, iv.c, iv.d})},
                                         {"lines", lines}});
        }
    } else if (kind == "zeta") {
        desc["n"] = 3;
        desc["params"] = field_strings({sampler.nonzero_rational(), sampler.rational()});
        desc["variant"] = f.variant ? *f.variant : sampler.uniform(1, 4);
    } else if (kind == "preset:pure_ddiff") {
        desc["params"] = field_strings({sampler.nonzero_rational()});
    } else if (kind == "preset:grothendieck") {
        desc["params"] = field_strings({sampler.rational()});
    } else if (kind != "preset:demazure") {
        throw ConstraintViolation("--random-trials is not available for family '" + kind + "'");
    }
    return desc;
}

json cubic_to_json(const CubicRelation& rel) {
    json coeffs;
    for (std::size_t k = 0; k < 6; ++k) coeffs[CubicReport::labels[k]] = rel.report.coefficient_equal[k];
    json j{{"i", rel.i}, {"pass", rel.report.pass}, {"coefficients", coeffs}};
    if (rel.report.failing_label) {
        j["failing"] = *rel.report.failing_label;
        j["difference"] = poly_to_json(*rel.report.difference);
    }
    return j;
}

json report_to_json(const BuiltFamily& built, const FamilyReport& report) {
    json cubic = json::array();
    for (const auto& rel : report.cubic) cubic.push_back(cubic_to_json(rel));
    json quad = json::array();
    for (const auto& rel : report.quad) quad.push_back({{"i", rel.i}, {"k", rel.k}, {"pass", rel.pass}});
    return {{"descriptor", built.descriptor},
            {"provenance", std::string(to_string(built.family.provenance))},
            {"notes", built.notes},
            {"cubic", cubic},
            {"quad", quad},
            {"pass", report.pass}};
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

void print_report_text(std::ostream& out, const BuiltFamily& built, const FamilyReport& report) {
    out << "family: " << to_string(built.family.provenance) << " (n = " << built.family.n << ")\n";
    for (const auto& note : built.notes) out << "note: " << note << "\n";
    for (const auto& rel : report.cubic) {
        out << "cubic i=" << rel.i << ": " << verdict(rel.report.pass);
        if (rel.report.failing_label) {
            out << " (coefficient of " << *rel.report.failing_label << " differs by " << rel.report.difference->to_string()
                << ")";
        }
        out << "\n";
    }
    for (const auto& rel : report.quad) out << "quad i=" << rel.i << " k=" << rel.k << ": " << verdict(rel.pass) << "\n";
    out << "result: " << verdict(report.pass) << "\n";
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int run_verify(const Globals& g, const FamilyFlags& f, std::ostream& out) {
    if (g.random_trials > 0) {
        if (f.family.empty()) throw ParseError("--random-trials needs --family");
        if (g.n < 2 && f.family != "zeta") throw ConstraintViolation("--random-trials needs --n");
        ParamSampler sampler(g.rng_seed);
        bool all_pass = true;
        json trials = json::array();
        for (int t = 0; t < g.random_trials; ++t) {
            const BuiltFamily built = family_from_descriptor(random_descriptor(f, g.n, sampler));
            const FamilyReport report = family_braid_check(built.family);
            all_pass = all_pass && report.pass;
            if (g.output == "json") {
                trials.push_back(report_to_json(built, report));
            } else {
                out << "trial " << t + 1 << ": " << verdict(report.pass) << "  " << built.descriptor.dump() << "\n";
            }
        }
        if (g.output == "json") {
            emit_json(out, {{"trials", trials}, {"pass", all_pass}});
        } else {
            out << "result: " << verdict(all_pass) << " (" << g.random_trials << " trials)\n";
        }
        return all_pass ? 0 : 1;
    }
    const BuiltFamily built = family_from_descriptor(descriptor_from_flags(f, g.n));
    const FamilyReport report = family_braid_check(built.family);
    if (g.output == "json") {
        emit_json(out, report_to_json(built, report));
    } else {
        print_report_text(out, built, report);
    }
    return report.pass ? 0 : 1;
}

int run_hecke(const Globals& g, const FamilyFlags& f, std::ostream& out) {
    const BuiltFamily built = family_from_descriptor(descriptor_from_flags(f, g.n));
    bool all_ok = true;
    json ops = json::array();
    for (int i = 1; i <= built.family.size(); ++i) {
        const Pddo& op = built.family.op(i);
        const auto hp = hecke_params(op);
        json j{{"i", i}, {"degeneracy", std::string(to_string(op.degeneracy()))}};
        if (hp) {
            const bool verified = compose_same_index(op, op) == hp->mu * op + Pddo::identity(hp->nu);
            all_ok = all_ok && verified;
            j["mu"] = hp->mu.to_string();
            j["nu"] = hp->nu.to_string();
            j["verified"] = verified;
            if (g.output != "json") {
                out << "pi_" << i << ": mu = " << hp->mu << ", nu = " << hp->nu << " ("
                    << (verified ? "pi^2 = mu pi + nu verified" : "pi^2 = mu pi + nu FAILS") << ")\n";
            }
        } else {
            all_ok = false;
            j["mu"] = nullptr;
            j["nu"] = nullptr;
            if (g.output != "json") out << "pi_" << i << ": no Hecke relation (" << to_string(op.degeneracy()) << ")\n";
        }
        ops.push_back(j);
    }
    if (g.output == "json") emit_json(out, {{"descriptor", built.descriptor}, {"operators", ops}, {"pass", all_ok}});
    return all_ok ? 0 : 1;
}

const char* relation_name(IndexRelation r) {
    switch (r) {
        case IndexRelation::Equal: return "equal";
        case IndexRelation::Consecutive: return "consecutive";
        case IndexRelation::Distant: return "distant";
    }
    return "?";
}

int run_commute(const Globals& g, const FamilyFlags& f1, const FamilyFlags& f2, std::ostream& out) {
    const BuiltFamily a = family_from_descriptor(descriptor_from_flags(f1, g.n));
    const BuiltFamily b = family_from_descriptor(descriptor_from_flags(f2, g.n));
    const CommuteReport report = cross_family_commute(a.family, b.family);
    if (g.output == "json") {
        json pairs = json::array();
        for (const auto& p : report.pairs) {
            pairs.push_back({{"i", p.i}, {"k", p.k}, {"relation", relation_name(p.relation)}, {"commutes", p.commutes}});
        }
        emit_json(out, {{"first", a.descriptor},
                        {"second", b.descriptor},
                        {"pairs", pairs},
                        {"equal", report.equal_pass},
                        {"distant", report.distant_pass},
                        {"consecutive", report.consecutive_pass},
                        {"pass", report.pass}});
    } else {
        for (const auto& p : report.pairs) {
            out << "pi_" << p.i << " vs hat-pi_" << p.k << " (" << relation_name(p.relation)
                << "): " << (p.commutes ? "commute" : "do not commute") << "\n";
        }
        out << "equal indices: " << verdict(report.equal_pass) << "\n"
            << "distant indices: " << verdict(report.distant_pass) << "\n"
            << "consecutive indices: " << verdict(report.consecutive_pass) << "\n"
            << "result: " << verdict(report.pass) << "\n";
    }
    return report.pass ? 0 : 1;
}

std::string word_text(const Word& w) {
    std::string s = "[";
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
    return s + "]";
}

int run_table(const Globals& g, const FamilyFlags& f, const std::string& seed_text, std::ostream& out) {
    const BuiltFamily built = family_from_descriptor(descriptor_from_flags(f, g.n));
    const int n = built.family.n;
    if (n > kMaxTableN) throw SizeLimit("table is limited to n <= " + std::to_string(kMaxTableN));
    const MultiPoly seed = seed_text.empty() ? staircase(n) : poly_from_json(load_json_argument(seed_text), n);
    const auto entries = polynomial_table(built.family, seed);
    if (g.output == "json") {
        emit_json(out, table_to_json(n, entries));
        return 0;
    }
    std::size_t word_width = 4;
    for (const auto& e : entries) word_width = std::max(word_width, word_text(e.word).size());
    const auto perm_width = static_cast<int>(std::max<std::size_t>(static_cast<std::size_t>(n), 4));
    out << std::left << std::setw(perm_width + 2) << "perm" << std::setw(static_cast<int>(word_width) + 2) << "word"
        << "polynomial\n";
    for (const auto& e : entries) {
        std::string perm;
        for (int x : e.perm.one_line()) perm += std::to_string(x);
        out << std::setw(perm_width + 2) << perm << std::setw(static_cast<int>(word_width) + 2) << word_text(e.word)
            << e.poly.to_string() << "\n";
    }
    return 0;
}

int run_apply(const Globals& g, const FamilyFlags& f, const std::string& word_flag, const std::string& seed_text,
              std::ostream& out) {
    const BuiltFamily built = family_from_descriptor(descriptor_from_flags(f, g.n));
    if (seed_text.empty()) throw ParseError("apply needs --seed-poly");
    Word word;
    for (const auto& item : split_commas(word_flag)) {
        try {
            word.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError("word letter '" + item + "' is not an integer");
        }
    }
    const MultiPoly f_in = poly_from_json(load_json_argument(seed_text), built.family.n);
    const MultiPoly result = apply_word(built.family, word, f_in);
    if (g.output == "json") {
        emit_json(out, poly_to_json(result));
    } else {
        out << result.to_string() << "\n";
    }
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polynomial divided difference operators: braid, Hecke and commutation checks"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_option("--n", g.n, "number of variables");
    app.add_option("--output", g.output, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--random-trials", g.random_trials, "verify K random constraint-satisfying parameter draws");
    app.add_option("--rng-seed", g.rng_seed, "seed for --random-trials");

    FamilyFlags f1;
    FamilyFlags f2;
    std::string seed_text;
    std::string word_flag;

    auto* verify = app.add_subcommand("verify", "check every braid relation of a family");
    add_family_options(verify, f1, "");
    auto* hecke = app.add_subcommand("hecke", "Hecke parameters (mu, nu) of each operator");
    add_family_options(hecke, f1, "");
    auto* commute = app.add_subcommand("commute", "commutation between two families");
    add_family_options(commute, f1, "");
    add_family_options(commute, f2, "2");
    auto* table = app.add_subcommand(
        "table",
        "polynomials indexed by S_n: entry w is the word of w^-1 w0 applied to the seed (default x1^(n-1)...x_(n-1))");
    add_family_options(table, f1, "");
    table->add_option("--seed-poly", seed_text, "seed polynomial as a JSON term list (inline or file)");
    auto* apply = app.add_subcommand("apply", "apply a word pi_w1 ... pi_wk to a polynomial");
    add_family_options(apply, f1, "");
    apply->add_option("--word", word_flag, "comma-separated indices, applied right to left");
    apply->add_option("--seed-poly", seed_text, "polynomial as a JSON term list (inline or file)");

    std::vector<std::string> argv_store{"braidops"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(g, f1, out);
        if (hecke->parsed()) return run_hecke(g, f1, out);
        if (commute->parsed()) return run_commute(g, f1, f2, out);
        if (table->parsed()) return run_table(g, f1, seed_text, out);
        if (apply->parsed()) return run_apply(g, f1, word_flag, seed_text, out);
    } catch (const BraidFailure& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: malformed descriptor: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace braidops::cli
