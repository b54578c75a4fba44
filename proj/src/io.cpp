#include "braidops/io.hpp"

#include <fstream>
#include <sstream>

#include "braidops/error.hpp"

namespace braidops {

json poly_to_json(const MultiPoly& f) {
    json out = json::array();
    for (const auto& [e, c] : f.terms()) out.push_back({{"e", e}, {"c", c.to_string()}});
    return out;
}

MultiPoly poly_from_json(const json& terms, int n_vars) {
    if (!terms.is_array()) throw ParseError("polynomial must be a JSON array of terms");
    if (n_vars <= 0) {
        if (terms.empty()) throw ParseError("cannot infer the number of variables of an empty term list");
        if (!terms[0].is_object() || !terms[0].contains("e") || !terms[0]["e"].is_array()) {
            throw ParseError("term needs an exponent array \"e\"");
        }
        n_vars = static_cast<int>(terms[0]["e"].size());
    }
    MultiPoly f(n_vars);
    for (const auto& term : terms) {
        if (!term.is_object() || !term.contains("e") || !term.contains("c")) {
            throw ParseError("each term needs \"e\" and \"c\": " + term.dump());
        }
        Exponent e;
        try {
            e = term["e"].get<Exponent>();
        } catch (const json::exception&) {
            throw ParseError("exponent must be an array of integers: " + term["e"].dump());
        }
        if (static_cast<int>(e.size()) != n_vars) {
            throw ParseError("exponent " + term["e"].dump() + " does not have " + std::to_string(n_vars) + " entries");
        }
        for (int k : e) {
            if (k < 0) throw ParseError("negative exponent in " + term["e"].dump());
        }
        const json& c = term["c"];
        FieldElement coeff;
        if (c.is_string()) {
            coeff = FieldElement::parse(c.get<std::string>());
        } else if (c.is_number_integer()) {
            coeff = FieldElement(c.get<long>());
        } else {
            throw ParseError("coefficient must be a string such as \"-1/2\" or \"2+1/3z\"");
        }
        f.add_term(e, coeff);
    }
    return f;
}

json slot_to_json(const SlotPoly& p) { return poly_to_json(p.poly()); }

SlotPoly slot_from_json(const json& terms) {
    if (terms.is_array() && terms.empty()) return SlotPoly();
    return SlotPoly(poly_from_json(terms, 2));
}

json table_to_json(int n, const std::vector<TableEntry>& entries) {
    json list = json::array();
    for (const auto& entry : entries) {
        list.push_back({{"perm", entry.perm.one_line()}, {"word", entry.word}, {"poly", poly_to_json(entry.poly)}});
    }
    return {{"n", n}, {"entries", list}};
}

json load_json_argument(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    std::string content = text;
    if (first == std::string::npos || (text[first] != '[' && text[first] != '{')) {
        std::ifstream in(text);
        if (!in) throw ParseError("cannot open JSON file '" + text + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        content = buf.str();
    }
    try {
        return json::parse(content);
    } catch (const json::parse_error& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
}

}  // namespace braidops
