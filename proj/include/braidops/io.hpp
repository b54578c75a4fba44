#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "braidops/table.hpp"

namespace braidops {

using json = nlohmann::ordered_json;

/// [{"e":[..],"c":"p/q+r/sz"}, ..] in descending graded-lex order.
json poly_to_json(const MultiPoly& f);
/// Reads a term list. n_vars is taken from the exponents, or from the argument for an empty
/// list; a conflicting argument is an error. Throws ParseError on malformed input.
MultiPoly poly_from_json(const json& terms, int n_vars = 0);

json slot_to_json(const SlotPoly& p);
SlotPoly slot_from_json(const json& terms);

/// {"n":n,"entries":[{"perm":[..],"word":[..],"poly":[..]}, ..]}
json table_to_json(int n, const std::vector<TableEntry>& entries);

/// Parses inline JSON text, or reads the file it names when the text does not start with '[' or '{'.
json load_json_argument(const std::string& text);

}  // namespace braidops
