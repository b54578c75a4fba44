#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <braidops/io.hpp>

namespace braidops::cli {

struct BuiltFamily {
    OperatorFamily family;
    json descriptor;  // normalized: always carries "family" and "n"
    std::vector<std::string> notes;
};

/// Family from a JSON descriptor such as
///   {"family":"case2","n":4,"params":["1","2","1","2"],"lines":["l1","l4","l2"]}.
/// The README lists the keys understood for each family.
BuiltFamily family_from_descriptor(const json& desc);

/// Runs the command line (without the program name). Exit codes: 0 pass, 1 verification
/// failure, 2 usage or configuration error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidops::cli
