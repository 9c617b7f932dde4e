#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pcf/rational.hpp"

namespace pcf::cli {

enum Exit : int {
    ok = 0,
    failed = 1,  ///< verification failure or integrality scan hit
    input = 2,   ///< parse or validation failure
};

/// Runs one command line (without the program name). Data goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Comma-separated rationals; an item "vxn" stands for n copies of v. Throws ParseError.
std::vector<Rational> parse_list(const std::string& text);

}  // namespace pcf::cli
