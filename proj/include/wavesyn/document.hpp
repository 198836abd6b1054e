#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wavesyn/synopsis.hpp"

namespace wavesyn {

// Round-trippable decimal form of a double.
std::string fmt(double v);

// Numbers separated by commas, whitespace, or newlines. Throws ParseError.
std::vector<double> parse_numbers(std::istream& in);

// One row per line, values separated by commas or whitespace; all rows must
// have the same width. Blank lines are skipped.
std::vector<std::vector<double>> parse_matrix(std::istream& in);

// Reads "pick <index> <value>" lines out of a solution document, ignoring
// every other line. Throws ParseError on a malformed pick line.
std::vector<Pick> parse_picks(std::istream& in);

}  // namespace wavesyn
