#include "wavesyn/document.hpp"

#include <cstdio>
#include <istream>
#include <sstream>

#include "wavesyn/errors.hpp"

namespace wavesyn {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

double to_double(const std::string& tok) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError("not a number: '" + tok + "'");
  return v;
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : line) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  return toks;
}

}  // namespace

std::vector<double> parse_numbers(std::istream& in) {
  std::vector<double> out;
  std::string line;
  while (std::getline(in, line))
    for (const std::string& tok : split_row(line)) out.push_back(to_double(tok));
  if (out.empty()) throw ParseError("no numbers in input");
  return out;
}

std::vector<std::vector<double>> parse_matrix(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const std::vector<std::string> toks = split_row(line);
    if (toks.empty()) continue;
    std::vector<double> row;
    for (const std::string& tok : toks) row.push_back(to_double(tok));
    if (!rows.empty() && row.size() != rows[0].size())
      throw ParseError("ragged matrix row: '" + line + "'");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no rows in input");
  return rows;
}

std::vector<Pick> parse_picks(std::istream& in) {
  std::vector<Pick> picks;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag != "pick") continue;
    std::string idx, val, extra;
    if (!(ls >> idx >> val) || (ls >> extra))
      throw ParseError("malformed pick line: '" + line + "'");
    const double di = to_double(idx);
    if (di < 0 || di != static_cast<double>(static_cast<std::size_t>(di)))
      throw ParseError("pick index must be a nonnegative integer: '" + line + "'");
    picks.push_back({static_cast<std::size_t>(di), to_double(val)});
  }
  return picks;
}

}  // namespace wavesyn
