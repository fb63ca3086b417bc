#include "muntz/run_config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "muntz/errors.hpp"

namespace muntz {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_num(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::BadConfig, std::string("cannot parse ") + what + ": '" + s + "'");
  }
}

}  // namespace

ExponentSequence parse_sequence(const std::string& spec, double horizon) {
  const auto parts = split(spec, ':');
  if (parts.empty()) fail(ErrorCode::BadConfig, "empty sequence spec");
  const std::string& kind = parts[0];
  if (kind == "power") {
    if (parts.size() != 2) fail(ErrorCode::BadConfig, "power:<p> expected");
    return ExponentSequence::power(parse_num(parts[1], "p"), horizon);
  }
  if (kind == "arithmetic") {
    if (parts.size() != 3) fail(ErrorCode::BadConfig, "arithmetic:<a>:<d> expected");
    return ExponentSequence::arithmetic(parse_num(parts[1], "a"),
                                        parse_num(parts[2], "d"), horizon);
  }
  if (kind == "progression") {
    if (parts.size() != 2) fail(ErrorCode::BadConfig, "progression:<b> expected");
    return ExponentSequence::progression(parse_num(parts[1], "b"), horizon);
  }
  if (kind == "list") {
    if (parts.size() != 2) fail(ErrorCode::BadConfig, "list:<v1,v2,...> expected");
    std::vector<double> vals;
    for (const auto& tok : split(parts[1], ','))
      vals.push_back(parse_num(tok, "list entry"));
    return ExponentSequence::explicit_list(std::move(vals));
  }
  fail(ErrorCode::BadConfig, "unknown sequence kind '" + kind + "'");
}

GridSpec parse_grid(const std::string& spec) {
  GridSpec g;
  for (const auto& field : split(spec, ',')) {
    const auto parts = split(field, ':');
    if (parts.size() != 4)
      fail(ErrorCode::BadConfig, "grid field '<axis>:<lo>:<hi>:<n>' expected");
    const double lo = parse_num(parts[1], "grid lo");
    const double hi = parse_num(parts[2], "grid hi");
    const int n = static_cast<int>(parse_num(parts[3], "grid n"));
    if (n < 1 || hi <= lo) fail(ErrorCode::BadConfig, "bad grid range");
    if (parts[0] == "re") {
      g.re_lo = lo; g.re_hi = hi; g.re_n = n;
    } else if (parts[0] == "im") {
      g.im_lo = lo; g.im_hi = hi; g.im_n = n;
    } else {
      fail(ErrorCode::BadConfig, "grid axis must be re or im");
    }
  }
  return g;
}

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvTable::add_row(std::vector<std::string> row) {
  rows.push_back(std::move(row));
}

std::string CsvTable::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i)
    os << header[i] << (i + 1 < header.size() ? "," : "");
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << row[i] << (i + 1 < row.size() ? "," : "");
    os << "\n";
  }
  return os.str();
}

void CsvTable::write(const std::string& path) const {
  std::ofstream f(path);
  if (!f) fail(ErrorCode::BadConfig, "cannot open output file: " + path);
  f << to_string();
}

}  // namespace muntz
