#pragma once

#include <optional>
#include <string>
#include <vector>

#include "muntz/exponent_sequence.hpp"

namespace muntz {

// Sequence mini-language: "power:2", "arithmetic:0.3:1", "progression:0.25",
// "list:1.5,2.7,4.0". Horizon applies to generator rules.
ExponentSequence parse_sequence(const std::string& spec, double horizon);

// Grid mini-language for certification grids:
// "re:<lo>:<hi>:<n>,im:<lo>:<hi>:<n>".
struct GridSpec {
  double re_lo = 0.5, re_hi = 40.0;
  double im_lo = -20.0, im_hi = 20.0;
  int re_n = 20, im_n = 10;
};
GridSpec parse_grid(const std::string& spec);

// 17-significant-digit decimal rendering for CSV round-trip exactness.
std::string format_full(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  void add_row(std::vector<std::string> row);
  std::string to_string() const;
  void write(const std::string& path) const;
};

}  // namespace muntz
