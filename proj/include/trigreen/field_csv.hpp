#pragma once

// Field CSV: header `x1,x2,cx,cy,re,im,abs,b`, one row per window point,
// reals at 17 significant digits, b = 1 on boundary (or source) sites.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "trigreen/boundary.hpp"

namespace trigreen {

inline constexpr const char* kFieldCsvHeader = "x1,x2,cx,cy,re,im,abs,b";

struct FieldRow {
  std::int64_t x1 = 0;
  std::int64_t x2 = 0;
  double cx = 0.0;
  double cy = 0.0;
  double re = 0.0;
  double im = 0.0;
  double abs = 0.0;
  int b = 0;
};

std::vector<FieldRow> field_rows(const FieldGrid& grid);

void write_field_csv(std::ostream& os, const std::vector<FieldRow>& rows);
/// Throws std::runtime_error naming the line on malformed input.
std::vector<FieldRow> read_field_csv(std::istream& is);

void save_field_csv(const std::string& path, const FieldGrid& grid);

}  // namespace trigreen
