#include "trigreen/field_csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "trigreen/table_io.hpp"

namespace trigreen {

std::vector<FieldRow> field_rows(const FieldGrid& grid) {
  std::vector<FieldRow> rows(grid.values.size());
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const LatticeIndex x = grid.point(t);
    const auto c = to_cartesian(x);
    const cplx u = grid.values[t];
    rows[t] = {x.x1, x.x2, c.x, c.y, u.real(), u.imag(), std::abs(u), grid.boundary[t] ? 1 : 0};
  }
  return rows;
}

void write_field_csv(std::ostream& os, const std::vector<FieldRow>& rows) {
  os << kFieldCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.x1 << ',' << r.x2 << ',' << format_real(r.cx) << ',' << format_real(r.cy) << ','
       << format_real(r.re) << ',' << format_real(r.im) << ',' << format_real(r.abs) << ',' << r.b
       << '\n';
  }
}

namespace {

[[noreturn]] void bad_line(int line_no, const std::string& what) {
  throw std::runtime_error("field CSV line " + std::to_string(line_no) + ": " + what);
}

template <class T>
T parse_field(const std::string& text, int line_no) {
  T v{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) bad_line(line_no, "cannot parse '" + text + "'");
  return v;
}

}  // namespace

std::vector<FieldRow> read_field_csv(std::istream& is) {
  std::string line;
  int line_no = 1;
  if (!std::getline(is, line) || line != kFieldCsvHeader) bad_line(1, "missing or wrong header");
  std::vector<FieldRow> rows;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() != 8) bad_line(line_no, "expected 8 columns");
    FieldRow r;
    r.x1 = parse_field<std::int64_t>(cells[0], line_no);
    r.x2 = parse_field<std::int64_t>(cells[1], line_no);
    r.cx = parse_field<double>(cells[2], line_no);
    r.cy = parse_field<double>(cells[3], line_no);
    r.re = parse_field<double>(cells[4], line_no);
    r.im = parse_field<double>(cells[5], line_no);
    r.abs = parse_field<double>(cells[6], line_no);
    r.b = parse_field<int>(cells[7], line_no);
    if (r.b != 0 && r.b != 1) bad_line(line_no, "boundary flag must be 0 or 1");
    rows.push_back(r);
  }
  return rows;
}

void save_field_csv(const std::string& path, const FieldGrid& grid) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_field_csv(os, field_rows(grid));
  if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace trigreen
