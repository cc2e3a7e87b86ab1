#include "trigreen/table_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace trigreen {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_table(std::ostream& os, const GreenTable& table) {
  const auto& g = table.guess();
  os << "trigreen-table 1\n";
  os << "k " << format_real(table.wavenumber().k()) << '\n';
  os << "epsilon " << format_real(table.wavenumber().epsilon()) << '\n';
  os << "N " << table.truncation() << '\n';
  os << "M " << table.radius() << '\n';
  os << "guess " << to_string(g.kind) << '\n';
  os << "h " << format_real(g.h.real()) << ' ' << format_real(g.h.imag()) << '\n';
  os << "lambda " << format_real(g.lambda.real()) << ' ' << format_real(g.lambda.imag()) << '\n';
  os << "entries " << table.values().size() << '\n';
  for (std::int64_t d = 0; d <= table.radius(); ++d) {
    for (std::int64_t j = 0; 2 * j <= d; ++j) {
      const cplx v = table.at(d - j, j);
      os << d - j << ' ' << j << ' ' << format_real(v.real()) << ' ' << format_real(v.imag())
         << '\n';
    }
  }
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  std::istringstream next(const std::string& key) {
    std::string line;
    if (!std::getline(is_, line)) fail("unexpected end of file, expected '" + key + "'");
    ++line_no_;
    std::istringstream ss(line);
    std::string got;
    if (!key.empty()) {
      ss >> got;
      if (got != key) fail("expected '" + key + "', found '" + got + "'");
    }
    return ss;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("table file line " + std::to_string(line_no_) + ": " + what);
  }

 private:
  std::istream& is_;
  int line_no_ = 0;
};

template <class T>
T read_value(std::istringstream& ss, const LineReader& r, const char* what) {
  T v{};
  if (!(ss >> v)) r.fail(std::string("cannot read ") + what);
  return v;
}

}  // namespace

GreenTable read_table(std::istream& is) {
  LineReader r(is);
  {
    auto ss = r.next("trigreen-table");
    if (read_value<int>(ss, r, "format version") != 1) r.fail("unsupported format version");
  }
  auto ss = r.next("k");
  const double k = read_value<double>(ss, r, "k");
  ss = r.next("epsilon");
  const double eps = read_value<double>(ss, r, "epsilon");
  ss = r.next("N");
  const int n_trunc = read_value<int>(ss, r, "N");
  ss = r.next("M");
  const int radius = read_value<int>(ss, r, "M");
  ss = r.next("guess");
  InitialGuess guess;
  try {
    guess.kind = parse_guess_kind(read_value<std::string>(ss, r, "guess"));
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
  guess.epsilon = eps;
  ss = r.next("h");
  {
    const double re = read_value<double>(ss, r, "h");
    guess.h = {re, read_value<double>(ss, r, "h")};
  }
  ss = r.next("lambda");
  {
    const double re = read_value<double>(ss, r, "lambda");
    guess.lambda = {re, read_value<double>(ss, r, "lambda")};
  }
  ss = r.next("entries");
  const auto count = read_value<std::size_t>(ss, r, "entry count");
  if (radius < 0 || count != GreenTable::entry_count(radius)) {
    r.fail("entry count does not match radius M");
  }
  std::vector<cplx> values(count);
  std::vector<bool> seen(count, false);
  for (std::size_t e = 0; e < count; ++e) {
    ss = r.next("");
    const auto i = read_value<std::int64_t>(ss, r, "i");
    const auto j = read_value<std::int64_t>(ss, r, "j");
    const double re = read_value<double>(ss, r, "real part");
    const double im = read_value<double>(ss, r, "imaginary part");
    if (j < 0 || i < j || i + j > radius) r.fail("index outside the canonical wedge");
    const std::size_t at = GreenTable::offset(i, j);
    if (seen[at]) r.fail("duplicate entry");
    seen[at] = true;
    values[at] = {re, im};
  }
  return GreenTable(Wavenumber(k, eps), n_trunc, radius, std::move(guess), std::move(values));
}

void save_table(const std::string& path, const GreenTable& table) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_table(os, table);
  if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

GreenTable load_table(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read_table(is);
}

}  // namespace trigreen
