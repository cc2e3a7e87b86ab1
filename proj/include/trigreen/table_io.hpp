#pragma once

// Plain-text Green table files:
//
//   trigreen-table 1
//   k <k>
//   epsilon <eps>
//   N <N>
//   M <M>
//   guess <zero|shift|heuristic>
//   h <re> <im>
//   lambda <re> <im>
//   entries <count>
//   <i> <j> <re> <im>      one line per canonical entry
//
// Reals use 17 significant digits, so a read followed by a write reproduces
// the file byte for byte.

#include <iosfwd>
#include <string>

#include "trigreen/green_engine.hpp"

namespace trigreen {

void write_table(std::ostream& os, const GreenTable& table);
GreenTable read_table(std::istream& is);

void save_table(const std::string& path, const GreenTable& table);
GreenTable load_table(const std::string& path);

/// %.17g formatting shared by the text outputs.
std::string format_real(double v);

}  // namespace trigreen
