#pragma once

#include <vector>

#include "trigreen/kernels.hpp"

namespace trigreen::kernels::detail {

/// e^{i x xi_b} for every node.
std::vector<cplx> phase_row(const QuadGrid& grid, std::int64_t x);

/// w_a e^{i x1 xi_a} * sum_b w_b phase[b] inv_sigma[a,b]. Shared by both
/// kernel families so their results match bit for bit.
cplx quad_row(const QuadGrid& grid, std::size_t a, std::int64_t x1, const std::vector<cplx>& phase);

}  // namespace trigreen::kernels::detail
