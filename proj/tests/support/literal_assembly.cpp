#include "literal_assembly.hpp"

namespace literal {

using trigreen::cplx;
using trigreen::DenseMatrix;

namespace {

cplx& at(DenseMatrix& m, int i, int j) {
  return m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
}

DenseMatrix zeros(int r, int c) {
  return DenseMatrix(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
}

}  // namespace

DenseMatrix alpha2(int p, cplx) {
  DenseMatrix a = zeros(p + 1, p);
  for (int i = 1; i <= p; ++i) {
    at(a, i, i) = 1.0;
    if (i >= 2) {
      at(a, i, i - 1) = 1.0;
    }
  }
  at(a, p + 1, p) = 2.0;
  return a;
}

DenseMatrix beta2(int p, cplx) {
  DenseMatrix b = zeros(p + 1, p + 1);
  at(b, p + 1, p + 1) = 2.0;
  at(b, 1, 2) = at(b, p + 1, p + 1);
  for (int i = 1; i <= p; ++i) {
    at(b, i, i) = 1.0;
    if (i >= 2) {
      at(b, i, i + 1) = 1.0;
    }
  }
  return b;
}

DenseMatrix gamma2(int p, cplx k2) {
  DenseMatrix g = zeros(p + 1, p + 1);
  at(g, 1, 2) = -2.0;
  at(g, p + 1, p) = at(g, 1, 2);
  for (int i = 1; i <= p + 1; ++i) {
    at(g, i, i) = 6.0 - k2;
    if (i >= 2 && i <= p) {
      at(g, i, i + 1) = -1.0;
      at(g, i, i - 1) = -1.0;
    }
  }
  return g;
}

DenseMatrix alpha1(int p, cplx) {
  DenseMatrix a = zeros(p + 1, p + 1);
  for (int i = 1; i <= p + 1; ++i) {
    at(a, i, i) = 1.0;
    if (i >= 2) {
      at(a, i, i - 1) = 1.0;
    }
  }
  return a;
}

DenseMatrix beta1(int p, cplx) {
  DenseMatrix b = zeros(p + 1, p + 2);
  at(b, 1, 2) = 2.0;
  for (int i = 1; i <= p + 1; ++i) {
    at(b, i, i) = 1.0;
    if (i >= 2) {
      at(b, i, i + 1) = 1.0;
    }
  }
  return b;
}

DenseMatrix gamma1(int p, cplx k2) {
  DenseMatrix g = zeros(p + 1, p + 1);
  if (p == 0) {
    at(g, p + 1, p + 1) = 4.0 - k2;
  } else {
    at(g, p + 1, p + 1) = 5.0 - k2;
    at(g, 1, 2) = -2.0;
    at(g, p + 1, p) = -1.0;
    for (int i = 1; i <= p; ++i) {
      at(g, i, i) = 6.0 - k2;
      if (i >= 2) {
        at(g, i, i + 1) = -1.0;
        at(g, i, i - 1) = -1.0;
      }
    }
  }
  return g;
}

std::size_t count_nonzero(const DenseMatrix& m) {
  std::size_t n = 0;
  for (const auto& v : m.entries()) n += v != 0.0 ? 1 : 0;
  return n;
}

}  // namespace literal
