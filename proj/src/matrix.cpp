#include "germcalc/matrix.hpp"

#include "germcalc/error.hpp"

namespace germcalc {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, VarSet vars)
    : rows_(rows), cols_(cols), vars_(vars), data_(rows * cols, Poly(vars)) {}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix out(rows.size(), cols.size(), vars_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  }
  return out;
}

PolyMatrix PolyMatrix::block_diagonal(const std::vector<PolyMatrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t rows = 0;
  std::size_t cols = 0;
  const VarSet vs = blocks.front().vars();
  for (const auto& b : blocks) {
    if (b.vars() != vs) throw Error(ErrorKind::Structural, "block matrices over different rings");
    rows += b.rows();
    cols += b.cols();
  }
  PolyMatrix out(rows, cols, vs);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::Structural, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const VarSet vs = m.vars();
  if (n == 0) return Poly::constant(vs, 1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);

  PolyMatrix a = m;
  Poly previous = Poly::constant(vs, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && a(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return Poly(vs);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        auto q = divide_exact(num, previous);
        if (!q) throw Error(ErrorKind::Structural, "Bareiss step was not exact");
        a(i, j) = *std::move(q);
      }
    }
    previous = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

PolyMatrix jacobian(const std::vector<Poly>& polys, const std::vector<Var>& wrt) {
  if (polys.empty()) return {};
  PolyMatrix out(polys.size(), wrt.size(), polys.front().vars());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = 0; j < wrt.size(); ++j) out(i, j) = derivative(polys[i], wrt[j]);
  }
  return out;
}

}  // namespace germcalc
