#pragma once

#include <cstddef>
#include <vector>

#include "germcalc/poly.hpp"

namespace germcalc {

// Dense row-major matrix of polynomials over one variable set.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, VarSet vars);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  VarSet vars() const noexcept { return vars_; }

  Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  static PolyMatrix block_diagonal(const std::vector<PolyMatrix>& blocks);

  bool operator==(const PolyMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  VarSet vars_;
  std::vector<Poly> data_;
};

// Fraction-free (Bareiss) determinant of a square matrix; 1 for the empty matrix.
Poly determinant(const PolyMatrix& m);

// Jacobian of the given polynomials with respect to `wrt` (rows = polynomials).
PolyMatrix jacobian(const std::vector<Poly>& polys, const std::vector<Var>& wrt);

}  // namespace germcalc
