#pragma once

#include <cstddef>
#include <vector>

#include "weave/multi_poly.hpp"

namespace weave {

/// Dense row-major matrix of polynomials over one VarTable.
class PolyMatrix {
 public:
  PolyMatrix(VarTablePtr vars, std::size_t rows, std::size_t cols);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<MultiPoly> entries);

  static PolyMatrix identity(VarTablePtr vars, std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarTablePtr& vars() const { return vars_; }

  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  MultiPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<MultiPoly>& entries() const { return entries_; }

  /// Drops row r and column c.
  PolyMatrix minor(std::size_t r, std::size_t c) const;
  /// Square submatrix on the chosen rows and columns.
  PolyMatrix select(const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) const;

  bool is_zero() const;
  bool operator==(const PolyMatrix& other) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const MultiPoly& s, const PolyMatrix& m);

 private:
  VarTablePtr vars_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MultiPoly> entries_;
};

/// Cofactor expansion up to 4x4, fraction-free Bareiss elimination beyond.
MultiPoly poly_det(const PolyMatrix& m);
/// adj(M) with M * adj(M) = det(M) * I.
PolyMatrix poly_adjugate(const PolyMatrix& m);

}  // namespace weave
