#include "weave/poly_matrix.hpp"

#include "weave/errors.hpp"
#include "weave/poly_ops.hpp"

namespace weave {

PolyMatrix::PolyMatrix(VarTablePtr vars, std::size_t rows, std::size_t cols)
    : vars_(vars), rows_(rows), cols_(cols), entries_(rows * cols, MultiPoly(vars)) {
  if (rows == 0 || cols == 0) throw UsageError("matrix dimensions must be positive");
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<MultiPoly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw UsageError("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) throw UsageError("matrix entry count mismatch");
  vars_ = entries_.front().vars();
  for (const auto& e : entries_) {
    if (!same_table(e.vars(), vars_)) throw UsageError("matrix entries over different tables");
  }
}

PolyMatrix PolyMatrix::identity(VarTablePtr vars, std::size_t size) {
  PolyMatrix m(vars, size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = MultiPoly::constant(vars, 1);
  return m;
}

PolyMatrix PolyMatrix::minor(std::size_t r, std::size_t c) const {
  if (rows_ < 2 || cols_ < 2) throw UsageError("minor of a matrix with a single row or column");
  std::vector<std::size_t> rs, cs;
  for (std::size_t i = 0; i < rows_; ++i) if (i != r) rs.push_back(i);
  for (std::size_t j = 0; j < cols_; ++j) if (j != c) cs.push_back(j);
  return select(rs, cs);
}

PolyMatrix PolyMatrix::select(const std::vector<std::size_t>& rs,
                              const std::vector<std::size_t>& cs) const {
  PolyMatrix out(vars_, rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
  }
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw UsageError("matrix product dimension mismatch");
  if (!same_table(a.vars_, b.vars_)) throw UsageError("matrices over different tables");
  PolyMatrix out(a.vars_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      MultiPoly s(a.vars_);
      for (std::size_t k = 0; k < a.cols_; ++k) s += a(i, k) * b(k, j);
      out(i, j) = std::move(s);
    }
  }
  return out;
}

PolyMatrix operator*(const MultiPoly& s, const PolyMatrix& m) {
  PolyMatrix out(m);
  for (auto& e : out.entries_) e = s * e;
  return out;
}

namespace {

MultiPoly det_expand(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  MultiPoly sum(m.vars());
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    MultiPoly term = m(0, c) * det_expand(m.minor(0, c));
    if (c % 2 == 0) sum += term; else sum -= term;
  }
  return sum;
}

MultiPoly det_bareiss(PolyMatrix m) {
  const std::size_t n = m.rows();
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(m.vars(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return MultiPoly(m.vars());
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = divide_exact(t, prev);
        if (!q) throw std::logic_error("Bareiss step was not exact");
        m(i, j) = std::move(*q);
      }
      m(i, k) = MultiPoly(m.vars());
    }
    prev = m(k, k);
  }
  MultiPoly d = m(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace

MultiPoly poly_det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
  if (m.rows() <= 4) return det_expand(m);
  return det_bareiss(m);
}

PolyMatrix poly_adjugate(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 1) return PolyMatrix::identity(m.vars(), 1);
  PolyMatrix adj(m.vars(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly c = poly_det(m.minor(i, j));
      adj(j, i) = ((i + j) % 2 == 0) ? c : -c;
    }
  }
  return adj;
}

}  // namespace weave
