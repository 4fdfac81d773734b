#pragma once

#include <vector>

#include "hopfforge/exact.hpp"

namespace hopfforge {

// Dense exact linear algebra over a field type F supporting +,-,*, inverse(),
// is_zero(), ==. Everything here is plain Gaussian elimination.
template <typename F>
struct DenseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<F>> a;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), a(r, std::vector<F>(c, F{})) {}

  F& at(std::size_t r, std::size_t c) { return a[r][c]; }
  const F& at(std::size_t r, std::size_t c) const { return a[r][c]; }
};

// reduced row echelon form in place; returns pivot column per pivot row
template <typename F>
std::vector<std::size_t> rref(DenseMatrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.a[sel][col].is_zero()) ++sel;
    if (sel == m.rows) continue;
    std::swap(m.a[sel], m.a[row]);
    F inv = m.a[row][col].inverse();
    for (std::size_t c = col; c < m.cols; ++c) m.a[row][c] = m.a[row][c] * inv;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m.a[r][col].is_zero()) continue;
      F f = m.a[r][col];
      for (std::size_t c = col; c < m.cols; ++c)
        m.a[r][c] = m.a[r][c] - f * m.a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename F>
std::size_t rank(DenseMatrix<F> m) {
  return rref(m).size();
}

// basis of the right nullspace {v : M v = 0}
template <typename F>
std::vector<std::vector<F>> nullspace(DenseMatrix<F> m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols, F{});
    v[free] = F(Rational(1));
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m.a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// row space basis (rows of the rref restricted to pivot rows)
template <typename F>
std::vector<std::vector<F>> row_space(DenseMatrix<F> m) {
  auto pivots = rref(m);
  std::vector<std::vector<F>> basis;
  for (std::size_t r = 0; r < pivots.size(); ++r) basis.push_back(m.a[r]);
  return basis;
}

// incremental row-echelon span tracker, used to grow subspaces
template <typename F>
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  std::size_t size() const { return rows_.size(); }
  const std::vector<std::vector<F>>& rows() const { return rows_; }

  // reduces v against the current span; inserts if independent.
  // returns true when the span grew.
  bool insert(std::vector<F> v) {
    reduce(v);
    std::size_t lead = leading(v);
    if (lead == dim_) return false;
    F inv = v[lead].inverse();
    for (auto& x : v) x = x * inv;
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    // keep rows sorted by leading index
    for (std::size_t i = rows_.size(); i-- > 1;) {
      if (leads_[i - 1] <= leads_[i]) break;
      std::swap(rows_[i - 1], rows_[i]);
      std::swap(leads_[i - 1], leads_[i]);
    }
    return true;
  }

  bool contains(std::vector<F> v) const {
    reduce(v);
    return leading(v) == dim_;
  }

 private:
  void reduce(std::vector<F>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::size_t l = leads_[i];
      if (v[l].is_zero()) continue;
      F f = v[l];
      for (std::size_t c = l; c < dim_; ++c) v[c] = v[c] - f * rows_[i][c];
    }
  }

  std::size_t leading(const std::vector<F>& v) const {
    for (std::size_t c = 0; c < dim_; ++c)
      if (!v[c].is_zero()) return c;
    return dim_;
  }

  std::size_t dim_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> leads_;
};

}  // namespace hopfforge
