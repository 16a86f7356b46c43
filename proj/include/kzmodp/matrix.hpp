#ifndef KZMODP_MATRIX_HPP
#define KZMODP_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kzmodp/field.hpp"

namespace kzmodp {

template <Field F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

  static Matrix from_rows(const F& field, const std::vector<std::vector<Element>>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Element& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  std::vector<Element> apply(const std::vector<Element>& v) const {
    std::vector<Element> r(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
    }
    return r;
  }

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t piv = row;
      while (piv < rows_ && (*this)(piv, col).is_zero()) ++piv;
      if (piv == rows_) continue;
      if (piv != row) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(row, j));
      }
      const Element inv = (*this)(row, col).inv();
      for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) = (*this)(row, j) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || (*this)(i, col).is_zero()) continue;
        const Element f = (*this)(i, col);
        for (std::size_t j = col; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) - f * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  // Basis of {v : M v = 0}, one vector per free column.
  std::vector<std::vector<Element>> kernel() const {
    Matrix m = *this;
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Element>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Element> v(cols_, field_.zero());
      v[free] = field_.one();
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<Element> a_;
};

// Rank of a list of equal-length vectors.
template <Field F>
std::size_t span_rank(const F& field, const std::vector<std::vector<typename F::Element>>& vectors, std::size_t len) {
  if (vectors.empty()) return 0;
  return Matrix<F>::from_rows(field, vectors, len).rank();
}

}  // namespace kzmodp

#endif  // KZMODP_MATRIX_HPP
