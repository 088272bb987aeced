#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cycres {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<long>> v;
    for (auto r : rows) v.emplace_back(r);
    return from_rows(v);
  }
  template <typename U>
  static DenseMatrix from_rows(const std::vector<std::vector<U>>& rows) {
    DenseMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = T(rows[i][j]);
    }
    return m;
  }
  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  // Matrix with row r and column c deleted.
  DenseMatrix minor(std::size_t r, std::size_t c) const {
    DenseMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
        if (j == c) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

using IntMatrix = DenseMatrix<Integer>;
using RatMatrix = DenseMatrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Fraction-free (Bareiss) determinant.
Integer det(const IntMatrix& m);

// Principal (n-1)-minors of L; for a CB matrix these form the common row of adj(L).
std::vector<Integer> adjugate_row(const IntMatrix& L);

// mu / gcd(mu). Throws NotIrreducibleError when some entry is not positive.
std::vector<Integer> grading_vector(const std::vector<Integer>& mu);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

std::string to_string(const std::vector<Integer>& v);

}  // namespace cycres
