#include "cycres/intlinalg.hpp"

#include <utility>

#include "cycres/errors.hpp"

namespace cycres {

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

// In-place fraction-free elimination. Returns the rank; when the matrix is
// square and of full rank, *det receives the determinant.
std::size_t bareiss(IntMatrix& m, Integer* det_out) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  if (det_out) *det_out = (r == rows && rows == cols) ? Integer(sign * prev) : Integer(0);
  return r;
}

}  // namespace

Integer det(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("det: matrix is not square");
  if (m.rows() == 0) return 1;
  IntMatrix w = m;
  Integer d;
  bareiss(w, &d);
  return d;
}

std::vector<Integer> adjugate_row(const IntMatrix& L) {
  if (!L.square()) throw DimensionError("adjugate_row: matrix is not square");
  std::vector<Integer> mu;
  mu.reserve(L.rows());
  for (std::size_t i = 0; i < L.rows(); ++i) mu.push_back(det(L.minor(i, i)));
  return mu;
}

std::vector<Integer> grading_vector(const std::vector<Integer>& mu) {
  Integer g = 0;
  for (const auto& m : mu) {
    if (m <= 0) throw NotIrreducibleError("adjugate row has a nonpositive entry: " + to_string(mu));
    g = gcd(g, m);
  }
  std::vector<Integer> nu;
  nu.reserve(mu.size());
  for (const auto& m : mu) nu.push_back(m / g);
  return nu;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix w = m;
  return bareiss(w, nullptr);
}

std::size_t rank(const RatMatrix& m) {
  // Clear denominators row by row; row scaling preserves rank.
  IntMatrix w(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, Integer(m(i, j).get_den()));
    for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return bareiss(w, nullptr);
}

std::string to_string(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace cycres
