#include <catch_amalgamated.hpp>

#include <random>

#include "cycres/errors.hpp"
#include "cycres/intlinalg.hpp"
#include "fixtures.hpp"

using namespace cycres;

namespace {

// Laplace expansion along the first row; independent of the Bareiss code.
Integer cofactor_det(const IntMatrix& m) {
  if (m.rows() == 1) return m(0, 0);
  Integer d = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Integer t = m(0, j) * cofactor_det(m.minor(0, j));
    d += (j % 2 == 0) ? t : Integer(-t);
  }
  return d;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> u(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = u(rng);
  return m;
}

}  // namespace

TEST_CASE("det base cases") {
  CHECK(det(IntMatrix::from_rows({{5}})) == 5);
  CHECK(det(IntMatrix::from_rows({{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}})) == 16);
  CHECK(det(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}})) == 0);
  CHECK(det(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK_THROWS_AS(det(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}})), DimensionError);
}

TEST_CASE("det agrees with cofactor expansion on random matrices") {
  std::mt19937_64 rng(20240501);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + t % 5;
    const IntMatrix m = random_matrix(rng, n, n, -5, 5);
    REQUIRE(det(m) == cofactor_det(m));
  }
}

TEST_CASE("det handles values beyond 64 bits") {
  IntMatrix m(3, 3);
  const Integer big("123456789012345678901234567890");
  m(0, 0) = big;
  m(1, 1) = big;
  m(2, 2) = 7;
  CHECK(det(m) == big * big * 7);
}

TEST_CASE("full adjugate from minors satisfies L adj(L) = det(L) I") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const IntMatrix m = random_matrix(rng, 4, 4, -6, 6);
    IntMatrix adj(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const Integer c = det(m.minor(j, i));
        adj(i, j) = (i + j) % 2 ? Integer(-c) : c;
      }
    IntMatrix expect = IntMatrix::identity(4);
    const Integer d = det(m);
    for (std::size_t i = 0; i < 4; ++i) expect(i, i) = d;
    REQUIRE(m * adj == expect);
  }
}

TEST_CASE("adjugate row of the worked examples") {
  CHECK(adjugate_row(IntMatrix::from_rows(fx::running_echelon_rows())) == std::vector<Integer>{8, 12, 24, 24});
  CHECK(adjugate_row(IntMatrix::from_rows(fx::running_rows())) == std::vector<Integer>{12, 8, 24, 24});
  CHECK(adjugate_row(IntMatrix::from_rows(fx::k4_rows())) == std::vector<Integer>{16, 16, 16, 16});
}

TEST_CASE("every row of adj(L) equals mu and mu L = 0 on CB matrices") {
  for (const auto& rows : {fx::running_rows(), fx::generic4_rows(), fx::k4_rows(), fx::cycle4_echelon_rows()}) {
    const IntMatrix L = IntMatrix::from_rows(rows);
    const auto mu = adjugate_row(L);
    IntMatrix row(1, 4);
    for (std::size_t j = 0; j < 4; ++j) row(0, j) = mu[j];
    const IntMatrix prod = row * L;
    for (std::size_t j = 0; j < 4; ++j) CHECK(prod(0, j) == 0);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const Integer c = det(L.minor(j, i));
        CHECK(((i + j) % 2 ? Integer(-c) : c) == mu[j]);
      }
  }
}

TEST_CASE("grading vector") {
  CHECK(grading_vector({8, 12, 24, 24}) == std::vector<Integer>{2, 3, 6, 6});
  CHECK(grading_vector({12, 8, 24, 24}) == std::vector<Integer>{3, 2, 6, 6});
  CHECK(grading_vector({16, 16, 16, 16}) == std::vector<Integer>{1, 1, 1, 1});
  CHECK(grading_vector({7, 7, 7, 7}) == std::vector<Integer>{1, 1, 1, 1});
  CHECK_THROWS_AS(grading_vector({0, 0, 4, 4}), NotIrreducibleError);
  CHECK_THROWS_AS(grading_vector({3, -3, 4}), NotIrreducibleError);
  CHECK(to_string(std::vector<Integer>{2, 3, 6, 6}) == "(2,3,6,6)");
}

TEST_CASE("rank over Q") {
  CHECK(rank(RatMatrix(3, 4)) == 0);
  CHECK(rank(RatMatrix::identity(5)) == 5);
  CHECK(rank(RatMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
  RatMatrix half(2, 2);
  half(0, 0) = Rational(1, 2);
  half(0, 1) = Rational(1, 3);
  half(1, 0) = Rational(3, 2);
  half(1, 1) = 1;
  CHECK(rank(half) == 1);
  CHECK(rank(IntMatrix::from_rows(fx::k4_rows())) == 3);
}

TEST_CASE("any n-1 rows of an ICB matrix are independent, the reducible one has a dependent triple") {
  for (const auto& rows : {fx::running_rows(), fx::generic4_rows(), fx::k4_rows(), fx::cycle4_echelon_rows()})
    for (std::size_t drop = 0; drop < 4; ++drop) {
      fx::Rows sub;
      for (std::size_t i = 0; i < 4; ++i)
        if (i != drop) sub.push_back(rows[i]);
      CHECK(rank(IntMatrix::from_rows(sub)) == 3);
    }
  const auto red = fx::reducible_rows();
  CHECK(rank(IntMatrix::from_rows(fx::Rows{red[0], red[1], red[2]})) == 2);
}
