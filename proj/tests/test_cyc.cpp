#include <catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "cycres/cyc.hpp"
#include "cycres/errors.hpp"
#include "cycres/verify.hpp"
#include "fixtures.hpp"

using namespace cycres;

namespace {

// Every ordered partition of [n] into k+1 blocks with n in the last block.
std::vector<CycPartition> brute_force_partitions(std::size_t n, std::size_t k) {
  std::vector<CycPartition> out;
  std::vector<std::size_t> label(n - 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v + 1 == n) {
      CycPartition p;
      p.blocks.assign(k + 1, 0);
      for (std::size_t u = 0; u + 1 < n; ++u) p.blocks[label[u]] |= Subset{1} << u;
      p.blocks[k] |= Subset{1} << (n - 1);
      for (std::size_t b = 0; b < k; ++b)
        if (p.blocks[b] == 0) return;
      out.push_back(p);
      return;
    }
    for (std::size_t b = 0; b <= k; ++b) {
      label[v] = b;
      rec(v + 1);
    }
  };
  rec(0);
  return out;
}

// Literal reading of the block order: J before I iff |J| > |I|, or equal sizes
// and the rightmost nonzero entry of chi_J - chi_I is +1.
bool block_before(Subset j, Subset i, std::size_t n) {
  const int pj = __builtin_popcount(j), pi = __builtin_popcount(i);
  if (pj != pi) return pj > pi;
  for (std::size_t v = n; v-- > 0;) {
    const int d = static_cast<int>(j >> v & 1) - static_cast<int>(i >> v & 1);
    if (d != 0) return d > 0;
  }
  return false;
}

bool partition_before(const CycPartition& p, const CycPartition& q, std::size_t n) {
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (block_before(p.blocks[b], q.blocks[b], n)) return true;
    if (block_before(q.blocks[b], p.blocks[b], n)) return false;
  }
  return false;
}

std::vector<std::string> strings(const std::vector<CycPartition>& v, std::size_t n) {
  std::vector<std::string> s;
  for (const auto& p : v) s.push_back(to_string(p, n));
  return s;
}

// "y:21+24 z:31+34" -> y^{a21+a24} z^{a31+a34} over the weights of L.
Monomial symbolic(const std::string& spec, const CBMatrix& L) {
  Monomial m(4);
  std::istringstream in(spec);
  std::string tok;
  while (in >> tok) {
    const std::size_t var = std::string("xyzt").find(tok[0]);
    std::int64_t e = 0;
    std::istringstream parts(tok.substr(2));
    std::string ij;
    while (std::getline(parts, ij, '+')) e += L.a(static_cast<std::size_t>(ij[0] - '1'), static_cast<std::size_t>(ij[1] - '1'));
    m[var] = static_cast<Exponent>(e);
  }
  return m;
}

struct Expected {
  int sign;
  const char* mono;
  const char* basis;
  bool leading;
};

// Check d_k(e_{k,j}) against a symbolic table entry, including which term leads.
void check_boundary(const CycComplex& c, std::size_t k, std::size_t j, const std::vector<Expected>& want) {
  const ModuleElement& f = c.diff(k)[j];
  INFO("d_" << k << "(" << to_string(c.basis(k)[j], 4) << ") = " << to_string(f));
  REQUIRE(f.size() == want.size());
  for (const auto& w : want) {
    const Term t{Rational(w.sign), symbolic(w.mono, c.matrix()), basis_index(c.basis(k - 1), [&] {
                   for (const auto& p : c.basis(k - 1))
                     if (to_string(p, 4) == w.basis) return p;
                   FAIL("unknown basis " << w.basis);
                   return CycPartition{};
                 }())};
    CHECK(std::count(f.terms().begin(), f.terms().end(), t) == 1);
    if (w.leading) CHECK(f.leading() == t);
  }
}

}  // namespace

TEST_CASE("block order examples") {
  CHECK(srle_compare(fx::part({{1, 2, 3}, {4}}), fx::part({{2, 3}, {1, 4}})) < 0);
  CHECK(srle_compare(fx::part({{3}, {2}, {1}, {4}}), fx::part({{1}, {2}, {3}, {4}})) < 0);
  CHECK(srle_compare(fx::part({{3}, {2}, {1}, {4}}), fx::part({{3}, {2}, {1}, {4}})) == 0);
  CHECK_THROWS_AS(srle_compare(fx::part({{1}, {2, 3, 4}}), fx::part({{1}, {2}, {3, 4}})), DimensionError);
}

TEST_CASE("basis enumeration for n = 4 matches the listed order") {
  CHECK(strings(enumerate_basis(4, 0), 4) == std::vector<std::string>{"1234"});
  CHECK(strings(enumerate_basis(4, 1), 4) == std::vector<std::string>{"123|4", "23|14", "13|24", "12|34", "3|124", "2|134", "1|234"});
  CHECK(strings(enumerate_basis(4, 2), 4) == std::vector<std::string>{"23|1|4", "13|2|4", "12|3|4", "3|12|4", "3|2|14", "3|1|24",
                                                                        "2|13|4", "2|3|14", "2|1|34", "1|23|4", "1|3|24", "1|2|34"});
  CHECK(strings(enumerate_basis(4, 3), 4) == std::vector<std::string>{"3|2|1|4", "3|1|2|4", "2|3|1|4", "2|1|3|4", "1|3|2|4", "1|2|3|4"});
  CHECK(to_string(fx::part({{1, 10}, {2, 3, 4, 5, 6, 7, 8, 9, 11}}), 11) == "1,10|2,3,4,5,6,7,8,9,11");
}

TEST_CASE("basis enumeration agrees with brute force up to n = 6") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 0; k < n; ++k) {
      auto brute = brute_force_partitions(n, k);
      std::sort(brute.begin(), brute.end(), [n](const auto& p, const auto& q) { return partition_before(p, q, n); });
      const auto basis = enumerate_basis(n, k);
      REQUIRE(basis == brute);
      REQUIRE(basis.size() == expected_rank(n, k));
      for (std::size_t i = 0; i < basis.size(); ++i) REQUIRE(basis_index(basis, basis[i]) == i);
    }
  CHECK_THROWS_AS(basis_index(enumerate_basis(4, 1), fx::part({{4}, {1, 2, 3}})), InternalError);
  CHECK_THROWS_AS(basis_index(enumerate_basis(4, 1), fx::part({{1}, {2}, {3, 4}})), DimensionError);
}

TEST_CASE("rank formula") {
  auto ranks = [](std::size_t n) {
    std::vector<std::size_t> r;
    for (std::size_t k = 0; k < n; ++k) r.push_back(expected_rank(n, k));
    return r;
  };
  CHECK(ranks(3) == std::vector<std::size_t>{1, 3, 2});
  CHECK(ranks(4) == std::vector<std::size_t>{1, 7, 12, 6});
  CHECK(ranks(5) == std::vector<std::size_t>{1, 15, 50, 60, 24});
  CHECK(ranks(6) == std::vector<std::size_t>{1, 31, 180, 390, 360, 120});
}

TEST_CASE("arrow monomials") {
  const CBMatrix L = cb_matrix(fx::generic4_rows());
  CHECK(arrow_monomial(0, fx::set({1, 4}), L).is_one());
  CHECK(arrow_monomial(fx::set({1, 2}), 0, L).is_one());
  CHECK(arrow_monomial(fx::set({2, 3}), fx::set({1, 4}), L) == fx::mono({0, 1 + 2, 3 + 2, 0}));
  CHECK(arrow_monomial(fx::set({1, 2, 3}), fx::set({4}), cb_matrix(fx::k4_rows())) == fx::mono({1, 1, 1, 0}));
  CHECK_THROWS_AS(arrow_monomial(fx::set({1, 2}), fx::set({2}), L), InternalError);
  // (A -> B, C)^+ keeps only positive parts.
  CHECK(arrow_monomial_plus(fx::set({1, 2}), fx::set({3}), fx::set({4}), L) == fx::mono({0, 1, 0, 0}));
}

TEST_CASE("generic four-vertex complex reproduces every listed differential") {
  const CycComplex c = build_complex(cb_matrix(fx::generic4_rows()));
  const std::vector<std::vector<Expected>> d1 = {
      {{1, "x:14 y:24 z:34", "1234", true}, {-1, "t:44", "1234", false}},
      {{1, "y:21+24 z:31+34", "1234", true}, {-1, "x:12+13 t:42+43", "1234", false}},
      {{1, "x:12+14 z:32+34", "1234", true}, {-1, "y:21+23 t:41+43", "1234", false}},
      {{1, "x:13+14 y:23+24", "1234", true}, {-1, "z:31+32 t:41+42", "1234", false}},
      {{1, "z:33", "1234", true}, {-1, "x:13 y:23 t:43", "1234", false}},
      {{1, "y:22", "1234", true}, {-1, "x:12 z:32 t:42", "1234", false}},
      {{1, "x:11", "1234", true}, {-1, "y:21 z:31 t:41", "1234", false}},
  };
  const std::vector<std::vector<Expected>> d2 = {
      {{1, "y:21 z:31", "123|4", false}, {-1, "x:14", "23|14", true}, {-1, "t:42+43", "1|234", false}},
      {{1, "x:12 z:32", "123|4", false}, {-1, "y:24", "13|24", true}, {-1, "t:41+43", "2|134", false}},
      {{1, "x:13 y:23", "123|4", false}, {-1, "z:34", "12|34", true}, {-1, "t:41+42", "3|124", false}},
      {{1, "z:31+32", "123|4", false}, {-1, "x:14 y:24", "3|124", true}, {-1, "t:43", "12|34", false}},
      {{1, "z:32", "23|14", false}, {-1, "y:21+24", "3|124", true}, {-1, "x:13 t:43", "2|134", false}},
      {{1, "z:31", "13|24", false}, {-1, "x:12+14", "3|124", true}, {-1, "y:23 t:43", "1|234", false}},
      {{1, "y:21+23", "123|4", false}, {-1, "x:14 z:34", "2|134", true}, {-1, "t:42", "13|24", false}},
      {{1, "y:23", "23|14", false}, {-1, "z:31+34", "2|134", true}, {-1, "x:12 t:42", "3|124", false}},
      {{1, "y:21", "12|34", false}, {-1, "x:13+14", "2|134", true}, {-1, "z:32 t:42", "1|234", false}},
      {{1, "x:12+13", "123|4", false}, {-1, "y:24 z:34", "1|234", true}, {-1, "t:41", "23|14", false}},
      {{1, "x:13", "13|24", false}, {-1, "z:32+34", "1|234", true}, {-1, "y:21 t:41", "3|124", false}},
      {{1, "x:12", "12|34", false}, {-1, "y:23+24", "1|234", true}, {-1, "z:31 t:41", "2|134", false}},
  };
  const std::vector<std::vector<Expected>> d3 = {
      {{1, "z:32", "23|1|4", false}, {-1, "y:21", "3|12|4", false}, {1, "x:14", "3|2|14", true}, {-1, "t:43", "2|1|34", false}},
      {{1, "z:31", "13|2|4", false}, {-1, "x:12", "3|12|4", false}, {1, "y:24", "3|1|24", true}, {-1, "t:43", "1|2|34", false}},
      {{1, "y:23", "23|1|4", false}, {-1, "z:31", "2|13|4", false}, {1, "x:14", "2|3|14", true}, {-1, "t:42", "3|1|24", false}},
      {{1, "y:21", "12|3|4", false}, {-1, "x:13", "2|13|4", false}, {1, "z:34", "2|1|34", true}, {-1, "t:42", "1|3|24", false}},
      {{1, "x:13", "13|2|4", false}, {-1, "z:32", "1|23|4", false}, {1, "y:24", "1|3|24", true}, {-1, "t:41", "3|2|14", false}},
      {{1, "x:12", "12|3|4", false}, {-1, "y:23", "1|23|4", false}, {1, "z:34", "1|2|34", true}, {-1, "t:41", "2|3|14", false}},
  };
  for (std::size_t j = 0; j < 7; ++j) check_boundary(c, 1, j, d1[j]);
  for (std::size_t j = 0; j < 12; ++j) check_boundary(c, 2, j, d2[j]);
  for (std::size_t j = 0; j < 6; ++j) check_boundary(c, 3, j, d3[j]);
}

TEST_CASE("degree-one images are the column binomials for single-vertex blocks") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const std::size_t n = 3 + seed % 4;
    const CycComplex c = build_complex(echelon_laplacian(random_icb_digraph(n, seed), n - 1));
    const auto& L = c.matrix();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Subset C = Subset{1} << i;
      const auto& f = c.diff(1)[basis_index(c.basis(1), CycPartition{{C, ((Subset{1} << n) - 1) & ~C}})];
      Monomial plus(n), minus(n);
      plus[i] = static_cast<Exponent>(L.a(i, i));
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) minus[j] = static_cast<Exponent>(L.a(j, i));
      REQUIRE(f == ModuleElement(c.order(0), {{1, plus, 0}, {-1, minus, 0}}));
    }
  }
}

TEST_CASE("ranks, shifts and d^2 = 0") {
  const CycComplex k4 = build_complex(cb_matrix(fx::k4_rows()));
  CHECK(k4.length() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(k4.rank(k) == expected_rank(4, k));
  CHECK(k4.shifts(0) == std::vector<std::int64_t>{0});
  CHECK(k4.shifts(1) == std::vector<std::int64_t>{3, 4, 4, 4, 3, 3, 3});
  CHECK(check_d_squared(k4));
  CHECK_FALSE(d_squared_witness(k4));
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const CycComplex c = build_complex(echelon_laplacian(random_icb_digraph(5, seed), 4));
    REQUIRE(check_d_squared(c));
    for (std::size_t k = 1; k < c.length(); ++k)
      for (std::size_t j = 0; j < c.rank(k); ++j) REQUIRE(c.shifts(k)[j] > 0);
  }
}

TEST_CASE("build_complex rejects bad input") {
  CHECK_THROWS_AS(build_complex(cb_matrix(fx::reducible_rows())), NotIrreducibleError);
  CHECK_THROWS_AS(build_complex(cb_matrix(fx::running_rows())), ValidationError);
  CHECK_NOTHROW(build_complex(cb_matrix(fx::running_echelon_rows())));
}

TEST_CASE("merge terms avoid x_n and the rotation term carries it when the last row is positive") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t n = 4 + seed % 2;
    const CBMatrix L = echelon_laplacian(random_icb_digraph(n, seed, 0.6), n - 1);
    bool last_row_positive = true;
    for (std::size_t i = 0; i + 1 < n; ++i) last_row_positive &= L.a(n - 1, i) > 0;
    for (std::size_t k = 1; k < n; ++k) {
      const auto lower = enumerate_basis(n, k - 1);
      for (const auto& p : enumerate_basis(n, k)) {
        const auto terms = boundary_terms(p, L, lower);
        REQUIRE(terms.size() == k + 1);
        for (std::size_t s = 0; s < k; ++s) REQUIRE(terms[s].mono[n - 1] == 0);
        if (last_row_positive) REQUIRE(terms[k].mono[n - 1] > 0);
      }
    }
  }
}

TEST_CASE("minimality") {
  const CycComplex k4 = build_complex(cb_matrix(fx::k4_rows()));
  CHECK(minimality_check(k4).minimal);
  CHECK_FALSE(minimality_check(k4).witness);

  const CycComplex cyc = build_complex(echelon_laplacian(fx::cycle4(), 3));
  const Minimality m = minimality_check(cyc);
  CHECK_FALSE(m.minimal);
  REQUIRE(m.witness);
  bool found = false;
  for (const Term& t : cyc.diff(m.witness->k)[m.witness->source].terms())
    if (t.basis == m.witness->target && t.mono.is_one()) found = abs(t.coeff) == 1;
  CHECK(found);

  std::vector<Arc> arcs = fx::complete(4).arcs();
  arcs[5].w = 2;
  const WeightedDigraph heavier(4, arcs);
  CHECK(minimality_check(build_complex(laplacian(heavier))).minimal);
}

TEST_CASE("4-cycle degree-zero images") {
  const CycComplex c = build_complex(echelon_laplacian(fx::cycle4(), 3));
  CHECK(c.matrix().rows() == fx::cycle4_echelon_rows());
  std::set<std::string> images;
  for (const auto& f : c.diff(1)) images.insert(to_string(f));
  CHECK(images == std::set<std::string>{"x1 - x4", "x2 - x4", "x1*x3 - x2*x4", "x1 - x3", "x3 - x4", "x2 - x3", "x1 - x2"});
}

TEST_CASE("assemble_complex rejects inhomogeneous or zero boundaries") {
  const CBMatrix L = cb_matrix(fx::k4_rows());
  std::vector<std::vector<std::vector<Term>>> raw(4);
  for (std::size_t k = 1; k < 4; ++k)
    for (const auto& p : enumerate_basis(4, k)) raw[k].push_back(boundary_terms(p, L, enumerate_basis(4, k - 1)));
  auto bad = raw;
  bad[2][0][0].mono[0] += 1;
  CHECK_THROWS_AS(assemble_complex(L, bad), ValidationError);
  bad = raw;
  bad[1][3].clear();
  CHECK_THROWS_AS(assemble_complex(L, bad), ValidationError);
  bad = raw;
  bad[3].pop_back();
  CHECK_THROWS_AS(assemble_complex(L, bad), DimensionError);
  CHECK_NOTHROW(assemble_complex(L, raw));
}
