#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cycres/cyc.hpp"

namespace cycres {

// Outcome of one check. A failure always carries a witness; count is the
// number of items examined (pairs, basis elements, degrees, ...).
struct Status {
  bool ok = true;
  std::string witness;
  std::size_t count = 0;

  void fail(std::string w) {
    if (ok) witness = std::move(w);
    ok = false;
  }
  void absorb(const Status& s) {
    if (!s.ok) fail(s.witness);
    count += s.count;
  }
};

Status verify_ranks(const CycComplex& c);
Status verify_homogeneity(const CycComplex& c);
Status verify_d_squared(const CycComplex& c);
// Leading terms found by maximising under the tower order against the closed
// formula, plus injectivity of every d_k on its basis.
Status verify_leading_terms(const CycComplex& c);
// Buchberger criterion for the degree-0 images and the closed S-polynomial identity.
Status verify_degree0_gb(const CycComplex& c);
Status verify_colon_stability(const CycComplex& c, std::size_t trials, std::uint64_t seed);

struct QuotientGenerator {
  std::size_t j;  // source e_{k,j}
  Term m;         // signed monomial m^k_{j,i}
  bool retained;  // e_{k,j} lies in B_{k,i}
};

struct ModuleQuotientSet {
  std::size_t k = 0;
  std::size_t i = 0;
  std::vector<QuotientGenerator> generators;  // every nonzero m^k_{j,i}, j < i
  Status status;                               // formula against direct definition
  std::vector<QuotientGenerator> retained() const;
};

ModuleQuotientSet module_quotients(const CycComplex& c, std::size_t k, std::size_t i);
Status verify_module_quotients(const CycComplex& c);

Status verify_tau_identity(const CycComplex& c, std::size_t k, const CycPartition& e);
Status verify_tau_identities(const CycComplex& c);

// k in 1..n-2 matches level-k generators with the basis of level k+1;
// k = n-1 checks that every module quotient of the top level vanishes.
Status verify_schreyer_coverage(const CycComplex& c, std::size_t k);
Status verify_minimality(const CycComplex& c, bool require_minimal);

// Monomials of nu-degree d.
std::vector<Monomial> monomials_of_degree(const GradedContext& ctx, std::int64_t d);
// Degree-d monomials outside the ideal generated by the leading terms of the
// degree-0 images.
std::size_t standard_monomial_count(const CycComplex& c, std::int64_t d);
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
// Exact rank over Q of a list of sparse vectors (index, value); indices need
// not be sorted but must not repeat within a vector.
std::size_t sparse_rank(const std::vector<SparseRow>& vectors);
// Exactness of every graded piece up to degree d_max via exact ranks. When
// nonzero_pieces is given it receives the number of pairs (d, k >= 1) whose
// graded piece of C_k is nonzero, i.e. how much beyond position 0 was tested.
Status graded_homology_oracle(const CycComplex& c, std::int64_t d_max, std::size_t* nonzero_pieces = nullptr);

inline constexpr std::int64_t kDefaultMaxDegreeCap = 16;
// 2 * (largest shift of the top level), capped.
std::int64_t default_max_degree(const CycComplex& c, std::int64_t cap = kDefaultMaxDegreeCap);

struct CheckRecord {
  std::string name;
  Status status;
  double millis = 0;
};

struct VerificationReport {
  std::string instance;
  bool minimal = false;
  std::int64_t max_degree = 0;
  std::size_t homology_pieces = 0;  // nonzero graded pieces of C_1..C_{n-1} tested
  std::vector<CheckRecord> checks;
  bool passed() const;
  const CheckRecord* find(const std::string& name) const;
};

struct VerifyOptions {
  std::int64_t max_degree_cap = kDefaultMaxDegreeCap;
  std::uint64_t seed = 1;
  std::size_t colon_trials = 12;
  bool require_minimal = false;
};

// Runs every check in a fixed order and never stops at the first failure.
VerificationReport full_verify(const CycComplex& c, const VerifyOptions& opt = {}, std::string instance = {});

// Random strongly connected digraph: a Hamiltonian cycle plus extra arcs, all
// weights drawn from [1,3].
WeightedDigraph random_icb_digraph(std::size_t n, std::uint64_t seed, double extra_arc_probability = 0.35);
// Laplacian relabelled by the (omega,delta)-enumeration.
CBMatrix echelon_laplacian(const WeightedDigraph& g, std::size_t omega);

}  // namespace cycres
