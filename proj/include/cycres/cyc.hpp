#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycres/graph.hpp"
#include "cycres/poly.hpp"

namespace cycres {

using Subset = std::uint32_t;  // bit v stands for vertex v+1

// Cyclically ordered partition of {1..n}, stored with n in the last block.
struct CycPartition {
  std::vector<Subset> blocks;
  std::size_t size() const { return blocks.size(); }
  bool operator==(const CycPartition&) const = default;
};

// less means "comes first": larger sets first, then by the rightmost element
// of the symmetric difference.
std::strong_ordering subset_compare(Subset j, Subset i);
std::strong_ordering srle_compare(const CycPartition& p, const CycPartition& q);

// Partitions with k+1 blocks in srle order.
std::vector<CycPartition> enumerate_basis(std::size_t n, std::size_t k);
// Position of p in an srle-sorted basis; throws InternalError when absent.
std::size_t basis_index(const std::vector<CycPartition>& basis, const CycPartition& p);

// "23|1|4" style, 1-based vertex digits (comma separated when n > 9).
std::string to_string(const CycPartition& p, std::size_t n);

// x^{I->J} = prod_{i in I} x_i^{sum_{j in J} a_ij}.
Monomial arrow_monomial(Subset i, Subset j, const CBMatrix& L);
// x^{(A->B,C)^+} = prod_{i in A} x_i^{max(0, sum_B a_ij - sum_C a_ij)}.
Monomial arrow_monomial_plus(Subset a, Subset b, Subset c, const CBMatrix& L);

// Terms of the Cyc differential of p (k+1 blocks) in the basis of level k-1.
std::vector<Term> boundary_terms(const CycPartition& p, const CBMatrix& L, const std::vector<CycPartition>& lower);

class CycComplex {
 public:
  std::size_t n() const { return L_.n(); }
  const CBMatrix& matrix() const { return L_; }
  const GradedContext& context() const { return ctx_; }
  const std::vector<Integer>& mu() const { return mu_; }

  // Homological degrees 0..n-1.
  std::size_t length() const { return bases_.size(); }
  std::size_t rank(std::size_t k) const { return bases_.at(k).size(); }
  const std::vector<CycPartition>& basis(std::size_t k) const { return bases_.at(k); }
  const std::vector<std::int64_t>& shifts(std::size_t k) const { return shifts_.at(k); }
  const TermOrder::Ptr& order(std::size_t k) const { return orders_.at(k); }
  // (f_{k-1,1}, ..., f_{k-1,r_k}) with f_{k-1,j} = d_k(e_{k,j}) in C_{k-1}; k = 1..n-1.
  const std::vector<ModuleElement>& diff(std::size_t k) const;

  // d_k applied to an element of C_k.
  ModuleElement apply(std::size_t k, const ModuleElement& x) const;

  friend CycComplex assemble_complex(const CBMatrix& L, std::vector<std::vector<std::vector<Term>>> raw);

 private:
  explicit CycComplex(CBMatrix L) : L_(std::move(L)), ctx_(std::vector<std::int64_t>{1}) {}
  CBMatrix L_;
  std::vector<Integer> mu_;
  GradedContext ctx_;
  std::vector<std::vector<CycPartition>> bases_;
  std::vector<std::vector<std::int64_t>> shifts_;
  std::vector<TermOrder::Ptr> orders_;
  std::vector<std::vector<ModuleElement>> diffs_;  // diffs_[0] is empty
};

// Builds the complex of an ICB matrix in block echelon form.
CycComplex build_complex(const CBMatrix& L);
// Shared by build_complex and the JSON import: raw[k][j] holds the terms of
// d_k(e_{k,j}) for k = 1..n-1 (raw[0] is ignored). Computes orders and shifts
// and rejects inhomogeneous boundaries.
CycComplex assemble_complex(const CBMatrix& L, std::vector<std::vector<std::vector<Term>>> raw);

// Stirling-type count k! S(n, k+1).
std::size_t expected_rank(std::size_t n, std::size_t k);

struct DSquaredWitness {
  std::size_t k;  // d_{k-1}(d_k(e_{k,j})) != 0
  std::size_t j;
};
std::optional<DSquaredWitness> d_squared_witness(const CycComplex& c);
bool check_d_squared(const CycComplex& c);

struct MinimalityWitness {
  std::size_t k;       // in d_k
  std::size_t source;  // e_{k,source}
  std::size_t target;  // component e_{k-1,target} has a nonzero constant
};
struct Minimality {
  bool minimal;
  std::optional<MinimalityWitness> witness;
};
Minimality minimality_check(const CycComplex& c);

}  // namespace cycres
