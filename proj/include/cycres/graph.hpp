#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycres/intlinalg.hpp"

namespace cycres {

// Vertices are 0-based internally; file formats and messages are 1-based.
struct Arc {
  std::size_t from;
  std::size_t to;
  std::int64_t w;
  bool operator==(const Arc&) const = default;
};

class WeightedDigraph {
 public:
  WeightedDigraph(std::size_t n, std::vector<Arc> arcs);  // validates

  std::size_t n() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::vector<std::vector<std::size_t>> successors() const;

 private:
  std::size_t n_;
  std::vector<Arc> arcs_;
};

enum class MatrixClass { CB, ICB, PCB };
std::string to_string(MatrixClass c);

struct EchelonBlocks {
  std::size_t delta;
  std::vector<std::size_t> q;  // q_1..q_delta; the final block {n} is implicit
  bool operator==(const EchelonBlocks&) const = default;
};

// CB matrix stored through its weights: a(i,j) >= 0 off the diagonal is the arc
// weight, a(i,i) is the weighted out-degree. Signed entries come from entry().
class CBMatrix {
 public:
  std::size_t n() const { return n_; }
  std::int64_t a(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }
  std::int64_t entry(std::size_t i, std::size_t j) const { return i == j ? a(i, i) : -a(i, j); }
  IntMatrix to_int_matrix() const;
  std::vector<std::vector<std::int64_t>> rows() const;

  MatrixClass matrix_class() const { return class_; }
  bool irreducible() const { return class_ != MatrixClass::CB; }
  const std::optional<EchelonBlocks>& echelon() const { return echelon_; }
  // order[new] = old index, relative to the matrix this one was permuted from.
  const std::vector<std::size_t>& perm() const { return perm_; }

  CBMatrix permuted(const std::vector<std::size_t>& order) const;

  bool operator==(const CBMatrix& o) const { return n_ == o.n_ && w_ == o.w_; }

  friend CBMatrix laplacian(const WeightedDigraph& g);
  friend CBMatrix cb_matrix(const std::vector<std::vector<std::int64_t>>& rows);

 private:
  CBMatrix(std::size_t n, std::vector<std::int64_t> w);
  std::size_t n_;
  std::vector<std::int64_t> w_;
  MatrixClass class_ = MatrixClass::CB;
  std::optional<EchelonBlocks> echelon_;
  std::vector<std::size_t> perm_;
};

// Input document: {"matrix": [[..]]} or {"n": .., "arcs": [{"from","to","w"}]}.
// The matrix form wins when both are present.
WeightedDigraph parse_digraph(const std::string& text);

CBMatrix laplacian(const WeightedDigraph& g);
// Validates the CB conditions on a signed integer matrix.
CBMatrix cb_matrix(const std::vector<std::vector<std::int64_t>>& rows);
WeightedDigraph digraph_of(const CBMatrix& L);

MatrixClass classify(const CBMatrix& L);
std::size_t strongly_connected_components(const WeightedDigraph& g);

// Directed breadth-first distances from omega.
std::vector<std::size_t> unweighted_distance(const WeightedDigraph& g, std::size_t omega);

// order[new] = old: farthest vertices first, omega last, stable inside a block.
std::vector<std::size_t> omega_delta_enumeration(const WeightedDigraph& g, std::size_t omega);
WeightedDigraph relabel(const WeightedDigraph& g, const std::vector<std::size_t>& order);

std::optional<EchelonBlocks> block_echelon_structure(const CBMatrix& L);

bool is_strongly_complete(const WeightedDigraph& g);

}  // namespace cycres
