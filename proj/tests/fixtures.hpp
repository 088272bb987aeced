#pragma once

#include <vector>

#include "cycres/cyc.hpp"
#include "cycres/graph.hpp"

namespace fx {

using Rows = std::vector<std::vector<std::int64_t>>;

inline Rows k4_rows() { return {{3, -1, -1, -1}, {-1, 3, -1, -1}, {-1, -1, 3, -1}, {-1, -1, -1, 3}}; }
// Running example before and after swapping vertices 1 and 2.
inline Rows running_rows() { return {{2, -2, 0, 0}, {0, 3, -3, 0}, {-1, 0, 5, -4}, {0, 0, -4, 4}}; }
inline Rows running_echelon_rows() { return {{3, 0, -3, 0}, {-2, 2, 0, 0}, {0, -1, 5, -4}, {0, 0, -4, 4}}; }
inline Rows reducible_rows() { return {{1, -1, 0, 0}, {-1, 1, 0, 0}, {-1, -1, 3, -1}, {-1, -1, -1, 3}}; }
// Relabelled 4-cycle of the non-minimality example.
inline Rows cycle4_echelon_rows() { return {{1, 0, 0, -1}, {-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}}; }

// Complete digraph on 4 vertices with pairwise distinct-looking weights, so
// every exponent of a closed formula can be read off.
//   a12=2 a13=1 a14=3 | a21=1 a23=3 a24=2 | a31=3 a32=1 a34=2 | a41=2 a42=3 a43=1
inline Rows generic4_rows() { return {{6, -2, -1, -3}, {-1, 6, -3, -2}, {-3, -1, 6, -2}, {-2, -3, -1, 6}}; }

// 1 -> 2 -> 3 -> 4 -> 1, unit weights.
inline cycres::WeightedDigraph cycle4() { return cycres::WeightedDigraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}); }

inline cycres::WeightedDigraph complete(std::size_t n, std::int64_t w = 1) {
  std::vector<cycres::Arc> arcs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) arcs.push_back({i, j, w});
  return cycres::WeightedDigraph(n, std::move(arcs));
}

inline cycres::Subset set(std::initializer_list<int> one_based) {
  cycres::Subset s = 0;
  for (int v : one_based) s |= cycres::Subset{1} << (v - 1);
  return s;
}

inline cycres::CycPartition part(std::initializer_list<std::initializer_list<int>> blocks) {
  cycres::CycPartition p;
  for (auto b : blocks) p.blocks.push_back(set(b));
  return p;
}

// x1^e1 ... xn^en from a list of exponents.
inline cycres::Monomial mono(std::vector<cycres::Exponent> e) { return cycres::Monomial(std::move(e)); }

}  // namespace fx
