#include "cycres/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include <json.hpp>

#include "cycres/errors.hpp"

namespace cycres {

namespace {

constexpr std::int64_t kMaxWeight = 1'000'000;
constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::string vtx(std::size_t v) { return std::to_string(v + 1); }

std::vector<std::size_t> bfs(const std::vector<std::vector<std::size_t>>& succ, std::size_t s) {
  std::vector<std::size_t> d(succ.size(), kUnreached);
  std::deque<std::size_t> q{s};
  d[s] = 0;
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop_front();
    for (std::size_t v : succ[u])
      if (d[v] == kUnreached) {
        d[v] = d[u] + 1;
        q.push_back(v);
      }
  }
  return d;
}

}  // namespace

WeightedDigraph::WeightedDigraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n_ < 3) throw TooSmallError("need at least 3 vertices, got " + std::to_string(n_));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<bool> out(n_), in(n_);
  for (const Arc& a : arcs_) {
    if (a.from >= n_ || a.to >= n_) throw ValidationError("arc endpoint out of range 1.." + std::to_string(n_));
    if (a.from == a.to) throw ValidationError("loop at " + vtx(a.from));
    if (a.w <= 0) throw ValidationError("nonpositive weight on arc " + vtx(a.from) + "->" + vtx(a.to));
    if (a.w > kMaxWeight) throw ValidationError("weight above " + std::to_string(kMaxWeight) + " on arc " + vtx(a.from) + "->" + vtx(a.to));
    if (!seen.emplace(a.from, a.to).second) throw ValidationError("repeated arc " + vtx(a.from) + "->" + vtx(a.to));
    out[a.from] = in[a.to] = true;
  }
  for (std::size_t v = 0; v < n_; ++v) {
    if (!out[v]) throw ValidationError("sink at " + vtx(v));
    if (!in[v]) throw ValidationError("source at " + vtx(v));
  }
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& x, const Arc& y) { return std::pair(x.from, x.to) < std::pair(y.from, y.to); });
}

std::vector<std::vector<std::size_t>> WeightedDigraph::successors() const {
  std::vector<std::vector<std::size_t>> s(n_);
  for (const Arc& a : arcs_) s[a.from].push_back(a.to);
  return s;
}

std::string to_string(MatrixClass c) {
  switch (c) {
    case MatrixClass::CB: return "CB";
    case MatrixClass::ICB: return "ICB";
    case MatrixClass::PCB: return "PCB";
  }
  return "?";
}

CBMatrix::CBMatrix(std::size_t n, std::vector<std::int64_t> w) : n_(n), w_(std::move(w)), perm_(n) {
  std::iota(perm_.begin(), perm_.end(), 0);
  class_ = classify(*this);
  if (irreducible()) echelon_ = block_echelon_structure(*this);
}

IntMatrix CBMatrix::to_int_matrix() const {
  IntMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = static_cast<long>(entry(i, j));
  return m;
}

std::vector<std::vector<std::int64_t>> CBMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> r(n_, std::vector<std::int64_t>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r[i][j] = entry(i, j);
  return r;
}

CBMatrix CBMatrix::permuted(const std::vector<std::size_t>& order) const {
  if (order.size() != n_) throw DimensionError("permutation length differs from n");
  std::vector<std::int64_t> w(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) w[i * n_ + j] = a(order[i], order[j]);
  CBMatrix m(n_, std::move(w));
  for (std::size_t i = 0; i < n_; ++i) m.perm_[i] = perm_[order[i]];
  return m;
}

CBMatrix laplacian(const WeightedDigraph& g) {
  const std::size_t n = g.n();
  std::vector<std::int64_t> w(n * n, 0);
  for (const Arc& a : g.arcs()) {
    w[a.from * n + a.to] = a.w;
    w[a.from * n + a.from] += a.w;
  }
  return CBMatrix(n, std::move(w));
}

CBMatrix cb_matrix(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw DimensionError("matrix is not square");
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t e = rows[i][j];
      if (std::abs(e) > kMaxWeight * static_cast<std::int64_t>(n))
        throw ValidationError("entry out of range at (" + vtx(i) + "," + vtx(j) + ")");
      sum += e;
      if (i == j) continue;
      if (e > 0) throw ValidationError("positive off-diagonal entry at (" + vtx(i) + "," + vtx(j) + ")");
      if (e < 0) arcs.push_back({i, j, -e});
    }
    if (sum != 0) throw ValidationError("row " + vtx(i) + " does not sum to zero");
  }
  return laplacian(WeightedDigraph(n, std::move(arcs)));
}

WeightedDigraph digraph_of(const CBMatrix& L) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < L.n(); ++i)
    for (std::size_t j = 0; j < L.n(); ++j)
      if (i != j && L.a(i, j) > 0) arcs.push_back({i, j, L.a(i, j)});
  return WeightedDigraph(L.n(), std::move(arcs));
}

WeightedDigraph parse_digraph(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (doc.contains("matrix")) {
      auto rows = doc.at("matrix").get<std::vector<std::vector<std::int64_t>>>();
      if (rows.size() < 3) throw TooSmallError("need at least 3 vertices, got " + std::to_string(rows.size()));
      return digraph_of(cb_matrix(rows));
    }
    const auto n = doc.at("n").get<std::int64_t>();
    if (n < 3) throw TooSmallError("need at least 3 vertices, got " + std::to_string(n));
    std::vector<Arc> arcs;
    for (const auto& a : doc.at("arcs")) {
      const auto from = a.at("from").get<std::int64_t>(), to = a.at("to").get<std::int64_t>();
      if (from < 1 || to < 1 || from > n || to > n) throw ValidationError("arc endpoint out of range 1.." + std::to_string(n));
      arcs.push_back({static_cast<std::size_t>(from - 1), static_cast<std::size_t>(to - 1), a.at("w").get<std::int64_t>()});
    }
    return WeightedDigraph(static_cast<std::size_t>(n), std::move(arcs));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad input document: ") + e.what());
  }
}

std::size_t strongly_connected_components(const WeightedDigraph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.n();
  const auto succ = g.successors();
  std::vector<std::size_t> index(n, kUnreached), low(n, 0), stack, it(n, 0);
  std::vector<bool> on(n, false);
  std::size_t next = 0, count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (index[s] != kUnreached) continue;
    std::vector<std::size_t> call{s};
    index[s] = low[s] = next++;
    stack.push_back(s);
    on[s] = true;
    while (!call.empty()) {
      std::size_t u = call.back();
      if (it[u] < succ[u].size()) {
        std::size_t v = succ[u][it[u]++];
        if (index[v] == kUnreached) {
          index[v] = low[v] = next++;
          stack.push_back(v);
          on[v] = true;
          call.push_back(v);
        } else if (on[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[u]);
      if (low[u] == index[u]) {
        ++count;
        std::size_t v;
        do {
          v = stack.back();
          stack.pop_back();
          on[v] = false;
        } while (v != u);
      }
    }
  }
  return count;
}

MatrixClass classify(const CBMatrix& L) {
  const WeightedDigraph g = digraph_of(L);
  if (strongly_connected_components(g) != 1) return MatrixClass::CB;
  return is_strongly_complete(g) ? MatrixClass::PCB : MatrixClass::ICB;
}

std::vector<std::size_t> unweighted_distance(const WeightedDigraph& g, std::size_t omega) {
  if (omega >= g.n()) throw ValidationError("omega out of range");
  auto d = bfs(g.successors(), omega);
  for (std::size_t v = 0; v < g.n(); ++v)
    if (d[v] == kUnreached) throw NotStronglyConnectedError("vertex " + vtx(v) + " is unreachable from " + vtx(omega));
  return d;
}

std::vector<std::size_t> omega_delta_enumeration(const WeightedDigraph& g, std::size_t omega) {
  const auto d = unweighted_distance(g, omega);
  std::vector<std::size_t> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t u, std::size_t v) { return d[u] > d[v]; });
  return order;
}

WeightedDigraph relabel(const WeightedDigraph& g, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> inv(g.n());
  for (std::size_t i = 0; i < order.size(); ++i) inv[order[i]] = i;
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) arcs.push_back({inv[a.from], inv[a.to], a.w});
  return WeightedDigraph(g.n(), std::move(arcs));
}

std::optional<EchelonBlocks> block_echelon_structure(const CBMatrix& L) {
  const std::size_t n = L.n();
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && L.a(i, j) > 0) succ[i].push_back(j);
  const auto d = bfs(succ, n - 1);
  if (std::any_of(d.begin(), d.end(), [](std::size_t x) { return x == kUnreached; })) return std::nullopt;
  // Candidate blocks: the distance classes, which must appear in decreasing order.
  const std::size_t delta = d[0];
  if (delta == 0) return std::nullopt;
  std::vector<std::size_t> block(n);  // 0-based block number, block(n-1) = delta
  EchelonBlocks eb{delta, std::vector<std::size_t>(delta, 0)};
  for (std::size_t v = 0; v < n; ++v) {
    if (v > 0 && d[v] > d[v - 1]) return std::nullopt;
    if (d[v] == 0 && v != n - 1) return std::nullopt;
    block[v] = delta - d[v];
    if (v != n - 1) ++eb.q[block[v]];
  }
  if (std::find(eb.q.begin(), eb.q.end(), 0u) != eb.q.end()) return std::nullopt;
  // The definition itself: blocks two or more steps below the diagonal vanish,
  // and every column of each subdiagonal block is nonzero.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (block[r] >= block[c] + 2 && L.entry(r, c) != 0) return std::nullopt;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    bool nonzero = false;
    for (std::size_t r = 0; r < n; ++r)
      if (block[r] == block[c] + 1 && L.entry(r, c) != 0) nonzero = true;
    if (!nonzero) return std::nullopt;
  }
  return eb;
}

bool is_strongly_complete(const WeightedDigraph& g) { return g.arcs().size() == g.n() * (g.n() - 1); }

}  // namespace cycres
