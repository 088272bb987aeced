#include "cycres/cyc.hpp"

#include <algorithm>
#include <bit>

#include "cycres/errors.hpp"

namespace cycres {

std::strong_ordering subset_compare(Subset j, Subset i) {
  const int pj = std::popcount(j), pi = std::popcount(i);
  if (pj != pi) return pj > pi ? std::strong_ordering::less : std::strong_ordering::greater;
  // Same size: the set owning the largest element of the symmetric difference
  // comes first, i.e. the larger bit mask.
  if (j == i) return std::strong_ordering::equal;
  return j > i ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering srle_compare(const CycPartition& p, const CycPartition& q) {
  if (p.size() != q.size()) throw DimensionError("srle_compare: different block counts");
  for (std::size_t s = 0; s < p.size(); ++s)
    if (auto c = subset_compare(p.blocks[s], q.blocks[s]); c != 0) return c;
  return std::strong_ordering::equal;
}

namespace {

void enumerate_rec(Subset rest, Subset last, std::size_t remaining_blocks, std::vector<Subset>& prefix,
                   std::vector<CycPartition>& out) {
  if (remaining_blocks == 0) {
    prefix.push_back(rest | last);
    out.push_back({prefix});
    prefix.pop_back();
    return;
  }
  std::vector<Subset> subs;
  for (Subset s = rest; s; s = (s - 1) & rest)
    if (static_cast<std::size_t>(std::popcount(rest & ~s)) + 1 >= remaining_blocks) subs.push_back(s);
  std::sort(subs.begin(), subs.end(), [](Subset a, Subset b) { return subset_compare(a, b) < 0; });
  for (Subset s : subs) {
    prefix.push_back(s);
    enumerate_rec(rest & ~s, last, remaining_blocks - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<CycPartition> enumerate_basis(std::size_t n, std::size_t k) {
  if (n == 0 || n > kMaxVars) throw DimensionError("enumerate_basis: n out of range");
  if (k + 1 > n) throw DimensionError("enumerate_basis: more blocks than elements");
  const Subset last = Subset{1} << (n - 1);
  std::vector<CycPartition> out;
  std::vector<Subset> prefix;
  enumerate_rec(last - 1, last, k, prefix, out);
  return out;
}

std::size_t basis_index(const std::vector<CycPartition>& basis, const CycPartition& p) {
  auto it = std::lower_bound(basis.begin(), basis.end(), p,
                             [](const CycPartition& a, const CycPartition& b) { return srle_compare(a, b) < 0; });
  if (it == basis.end() || !(*it == p)) throw InternalError("partition not found in basis");
  return static_cast<std::size_t>(it - basis.begin());
}

std::string to_string(const CycPartition& p, std::size_t n) {
  std::string s;
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (b) s += "|";
    bool first = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(p.blocks[b] >> v & 1)) continue;
      if (n > 9 && !first) s += ",";
      s += std::to_string(v + 1);
      first = false;
    }
  }
  return s;
}

Monomial arrow_monomial(Subset i, Subset j, const CBMatrix& L) {
  if (i & j) throw InternalError("arrow_monomial: overlapping sets");
  const std::size_t n = L.n();
  Monomial m(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (!(i >> u & 1)) continue;
    std::int64_t e = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (j >> v & 1) e += L.a(u, v);
    m[u] = static_cast<Exponent>(e);
  }
  return m;
}

Monomial arrow_monomial_plus(Subset a, Subset b, Subset c, const CBMatrix& L) {
  const std::size_t n = L.n();
  Monomial m(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (!(a >> u & 1)) continue;
    std::int64_t e = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u) continue;
      if (b >> v & 1) e += L.a(u, v);
      if (c >> v & 1) e -= L.a(u, v);
    }
    m[u] = static_cast<Exponent>(std::max<std::int64_t>(e, 0));
  }
  return m;
}

std::vector<Term> boundary_terms(const CycPartition& p, const CBMatrix& L, const std::vector<CycPartition>& lower) {
  const std::size_t k = p.size() - 1;
  if (k == 0) throw InternalError("boundary of a one-block partition");
  std::vector<Term> terms;
  for (std::size_t s = 0; s < k; ++s) {
    CycPartition q;
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (b == s + 1) q.blocks.back() |= p.blocks[b];
      else q.blocks.push_back(p.blocks[b]);
    }
    terms.push_back({Rational(s % 2 == 0 ? 1 : -1), arrow_monomial(p.blocks[s], p.blocks[s + 1], L), basis_index(lower, q)});
  }
  // Rotation term: (I_2, ..., I_k, I_1 u I_{k+1}), always with sign -1.
  CycPartition q;
  for (std::size_t b = 1; b < k; ++b) q.blocks.push_back(p.blocks[b]);
  q.blocks.push_back(p.blocks[0] | p.blocks[k]);
  terms.push_back({Rational(-1), arrow_monomial(p.blocks[k], p.blocks[0], L), basis_index(lower, q)});
  return terms;
}

const std::vector<ModuleElement>& CycComplex::diff(std::size_t k) const {
  if (k == 0 || k >= diffs_.size()) throw DimensionError("no differential d_" + std::to_string(k));
  return diffs_[k];
}

ModuleElement CycComplex::apply(std::size_t k, const ModuleElement& x) const {
  const auto& f = diff(k);
  if (x.order() != orders_[k]) throw InternalError("apply: element does not live in C_k");
  ModuleElement r(orders_[k - 1]);
  for (const Term& t : x.terms()) r += f[t.basis].times(t.coeff, t.mono);
  return r;
}

CycComplex assemble_complex(const CBMatrix& L, std::vector<std::vector<std::vector<Term>>> raw) {
  if (!L.irreducible()) throw NotIrreducibleError("matrix is reducible (class CB)");
  const std::size_t n = L.n();
  if (n > kMaxVars) throw DimensionError("too many vertices");
  if (raw.size() != n) throw DimensionError("expected differentials d_1..d_" + std::to_string(n - 1));
  CycComplex c(L);
  c.mu_ = adjugate_row(L.to_int_matrix());
  c.ctx_ = GradedContext::from_integers(grading_vector(c.mu_));
  for (std::size_t k = 0; k < n; ++k) c.bases_.push_back(enumerate_basis(n, k));
  c.orders_.push_back(TermOrder::weighted_revlex(c.ctx_));
  c.shifts_.push_back({0});
  c.diffs_.emplace_back();
  for (std::size_t k = 1; k < n; ++k) {
    if (raw[k].size() != c.bases_[k].size())
      throw DimensionError("d_" + std::to_string(k) + " has " + std::to_string(raw[k].size()) + " columns, expected " +
                           std::to_string(c.bases_[k].size()));
    std::vector<ModuleElement> f;
    std::vector<ModuleMonomial> leads;
    std::vector<std::int64_t> shifts;
    for (std::size_t j = 0; j < raw[k].size(); ++j) {
      ModuleElement e(c.orders_[k - 1], std::move(raw[k][j]));
      const std::string where = "d_" + std::to_string(k) + "(e[" + std::to_string(k) + "," + std::to_string(j + 1) + "])";
      if (e.is_zero()) throw ValidationError(where + " is zero");
      const auto& prev = c.shifts_[k - 1];
      const std::int64_t s = c.ctx_.degree(e.terms().front().mono) + prev[e.terms().front().basis];
      for (const Term& t : e.terms())
        if (c.ctx_.degree(t.mono) + prev[t.basis] != s) throw ValidationError(where + " is not homogeneous");
      leads.push_back({e.leading().mono, e.leading().basis});
      shifts.push_back(s);
      f.push_back(std::move(e));
    }
    c.orders_.push_back(TermOrder::induced(c.orders_[k - 1], std::move(leads)));
    c.shifts_.push_back(std::move(shifts));
    c.diffs_.push_back(std::move(f));
  }
  return c;
}

CycComplex build_complex(const CBMatrix& L) {
  if (!L.irreducible()) throw NotIrreducibleError("matrix is reducible (class CB)");
  if (!L.echelon()) throw ValidationError("matrix is not in block echelon form; relabel with the (omega,delta)-enumeration first");
  const std::size_t n = L.n();
  std::vector<std::vector<CycPartition>> bases;
  for (std::size_t k = 0; k < n; ++k) bases.push_back(enumerate_basis(n, k));
  std::vector<std::vector<std::vector<Term>>> raw(n);
  for (std::size_t k = 1; k < n; ++k)
    for (const auto& p : bases[k]) raw[k].push_back(boundary_terms(p, L, bases[k - 1]));
  return assemble_complex(L, std::move(raw));
}

std::size_t expected_rank(std::size_t n, std::size_t k) {
  // S(n, m) by the usual recurrence.
  std::vector<std::vector<std::size_t>> s(n + 1, std::vector<std::size_t>(n + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t m = 1; m <= i; ++m) s[i][m] = m * s[i - 1][m] + s[i - 1][m - 1];
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return k + 1 <= n ? f * s[n][k + 1] : 0;
}

std::optional<DSquaredWitness> d_squared_witness(const CycComplex& c) {
  for (std::size_t k = 2; k < c.length(); ++k)
    for (std::size_t j = 0; j < c.rank(k); ++j)
      if (!c.apply(k - 1, c.diff(k)[j]).is_zero()) return DSquaredWitness{k, j};
  return std::nullopt;
}

bool check_d_squared(const CycComplex& c) { return !d_squared_witness(c).has_value(); }

Minimality minimality_check(const CycComplex& c) {
  for (std::size_t k = 1; k < c.length(); ++k)
    for (std::size_t j = 0; j < c.rank(k); ++j)
      for (const Term& t : c.diff(k)[j].terms())
        if (t.mono.is_one()) return {false, MinimalityWitness{k, j, t.basis}};
  return {true, std::nullopt};
}

}  // namespace cycres
