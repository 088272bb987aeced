#include "cycres/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cycres/errors.hpp"

namespace cycres {

namespace {

std::string basis_str(const CycComplex& c, std::size_t k, std::size_t j) {
  return "e[" + std::to_string(k) + "," + std::to_string(j + 1) + "]=(" + to_string(c.basis(k)[j], c.n()) + ")";
}

Rational sign_of(std::size_t k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

Subset full_set(std::size_t n) { return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1; }

// Leading term by explicit maximisation, independent of the stored sort.
Term max_term(const ModuleElement& f) {
  const TermOrder& ord = *f.order();
  const Term* best = &f.terms().at(0);
  for (const Term& t : f.terms())
    if (module_compare(t, *best, ord) > 0) best = &t;
  return *best;
}

// m_{j,i} from its definition: LCM(Lm f_j, Lm f_i) / Lt(f_i); nullopt when the
// leading terms sit on different basis elements.
std::optional<Term> direct_quotient(const ModuleElement& fj, const ModuleElement& fi) {
  const Term& lj = fj.leading();
  const Term& li = fi.leading();
  if (lj.basis != li.basis) return std::nullopt;
  return Term{Rational(1 / li.coeff), lcm(lj.mono, li.mono) / li.mono, 0};
}

}  // namespace

// ------------------------------------------------------------ basic checks

Status verify_ranks(const CycComplex& c) {
  Status s;
  long euler = 0;
  for (std::size_t k = 0; k < c.length(); ++k) {
    ++s.count;
    if (c.rank(k) != expected_rank(c.n(), k))
      s.fail("r_" + std::to_string(k) + "=" + std::to_string(c.rank(k)) + ", expected " + std::to_string(expected_rank(c.n(), k)));
    euler += (k % 2 ? -1 : 1) * static_cast<long>(c.rank(k));
  }
  if (euler != 0) s.fail("Euler characteristic " + std::to_string(euler));
  if (c.length() != c.n()) s.fail("complex length " + std::to_string(c.length()));
  return s;
}

Status verify_homogeneity(const CycComplex& c) {
  Status s;
  for (std::size_t k = 1; k < c.length(); ++k)
    for (std::size_t j = 0; j < c.rank(k); ++j) {
      ++s.count;
      for (const Term& t : c.diff(k)[j].terms())
        if (c.context().degree(t.mono) + c.shifts(k - 1)[t.basis] != c.shifts(k)[j]) {
          s.fail("d_" + std::to_string(k) + "(" + basis_str(c, k, j) + ") has a term of the wrong degree");
          break;
        }
      if (c.shifts(k)[j] <= 0) s.fail("nonpositive shift at " + basis_str(c, k, j));
    }
  return s;
}

Status verify_d_squared(const CycComplex& c) {
  Status s;
  for (std::size_t k = 2; k < c.length(); ++k)
    for (std::size_t j = 0; j < c.rank(k); ++j) {
      ++s.count;
      const ModuleElement dd = c.apply(k - 1, c.diff(k)[j]);
      if (!dd.is_zero()) s.fail("d_" + std::to_string(k - 1) + " d_" + std::to_string(k) + "(" + basis_str(c, k, j) + ") = " + to_string(dd));
    }
  return s;
}

Status verify_leading_terms(const CycComplex& c) {
  Status s;
  for (std::size_t k = 1; k < c.length(); ++k) {
    std::set<std::string> images;
    for (std::size_t j = 0; j < c.rank(k); ++j) {
      ++s.count;
      const auto& I = c.basis(k)[j].blocks;
      const ModuleElement& f = c.diff(k)[j];
      CycPartition target;
      target.blocks.assign(I.begin(), I.end() - 2);
      target.blocks.push_back(I[k - 1] | I[k]);
      const Term expect{sign_of(k - 1), arrow_monomial(I[k - 1], I[k], c.matrix()), basis_index(c.basis(k - 1), target)};
      const Term got = max_term(f);
      if (!(got == expect))
        s.fail("Lt(d_" + std::to_string(k) + "(" + basis_str(c, k, j) + ")) = " + to_string(got, k - 1) + ", formula gives " +
               to_string(expect, k - 1));
      if (!(got == f.leading())) s.fail("stored order disagrees with maximisation at " + basis_str(c, k, j));
      if (!images.insert(to_string(f)).second) s.fail("d_" + std::to_string(k) + " repeats the image of " + basis_str(c, k, j));
    }
  }
  return s;
}

// -------------------------------------------------------------- degree 0

Status verify_degree0_gb(const CycComplex& c) {
  Status s;
  const std::size_t n = c.n();
  const auto& G = c.diff(1);
  const auto& B = c.basis(1);
  const Subset all = full_set(n);
  const auto root = c.order(0);
  auto f_of = [&](Subset C) -> ModuleElement {
    if (C == 0) return ModuleElement(root);
    return G[basis_index(B, CycPartition{{C, all & ~C}})];
  };
  const CBMatrix& L = c.matrix();
  const bool complete = is_strongly_complete(digraph_of(L));
  for (std::size_t a = 0; a < G.size(); ++a)
    for (std::size_t b = a + 1; b < G.size(); ++b) {
      ++s.count;
      const Subset C = B[a].blocks[0], D = B[b].blocks[0];
      const std::string pair = "C=" + to_string(B[a], n) + " D=" + to_string(B[b], n);
      const auto sv = s_vector(G[a], G[b]);
      if (!sv) {
        s.fail("no S-pair at degree 0 for " + pair);
        continue;
      }
      const Division d = divide(sv->s, G);
      if (!d.remainder.is_zero()) s.fail("S(f_C,f_D) has remainder " + to_string(d.remainder) + " for " + pair);
      if (!is_standard_expression(sv->s, G, d)) s.fail("division output is not a standard expression for " + pair);
      // Closed form: S(f_C,f_D) = l_{C,D} f_F - l_{D,C} f_G, with f_empty = 0.
      const Subset E = C & D, F = C & ~E, Gs = D & ~E, V = all & ~(C | D);
      const Monomial lcd = arrow_monomial_plus(E, Gs, F, L) * arrow_monomial(F, Gs, L) * arrow_monomial(V, D, L);
      const Monomial ldc = arrow_monomial_plus(E, F, Gs, L) * arrow_monomial(Gs, F, L) * arrow_monomial(V, C, L);
      const ModuleElement a1 = f_of(F).times(1, lcd), a2 = f_of(Gs).times(1, ldc);
      if (!(a1 - a2 == sv->s)) s.fail("closed S-polynomial identity fails for " + pair);
      if (!sv->s.is_zero()) {
        const TermOrder& ord = *root;
        if (!a1.is_zero() && module_compare(sv->s.leading(), a1.leading(), ord) < 0) s.fail("Lm(S) < Lm(l_CD f_F) for " + pair);
        if (!a2.is_zero() && module_compare(sv->s.leading(), a2.leading(), ord) < 0) s.fail("Lm(S) < Lm(l_DC f_G) for " + pair);
      }
      if (complete && (G[a].leading().mono.divides(G[b].leading().mono) || G[b].leading().mono.divides(G[a].leading().mono)))
        s.fail("leading terms divide each other in the complete case for " + pair);
    }
  return s;
}

Status verify_colon_stability(const CycComplex& c, std::size_t trials, std::uint64_t seed) {
  Status s;
  const std::size_t n = c.n();
  const auto& G = c.diff(1);
  const auto root = c.order(0);
  for (std::size_t j = 0; j < G.size(); ++j) {
    ++s.count;
    if (G[j].leading().mono[n - 1] != 0) s.fail("x_n divides Lt of " + basis_str(c, 1, j));
  }
  std::mt19937_64 rng(seed);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto random_monomial = [&](int max_exp) {
    Monomial m(n);
    for (std::size_t v = 0; v < n; ++v) m[v] = static_cast<Exponent>(uni(0, max_exp));
    return m;
  };
  auto random_coeff = [&] {
    int x = uni(1, 3);
    return Rational(uni(0, 1) ? x : -x);
  };
  const Monomial xn = Monomial::variable(n, n - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    ++s.count;
    ModuleElement g(root);
    const int parts = uni(1, 3);
    for (int p = 0; p < parts; ++p) g += G[static_cast<std::size_t>(uni(0, static_cast<int>(G.size()) - 1))].times(random_coeff(), random_monomial(2));
    if (!divide(g, G).remainder.is_zero()) s.fail("member " + to_string(g) + " does not reduce to 0");
    if (!divide(g.times(1, xn), G).remainder.is_zero()) s.fail("x_n times member " + to_string(g) + " does not reduce to 0");
    std::vector<Term> ht;
    const int terms = uni(1, 3);
    for (int p = 0; p < terms; ++p) ht.push_back({random_coeff(), random_monomial(3), 0});
    const ModuleElement h(root, std::move(ht));
    if (h.is_zero() || divide(h, G).remainder.is_zero()) continue;
    if (divide(h.times(1, xn), G).remainder.is_zero()) s.fail("non-member " + to_string(h) + " becomes a member after multiplying by x_n");
  }
  return s;
}

// -------------------------------------------------------- module quotients

std::vector<QuotientGenerator> ModuleQuotientSet::retained() const {
  std::vector<QuotientGenerator> r;
  for (const auto& g : generators)
    if (g.retained) r.push_back(g);
  return r;
}

ModuleQuotientSet module_quotients(const CycComplex& c, std::size_t k, std::size_t i) {
  ModuleQuotientSet q;
  q.k = k;
  q.i = i;
  const auto& F = c.diff(k);
  const auto& B = c.basis(k);
  const CBMatrix& L = c.matrix();
  const auto& I = B.at(i).blocks;
  std::map<std::size_t, Term> direct;
  for (std::size_t j = 0; j < i; ++j)
    if (auto m = direct_quotient(F[j], F[i])) direct.emplace(j, *m);
  std::size_t retained = 0;
  for (std::size_t j = 0; j < i; ++j) {
    ++q.status.count;
    const auto& J = B[j].blocks;
    const std::string where = "m^" + std::to_string(k) + "_{" + std::to_string(j + 1) + "," + std::to_string(i + 1) + "}";
    const bool same_prefix = std::equal(I.begin(), I.end() - 2, J.begin());
    auto it = direct.find(j);
    if (!same_prefix) {
      if (it != direct.end()) q.status.fail(where + " should vanish (prefixes differ) but equals " + to_string(it->second, 0));
      continue;
    }
    if (it == direct.end()) {
      q.status.fail(where + " vanishes although the prefixes agree");
      continue;
    }
    const Term& m = it->second;
    const Subset Ik = I[k - 1], Ik1 = I[k], Jk = J[k - 1], Jk1 = J[k];
    const Term general{sign_of(k - 1), arrow_monomial_plus(Jk & Ik, Jk1, Ik1, L) * arrow_monomial(Jk & Ik1, Jk1, L), 0};
    if (!(m == general)) q.status.fail(where + " = " + to_string(m, 0) + ", general formula gives " + to_string(general, 0));
    const bool keep = (Jk & Ik) == Ik && Jk != Ik;
    if (keep) {
      ++retained;
      const Term special{sign_of(k - 1), arrow_monomial(Jk & Ik1, Jk1, L), 0};
      if (!(m == special)) q.status.fail(where + " = " + to_string(m, 0) + ", retained formula gives " + to_string(special, 0));
    } else {
      CycPartition lp;
      lp.blocks.assign(I.begin(), I.end() - 2);
      lp.blocks.push_back(Jk | Ik);
      lp.blocks.push_back(Jk1 & Ik1);
      const std::size_t l = basis_index(B, lp);
      auto lt = direct.find(l);
      if (l >= j || lt == direct.end()) q.status.fail(where + ": dominating generator index " + std::to_string(l + 1) + " is not usable");
      else if (!lt->second.mono.divides(m.mono)) q.status.fail(where + " is not divisible by m_{" + std::to_string(l + 1) + "," + std::to_string(i + 1) + "}");
    }
    q.generators.push_back({j, m, keep});
  }
  const std::size_t expect = (std::size_t{1} << (std::popcount(I[k]) - 1)) - 1;
  if (retained != expect)
    q.status.fail("|B_{" + std::to_string(k) + "," + std::to_string(i + 1) + "}| = " + std::to_string(retained) + ", expected " + std::to_string(expect));
  return q;
}

Status verify_module_quotients(const CycComplex& c) {
  Status s;
  for (std::size_t k = 1; k < c.length(); ++k)
    for (std::size_t i = 0; i < c.rank(k); ++i) s.absorb(module_quotients(c, k, i).status);
  return s;
}

// ----------------------------------------------------------- tau identity

Status verify_tau_identity(const CycComplex& c, std::size_t k, const CycPartition& e) {
  Status s;
  s.count = 1;
  if (k < 1 || k + 2 > c.n() || e.size() != k + 2) throw DimensionError("verify_tau_identity: bad level");
  const auto& I = e.blocks;
  const std::size_t h = basis_index(c.basis(k + 1), e);
  const std::string where = basis_str(c, k + 1, h);
  CycPartition pi, pj;
  pi.blocks.assign(I.begin(), I.begin() + static_cast<long>(k));
  pi.blocks.push_back(I[k] | I[k + 1]);
  pj.blocks.assign(I.begin(), I.begin() + static_cast<long>(k - 1));
  pj.blocks.push_back(I[k - 1] | I[k]);
  pj.blocks.push_back(I[k + 1]);
  const std::size_t i = basis_index(c.basis(k), pi), j = basis_index(c.basis(k), pj);
  const auto& F = c.diff(k);
  const ModuleElement& d = c.diff(k + 1)[h];
  const auto sv = s_vector(F[i], F[j]);
  if (!sv) {
    s.fail(where + ": designated pair has no S-vector");
    return s;
  }
  const Term mji_formula{sign_of(k - 1), arrow_monomial(I[k], I[k + 1], c.matrix()), 0};
  const Term mij_formula{sign_of(k - 1), arrow_monomial(I[k - 1], I[k], c.matrix()), 0};
  if (!(sv->m_ji == mji_formula)) s.fail(where + ": m_ji = " + to_string(sv->m_ji, 0) + ", formula " + to_string(mji_formula, 0));
  if (!(sv->m_ij == mij_formula)) s.fail(where + ": m_ij = " + to_string(sv->m_ij, 0) + ", formula " + to_string(mij_formula, 0));
  const ModuleElement neg = -d;
  if (neg.size() < 2) {
    s.fail(where + ": boundary has fewer than two terms");
    return s;
  }
  const Term lead_expect{sv->m_ji.coeff, sv->m_ji.mono, i};
  const Term second_expect{-sv->m_ij.coeff, sv->m_ij.mono, j};
  if (!(neg.terms()[0] == lead_expect) || !(neg.terms()[1] == second_expect))
    s.fail(where + ": leading components of -d are " + to_string(neg.terms()[0], k) + ", " + to_string(neg.terms()[1], k));
  if (!c.apply(k, d).is_zero()) s.fail(where + ": d_k d_{k+1} != 0");
  // The tail g_s of d = -m_ji e_i + m_ij e_j + sum g_s e_s represents S.
  const std::vector<Term> tail_terms(d.terms().begin() + 2, d.terms().end());
  const ModuleElement tail(c.order(k), tail_terms);
  const ModuleElement rep = c.apply(k, tail);
  if (!(rep == sv->s)) s.fail(where + ": tail does not represent S(f_i,f_j)");
  const TermOrder& ord = *c.order(k - 1);
  for (const Term& t : tail_terms) {
    const ModuleElement part = F[t.basis].times(t.coeff, t.mono);
    if (sv->s.is_zero() || module_compare(sv->s.leading(), part.leading(), ord) < 0)
      s.fail(where + ": tail term " + to_string(t, k) + " exceeds Lm(S)");
  }
  return s;
}

Status verify_tau_identities(const CycComplex& c) {
  Status s;
  for (std::size_t k = 1; k + 2 <= c.n(); ++k)
    for (const auto& e : c.basis(k + 1)) s.absorb(verify_tau_identity(c, k, e));
  return s;
}

// ------------------------------------------------------ Schreyer coverage

Status verify_schreyer_coverage(const CycComplex& c, std::size_t k) {
  Status s;
  if (k < 1 || k >= c.length()) throw DimensionError("verify_schreyer_coverage: bad level");
  const auto& F = c.diff(k);
  if (k == c.length() - 1) {
    std::set<std::size_t> seen;
    for (std::size_t j = 0; j < F.size(); ++j) {
      ++s.count;
      if (!seen.insert(F[j].leading().basis).second) s.fail("top-level module quotient at " + basis_str(c, k, j) + " is nonzero");
    }
    return s;
  }
  const auto& B = c.basis(k);
  const auto& Bup = c.basis(k + 1);
  const auto& Fup = c.diff(k + 1);
  std::vector<std::size_t> hits(Bup.size(), 0);
  // (lead basis, second basis) of each boundary one level up.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_pair;
  for (std::size_t h = 0; h < Fup.size(); ++h)
    if (Fup[h].size() >= 2) by_pair[{Fup[h].terms()[0].basis, Fup[h].terms()[1].basis}].push_back(h);
  std::size_t total = 0;
  for (std::size_t i = 0; i < B.size(); ++i) {
    const auto q = module_quotients(c, k, i);
    if (!q.status.ok) s.fail(q.status.witness);
    const auto& I = B[i].blocks;
    for (const auto& g : q.retained()) {
      ++s.count;
      ++total;
      const auto& J = B[g.j].blocks;
      CycPartition rho;
      rho.blocks.assign(I.begin(), I.end() - 1);
      rho.blocks.push_back(J[k - 1] & ~I[k - 1]);
      rho.blocks.push_back(J[k]);
      const std::size_t h = basis_index(Bup, rho);
      ++hits[h];
      std::vector<std::size_t> matches;
      if (auto it = by_pair.find({i, g.j}); it != by_pair.end())
        for (std::size_t cand : it->second) {
          const Term& lt = Fup[cand].leading();
          if (lt.mono == g.m.mono && abs(lt.coeff) == abs(g.m.coeff)) matches.push_back(cand);
        }
      if (matches.size() != 1 || matches[0] != h)
        s.fail("generator m_{" + std::to_string(g.j + 1) + "," + std::to_string(i + 1) + "} at level " + std::to_string(k) + " matched by " +
               std::to_string(matches.size()) + " basis elements");
    }
  }
  for (std::size_t h = 0; h < hits.size(); ++h)
    if (hits[h] != 1) s.fail("rho hits " + basis_str(c, k + 1, h) + " " + std::to_string(hits[h]) + " times");
  if (total != Bup.size()) s.fail("sum |B_{k,i}| = " + std::to_string(total) + " but r_" + std::to_string(k + 1) + " = " + std::to_string(Bup.size()));
  return s;
}

Status verify_minimality(const CycComplex& c, bool require_minimal) {
  Status s;
  s.count = 1;
  const Minimality m = minimality_check(c);
  const bool complete = is_strongly_complete(digraph_of(c.matrix()));
  std::string w;
  if (m.witness)
    w = "d_" + std::to_string(m.witness->k) + "(" + basis_str(c, m.witness->k, m.witness->source) + ") has a unit coefficient on " +
        basis_str(c, m.witness->k - 1, m.witness->target);
  if (m.minimal != complete)
    s.fail(std::string("minimality ") + (m.minimal ? "holds" : "fails") + " but the digraph is " + (complete ? "" : "not ") + "strongly complete" +
           (w.empty() ? "" : "; " + w));
  else if (require_minimal && !m.minimal)
    s.fail("resolution is not minimal: " + w);
  return s;
}

// ---------------------------------------------------------- homology oracle

std::vector<Monomial> monomials_of_degree(const GradedContext& ctx, std::int64_t d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const std::size_t n = ctx.n();
  Monomial m(n);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t v, std::int64_t left) {
    if (v + 1 == n) {
      if (left % ctx.nu()[v] == 0) {
        m[v] = static_cast<Exponent>(left / ctx.nu()[v]);
        out.push_back(m);
        m[v] = 0;
      }
      return;
    }
    for (std::int64_t e = 0; e * ctx.nu()[v] <= left; ++e) {
      m[v] = static_cast<Exponent>(e);
      rec(v + 1, left - e * ctx.nu()[v]);
    }
    m[v] = 0;
  };
  rec(0, d);
  return out;
}

std::size_t standard_monomial_count(const CycComplex& c, std::int64_t d) {
  std::size_t count = 0;
  for (const Monomial& m : monomials_of_degree(c.context(), d)) {
    bool in_ideal = false;
    for (const auto& f : c.diff(1))
      if (f.leading().mono.divides(m)) {
        in_ideal = true;
        break;
      }
    if (!in_ideal) ++count;
  }
  return count;
}

namespace {

// row -= f * pivot, both sorted by column.
void subtract_scaled(SparseRow& row, const Rational& f, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t a = 0, b = 0;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      out.push_back(std::move(row[a++]));
    } else if (a == row.size() || pivot[b].first < row[a].first) {
      out.emplace_back(pivot[b].first, -f * pivot[b].second);
      ++b;
    } else {
      Rational v = row[a].second - f * pivot[b].second;
      if (sgn(v) != 0) out.emplace_back(row[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  row = std::move(out);
}

}  // namespace

std::size_t sparse_rank(const std::vector<SparseRow>& vectors) {
  std::map<std::size_t, SparseRow> pivots;
  for (const auto& v : vectors) {
    SparseRow row = v;
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const Rational lead = row.front().second;
        for (auto& [c, v] : row) v /= lead;
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const Rational f = row.front().second;
      subtract_scaled(row, f, it->second);
    }
  }
  return pivots.size();
}

Status graded_homology_oracle(const CycComplex& c, std::int64_t d_max, std::size_t* nonzero_pieces) {
  Status s;
  if (nonzero_pieces) *nonzero_pieces = 0;
  const std::size_t len = c.length();
  std::map<std::int64_t, std::vector<Monomial>> mono_cache;
  auto monos = [&](std::int64_t d) -> const std::vector<Monomial>& {
    auto it = mono_cache.find(d);
    if (it == mono_cache.end()) it = mono_cache.emplace(d, monomials_of_degree(c.context(), d)).first;
    return it->second;
  };
  for (std::int64_t d = 0; d <= d_max; ++d) {
    ++s.count;
    // Graded pieces: basis (monomial, j) of (C_k)_d.
    std::vector<std::vector<std::pair<Monomial, std::size_t>>> piece(len);
    std::vector<std::map<std::pair<std::size_t, Monomial>, std::size_t>> index(len);
    for (std::size_t k = 0; k < len; ++k)
      for (std::size_t j = 0; j < c.rank(k); ++j)
        for (const Monomial& m : monos(d - c.shifts(k)[j])) {
          index[k].emplace(std::pair(j, m), piece[k].size());
          piece[k].emplace_back(m, j);
        }
    if (nonzero_pieces)
      for (std::size_t k = 1; k < len; ++k) *nonzero_pieces += !piece[k].empty();
    std::vector<std::size_t> rk(len + 1, 0);
    for (std::size_t k = 1; k < len; ++k) {
      std::vector<SparseRow> cols(piece[k].size());
      for (std::size_t col = 0; col < piece[k].size(); ++col) {
        const auto& [m, j] = piece[k][col];
        for (const Term& t : c.diff(k)[j].terms()) {
          auto it = index[k - 1].find({t.basis, m * t.mono});
          if (it == index[k - 1].end()) {
            s.fail("d_" + std::to_string(k) + " leaves degree " + std::to_string(d));
            return s;
          }
          cols[col].emplace_back(it->second, t.coeff);
        }
      }
      rk[k] = sparse_rank(cols);
    }
    const std::size_t in_lt = piece[0].size() - standard_monomial_count(c, d);
    if (rk[1] != in_lt)
      s.fail("position 0, degree " + std::to_string(d) + ": rank d_1 = " + std::to_string(rk[1]) + ", leading-term ideal has " +
             std::to_string(in_lt) + " monomials");
    for (std::size_t k = 1; k < len; ++k) {
      const std::size_t ker = piece[k].size() - rk[k];
      if (ker != rk[k + 1])
        s.fail("homology at position " + std::to_string(k) + ", degree " + std::to_string(d) + ": dim ker = " + std::to_string(ker) +
               ", rank of incoming map = " + std::to_string(rk[k + 1]));
    }
  }
  return s;
}

std::int64_t default_max_degree(const CycComplex& c, std::int64_t cap) {
  const auto& top = c.shifts(c.length() - 1);
  const std::int64_t m = *std::max_element(top.begin(), top.end());
  return std::min(cap, 2 * m);
}

// ------------------------------------------------------------- full run

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.status.ok; });
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
  for (const auto& r : checks)
    if (r.name == name) return &r;
  return nullptr;
}

VerificationReport full_verify(const CycComplex& c, const VerifyOptions& opt, std::string instance) {
  VerificationReport rep;
  rep.instance = std::move(instance);
  rep.minimal = minimality_check(c).minimal;
  rep.max_degree = default_max_degree(c, opt.max_degree_cap);
  auto run = [&](const std::string& name, const std::function<Status()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    Status s;
    try {
      s = f();
    } catch (const std::exception& e) {
      s.fail(std::string("exception: ") + e.what());
    }
    const auto t1 = std::chrono::steady_clock::now();
    rep.checks.push_back({name, std::move(s), std::chrono::duration<double, std::milli>(t1 - t0).count()});
  };
  run("ranks", [&] { return verify_ranks(c); });
  run("homogeneity", [&] { return verify_homogeneity(c); });
  run("d_squared", [&] { return verify_d_squared(c); });
  run("leading_terms", [&] { return verify_leading_terms(c); });
  run("degree0_gb", [&] { return verify_degree0_gb(c); });
  run("colon_stability", [&] { return verify_colon_stability(c, opt.colon_trials, opt.seed); });
  run("module_quotients", [&] { return verify_module_quotients(c); });
  run("tau_identity", [&] { return verify_tau_identities(c); });
  run("schreyer_coverage", [&] {
    Status s;
    for (std::size_t k = 1; k < c.length(); ++k) s.absorb(verify_schreyer_coverage(c, k));
    return s;
  });
  run("minimality", [&] { return verify_minimality(c, opt.require_minimal); });
  run("homology", [&] { return graded_homology_oracle(c, rep.max_degree, &rep.homology_pieces); });
  return rep;
}

// ------------------------------------------------------ random instances

WeightedDigraph random_icb_digraph(std::size_t n, std::uint64_t seed, double extra_arc_probability) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> weight(1, 3);
  std::bernoulli_distribution extra(extra_arc_probability);
  std::vector<std::size_t> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0);
  std::shuffle(cyc.begin(), cyc.end(), rng);
  std::set<std::pair<std::size_t, std::size_t>> used;
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t u = cyc[i], v = cyc[(i + 1) % n];
    used.emplace(u, v);
    arcs.push_back({u, v, weight(rng)});
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && !used.count({u, v}) && extra(rng)) arcs.push_back({u, v, weight(rng)});
  return WeightedDigraph(n, std::move(arcs));
}

CBMatrix echelon_laplacian(const WeightedDigraph& g, std::size_t omega) {
  return laplacian(relabel(g, omega_delta_enumeration(g, omega)));
}

}  // namespace cycres
