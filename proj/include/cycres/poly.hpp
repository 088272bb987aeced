#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cycres/intlinalg.hpp"

namespace cycres {

// Hard cap on variables and on the depth of an order tower.
inline constexpr std::size_t kMaxVars = 32;

using Exponent = std::uint32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : e_(n, 0) {}
  explicit Monomial(std::vector<Exponent> e) : e_(std::move(e)) {}
  static Monomial variable(std::size_t n, std::size_t i, Exponent power = 1);

  std::size_t size() const { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  Exponent& operator[](std::size_t i) { return e_[i]; }
  const std::vector<Exponent>& exponents() const { return e_; }

  bool is_one() const;
  bool divides(const Monomial& m) const;
  Monomial& operator*=(const Monomial& m);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  // Exact quotient; throws InternalError when this is not a multiple of m.
  Monomial operator/(const Monomial& m) const;
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  // Storage order only (lexicographic on exponents); not a term order.
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Exponent> e_;
};

class GradedContext {
 public:
  explicit GradedContext(std::vector<std::int64_t> nu);
  static GradedContext from_integers(const std::vector<Integer>& nu);

  std::size_t n() const { return nu_.size(); }
  const std::vector<std::int64_t>& nu() const { return nu_; }
  std::int64_t degree(const Monomial& m) const;

 private:
  std::vector<std::int64_t> nu_;
};

// alpha > beta iff deg(alpha) > deg(beta), or equal degrees and the rightmost
// nonzero coordinate of alpha - beta is negative.
std::strong_ordering wrlo_compare(const Monomial& a, const Monomial& b, const GradedContext& ctx);

struct ModuleMonomial {
  Monomial mono;
  std::size_t basis = 0;
  bool operator==(const ModuleMonomial&) const = default;
};

// Level 0 is wrlo on the polynomial ring (a free module of rank one). Level k
// compares m e_i with m' e_j through the leading monomials of their images at
// level k-1, ties going to the larger basis index. The images' leading
// monomials are stored once, so a comparison walks the tower without
// recomputing anything and the object is immutable after construction.
class TermOrder : public std::enable_shared_from_this<TermOrder> {
 public:
  using Ptr = std::shared_ptr<const TermOrder>;

  static Ptr weighted_revlex(GradedContext ctx);
  static Ptr induced(Ptr below, std::vector<ModuleMonomial> image_leads);

  std::size_t level() const { return level_; }
  std::size_t rank() const { return level_ == 0 ? 1 : leads_.size(); }
  const GradedContext& context() const { return ctx_; }
  const Ptr& below() const { return below_; }
  Ptr root() const;
  const std::vector<ModuleMonomial>& image_leads() const { return leads_; }

  std::strong_ordering compare(const Monomial& a, std::size_t i, const Monomial& b, std::size_t j) const;

 private:
  TermOrder(std::size_t level, GradedContext ctx, Ptr below, std::vector<ModuleMonomial> leads);
  std::size_t level_;
  GradedContext ctx_;
  Ptr below_;
  std::vector<ModuleMonomial> leads_;
};

struct Term {
  Rational coeff;
  Monomial mono;
  std::size_t basis = 0;
  bool operator==(const Term&) const = default;
};

std::strong_ordering module_compare(const Term& a, const Term& b, const TermOrder& order);

// Element of a free module over Q[x] whose basis is ordered by a TermOrder.
// Terms are kept strictly decreasing under that order. A polynomial is an
// element of the rank-one module at level 0.
class ModuleElement {
 public:
  explicit ModuleElement(TermOrder::Ptr order) : order_(std::move(order)) {}
  ModuleElement(TermOrder::Ptr order, std::vector<Term> terms);
  static ModuleElement monomial(TermOrder::Ptr order, Rational c, Monomial m, std::size_t basis = 0);

  const TermOrder::Ptr& order() const { return order_; }
  std::size_t level() const { return order_->level(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const;

  ModuleElement operator-() const;
  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  ModuleElement times(const Rational& c, const Monomial& m) const;

  // Component polynomials keyed by basis index.
  std::map<std::size_t, ModuleElement> components() const;

  bool operator==(const ModuleElement& o) const { return terms_ == o.terms_; }

 private:
  void add_scaled(const ModuleElement& o, int sign);
  TermOrder::Ptr order_;
  std::vector<Term> terms_;
};

using Poly = ModuleElement;

const Term& leading_term(const ModuleElement& f);

// p * f where p is a polynomial (level 0) and f lives at any level.
ModuleElement operator*(const Poly& p, const ModuleElement& f);

struct Division {
  std::vector<Poly> quotients;
  ModuleElement remainder;
};

// g = sum q_i b_i + r. At each step the current leading term is reduced by the
// lowest-index divisor, otherwise moved to the remainder.
Division divide(const ModuleElement& g, const std::vector<ModuleElement>& basis);
// Re-checks both standard-expression conditions of a division result.
bool is_standard_expression(const ModuleElement& g, const std::vector<ModuleElement>& basis, const Division& d);

struct SVector {
  ModuleElement s;
  Term m_ji;  // multiplier of f_i
  Term m_ij;  // multiplier of f_j
};

// S = m_ji f_i - m_ij f_j; nullopt when the leading terms sit on different basis elements.
std::optional<SVector> s_vector(const ModuleElement& fi, const ModuleElement& fj);

// Text format: "c*x1^e1*x3 - x2 + ..."; module terms carry the suffix "·e[k,j]"
// with 1-based j.
std::string to_string(const Monomial& m);
std::string to_string(const Term& t, std::size_t level);
std::string to_string(const ModuleElement& f);
ModuleElement parse_element(const std::string& text, const TermOrder::Ptr& order);

}  // namespace cycres
