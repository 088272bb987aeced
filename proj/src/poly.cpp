#include "cycres/poly.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "cycres/errors.hpp"

namespace cycres {

__extension__ using Wide = __int128;

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t n, std::size_t i, Exponent power) {
  Monomial m(n);
  m.e_.at(i) = power;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial& Monomial::operator*=(const Monomial& m) {
  if (m.size() != size()) throw DimensionError("monomial length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += m.e_[i];
  return *this;
}

Monomial Monomial::operator/(const Monomial& m) const {
  if (!m.divides(*this)) throw InternalError("inexact monomial division");
  Monomial q = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) q.e_[i] -= m.e_[i];
  return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial l = a;
  for (std::size_t i = 0; i < a.size(); ++i) l.e_[i] = std::max(a.e_[i], b.e_[i]);
  return l;
}

// ----------------------------------------------------------- GradedContext

GradedContext::GradedContext(std::vector<std::int64_t> nu) : nu_(std::move(nu)) {
  if (nu_.empty() || nu_.size() > kMaxVars) throw DimensionError("grading needs 1.." + std::to_string(kMaxVars) + " variables");
  std::int64_t g = 0;
  for (auto w : nu_) {
    if (w <= 0) throw ValidationError("grading weights must be positive");
    g = std::gcd(g, w);
  }
  if (g != 1) throw ValidationError("grading weights must have gcd 1");
}

GradedContext GradedContext::from_integers(const std::vector<Integer>& nu) {
  std::vector<std::int64_t> w;
  for (const auto& x : nu) {
    if (!x.fits_slong_p() || x > Integer(1) << 40) throw ValidationError("grading weight too large: " + x.get_str());
    w.push_back(x.get_si());
  }
  return GradedContext(std::move(w));
}

std::int64_t GradedContext::degree(const Monomial& m) const {
  Wide d = 0;
  for (std::size_t i = 0; i < nu_.size(); ++i) d += static_cast<Wide>(nu_[i]) * m[i];
  if (d > INT64_MAX) throw ValidationError("degree overflow");
  return static_cast<std::int64_t>(d);
}

namespace {

template <typename A, typename B>
std::strong_ordering wrlo_raw(const A& a, const B& b, const std::vector<std::int64_t>& nu) {
  Wide da = 0, db = 0;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    da += static_cast<Wide>(nu[i]) * a[i];
    db += static_cast<Wide>(nu[i]) * b[i];
  }
  if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = nu.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering wrlo_compare(const Monomial& a, const Monomial& b, const GradedContext& ctx) {
  if (a.size() != ctx.n() || b.size() != ctx.n()) throw DimensionError("monomial length differs from ring size");
  return wrlo_raw(a, b, ctx.nu());
}

// --------------------------------------------------------------- TermOrder

TermOrder::TermOrder(std::size_t level, GradedContext ctx, Ptr below, std::vector<ModuleMonomial> leads)
    : level_(level), ctx_(std::move(ctx)), below_(std::move(below)), leads_(std::move(leads)) {}

TermOrder::Ptr TermOrder::weighted_revlex(GradedContext ctx) {
  return Ptr(new TermOrder(0, std::move(ctx), nullptr, {}));
}

TermOrder::Ptr TermOrder::induced(Ptr below, std::vector<ModuleMonomial> image_leads) {
  if (!below) throw InternalError("induced order needs a lower level");
  if (below->level() + 1 >= kMaxVars) throw DimensionError("order tower too deep");
  for (const auto& l : image_leads)
    if (l.basis >= below->rank() || l.mono.size() != below->context().n())
      throw InternalError("image leading monomial does not fit the lower level");
  const std::size_t level = below->level() + 1;
  GradedContext ctx = below->context();
  return Ptr(new TermOrder(level, std::move(ctx), std::move(below), std::move(image_leads)));
}

TermOrder::Ptr TermOrder::root() const {
  const TermOrder* o = this;
  while (o->below_) o = o->below_.get();
  return o->shared_from_this();
}

std::strong_ordering TermOrder::compare(const Monomial& a, std::size_t i, const Monomial& b, std::size_t j) const {
  if (level_ == 0) return wrlo_raw(a, b, ctx_.nu());
  // Descend both monomials to level 0, remembering the basis index met at each
  // level. The order is lexicographic on (level-0 monomial, index at level 1,
  // ..., index at level k).
  const std::size_t n = ctx_.n();
  std::array<std::int64_t, kMaxVars> da{}, db{};
  std::array<std::size_t, kMaxVars> ia{}, ib{};
  for (std::size_t v = 0; v < n; ++v) {
    da[v] = a[v];
    db[v] = b[v];
  }
  for (const TermOrder* o = this; o->level_ > 0; o = o->below_.get()) {
    ia[o->level_] = i;
    ib[o->level_] = j;
    const ModuleMonomial& li = o->leads_[i];
    const ModuleMonomial& lj = o->leads_[j];
    for (std::size_t v = 0; v < n; ++v) {
      da[v] += li.mono[v];
      db[v] += lj.mono[v];
    }
    i = li.basis;
    j = lj.basis;
  }
  if (auto c = wrlo_raw(da, db, ctx_.nu()); c != 0) return c;
  for (std::size_t l = 1; l <= level_; ++l)
    if (ia[l] != ib[l]) return ia[l] <=> ib[l];
  return std::strong_ordering::equal;
}

std::strong_ordering module_compare(const Term& a, const Term& b, const TermOrder& order) {
  return order.compare(a.mono, a.basis, b.mono, b.basis);
}

// ----------------------------------------------------------- ModuleElement

ModuleElement::ModuleElement(TermOrder::Ptr order, std::vector<Term> terms) : order_(std::move(order)) {
  const TermOrder& ord = *order_;
  for (const Term& t : terms) {
    if (t.mono.size() != ord.context().n()) throw DimensionError("term has wrong number of variables");
    if (t.basis >= ord.rank()) throw DimensionError("basis index out of range");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) { return module_compare(x, y, ord) > 0; });
  for (Term& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono && terms_.back().basis == t.basis) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

ModuleElement ModuleElement::monomial(TermOrder::Ptr order, Rational c, Monomial m, std::size_t basis) {
  std::vector<Term> t;
  t.push_back({std::move(c), std::move(m), basis});
  return ModuleElement(std::move(order), std::move(t));
}

const Term& ModuleElement::leading() const {
  if (terms_.empty()) throw ZeroElementError("leading term of zero element");
  return terms_.front();
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void ModuleElement::add_scaled(const ModuleElement& o, int sign) {
  if (o.order_ != order_) throw InternalError("adding elements under different orders");
  if (&o == this) {
    const ModuleElement copy = o;
    add_scaled(copy, sign);
    return;
  }
  const TermOrder& ord = *order_;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (a == terms_.end()) c = std::strong_ordering::less;
    else if (b == o.terms_.end()) c = std::strong_ordering::greater;
    else c = module_compare(*a, *b, ord);
    if (c > 0) {
      out.push_back(std::move(*a++));
    } else if (c < 0) {
      out.push_back(*b++);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Term t = std::move(*a++);
      if (sign < 0) t.coeff -= b->coeff;
      else t.coeff += b->coeff;
      ++b;
      if (t.coeff != 0) out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  add_scaled(o, 1);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  add_scaled(o, -1);
  return *this;
}

ModuleElement ModuleElement::times(const Rational& c, const Monomial& m) const {
  ModuleElement r(order_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Every level of the tower is multiplicative, so the order is preserved.
  for (const Term& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * m, t.basis});
  return r;
}

std::map<std::size_t, ModuleElement> ModuleElement::components() const {
  std::map<std::size_t, std::vector<Term>> parts;
  for (const Term& t : terms_) parts[t.basis].push_back({t.coeff, t.mono, 0});
  std::map<std::size_t, ModuleElement> out;
  const auto root = order_->root();
  for (auto& [b, ts] : parts) out.emplace(b, ModuleElement(root, std::move(ts)));
  return out;
}

const Term& leading_term(const ModuleElement& f) { return f.leading(); }

ModuleElement operator*(const Poly& p, const ModuleElement& f) {
  if (p.level() != 0) throw InternalError("left factor must be a polynomial");
  ModuleElement r(f.order());
  for (const Term& t : p.terms()) r += f.times(t.coeff, t.mono);
  return r;
}

// ---------------------------------------------------------------- division

Division divide(const ModuleElement& g, const std::vector<ModuleElement>& basis) {
  const auto root = g.order()->root();
  Division d{std::vector<Poly>(basis.size(), Poly(root)), ModuleElement(g.order())};
  for (const auto& b : basis)
    if (b.is_zero()) throw ZeroElementError("divide: zero divisor");
  std::vector<Term> rem;
  ModuleElement p = g;
  while (!p.is_zero()) {
    const Term lt = p.leading();
    std::size_t i = 0;
    for (; i < basis.size(); ++i) {
      const Term& bl = basis[i].leading();
      if (bl.basis == lt.basis && bl.mono.divides(lt.mono)) break;
    }
    if (i < basis.size()) {
      const Term& bl = basis[i].leading();
      const Rational c = lt.coeff / bl.coeff;
      const Monomial m = lt.mono / bl.mono;
      d.quotients[i] += Poly::monomial(root, c, m);
      p -= basis[i].times(c, m);
    } else {
      rem.push_back(lt);
      p -= ModuleElement::monomial(p.order(), lt.coeff, lt.mono, lt.basis);
    }
  }
  d.remainder = ModuleElement(g.order(), std::move(rem));
  return d;
}

bool is_standard_expression(const ModuleElement& g, const std::vector<ModuleElement>& basis, const Division& d) {
  if (d.quotients.size() != basis.size()) return false;
  ModuleElement sum = d.remainder;
  const TermOrder& ord = *g.order();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (d.quotients[i].is_zero()) continue;
    ModuleElement qb = d.quotients[i] * basis[i];
    if (g.is_zero() || module_compare(g.leading(), qb.leading(), ord) < 0) return false;
    sum += qb;
  }
  if (!(sum == g)) return false;
  for (const Term& t : d.remainder.terms())
    for (const auto& b : basis)
      if (b.leading().basis == t.basis && b.leading().mono.divides(t.mono)) return false;
  return true;
}

std::optional<SVector> s_vector(const ModuleElement& fi, const ModuleElement& fj) {
  const Term& li = fi.leading();
  const Term& lj = fj.leading();
  if (li.basis != lj.basis) return std::nullopt;
  const Monomial l = lcm(li.mono, lj.mono);
  SVector s{ModuleElement(fi.order()), {1 / li.coeff, l / li.mono, 0}, {1 / lj.coeff, l / lj.mono, 0}};
  s.m_ji.coeff.canonicalize();
  s.m_ij.coeff.canonicalize();
  s.s = fi.times(s.m_ji.coeff, s.m_ji.mono) - fj.times(s.m_ij.coeff, s.m_ij.mono);
  return s;
}

// ------------------------------------------------------------------- text

std::string to_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

namespace {

// Unsigned body of a term.
std::string term_body(const Rational& abs_coeff, const Monomial& mono, std::size_t basis, std::size_t level) {
  std::string s;
  const bool unit = abs_coeff == 1;
  if (!unit) s = abs_coeff.get_str();
  if (!mono.is_one()) s += (s.empty() ? "" : "*") + to_string(mono);
  if (level > 0) {
    const std::string e = "e[" + std::to_string(level) + "," + std::to_string(basis + 1) + "]";
    s += s.empty() ? e : "·" + e;
  } else if (s.empty()) {
    s = "1";
  }
  return s;
}

}  // namespace

std::string to_string(const Term& t, std::size_t level) {
  const std::string body = term_body(abs(t.coeff), t.mono, t.basis, level);
  return t.coeff < 0 ? "-" + body : body;
}

std::string to_string(const ModuleElement& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const Term& t : f.terms()) {
    const std::string body = term_body(abs(t.coeff), t.mono, t.basis, f.level());
    if (s.empty()) s = t.coeff < 0 ? "-" + body : body;
    else s += (t.coeff < 0 ? " - " : " + ") + body;
  }
  return s;
}

namespace {

class ElementParser {
 public:
  ElementParser(const std::string& s, const TermOrder::Ptr& order) : s_(s), order_(order), n_(order->context().n()) {}

  ModuleElement parse() {
    std::vector<Term> terms;
    skip();
    if (peek_word("0") && rest_is_blank(pos_ + 1)) return ModuleElement(order_);
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      terms.push_back(term(sign));
      first = false;
    }
    if (terms.empty()) fail("empty polynomial");
    return ModuleElement(order_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool peek_word(const char* w) const { return s_.compare(pos_, std::char_traits<char>::length(w), w) == 0; }
  bool rest_is_blank(std::size_t p) const {
    return std::all_of(s_.begin() + static_cast<long>(std::min(p, s_.size())), s_.end(), [](char c) { return c == ' '; });
  }
  std::uint64_t number() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
      if (v > (1ull << 40)) fail("number too large");
    }
    return v;
  }
  std::string digits() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected digits");
    return s_.substr(b, pos_ - b);
  }

  Term term(int sign) {
    Term t{Rational(sign), Monomial(n_), 0};
    bool any = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::string c = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        c += "/" + digits();
      }
      Rational q(c);
      q.canonicalize();
      if (q == 0) fail("zero coefficient");
      t.coeff *= q;
      any = true;
      if (pos_ < s_.size() && s_[pos_] == '*') ++pos_;
      else return finish(t, any);
    }
    while (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      const auto v = number();
      if (v < 1 || v > n_) fail("variable index out of range");
      Exponent e = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        e = static_cast<Exponent>(number());
      }
      t.mono[v - 1] += e;
      any = true;
      if (pos_ < s_.size() && s_[pos_] == '*') ++pos_;
      else break;
    }
    return finish(t, any);
  }

  Term finish(Term& t, bool any) {
    static const std::string dot = "·";
    if (s_.compare(pos_, dot.size(), dot) == 0) {
      if (!any) fail("dangling separator");
      pos_ += dot.size();
    }
    if (pos_ < s_.size() && s_[pos_] == 'e') {
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_++] != '[') fail("expected '['");
      const auto k = number();
      if (pos_ >= s_.size() || s_[pos_++] != ',') fail("expected ','");
      const auto j = number();
      if (pos_ >= s_.size() || s_[pos_++] != ']') fail("expected ']'");
      if (k != order_->level()) fail("basis level differs from the element's level");
      if (j < 1 || j > order_->rank()) fail("basis index out of range");
      t.basis = static_cast<std::size_t>(j - 1);
      any = true;
    } else if (order_->level() > 0) {
      fail("module term without basis element");
    }
    if (!any) fail("empty term");
    return t;
  }

  const std::string& s_;
  TermOrder::Ptr order_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

ModuleElement parse_element(const std::string& text, const TermOrder::Ptr& order) {
  return ElementParser(text, order).parse();
}

}  // namespace cycres
