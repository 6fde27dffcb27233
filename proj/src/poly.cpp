#include "germcalc/poly.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "germcalc/error.hpp"

namespace germcalc {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {"x", "y", "y'", "y''", "X", "Y", "Z"};

// Descending degree-lexicographic comparison used for printing.
bool deglex_greater(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  return a.exp > b.exp;
}

[[noreturn]] void structural(const char* what) { throw Error(ErrorKind::Structural, what); }

}  // namespace

std::string_view var_name(Var v) noexcept { return kVarNames[index(v)]; }

std::optional<Var> var_from_name(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (kVarNames[i] == name) return static_cast<Var>(i);
  }
  return std::nullopt;
}

std::vector<Var> VarSet::to_vector() const {
  std::vector<Var> out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (bits_ & (1u << i)) out.push_back(static_cast<Var>(i));
  }
  return out;
}

std::size_t VarSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::string VarSet::to_string() const {
  std::string out = "(";
  bool first = true;
  for (Var v : to_vector()) {
    if (!first) out += ", ";
    out += var_name(v);
    first = false;
  }
  return out + ")";
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

VarSet Monomial::support() const noexcept {
  VarSet s;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exp[i] != 0) s = s | VarSet{static_cast<Var>(i)};
  }
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const noexcept {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) m.exp[i] = static_cast<std::uint16_t>(exp[i] + other.exp[i]);
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const noexcept {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) m.exp[i] = static_cast<std::uint16_t>(exp[i] - divisor.exp[i]);
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) m.exp[i] = std::max(a.exp[i], b.exp[i]);
  return m;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  }
  return true;
}

Poly Poly::constant(VarSet vars, const Rational& c) {
  Poly p(vars);
  p.add_term(Monomial{}, c);
  return p;
}

Poly Poly::variable(VarSet vars, Var v) {
  if (!vars.contains(v)) structural("variable not in polynomial ring");
  return term(vars, Monomial::of(v), 1);
}

Poly Poly::term(VarSet vars, const Monomial& m, const Rational& c) {
  if (!vars.includes(m.support())) structural("monomial uses a variable outside the ring");
  Poly p(vars);
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_term() const { return coefficient(Monomial{}); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

int Poly::order() const noexcept {
  if (terms_.empty()) return -1;
  int d = std::numeric_limits<int>::max();
  for (const auto& [m, c] : terms_) d = std::min(d, static_cast<int>(m.degree()));
  return d;
}

int Poly::degree_in(Var v) const noexcept {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[v]));
  return d;
}

bool Poly::is_linear_form() const noexcept {
  if (terms_.empty()) return false;
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.degree() == 1; });
}

VarSet Poly::support() const noexcept {
  VarSet s;
  for (const auto& [m, c] : terms_) s = s | m.support();
  return s;
}

Poly Poly::in(VarSet superset) const {
  if (!superset.includes(vars_)) structural("embedding into a ring that lacks variables");
  Poly p(superset);
  p.terms_ = terms_;
  return p;
}

Poly Poly::restrict_to(VarSet subset) const {
  if (!subset.includes(support())) structural("restriction drops an occurring variable");
  Poly p(subset);
  p.terms_ = terms_;
  return p;
}

void Poly::require_same(const Poly& other, const char* op) const {
  if (vars_ != other.vars_) {
    throw Error(ErrorKind::Structural, std::string("mismatched variable lists in ") + op + ": " +
                                           vars_.to_string() + " vs " + other.vars_.to_string());
  }
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& other) {
  require_same(other, "add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same(other, "sub");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same(b, "mul");
  Poly out(a.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
  Poly out(vars_);
  if (c == 0) return out;
  for (const auto& [mm, cc] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, cc * c);
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(vars_, 1);
  Poly base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base *= base;
  }
  return result;
}

Poly Poly::truncated(int max_degree) const {
  Poly out(vars_);
  for (const auto& [m, c] : terms_) {
    if (static_cast<int>(m.degree()) <= max_degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

Poly Poly::homogeneous_part(int degree) const {
  Poly out(vars_);
  for (const auto& [m, c] : terms_) {
    if (static_cast<int>(m.degree()) == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
  const int d = degree_in(v);
  std::vector<Poly> out(static_cast<std::size_t>(std::max(d, 0)) + (d >= 0 ? 1 : 0), Poly(vars_));
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    const unsigned k = rest.exp[index(v)];
    rest.exp[index(v)] = 0;
    out[k].add_term(rest, c);
  }
  return out;
}

Poly Poly::from_coefficients(const std::vector<Poly>& coeffs, Var v) {
  if (coeffs.empty()) return Poly();
  Poly out(coeffs.front().vars());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out += coeffs[k].mul_term(Monomial::of(v, static_cast<unsigned>(k)), 1);
  }
  return out;
}

std::pair<Monomial, Rational> Poly::lex_leading_term() const {
  if (terms_.empty()) structural("leading term of zero polynomial");
  const auto& last = *terms_.rbegin();
  return {last.first, last.second};
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / lex_leading_term().second;
  return *this * inv;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return deglex_greater(a->first, b->first); });

  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    const Monomial& m = t->first;
    Rational c = t->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (c != 1 || m.is_one()) {
      out << germcalc::to_string(c);
      wrote = true;
    }
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (m.exp[i] == 0) continue;
      if (wrote) out << '*';
      out << kVarNames[i];
      if (m.exp[i] > 1) out << '^' << m.exp[i];
      wrote = true;
    }
  }
  return out.str();
}

Poly derivative(const Poly& p, Var v) {
  if (!p.vars().contains(v)) structural("derivative with respect to a foreign variable");
  Poly out(p.vars());
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m[v];
    if (e == 0) continue;
    Monomial d = m;
    d.exp[index(v)] = static_cast<std::uint16_t>(e - 1);
    out.add_term(d, c * e);
  }
  return out;
}

Poly substitute(const Poly& p, const std::map<Var, Poly>& assignment, VarSet target) {
  for (const auto& [v, a] : assignment) {
    if (a.vars() != target) structural("substitution value outside the target ring");
  }
  std::array<std::vector<Poly>, kNumVars> powers;
  auto power = [&](Var v, unsigned e) -> const Poly& {
    auto it = assignment.find(v);
    if (it == assignment.end()) structural("substitution leaves an occurring variable unassigned");
    auto& cache = powers[index(v)];
    if (cache.empty()) cache.push_back(Poly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * it->second);
    return cache[e];
  };
  Poly out(target);
  for (const auto& [m, c] : p.terms()) {
    Poly t = Poly::constant(target, c);
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (m.exp[i] != 0) t *= power(static_cast<Var>(i), m.exp[i]);
    }
    out += t;
  }
  return out;
}

std::optional<Poly> divide_exact(const Poly& p, const Poly& d) {
  if (p.vars() != d.vars()) structural("mismatched variable lists in divide");
  if (d.is_zero()) structural("division by zero polynomial");
  Poly quotient(p.vars());
  Poly rest = p;
  const auto [dm, dc] = d.lex_leading_term();
  while (!rest.is_zero()) {
    const auto [rm, rc] = rest.lex_leading_term();
    if (!dm.divides(rm)) return std::nullopt;
    const Monomial qm = rm / dm;
    const Rational qc = rc / dc;
    quotient.add_term(qm, qc);
    rest -= d.mul_term(qm, qc);
  }
  return quotient;
}

namespace {

Poly exact(const Poly& p, const Poly& d) {
  auto q = divide_exact(p, d);
  if (!q) structural("expected exact polynomial division");
  return *std::move(q);
}

using Coeffs = std::vector<Poly>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

int degree(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

Coeffs prem_coeffs(Coeffs a, const Coeffs& b) {
  trim(a);
  const int db = degree(b);
  int da = degree(a);
  if (da < db) return a;
  const Poly& lcb = b.back();
  int e = da - db + 1;
  while (!a.empty() && degree(a) >= db) {
    const Poly lr = a.back();
    const int shift = degree(a) - db;
    for (auto& ai : a) ai *= lcb;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= lr * b[static_cast<std::size_t>(i)];
    trim(a);
    --e;
  }
  if (e > 0 && !a.empty()) {
    const Poly f = lcb.pow(static_cast<unsigned>(e));
    for (auto& ai : a) ai *= f;
  }
  return a;
}

Poly prs_gcd_primitive(Poly a, Poly b, Var v) {
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  const VarSet vs = a.vars();
  Poly g = Poly::constant(vs, 1);
  Poly h = Poly::constant(vs, 1);
  Coeffs ca = a.coefficients_in(v);
  Coeffs cb = b.coefficients_in(v);
  while (true) {
    const int delta = degree(ca) - degree(cb);
    Coeffs r = prem_coeffs(ca, cb);
    if (r.empty()) {
      Poly last = Poly::from_coefficients(cb, v);
      return exact(last, content_in(last, v)).monic();
    }
    if (degree(r) == 0) return Poly::constant(vs, 1);
    ca = std::move(cb);
    const Poly divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& ri : r) ri = exact(ri, divisor);
    cb = std::move(r);
    g = ca.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
}

}  // namespace

Poly pseudo_remainder(const Poly& a, const Poly& b, Var v) {
  if (a.vars() != b.vars()) structural("mismatched variable lists in pseudo-remainder");
  if (b.is_zero()) structural("pseudo-remainder by zero");
  Coeffs r = prem_coeffs(a.coefficients_in(v), b.coefficients_in(v));
  if (r.empty()) return Poly(a.vars());
  return Poly::from_coefficients(r, v);
}

Poly resultant(const Poly& p, const Poly& q, Var v) {
  if (p.vars() != q.vars()) structural("mismatched variable lists in resultant");
  if (p.degree_in(v) <= 0 || q.degree_in(v) <= 0) {
    throw Error(ErrorKind::Structural, std::string("resultant needs positive degree in ") + std::string(var_name(v)));
  }
  const VarSet vs = p.vars();
  Coeffs a = p.coefficients_in(v);
  Coeffs b = q.coefficients_in(v);
  int sign = 1;
  if (degree(a) < degree(b)) {
    std::swap(a, b);
    if ((degree(a) & 1) && (degree(b) & 1)) sign = -sign;
  }
  Poly g = Poly::constant(vs, 1);
  Poly h = Poly::constant(vs, 1);
  while (true) {
    const int delta = degree(a) - degree(b);
    if ((degree(a) & 1) && (degree(b) & 1)) sign = -sign;
    Coeffs r = prem_coeffs(a, b);
    a = std::move(b);
    if (r.empty()) return Poly(vs);
    const Poly divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& ri : r) ri = exact(ri, divisor);
    b = std::move(r);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (degree(b) == 0) break;
  }
  const int da = degree(a);
  Poly result = b.back().pow(static_cast<unsigned>(da));
  if (da > 1) result = exact(result, h.pow(static_cast<unsigned>(da - 1)));
  return sign < 0 ? -result : result;
}

Poly content_in(const Poly& p, Var v) {
  Poly c(p.vars());
  for (const Poly& coef : p.coefficients_in(v)) {
    if (coef.is_zero()) continue;
    if (coef.is_constant()) return Poly::constant(p.vars(), 1);
    c = c.is_zero() ? coef.monic() : gcd(c, coef);
    if (c.is_constant()) return c;
  }
  return c;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.vars() != b.vars()) structural("mismatched variable lists in gcd");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::constant(a.vars(), 1);
  const VarSet sa = a.support();
  const VarSet sb = b.support();
  const Var v = (sa | sb).to_vector().front();
  if (!sa.contains(v)) return gcd(a, content_in(b, v));
  if (!sb.contains(v)) return gcd(content_in(a, v), b);
  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  const Poly c = gcd(ca, cb);
  const Poly g = prs_gcd_primitive(exact(a, ca), exact(b, cb), v);
  return (c * g).monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) return p;
  if (p.is_constant()) return Poly::constant(p.vars(), 1);
  Poly g = p;
  for (Var v : p.support().to_vector()) {
    g = gcd(g, derivative(p, v));
    if (g.is_constant()) break;
  }
  return exact(p, g).monic();
}

}  // namespace germcalc
