#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace germcalc {

using Rational = mpq_class;

// Canonical variable universe. Source coordinates x, y and the copies y', y''
// used by divided differences come first, then the target coordinates.
enum class Var : std::uint8_t { x = 0, y = 1, y1 = 2, y2 = 3, X = 4, Y = 5, Z = 6 };

inline constexpr std::size_t kNumVars = 7;

std::string_view var_name(Var v) noexcept;
std::optional<Var> var_from_name(std::string_view name) noexcept;

inline constexpr std::size_t index(Var v) noexcept { return static_cast<std::size_t>(v); }

class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr VarSet(std::initializer_list<Var> vars) {
    for (Var v : vars) bits_ |= bit(v);
  }

  constexpr bool contains(Var v) const noexcept { return (bits_ & bit(v)) != 0; }
  constexpr bool includes(VarSet other) const noexcept { return (bits_ & other.bits_) == other.bits_; }
  constexpr VarSet operator|(VarSet other) const noexcept { return from_bits(bits_ | other.bits_); }
  constexpr VarSet without(VarSet other) const noexcept { return from_bits(bits_ & ~other.bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool operator==(const VarSet&) const = default;

  std::vector<Var> to_vector() const;
  std::size_t size() const noexcept;
  std::string to_string() const;

 private:
  static constexpr std::uint8_t bit(Var v) { return static_cast<std::uint8_t>(1u << index(v)); }
  static constexpr VarSet from_bits(unsigned b) {
    VarSet s;
    s.bits_ = static_cast<std::uint8_t>(b);
    return s;
  }
  std::uint8_t bits_ = 0;
};

namespace vars {
inline constexpr VarSet source{Var::x, Var::y};
inline constexpr VarSet double_source{Var::x, Var::y, Var::y1};
inline constexpr VarSet triple_source{Var::x, Var::y, Var::y1, Var::y2};
inline constexpr VarSet target{Var::X, Var::Y, Var::Z};
}  // namespace vars

struct Monomial {
  std::array<std::uint16_t, kNumVars> exp{};

  static Monomial of(Var v, unsigned e = 1) {
    Monomial m;
    m.exp[index(v)] = static_cast<std::uint16_t>(e);
    return m;
  }

  unsigned operator[](Var v) const noexcept { return exp[index(v)]; }
  unsigned degree() const noexcept;
  bool is_one() const noexcept { return degree() == 0; }
  bool divides(const Monomial& other) const noexcept;
  VarSet support() const noexcept;

  Monomial operator*(const Monomial& other) const noexcept;
  // Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const noexcept;
  static Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
  static bool coprime(const Monomial& a, const Monomial& b) noexcept;

  auto operator<=>(const Monomial&) const = default;
};

// Exact sparse polynomial with rational coefficients over a fixed variable set.
// Terms with zero coefficient are never stored. Binary operations require
// both operands to live over the same variable set; use in() to embed.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Poly() = default;
  explicit Poly(VarSet vars) : vars_(vars) {}

  static Poly constant(VarSet vars, const Rational& c);
  static Poly variable(VarSet vars, Var v);
  static Poly term(VarSet vars, const Monomial& m, const Rational& c);

  VarSet vars() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  // Maximal total degree; -1 for the zero polynomial.
  int total_degree() const noexcept;
  // Minimal total degree of a term; -1 for the zero polynomial.
  int order() const noexcept;
  int degree_in(Var v) const noexcept;
  // True when every term has total degree exactly 1.
  bool is_linear_form() const noexcept;
  // Variables that actually occur in some term.
  VarSet support() const noexcept;

  Poly in(VarSet superset) const;
  // Re-expresses the polynomial over a smaller set; every occurring variable must be kept.
  Poly restrict_to(VarSet subset) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly mul_term(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& other) const { return vars_ == other.vars_ && terms_ == other.terms_; }

  // Terms of total degree <= max_degree.
  Poly truncated(int max_degree) const;
  // Homogeneous component of the given total degree.
  Poly homogeneous_part(int degree) const;

  // Coefficients c_k (free of v) with p = sum_k c_k v^k.
  std::vector<Poly> coefficients_in(Var v) const;
  static Poly from_coefficients(const std::vector<Poly>& coeffs, Var v);

  // Leading term under lexicographic order on the canonical variable sequence.
  std::pair<Monomial, Rational> lex_leading_term() const;
  Poly monic() const;

  void add_term(const Monomial& m, const Rational& c);

  // Canonical text: descending degree-lexicographic term order.
  std::string to_string() const;

 private:
  void require_same(const Poly& other, const char* op) const;

  VarSet vars_;
  TermMap terms_;
};

Poly derivative(const Poly& p, Var v);

// Composes p with the assignment; every variable occurring in p must be assigned
// and all assigned polynomials must live over `target`.
Poly substitute(const Poly& p, const std::map<Var, Poly>& assignment, VarSet target);

std::optional<Poly> divide_exact(const Poly& p, const Poly& d);

// Pseudo-remainder of a by b with respect to v.
Poly pseudo_remainder(const Poly& a, const Poly& b, Var v);

// Determinant of the Sylvester matrix of p and q with respect to v.
Poly resultant(const Poly& p, const Poly& q, Var v);

// Monic (lex) greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly content_in(const Poly& p, Var v);

// Product of the distinct irreducible factors: p / gcd(p, all partials).
Poly squarefree_part(const Poly& p);

Poly parse_poly(std::string_view text, VarSet allowed);

std::string to_string(const Rational& q);

}  // namespace germcalc
