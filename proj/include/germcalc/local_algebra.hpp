#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "germcalc/matrix.hpp"
#include "germcalc/parallel.hpp"
#include "germcalc/poly.hpp"

namespace germcalc {

// Monomial ordering on a fixed variable sequence. Ties within equal degree are
// broken lexicographically along the sequence (earlier variables weigh more).
class MonomialOrder {
 public:
  enum class Kind { local, global, elimination };

  // Negative degree lexicographic: 1 > x_i for every variable.
  static MonomialOrder local(std::vector<Var> sequence);
  // Degree lexicographic.
  static MonomialOrder global(std::vector<Var> sequence);
  // Block order: the eliminated block is compared first by degree lexicographic,
  // the retained block breaks ties with the local ordering.
  static MonomialOrder elimination(std::vector<Var> eliminated, std::vector<Var> retained);

  // Local ordering on the canonical variable sequence of `vars`; `reversed`
  // selects the second admissible sequence used for robustness checks.
  static MonomialOrder local_on(VarSet vars, bool reversed = false);

  Kind kind() const noexcept { return kind_; }
  VarSet vars() const noexcept { return vars_; }
  const std::vector<Var>& eliminated() const noexcept { return eliminated_; }
  const std::vector<Var>& retained() const noexcept { return retained_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

 private:
  MonomialOrder(Kind kind, std::vector<Var> eliminated, std::vector<Var> retained);

  Kind kind_;
  std::vector<Var> eliminated_;
  std::vector<Var> retained_;
  VarSet vars_;
};

class Ideal {
 public:
  Ideal(VarSet ambient, std::vector<Poly> generators);

  static Ideal unit(VarSet ambient);

  VarSet ambient() const noexcept { return ambient_; }
  const std::vector<Poly>& generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }
  // True when some generator is a nonzero constant.
  bool has_constant_generator() const noexcept;
  int max_degree() const noexcept;

  Ideal operator+(const Ideal& other) const;

 private:
  VarSet ambient_;
  std::vector<Poly> generators_;
};

struct StandardBasis {
  std::vector<Poly> basis;
  MonomialOrder order;
  // Minimal generators of the leading ideal.
  std::vector<Monomial> leading;
  // False when some pair was skipped because of the degree bound.
  bool complete = true;
  // Degree N with m^N inside the ideal, when known (local orderings only).
  std::optional<int> corner_degree;

  bool is_unit() const noexcept;
};

StandardBasis std_basis(const Ideal& ideal, const MonomialOrder& order, int degree_bound);

// Mora weak normal form of p with respect to a standard basis; zero iff p lies
// in the ideal generated in the localization determined by the ordering.
Poly normal_form(const Poly& p, const StandardBasis& sb);
bool contains(const StandardBasis& sb, const Poly& p);

// Number of monomials outside a monomial ideal in the given variables;
// nullopt when that count is infinite.
std::optional<std::size_t> count_standard_monomials(const std::vector<Monomial>& leading, VarSet vars);

struct Colength {
  std::optional<std::size_t> value;  // nullopt means infinite
  int degree_bound_used = 0;
  bool infinite() const noexcept { return !value.has_value(); }
};

// Throws Undecided when the standard basis was truncated by the degree bound.
Colength colength(const Ideal& ideal, const MonomialOrder& order, int degree_bound);
// Retries at bound + 2 until complete or `max_degree_bound` is exceeded.
Colength colength_with_retry(const Ideal& ideal, const MonomialOrder& order, int degree_bound, int max_degree_bound);

// Jacobian colength of a plane curve germ at the origin; throws NotIsolated when infinite.
std::size_t milnor_number_plane_curve(const Poly& g, bool reversed_order = false, int max_degree_bound = 64);

// Ideal of all k x k minors; the unit ideal for k = 0.
Ideal minors(const PolyMatrix& m, std::size_t k, Execution exec = Execution::parallel);

struct Elimination {
  Ideal ideal;
  int degree_bound_used = 0;
};

// Intersection of the ideal with the ring in the remaining variables (local in
// those variables). Throws Undecided when the basis stays truncated up to the max bound.
Elimination eliminate(const Ideal& ideal, VarSet drop, int degree_bound, int max_degree_bound = 64);

}  // namespace germcalc
