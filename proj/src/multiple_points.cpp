#include "germcalc/multiple_points.hpp"

#include <algorithm>

#include "germcalc/error.hpp"

namespace germcalc {

namespace {

// Complete homogeneous sum over u^i v^(k-i), multiplied by `base`.
void add_complete_sum(Poly& out, const Monomial& base, const Rational& c, Var u, Var v, unsigned k) {
  for (unsigned i = 0; i <= k; ++i) out.add_term(base * Monomial::of(u, i) * Monomial::of(v, k - i), c);
}

}  // namespace

DividedDifferences divided_differences(const Poly& p) {
  const Poly src = p.restrict_to(vars::source);
  Poly first(vars::double_source);
  for (const auto& [m, c] : src.terms()) {
    const unsigned e = m[Var::y];
    if (e == 0) continue;
    add_complete_sum(first, Monomial::of(Var::x, m[Var::x]), c, Var::y, Var::y1, e - 1);
  }
  Poly second(vars::triple_source);
  for (const auto& [m, c] : first.terms()) {
    const unsigned e = m[Var::y1];
    if (e == 0) continue;
    const Monomial base = Monomial::of(Var::x, m[Var::x]) * Monomial::of(Var::y, m[Var::y]);
    add_complete_sum(second, base, c, Var::y1, Var::y2, e - 1);
  }
  return {std::move(first), std::move(second)};
}

Ideal double_point_ideal(const BranchGerm& b) {
  if (corank(b) == 0) return Ideal::unit(vars::double_source);
  return Ideal(vars::double_source,
               {divided_differences(b.components[1]).first, divided_differences(b.components[2]).first});
}

Poly double_point_self_part(const BranchGerm& b, const Settings& settings) {
  const Ideal d2 = double_point_ideal(b);
  if (d2.has_constant_generator()) return Poly::constant(vars::source, 1);
  const Elimination e = eliminate(d2, VarSet{Var::y1}, settings.jet_bound, settings.max_jet_bound);
  if (e.ideal.is_zero()) {
    throw Error(ErrorKind::NotAFinite, "branch '" + b.point + "': double point set is not a curve");
  }
  Poly common(vars::source);
  for (const auto& gen : e.ideal.generators()) common = gcd(common, gen.restrict_to(vars::source));
  if (common.is_constant()) return Poly::constant(vars::source, 1);
  return common;
}

DoublePointData double_point_curve(const MultiGerm& g, const std::vector<Poly>& image_equations,
                                   const Settings& settings) {
  if (image_equations.size() != g.r()) throw Error(ErrorKind::Structural, "one image equation per branch required");
  DoublePointData out;
  for (std::size_t j = 0; j < g.r(); ++j) {
    const BranchGerm& b = g.branches[j];
    Poly d = double_point_self_part(b, settings);
    const std::map<Var, Poly> param{{Var::X, b.components[0]}, {Var::Y, b.components[1]}, {Var::Z, b.components[2]}};
    for (std::size_t i = 0; i < g.r(); ++i) {
      if (i == j) continue;
      const Poly pulled = substitute(image_equations[i], param, vars::source);
      if (pulled.is_zero()) {
        throw Error(ErrorKind::Unsupported, "branches '" + g.branches[i].point + "' and '" + b.point +
                                                "' share an image component; distinct images are required");
      }
      d *= pulled;
    }
    d = squarefree_part(d);
    std::size_t mu = 0;
    if (!d.is_constant() && d.constant_term() == 0) {
      try {
        mu = milnor_number_plane_curve(d, settings.reversed_order, settings.max_jet_bound);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotIsolated) {
          throw Error(ErrorKind::NotAFinite, "double point curve at '" + b.point + "' has a non-isolated singularity");
        }
        throw;
      }
    }
    out.mu_total += mu;
    out.branches.push_back({b.point, double_point_ideal(b), std::move(d), mu});
  }
  return out;
}

std::size_t crosscap_count(const BranchGerm& b, const Settings& settings) {
  if (corank(b) == 0) return 0;
  const std::vector<Poly> comps(b.components.begin(), b.components.end());
  const Ideal ramification = minors(jacobian(comps, {Var::x, Var::y}), 2, settings.exec);
  const Colength c = colength_with_retry(ramification, MonomialOrder::local_on(vars::source, settings.reversed_order),
                                         settings.jet_bound, settings.max_jet_bound);
  if (c.infinite()) throw Error(ErrorKind::NotAFinite, "branch '" + b.point + "': ramification ideal has infinite colength");
  return *c.value;
}

TriplePointSource triple_point_count_source(const BranchGerm& b, const Settings& settings) {
  if (corank(b) == 0) return {};
  const auto dp = divided_differences(b.components[1]);
  const auto dq = divided_differences(b.components[2]);
  const Ideal d3(vars::triple_source, {dp.first.in(vars::triple_source), dq.first.in(vars::triple_source),
                                       dp.second, dq.second});
  const Colength c = colength_with_retry(d3, MonomialOrder::local_on(vars::triple_source, settings.reversed_order),
                                         settings.jet_bound, settings.max_jet_bound);
  if (c.infinite()) throw Error(ErrorKind::NotAFinite, "branch '" + b.point + "': triple point ideal has infinite colength");
  if (*c.value % 6 != 0) {
    throw Error(ErrorKind::InconsistentInvariants,
                "triple point colength " + std::to_string(*c.value) + " is not divisible by 6");
  }
  return {*c.value, *c.value / 6};
}

}  // namespace germcalc
