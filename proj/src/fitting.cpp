#include "germcalc/fitting.hpp"

#include <algorithm>
#include <map>

#include "germcalc/error.hpp"

namespace germcalc {

namespace {

constexpr VarSet kCurveRing{Var::y, Var::X, Var::Y, Var::Z};
constexpr VarSet kImmersionRing{Var::x, Var::y, Var::X, Var::Y, Var::Z};

const std::array<Var, 3> kTargetVar{Var::X, Var::Y, Var::Z};

Poly var(VarSet vs, Var v) { return Poly::variable(vs, v); }

// Eliminates `v` from U_j - a, U_k - b, or returns the trivial equation when one of them is free of v.
Poly eliminate_parameter(const Poly& a, Var target_a, const Poly& b, Var target_b, Var v, VarSet ring) {
  const Poly ga = var(ring, target_a) - a;
  const Poly gb = var(ring, target_b) - b;
  Poly g;
  if (a.degree_in(v) <= 0) {
    g = ga;
  } else if (b.degree_in(v) <= 0) {
    g = gb;
  } else {
    g = resultant(ga, gb, v);
  }
  if (g.is_zero()) {
    throw Error(ErrorKind::NotAFinite, "image equation degenerates: branch is not generically one-to-one");
  }
  Poly reduced = squarefree_part(g.restrict_to(vars::target));
  // Roots escaping to infinity contribute factors of the leading coefficients.
  for (const Poly* f : {&ga, &gb}) {
    if (f->degree_in(v) <= 0) continue;
    const Poly lc = f->coefficients_in(v).back().restrict_to(vars::target);
    while (true) {
      const Poly common = gcd(reduced, lc);
      if (common.is_constant()) break;
      reduced = *divide_exact(reduced, common);
    }
  }
  return reduced;
}

Poly image_equation_prenormal(const BranchGerm& b) {
  const std::map<Var, Poly> lift{{Var::x, var(kCurveRing, Var::X)}, {Var::y, var(kCurveRing, Var::y)}};
  const Poly p = substitute(b.components[1], lift, kCurveRing);
  const Poly q = substitute(b.components[2], lift, kCurveRing);
  return eliminate_parameter(p, Var::Y, q, Var::Z, Var::y, kCurveRing);
}

Poly image_equation_immersive(const BranchGerm& b) {
  const VarSet ring = kImmersionRing;
  for (std::size_t i = 0; i < 3; ++i) {
    const Poly& f = b.components[i];
    if (f.is_zero() || !f.is_linear_form()) continue;
    const Rational alpha = f.coefficient(Monomial::of(Var::x));
    const Rational beta = f.coefficient(Monomial::of(Var::y));
    const Poly u = var(ring, kTargetVar[i]);
    const Poly x = var(ring, Var::x);
    const Poly y = var(ring, Var::y);
    std::map<Var, Poly> solve;
    Var remaining;
    if (beta != 0) {
      solve = {{Var::x, x}, {Var::y, (u - alpha * x) * (1 / beta)}};
      remaining = Var::x;
    } else {
      solve = {{Var::x, u * (1 / alpha)}, {Var::y, y}};
      remaining = Var::y;
    }
    const std::size_t j = (i + 1) % 3;
    const std::size_t k = (i + 2) % 3;
    const Poly a = substitute(b.components[j], solve, ring);
    const Poly c = substitute(b.components[k], solve, ring);
    const VarSet reduced = ring.without(VarSet{remaining == Var::x ? Var::y : Var::x});
    return eliminate_parameter(a.restrict_to(reduced), kTargetVar[j], c.restrict_to(reduced), kTargetVar[k],
                               remaining, reduced);
  }
  throw Error(ErrorKind::Unsupported, "branch '" + b.point + "': immersive branch needs a component that is a linear form");
}

// Weighted expansion of source polynomials over the basis y^j (j < n) with
// coefficients in (X, W), where s has initial form u0 y^n for weights x = n, y = 1.
class WeightedExpansion {
 public:
  WeightedExpansion(const Poly& s, int n, int jet_bound)
      : n_(static_cast<unsigned>(n)), limit_(static_cast<unsigned>(n) * static_cast<unsigned>(jet_bound + 1)) {
    u0_ = s.coefficient(Monomial::of(Var::y, n_));
    Poly power = Poly::constant(vars::source, 1);
    for (int c = 0; c <= jet_bound; ++c) {
      powers_.push_back(trim(power));
      power = trim(power * s);
    }
  }

  // Coefficient of y^j, as a term map X^a W^c, for every j < n.
  std::vector<std::map<std::pair<unsigned, unsigned>, Rational>> expand(const Poly& h) const {
    std::vector<std::map<std::pair<unsigned, unsigned>, Rational>> out(n_);
    std::map<std::pair<unsigned, Monomial>, Rational> residual;
    for (const auto& [m, c] : h.terms()) {
      const unsigned w = weight(m);
      if (w < limit_) residual.emplace(std::make_pair(w, m), c);
    }
    while (!residual.empty()) {
      const auto it = residual.begin();
      const Monomial m = it->first.second;
      const unsigned a = m[Var::x];
      const unsigned j = m[Var::y] % n_;
      const unsigned cc = m[Var::y] / n_;
      Rational k = it->second;
      for (unsigned i = 0; i < cc; ++i) k /= u0_;
      auto& slot = out[j][{a, cc}];
      slot += k;
      if (slot == 0) out[j].erase({a, cc});
      const Monomial shift = Monomial::of(Var::x, a) * Monomial::of(Var::y, j);
      for (const auto& [pm, pc] : powers_[cc].terms()) {
        const Monomial t = pm * shift;
        const unsigned w = weight(t);
        if (w >= limit_) continue;
        auto [pos, inserted] = residual.try_emplace(std::make_pair(w, t), 0);
        pos->second -= k * pc;
        if (pos->second == 0) residual.erase(pos);
      }
    }
    return out;
  }

 private:
  unsigned weight(const Monomial& m) const noexcept { return n_ * m[Var::x] + m[Var::y]; }

  Poly trim(const Poly& p) const {
    Poly out(p.vars());
    for (const auto& [m, c] : p.terms()) {
      if (weight(m) < limit_) out.add_term(m, c);
    }
    return out;
  }

  unsigned n_;
  unsigned limit_;
  Rational u0_;
  std::vector<Poly> powers_;
};

}  // namespace

std::optional<int> y_order(const Poly& p) {
  std::optional<int> best;
  for (const auto& [m, c] : p.terms()) {
    if (m[Var::x] != 0) continue;
    const int e = static_cast<int>(m[Var::y]);
    if (!best || e < *best) best = e;
  }
  return best;
}

Poly image_equation(const BranchGerm& b) {
  const int c = corank(b);
  if (c == 0) return image_equation_immersive(b);
  if (c == 1 && is_prenormal(b)) return image_equation_prenormal(b);
  throw Error(ErrorKind::Unsupported, "branch '" + b.point + "' is neither immersive nor in corank-one normal form");
}

PresentationMatrix presentation(const BranchGerm& b, int jet_bound, std::optional<int> component) {
  PresentationMatrix out;
  out.jet_bound = jet_bound;
  if (corank(b) == 0) {
    out.matrix = PolyMatrix(1, 1, vars::target);
    out.matrix(0, 0) = image_equation(b);
    return out;
  }
  if (!is_prenormal(b)) {
    throw Error(ErrorKind::Unsupported, "branch '" + b.point + "' is not in corank-one normal form");
  }
  const std::optional<int> n2 = y_order(b.components[1]);
  const std::optional<int> n3 = y_order(b.components[2]);
  int chosen = 0;
  if (component) {
    const auto& n = *component == 1 ? n2 : n3;
    if (!n) throw Error(ErrorKind::Unsupported, "requested component is not y-regular");
    chosen = *component;
  } else if (n2 && (!n3 || *n2 <= *n3)) {
    chosen = 1;
  } else if (n3) {
    chosen = 2;
  } else {
    throw Error(ErrorKind::Unsupported, "branch '" + b.point +
                                            "': neither f2 nor f3 is y-regular; mix Y and Z linearly in the input");
  }
  const int n = *(chosen == 1 ? n2 : n3);
  const Poly& s = b.components[static_cast<std::size_t>(chosen)];
  const Poly& t = b.components[static_cast<std::size_t>(3 - chosen)];
  const Var w = kTargetVar[static_cast<std::size_t>(chosen)];
  const Var v = kTargetVar[static_cast<std::size_t>(3 - chosen)];

  const WeightedExpansion expansion(s, n, jet_bound);
  const auto nn = static_cast<std::size_t>(n);
  PolyMatrix lambda(nn, nn, vars::target);
  Poly column_input = t;
  const Poly y = Poly::variable(vars::source, Var::y);
  for (std::size_t i = 0; i < nn; ++i) {
    const auto coeffs = expansion.expand(column_input);
    for (std::size_t j = 0; j < nn; ++j) {
      Poly entry(vars::target);
      for (const auto& [exps, c] : coeffs[j]) {
        entry.add_term(Monomial::of(Var::X, exps.first) * Monomial::of(w, exps.second), -c);
      }
      if (i == j) entry += Poly::variable(vars::target, v);
      lambda(j, i) = std::move(entry);
    }
    column_input = column_input * y;
  }
  out.matrix = std::move(lambda);
  out.regular_component = chosen;
  out.swapped = chosen == 2;
  return out;
}

Ideal fitting_ideal(const PolyMatrix& m, std::size_t k, Execution exec) {
  if (k >= m.rows()) return Ideal::unit(m.vars());
  return minors(m, m.rows() - k, exec);
}

Ideal fitting_ideal(const PresentationMatrix& m, std::size_t k, Execution exec) {
  return fitting_ideal(m.matrix, k, exec);
}

PolyMatrix assemble_presentation(const MultiGerm& g, int jet_bound) {
  std::vector<PolyMatrix> blocks;
  blocks.reserve(g.r());
  for (const auto& b : g.branches) blocks.push_back(presentation(b, jet_bound).matrix);
  return PolyMatrix::block_diagonal(blocks);
}

TriplePointTarget triple_point_count_target(const MultiGerm& g, const Settings& settings) {
  const MonomialOrder order = MonomialOrder::local_on(vars::target, settings.reversed_order);
  std::optional<std::size_t> previous;
  for (int bound = settings.jet_bound; bound <= settings.max_jet_bound; bound += 2) {
    const PolyMatrix m = assemble_presentation(g, bound);
    const Ideal f2 = fitting_ideal(m, 2, settings.exec);
    const Colength c = colength_with_retry(f2, order, bound, settings.max_jet_bound);
    if (c.infinite()) throw Error(ErrorKind::NotAFinite, "second Fitting ideal has infinite colength");
    if (previous && *previous == *c.value) return {*c.value, bound - 2};
    previous = c.value;
  }
  throw Error(ErrorKind::JetBoundExceeded,
              "triple point count did not stabilize up to jet bound " + std::to_string(settings.max_jet_bound));
}

int default_jet_bound(const MultiGerm& g) {
  int degree = 0;
  for (const auto& b : g.branches) {
    for (const auto& f : b.components) degree = std::max(degree, f.total_degree());
  }
  return std::max(10, 2 * degree + 4);
}

}  // namespace germcalc
