#include "germcalc/invariants.hpp"

#include <algorithm>

#include "germcalc/error.hpp"
#include "germcalc/fitting.hpp"
#include "germcalc/multiple_points.hpp"

namespace germcalc {

std::string_view route_name(TRoute r) noexcept {
  switch (r) {
    case TRoute::source: return "source";
    case TRoute::target: return "target";
    case TRoute::both: return "both";
  }
  return "both";
}

std::optional<TRoute> route_from_name(std::string_view name) noexcept {
  if (name == "source") return TRoute::source;
  if (name == "target") return TRoute::target;
  if (name == "both") return TRoute::both;
  return std::nullopt;
}

std::string_view provenance_name(Provenance p) noexcept {
  return p == Provenance::computed_direct ? "computed-direct" : "formula-derived";
}

namespace {

long sigma_numerator(const RawInvariants& raw) { return raw.muD - raw.C + 2 * raw.T - raw.r + 2; }

[[noreturn]] void inconsistent(const std::string& what) { throw Error(ErrorKind::InconsistentInvariants, what); }

}  // namespace

DerivedInvariants derive_formulas(const RawInvariants& raw) {
  const long num = sigma_numerator(raw);
  if (num % 2 != 0) {
    inconsistent("odd value " + std::to_string(num) + " of muD - C + 2T - r + 2");
  }
  DerivedInvariants d;
  d.muSigma = num / 2;
  d.muI = raw.muD - d.muSigma - raw.T;
  d.chiF = raw.muD + 2 * raw.C - 3 * raw.T;
  d.b0 = 1;
  d.b1 = raw.r - 1;
  d.b2 = d.chiF - d.b0 + d.b1;
  d.muD2 = raw.muD - 6 * raw.T + raw.r * (raw.r - 2) + raw.sigma;
  d.muD2modS2 = d.muSigma - 4 * raw.T + raw.r * (raw.r - 1) / 2 + raw.sigma - 1;
  if (raw.r == 1) d.smale = raw.C;
  d.cMinus3T = raw.C - 3 * raw.T;
  if (d.muSigma < 0) inconsistent("negative muSigma = " + std::to_string(d.muSigma));
  if (d.muI < 0) inconsistent("negative muI = " + std::to_string(d.muI));
  if (d.b2 < 0) inconsistent("negative b2 = " + std::to_string(d.b2));
  return d;
}

std::vector<CheckResult> consistency_check(const RawInvariants& raw, const RouteData& routes, bool regular) {
  std::vector<CheckResult> out;
  if (!regular) {
    const long num = sigma_numerator(raw);
    out.push_back({"parity_ok", num % 2 == 0});
    const long mu_sigma = num / 2;
    const long mu_i = raw.muD - mu_sigma - raw.T;
    const long b2 = raw.muD + 2 * raw.C - 3 * raw.T - 1 + (raw.r - 1);
    out.push_back({"muSigma_nonneg", mu_sigma >= 0});
    out.push_back({"muI_nonneg", mu_i >= 0});
    out.push_back({"b2_nonneg", b2 >= 0});
  }
  if (routes.t_source && routes.t_target) out.push_back({"t_routes_agree", *routes.t_source == *routes.t_target});
  if (routes.d3_colength) out.push_back({"d3_divisible_by_6", *routes.d3_colength % 6 == 0});
  out.push_back({"image_eq_vanishes_on_parametrization",
                 std::all_of(routes.image_vanishes.begin(), routes.image_vanishes.end(), [](bool b) { return b; })});
  return out;
}

std::string InvariantReport::t_route_tag() const {
  if (t_source && t_target) return *t_source == *t_target ? "both-agree" : "both-disagree";
  return t_source ? "source" : "target";
}

bool InvariantReport::checks_pass() const {
  return std::all_of(consistency.begin(), consistency.end(), [](const CheckResult& c) { return c.ok; });
}

std::map<std::string, Provenance> InvariantReport::provenance() const {
  std::map<std::string, Provenance> p;
  for (const char* f : {"r", "sigma", "coranks", "C", "T", "muD_per_point", "muD", "regular"}) {
    p[f] = Provenance::computed_direct;
  }
  if (derived) {
    for (const char* f : {"muSigma", "muI", "chiF", "b0", "b1", "b2", "muD2", "muD2modS2", "cMinus3T"}) {
      p[f] = Provenance::formula_derived;
    }
    if (derived->smale) p["smale"] = Provenance::formula_derived;
  }
  return p;
}

RawInvariants InvariantReport::raw() const { return {muD, C, T, r, sigma}; }

InvariantReport compute_report(const MultiGerm& g, const ComputeOptions& options) {
  validate(g);
  Settings settings;
  settings.jet_bound = options.jet_bound.value_or(default_jet_bound(g));
  settings.max_jet_bound = options.max_jet_bound;
  settings.reversed_order = options.reversed_order;
  settings.exec = options.exec;
  if (settings.jet_bound > settings.max_jet_bound) {
    throw Error(ErrorKind::Structural, "jet bound exceeds the maximum jet bound");
  }

  InvariantReport rep;
  rep.name = g.name;
  rep.jet_bound = settings.jet_bound;
  rep.r = static_cast<long>(g.r());
  rep.sigma = static_cast<long>(sigma(g));
  for (const auto& b : g.branches) rep.coranks.push_back(corank(b));

  RouteData routes;
  std::vector<Poly> images;
  for (const auto& b : g.branches) {
    images.push_back(image_equation(b));
    const std::map<Var, Poly> param{{Var::X, b.components[0]}, {Var::Y, b.components[1]}, {Var::Z, b.components[2]}};
    routes.image_vanishes.push_back(substitute(images.back(), param, vars::source).is_zero());
    rep.image_equations.push_back(images.back().to_string());
  }

  const DoublePointData dp = double_point_curve(g, images, settings);
  for (const auto& bd : dp.branches) {
    rep.muD_per_point.emplace_back(bd.point, static_cast<long>(bd.mu));
    rep.double_point_curves.push_back(bd.curve.to_string());
  }
  rep.muD = static_cast<long>(dp.mu_total);

  for (const auto& b : g.branches) rep.C += static_cast<long>(crosscap_count(b, settings));

  const TRoute route = options.t_route.value_or(g.r() == 1 ? TRoute::both : TRoute::target);
  if (route == TRoute::source && g.r() > 1) {
    throw Error(ErrorKind::Unsupported, "the source triple point route only covers mono-germs; use --t-route target");
  }
  if (route != TRoute::target && g.r() == 1) {
    const TriplePointSource ts = triple_point_count_source(g.branches.front(), settings);
    rep.t_source = static_cast<long>(ts.count);
    if (corank(g.branches.front()) == 1) routes.d3_colength = ts.colength;
  }
  if (route != TRoute::source) {
    rep.t_target = static_cast<long>(triple_point_count_target(g, settings).count);
  }
  rep.T = rep.t_target ? *rep.t_target : *rep.t_source;
  routes.t_source = rep.t_source;
  routes.t_target = rep.t_target;

  rep.regular = is_regular(g);
  rep.consistency = consistency_check(rep.raw(), routes, rep.regular);
  rep.assumptions.push_back("b0 = 1: the Milnor fibre of a reduced surface germ in C^3 is connected");
  rep.assumptions.push_back("Betti numbers are integral, with no coefficient field distinguished");
  rep.assumptions.push_back("an image branch is singular exactly when its parametrization is not immersive");
  if (g.r() > 1) rep.assumptions.push_back("distinct source branches have distinct images");
  if (!rep.regular) {
    rep.derived = derive_formulas(rep.raw());
    if (rep.derived->smale) {
      rep.assumptions.push_back("smale reports C as the sign-refined Smale invariant; no orientation is computed");
    }
  }
  return rep;
}

bool same_numbers(const InvariantReport& a, const InvariantReport& b) {
  auto mu_values = [](const InvariantReport& r) {
    std::vector<long> v;
    for (const auto& [label, mu] : r.muD_per_point) v.push_back(mu);
    return v;
  };
  return a.r == b.r && a.sigma == b.sigma && a.coranks == b.coranks && a.C == b.C && a.T == b.T &&
         a.t_source == b.t_source && a.t_target == b.t_target && mu_values(a) == mu_values(b) && a.muD == b.muD &&
         a.regular == b.regular && a.derived == b.derived && a.consistency == b.consistency;
}

}  // namespace germcalc
