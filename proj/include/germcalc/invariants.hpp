#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "germcalc/germ.hpp"
#include "germcalc/settings.hpp"

namespace germcalc {

enum class TRoute { source, target, both };

std::string_view route_name(TRoute r) noexcept;
std::optional<TRoute> route_from_name(std::string_view name) noexcept;

struct RawInvariants {
  long muD = 0;
  long C = 0;
  long T = 0;
  long r = 0;
  long sigma = 0;
};

struct DerivedInvariants {
  long muSigma = 0;
  long muI = 0;
  long chiF = 0;
  long b0 = 1;
  long b1 = 0;
  long b2 = 0;
  long muD2 = 0;
  long muD2modS2 = 0;
  std::optional<long> smale;
  long cMinus3T = 0;

  bool operator==(const DerivedInvariants&) const = default;
};

// Throws InconsistentInvariants on a parity violation or a negative muSigma, muI or b2.
DerivedInvariants derive_formulas(const RawInvariants& raw);

struct CheckResult {
  std::string name;
  bool ok = true;

  bool operator==(const CheckResult&) const = default;
};

// Independent results used by the consistency checks.
struct RouteData {
  std::optional<long> t_source;
  std::optional<long> t_target;
  std::optional<std::size_t> d3_colength;
  // One flag per branch: g_j composed with f_j vanishes.
  std::vector<bool> image_vanishes;
};

// Formula checks are skipped for regular germs.
std::vector<CheckResult> consistency_check(const RawInvariants& raw, const RouteData& routes, bool regular = false);

struct ComputeOptions {
  // Default per germ when unset.
  std::optional<int> jet_bound;
  int max_jet_bound = 64;
  // Default: both for mono-germs, target for multi-germs.
  std::optional<TRoute> t_route;
  bool reversed_order = false;
  Execution exec = Execution::parallel;
};

enum class Provenance { computed_direct, formula_derived };
std::string_view provenance_name(Provenance p) noexcept;

struct InvariantReport {
  std::string name;
  long r = 0;
  long sigma = 0;
  std::vector<int> coranks;
  long C = 0;
  long T = 0;
  std::optional<long> t_source;
  std::optional<long> t_target;
  std::vector<std::pair<std::string, long>> muD_per_point;
  long muD = 0;
  bool regular = false;
  // Absent for regular germs.
  std::optional<DerivedInvariants> derived;
  std::vector<CheckResult> consistency;
  std::vector<std::string> assumptions;

  // Inspection data, not part of the numeric comparison.
  std::vector<std::string> image_equations;
  std::vector<std::string> double_point_curves;
  int jet_bound = 0;

  // "source", "target" or "both-agree" ("both-disagree" when the routes differ).
  std::string t_route_tag() const;
  bool checks_pass() const;
  std::map<std::string, Provenance> provenance() const;
  RawInvariants raw() const;
};

InvariantReport compute_report(const MultiGerm& g, const ComputeOptions& options = {});

// Every numeric field of two reports agrees (names and inspection data ignored).
bool same_numbers(const InvariantReport& a, const InvariantReport& b);

}  // namespace germcalc
