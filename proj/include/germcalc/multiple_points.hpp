#pragma once

#include <string>
#include <vector>

#include "germcalc/germ.hpp"
#include "germcalc/local_algebra.hpp"
#include "germcalc/settings.hpp"

namespace germcalc {

struct DividedDifferences {
  Poly first;   // in (x, y, y')
  Poly second;  // in (x, y, y', y'')
};

DividedDifferences divided_differences(const Poly& p);

// (P1 of f2, P1 of f3) in (x, y, y'); the unit ideal for immersive branches.
Ideal double_point_ideal(const BranchGerm& b);

struct BranchDoublePoints {
  std::string point;
  Ideal d2;
  // Reduced equation of the double point curve at this source point (1 when empty).
  Poly curve;
  std::size_t mu = 0;
};

struct DoublePointData {
  std::vector<BranchDoublePoints> branches;
  std::size_t mu_total = 0;
};

// Generator of the projection of the D^2 ideal to (x, y); 1 when the ideal is the unit ideal.
Poly double_point_self_part(const BranchGerm& b, const Settings& settings);

// `image_equations[i]` is the reduced image equation of branch i.
DoublePointData double_point_curve(const MultiGerm& g, const std::vector<Poly>& image_equations,
                                   const Settings& settings);

std::size_t crosscap_count(const BranchGerm& b, const Settings& settings);

struct TriplePointSource {
  std::size_t colength = 0;
  std::size_t count = 0;
};

// Colength of the D^3 ideal and its sixth; throws InconsistentInvariants when 6 does not divide it.
TriplePointSource triple_point_count_source(const BranchGerm& b, const Settings& settings);

}  // namespace germcalc
