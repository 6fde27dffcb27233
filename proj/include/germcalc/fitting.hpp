#pragma once

#include <optional>
#include <vector>

#include "germcalc/germ.hpp"
#include "germcalc/local_algebra.hpp"
#include "germcalc/settings.hpp"

namespace germcalc {

// Presentation of the pushforward of the source local ring over (X, Y, Z),
// in the basis 1, y, ..., y^(n-1), with entries truncated at the jet bound.
struct PresentationMatrix {
  PolyMatrix matrix;
  int jet_bound = 0;
  // Component (1 = f2, 2 = f3) used as the finite projection; 0 for an immersive 1x1 block.
  int regular_component = 0;
  // True when f3 was used, so the roles of Y and Z are exchanged.
  bool swapped = false;

  std::size_t size() const noexcept { return matrix.rows(); }
};

// Reduced equation of the image of one branch, in (X, Y, Z).
Poly image_equation(const BranchGerm& b);

// Order in y of p(0, y); nullopt when p(0, y) vanishes identically.
std::optional<int> y_order(const Poly& p);

// `component` forces the finite projection (1 = f2, 2 = f3).
PresentationMatrix presentation(const BranchGerm& b, int jet_bound, std::optional<int> component = std::nullopt);

// Ideal of (n - k) x (n - k) minors; the unit ideal once k >= n.
Ideal fitting_ideal(const PolyMatrix& m, std::size_t k, Execution exec = Execution::parallel);
Ideal fitting_ideal(const PresentationMatrix& m, std::size_t k, Execution exec = Execution::parallel);

// Block-diagonal presentation of the whole multi-germ.
PolyMatrix assemble_presentation(const MultiGerm& g, int jet_bound);

struct TriplePointTarget {
  std::size_t count = 0;
  // Jet bound at which the F2 colength first agreed with the one at bound + 2.
  int jet_bound = 0;
};

TriplePointTarget triple_point_count_target(const MultiGerm& g, const Settings& settings);

// max(10, 2 * (maximum component degree) + 4)
int default_jet_bound(const MultiGerm& g);

}  // namespace germcalc
