#pragma once

#include "germcalc/parallel.hpp"

namespace germcalc {

// Knobs shared by every colength-producing computation.
struct Settings {
  int jet_bound = 10;
  int max_jet_bound = 64;
  // Use the second admissible local ordering (reversed variable sequence).
  bool reversed_order = false;
  Execution exec = Execution::parallel;
};

}  // namespace germcalc
