#pragma once

namespace germcalc {

// Selects between the OpenMP kernel and its serial reference implementation.
enum class Execution { serial, parallel };

// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads() noexcept;

}  // namespace germcalc
