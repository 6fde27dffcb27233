#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "germcalc/poly.hpp"

namespace germcalc {

// One branch of a multi-germ: the parametrization (f1, f2, f3) of a sheet
// through the origin, attached to a labelled source point.
struct BranchGerm {
  std::string point;
  std::array<Poly, 3> components;  // polynomials in (x, y)

  bool operator==(const BranchGerm&) const = default;
};

struct MultiGerm {
  std::string name;
  std::vector<BranchGerm> branches;

  std::size_t r() const noexcept { return branches.size(); }
  bool operator==(const MultiGerm&) const = default;
};

// 2 - rank of the linear part at the origin.
int corank(const BranchGerm& b);

// Corank-one normal form (x, p, q) with ord p, ord q >= 2.
bool is_prenormal(const BranchGerm& b);

// Number of branches with non-immersive parametrization.
std::size_t sigma(const MultiGerm& g);

// Mono-germ of embedding: one immersive branch with empty double point set.
bool is_regular(const MultiGerm& g);

// Validates every structural invariant; throws Parse or Unsupported errors.
void validate(const MultiGerm& g);

// Parses the JSON input format and validates the result. `fallback_name` is used
// when the document has no "name" member.
MultiGerm parse_germ(std::string_view json_text, const std::string& fallback_name = "germ");
std::string to_json(const MultiGerm& g);

// Invertible rational linear coordinate changes that keep the corank-one normal
// form: per-branch source changes and one common target change.
struct LinearChange {
  struct Source {
    // (x, y) -> (a x + b y, c x + d y)
    Rational a, b, c, d;
  };
  std::vector<Source> sources;
  // Row-major 3x3 target matrix, (X, Y, Z)^T -> T (X, Y, Z)^T.
  std::array<Rational, 9> target;
};

// Draws a change with numerators in [-bound, bound] and denominators in [1, bound].
LinearChange random_linear_change(const MultiGerm& g, std::mt19937_64& rng, int bound = 7);
MultiGerm apply(const LinearChange& change, const MultiGerm& g);

}  // namespace germcalc
