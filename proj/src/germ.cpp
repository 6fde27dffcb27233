#include "germcalc/germ.hpp"

#include "json.hpp"
#include <set>

#include "germcalc/error.hpp"

namespace germcalc {

namespace {

using json = nlohmann::ordered_json;

int rank_of(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
    const auto& prow = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      const Rational f = m[r][c] / prow[c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * prow[k];
    }
    ++rank;
  }
  return rank;
}

Rational linear_coefficient(const Poly& p, Var v) { return p.coefficient(Monomial::of(v)); }

[[noreturn]] void unsupported(const std::string& what) { throw Error(ErrorKind::Unsupported, what); }
[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

}  // namespace

int corank(const BranchGerm& b) {
  std::vector<std::vector<Rational>> lin;
  for (const auto& f : b.components) lin.push_back({linear_coefficient(f, Var::x), linear_coefficient(f, Var::y)});
  return 2 - rank_of(std::move(lin));
}

bool is_prenormal(const BranchGerm& b) {
  const Poly x = Poly::variable(vars::source, Var::x);
  auto high_order = [](const Poly& p) { return p.is_zero() || p.order() >= 2; };
  return b.components[0] == x && high_order(b.components[1]) && high_order(b.components[2]);
}

std::size_t sigma(const MultiGerm& g) {
  return static_cast<std::size_t>(
      std::count_if(g.branches.begin(), g.branches.end(), [](const BranchGerm& b) { return corank(b) >= 1; }));
}

bool is_regular(const MultiGerm& g) {
  // An immersive branch is locally an embedding, so its double point set is empty.
  return g.r() == 1 && corank(g.branches.front()) == 0;
}

void validate(const MultiGerm& g) {
  if (g.branches.empty()) parse_error("germ '" + g.name + "' has no branches");
  std::set<std::string> labels;
  for (const auto& b : g.branches) {
    if (!labels.insert(b.point).second) parse_error("duplicate source point label '" + b.point + "'");
    for (const auto& f : b.components) {
      if (f.vars() != vars::source) parse_error("branch '" + b.point + "' component outside (x, y)");
      if (f.constant_term() != 0) {
        parse_error("branch '" + b.point + "' component " + f.to_string() + " has a nonzero constant term");
      }
    }
  }
  for (const auto& b : g.branches) {
    const int c = corank(b);
    if (c == 2) {
      unsupported("branch '" + b.point + "' has corank 2 (zero linear part); only corank <= 1 germs are supported");
    }
    if (c == 1) {
      if (!is_prenormal(b)) {
        unsupported("branch '" + b.point +
                    "' has corank 1 but is not in the form (x, p(x,y), q(x,y)) with ord p, ord q >= 2; "
                    "change coordinates so that the first component is x and the others have no linear terms");
      }
      // f(0, y) = 0 only at y = 0, otherwise the origin has further preimages.
      std::map<Var, Poly> at_axis{{Var::x, Poly(vars::source)}, {Var::y, Poly::variable(vars::source, Var::y)}};
      const Poly p0 = substitute(b.components[1], at_axis, vars::source);
      const Poly q0 = substitute(b.components[2], at_axis, vars::source);
      const Poly common = gcd(p0, q0);
      if (common.is_zero() || common.size() != 1) {
        unsupported("branch '" + b.point + "' sends points of the line x = 0 other than the origin to 0; "
                    "restrict to a local parametrization");
      }
    }
  }
}

MultiGerm parse_germ(std::string_view json_text, const std::string& fallback_name) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_error("germ document must be a JSON object");
  MultiGerm g;
  g.name = fallback_name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) parse_error("\"name\" must be a string");
    g.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("branches") || !doc["branches"].is_array()) parse_error("missing \"branches\" array");
  for (const auto& jb : doc["branches"]) {
    if (!jb.is_object() || !jb.contains("point") || !jb["point"].is_string()) {
      parse_error("each branch needs a string \"point\"");
    }
    if (!jb.contains("components") || !jb["components"].is_array() || jb["components"].size() != 3) {
      parse_error("each branch needs exactly three \"components\"");
    }
    BranchGerm b;
    b.point = jb["point"].get<std::string>();
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& jc = jb["components"][i];
      if (!jc.is_string()) parse_error("components must be polynomial strings");
      b.components[i] = parse_poly(jc.get<std::string>(), vars::source);
    }
    g.branches.push_back(std::move(b));
  }
  validate(g);
  return g;
}

std::string to_json(const MultiGerm& g) {
  json doc;
  doc["name"] = g.name;
  doc["branches"] = json::array();
  for (const auto& b : g.branches) {
    json jb;
    jb["point"] = b.point;
    jb["components"] = json::array();
    for (const auto& f : b.components) jb["components"].push_back(f.to_string());
    doc["branches"].push_back(std::move(jb));
  }
  return doc.dump(2) + "\n";
}

namespace {

Rational draw(std::mt19937_64& rng, int bound, bool nonzero) {
  while (true) {
    const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    const long den = static_cast<long>(rng() % static_cast<std::uint64_t>(bound)) + 1;
    if (nonzero && num == 0) continue;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
}

Rational det3(const std::array<Rational, 9>& t) {
  return t[0] * (t[4] * t[8] - t[5] * t[7]) - t[1] * (t[3] * t[8] - t[5] * t[6]) + t[2] * (t[3] * t[7] - t[4] * t[6]);
}

}  // namespace

LinearChange random_linear_change(const MultiGerm& g, std::mt19937_64& rng, int bound) {
  const bool has_corank_one =
      std::any_of(g.branches.begin(), g.branches.end(), [](const BranchGerm& b) { return corank(b) == 1; });
  LinearChange change;
  while (true) {
    for (auto& t : change.target) t = draw(rng, bound, false);
    if (has_corank_one) {
      change.target[0] = draw(rng, bound, true);
      change.target[1] = change.target[2] = change.target[3] = change.target[6] = 0;
    }
    if (det3(change.target) != 0) break;
  }
  for (const auto& b : g.branches) {
    LinearChange::Source s;
    if (corank(b) == 1) {
      // x must map to x after the target scaling of X.
      s.a = 1 / change.target[0];
      s.b = 0;
      s.c = draw(rng, bound, false);
      s.d = draw(rng, bound, true);
    } else {
      do {
        s.a = draw(rng, bound, false);
        s.b = draw(rng, bound, false);
        s.c = draw(rng, bound, false);
        s.d = draw(rng, bound, false);
      } while (s.a * s.d - s.b * s.c == 0);
    }
    change.sources.push_back(s);
  }
  return change;
}

MultiGerm apply(const LinearChange& change, const MultiGerm& g) {
  if (change.sources.size() != g.r()) throw Error(ErrorKind::Structural, "linear change does not match branch count");
  MultiGerm out;
  out.name = g.name;
  const Poly x = Poly::variable(vars::source, Var::x);
  const Poly y = Poly::variable(vars::source, Var::y);
  for (std::size_t k = 0; k < g.r(); ++k) {
    const auto& s = change.sources[k];
    const std::map<Var, Poly> phi{{Var::x, s.a * x + s.b * y}, {Var::y, s.c * x + s.d * y}};
    std::array<Poly, 3> pulled;
    for (std::size_t j = 0; j < 3; ++j) pulled[j] = substitute(g.branches[k].components[j], phi, vars::source);
    BranchGerm b{g.branches[k].point, {}};
    for (std::size_t i = 0; i < 3; ++i) {
      Poly acc(vars::source);
      for (std::size_t j = 0; j < 3; ++j) acc += change.target[i * 3 + j] * pulled[j];
      b.components[i] = std::move(acc);
    }
    out.branches.push_back(std::move(b));
  }
  return out;
}

}  // namespace germcalc
