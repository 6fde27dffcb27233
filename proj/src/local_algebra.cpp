#include "germcalc/local_algebra.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <functional>

#include "germcalc/error.hpp"

namespace germcalc {

// ---------------------------------------------------------------------------
// Orderings and ideals

MonomialOrder::MonomialOrder(Kind kind, std::vector<Var> eliminated, std::vector<Var> retained)
    : kind_(kind), eliminated_(std::move(eliminated)), retained_(std::move(retained)) {
  for (Var v : eliminated_) vars_ = vars_ | VarSet{v};
  for (Var v : retained_) {
    if (vars_.contains(v)) throw Error(ErrorKind::Structural, "variable repeated in monomial ordering");
    vars_ = vars_ | VarSet{v};
  }
}

MonomialOrder MonomialOrder::local(std::vector<Var> sequence) { return {Kind::local, {}, std::move(sequence)}; }

MonomialOrder MonomialOrder::global(std::vector<Var> sequence) { return {Kind::global, {}, std::move(sequence)}; }

MonomialOrder MonomialOrder::elimination(std::vector<Var> eliminated, std::vector<Var> retained) {
  return {Kind::elimination, std::move(eliminated), std::move(retained)};
}

MonomialOrder MonomialOrder::local_on(VarSet vars, bool reversed) {
  auto seq = vars.to_vector();
  if (reversed) std::reverse(seq.begin(), seq.end());
  return local(std::move(seq));
}

namespace {

unsigned block_degree(const Monomial& m, const std::vector<Var>& block) {
  unsigned d = 0;
  for (Var v : block) d += m[v];
  return d;
}

std::strong_ordering lex(const Monomial& a, const Monomial& b, const std::vector<Var>& block) {
  for (Var v : block) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering local_block(const Monomial& a, const Monomial& b, const std::vector<Var>& block) {
  const unsigned da = block_degree(a, block);
  const unsigned db = block_degree(b, block);
  if (da != db) return db <=> da;
  return lex(a, b, block);
}

std::strong_ordering global_block(const Monomial& a, const Monomial& b, const std::vector<Var>& block) {
  const unsigned da = block_degree(a, block);
  const unsigned db = block_degree(b, block);
  if (da != db) return da <=> db;
  return lex(a, b, block);
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  switch (kind_) {
    case Kind::local: return local_block(a, b, retained_);
    case Kind::global: return global_block(a, b, retained_);
    case Kind::elimination: {
      auto c = global_block(a, b, eliminated_);
      if (c != 0) return c;
      return local_block(a, b, retained_);
    }
  }
  return std::strong_ordering::equal;
}

Ideal::Ideal(VarSet ambient, std::vector<Poly> generators) : ambient_(ambient) {
  for (auto& g : generators) {
    if (g.vars() != ambient) throw Error(ErrorKind::Structural, "ideal generator outside ambient ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(VarSet ambient) { return Ideal(ambient, {Poly::constant(ambient, 1)}); }

bool Ideal::has_constant_generator() const noexcept {
  return std::any_of(generators_.begin(), generators_.end(), [](const Poly& g) { return g.is_constant(); });
}

int Ideal::max_degree() const noexcept {
  int d = 0;
  for (const auto& g : generators_) d = std::max(d, g.total_degree());
  return d;
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::Structural, "sum of ideals in different rings");
  std::vector<Poly> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(ambient_, std::move(gens));
}

bool StandardBasis::is_unit() const noexcept {
  return std::any_of(leading.begin(), leading.end(), [](const Monomial& m) { return m.is_one(); });
}

// ---------------------------------------------------------------------------
// Mora standard basis engine

namespace {

struct Term {
  Monomial m;
  Rational c;
};

// Polynomial with its terms sorted in descending order; front() is the leading term.
struct Element {
  std::vector<Term> terms;
  int deg = 0;

  const Monomial& lm() const { return terms.front().m; }
  int ecart() const { return deg - static_cast<int>(terms.front().m.degree()); }
  bool zero() const { return terms.empty(); }
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned lcm_degree;
};

class Engine {
 public:
  Engine(const MonomialOrder& order, VarSet ambient) : order_(order), ambient_(ambient) {}

  std::optional<int> corner;

  Element make(const Poly& p) const {
    Element e;
    e.terms.reserve(p.size());
    for (const auto& [m, c] : p.terms()) e.terms.push_back({m, c});
    std::sort(e.terms.begin(), e.terms.end(),
              [this](const Term& a, const Term& b) { return order_.greater(a.m, b.m); });
    truncate(e);
    update_degree(e);
    return e;
  }

  Poly to_poly(const Element& e) const {
    Poly p(ambient_);
    for (const auto& t : e.terms) p.add_term(t.m, t.c);
    return p;
  }

  void make_monic(Element& e) const {
    if (e.zero()) return;
    const Rational inv = 1 / e.terms.front().c;
    if (inv == 1) return;
    for (auto& t : e.terms) t.c *= inv;
  }

  // Drops tail terms lying in m^corner; the leading term is always kept.
  void truncate(Element& e) const {
    if (!corner || e.terms.size() <= 1) return;
    const unsigned n = static_cast<unsigned>(*corner);
    auto keep_end = std::remove_if(e.terms.begin() + 1, e.terms.end(), [n](const Term& t) { return t.m.degree() >= n; });
    e.terms.erase(keep_end, e.terms.end());
  }

  // Drops every term in m^corner, including the leading one.
  void truncate_all(Element& e) const {
    if (!corner) return;
    const unsigned n = static_cast<unsigned>(*corner);
    auto keep_end = std::remove_if(e.terms.begin(), e.terms.end(), [n](const Term& t) { return t.m.degree() >= n; });
    e.terms.erase(keep_end, e.terms.end());
  }

  static void update_degree(Element& e) {
    int d = 0;
    for (const auto& t : e.terms) d = std::max(d, static_cast<int>(t.m.degree()));
    e.deg = d;
  }

  // a * ta * A[1..] - b * tb * B[1..]; leading terms are assumed to cancel.
  Element combine(const Element& A, const Rational& ca, const Monomial& ta, const Element& B, const Rational& cb,
                  const Monomial& tb) const {
    Element out;
    out.terms.reserve(A.terms.size() + B.terms.size());
    std::size_t i = 1;
    std::size_t j = 1;
    const unsigned limit = corner ? static_cast<unsigned>(*corner) : UINT_MAX;
    auto push = [&](Monomial m, Rational c) {
      if (c != 0 && m.degree() < limit) out.terms.push_back({m, std::move(c)});
    };
    while (i < A.terms.size() || j < B.terms.size()) {
      if (j >= B.terms.size()) {
        push(A.terms[i].m * ta, A.terms[i].c * ca);
        ++i;
        continue;
      }
      if (i >= A.terms.size()) {
        push(B.terms[j].m * tb, -(B.terms[j].c * cb));
        ++j;
        continue;
      }
      const Monomial ma = A.terms[i].m * ta;
      const Monomial mb = B.terms[j].m * tb;
      const auto cmp = order_.compare(ma, mb);
      if (cmp > 0) {
        push(ma, A.terms[i].c * ca);
        ++i;
      } else if (cmp < 0) {
        push(mb, -(B.terms[j].c * cb));
        ++j;
      } else {
        push(ma, A.terms[i].c * ca - B.terms[j].c * cb);
        ++i;
        ++j;
      }
    }
    update_degree(out);
    return out;
  }

  Element reduce(const Element& h, const Element& g) const {
    const Monomial t = h.lm() / g.lm();
    const Rational c = h.terms.front().c / g.terms.front().c;
    return combine(h, 1, Monomial{}, g, c, t);
  }

  Element spoly(const Element& f, const Element& g) const {
    const Monomial l = Monomial::lcm(f.lm(), g.lm());
    return combine(f, 1 / f.terms.front().c, l / f.lm(), g, 1 / g.terms.front().c, l / g.lm());
  }

  // Mora's normal form with ecart-driven reducer selection.
  Element normal_form(Element h, const std::vector<Element>& basis) const {
    std::deque<Element> extra;
    while (!h.zero()) {
      const Element* best = nullptr;
      int best_ecart = INT_MAX;
      auto consider = [&](const Element& g) {
        if (g.zero() || best_ecart == 0) return;
        if (!g.lm().divides(h.lm())) return;
        const int e = g.ecart();
        if (e < best_ecart) {
          best = &g;
          best_ecart = e;
        }
      };
      for (const auto& g : basis) consider(g);
      for (const auto& g : extra) consider(g);
      if (best == nullptr) break;
      if (best_ecart > h.ecart()) extra.push_back(h);
      h = reduce(h, *best);
    }
    return h;
  }

  int compute_corner(const std::vector<Element>& basis) const {
    std::vector<unsigned> pure(kNumVars, UINT_MAX);
    for (const auto& g : basis) {
      const Monomial& m = g.lm();
      const VarSet s = m.support();
      if (s.size() == 1) {
        const Var v = s.to_vector().front();
        pure[index(v)] = std::min(pure[index(v)], m[v]);
      }
    }
    int n = 1;
    for (Var v : ambient_.to_vector()) {
      if (pure[index(v)] == UINT_MAX) return -1;
      n += static_cast<int>(pure[index(v)]) - 1;
    }
    return n;
  }

  const MonomialOrder& order() const { return order_; }

 private:
  const MonomialOrder& order_;
  VarSet ambient_;
};

std::vector<Monomial> minimal_monomials(std::vector<Monomial> ms) {
  std::vector<Monomial> out;
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  for (const auto& m : ms) {
    const bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(m); });
    if (!redundant) out.push_back(m);
  }
  return out;
}

}  // namespace

StandardBasis std_basis(const Ideal& ideal, const MonomialOrder& order, int degree_bound) {
  const VarSet ambient = ideal.ambient();
  if (order.vars() != ambient) {
    throw Error(ErrorKind::Structural, "monomial ordering variables " + order.vars().to_string() +
                                           " differ from ambient ring " + ambient.to_string());
  }
  degree_bound = std::max(degree_bound, ideal.max_degree());

  Engine engine(order, ambient);
  const bool local = order.kind() == MonomialOrder::Kind::local;
  std::vector<Element> basis;
  std::vector<Pair> pairs;
  bool truncated = false;
  bool unit = false;

  auto insert = [&](Element h) {
    engine.make_monic(h);
    if (h.lm().is_one()) {
      unit = true;
      return;
    }
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      const Monomial l = Monomial::lcm(basis[i].lm(), h.lm());
      pairs.push_back({i, k, l, l.degree()});
    }
    basis.push_back(std::move(h));
    if (local) {
      const int n = engine.compute_corner(basis);
      if (n > 0 && (!engine.corner || n < *engine.corner)) {
        engine.corner = n;
        for (auto& g : basis) {
          engine.truncate(g);
          Engine::update_degree(g);
        }
      }
    }
  };

  for (const auto& g : ideal.generators()) {
    Element h = engine.normal_form(engine.make(g), basis);
    if (!h.zero()) insert(std::move(h));
    if (unit) break;
  }

  while (!unit && !pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
      return a.j != b.j ? a.j < b.j : a.i < b.i;
    });
    const Pair p = *it;
    pairs.erase(it);
    if (engine.corner && static_cast<int>(p.lcm_degree) >= *engine.corner) continue;
    if (Monomial::coprime(basis[p.i].lm(), basis[p.j].lm())) continue;
    if (static_cast<int>(p.lcm_degree) > degree_bound) {
      truncated = true;
      continue;
    }
    Element s = engine.spoly(basis[p.i], basis[p.j]);
    engine.truncate_all(s);
    if (s.zero()) continue;
    Element h = engine.normal_form(std::move(s), basis);
    if (!h.zero()) insert(std::move(h));
  }

  StandardBasis sb{{}, order, {}, true, std::nullopt};
  if (unit) {
    sb.basis.push_back(Poly::constant(ambient, 1));
    sb.leading.push_back(Monomial{});
    return sb;
  }
  sb.complete = !truncated;
  sb.corner_degree = engine.corner;
  std::vector<Monomial> lms;
  for (const auto& g : basis) lms.push_back(g.lm());
  sb.leading = minimal_monomials(lms);
  // Keep one basis element per minimal leading monomial.
  for (const auto& m : sb.leading) {
    for (const auto& g : basis) {
      if (g.lm() == m) {
        sb.basis.push_back(engine.to_poly(g));
        break;
      }
    }
  }
  return sb;
}

Poly normal_form(const Poly& p, const StandardBasis& sb) {
  const VarSet ambient = sb.order.vars();
  if (p.vars() != ambient) throw Error(ErrorKind::Structural, "normal form outside the basis ring");
  Engine engine(sb.order, ambient);
  engine.corner = sb.corner_degree;
  std::vector<Element> basis;
  for (const auto& g : sb.basis) basis.push_back(engine.make(g));
  Element h = engine.make(p);
  engine.truncate_all(h);
  if (h.zero()) return Poly(ambient);
  return engine.to_poly(engine.normal_form(std::move(h), basis));
}

bool contains(const StandardBasis& sb, const Poly& p) { return normal_form(p, sb).is_zero(); }

std::optional<std::size_t> count_standard_monomials(const std::vector<Monomial>& leading, VarSet vars) {
  if (std::any_of(leading.begin(), leading.end(), [](const Monomial& m) { return m.is_one(); })) return 0;
  const std::vector<Var> vs = vars.to_vector();
  std::vector<unsigned> bound(kNumVars, UINT_MAX);
  for (const auto& m : leading) {
    const VarSet s = m.support();
    if (s.size() == 1) {
      const Var v = s.to_vector().front();
      bound[index(v)] = std::min(bound[index(v)], m[v]);
    }
  }
  for (Var v : vs) {
    if (bound[index(v)] == UINT_MAX) return std::nullopt;
  }
  auto divisible = [&](const Monomial& m) {
    return std::any_of(leading.begin(), leading.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::function<std::size_t(std::size_t, Monomial&)> walk = [&](std::size_t depth, Monomial& cur) -> std::size_t {
    if (depth == vs.size()) return 1;
    const Var v = vs[depth];
    std::size_t total = 0;
    for (unsigned e = 0; e < bound[index(v)]; ++e) {
      cur.exp[index(v)] = static_cast<std::uint16_t>(e);
      if (divisible(cur)) break;
      total += walk(depth + 1, cur);
    }
    cur.exp[index(v)] = 0;
    return total;
  };
  Monomial cur;
  return walk(0, cur);
}

Colength colength(const Ideal& ideal, const MonomialOrder& order, int degree_bound) {
  if (order.kind() != MonomialOrder::Kind::local) {
    throw Error(ErrorKind::Structural, "colength requires a local ordering");
  }
  const StandardBasis sb = std_basis(ideal, order, degree_bound);
  Colength out;
  out.degree_bound_used = std::max(degree_bound, ideal.max_degree());
  if (sb.is_unit()) {
    out.value = 0;
    return out;
  }
  if (!sb.complete) {
    throw Error(ErrorKind::Undecided,
                "standard basis truncated at degree bound " + std::to_string(out.degree_bound_used));
  }
  out.value = count_standard_monomials(sb.leading, ideal.ambient());
  return out;
}

Colength colength_with_retry(const Ideal& ideal, const MonomialOrder& order, int degree_bound, int max_degree_bound) {
  int bound = std::max(degree_bound, ideal.max_degree());
  while (true) {
    try {
      return colength(ideal, order, bound);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Undecided) throw;
      bound += 2;
      if (bound > max_degree_bound) {
        throw Error(ErrorKind::Undecided, "colength undecided up to degree bound " + std::to_string(max_degree_bound));
      }
    }
  }
}

std::size_t milnor_number_plane_curve(const Poly& g, bool reversed_order, int max_degree_bound) {
  const Poly curve = g.restrict_to(vars::source);
  if (curve.is_zero()) throw Error(ErrorKind::NotIsolated, "zero curve equation");
  if (curve.constant_term() != 0) {
    throw Error(ErrorKind::Structural, "curve does not pass through the origin: " + curve.to_string());
  }
  const Ideal jac(vars::source, {derivative(curve, Var::x), derivative(curve, Var::y)});
  const Colength c = colength_with_retry(jac, MonomialOrder::local_on(vars::source, reversed_order),
                                         std::max(4, curve.total_degree()), max_degree_bound);
  if (c.infinite()) throw Error(ErrorKind::NotIsolated, "non-isolated singularity: " + curve.to_string());
  return *c.value;
}

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

Ideal minors(const PolyMatrix& m, std::size_t k, Execution exec) {
  if (k == 0) return Ideal::unit(m.vars());
  if (k > std::min(m.rows(), m.cols())) throw Error(ErrorKind::Structural, "minor size exceeds matrix dimensions");
  const auto row_sets = combinations(m.rows(), k);
  const auto col_sets = combinations(m.cols(), k);
  const std::size_t total = row_sets.size() * col_sets.size();
  std::vector<Poly> dets(total, Poly(m.vars()));
  auto compute = [&](std::size_t t) {
    dets[t] = determinant(m.submatrix(row_sets[t / col_sets.size()], col_sets[t % col_sets.size()]));
  };
  if (exec == Execution::parallel) {
    const long n = static_cast<long>(total);
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < n; ++t) compute(static_cast<std::size_t>(t));
  } else {
    for (std::size_t t = 0; t < total; ++t) compute(t);
  }
  return Ideal(m.vars(), std::move(dets));
}

Elimination eliminate(const Ideal& ideal, VarSet drop, int degree_bound, int max_degree_bound) {
  if (!ideal.ambient().includes(drop)) throw Error(ErrorKind::Structural, "eliminated variables outside ambient ring");
  if (drop.empty()) return {ideal, degree_bound};
  const VarSet retained = ideal.ambient().without(drop);
  const MonomialOrder order = MonomialOrder::elimination(drop.to_vector(), retained.to_vector());
  int bound = std::max(degree_bound, ideal.max_degree());
  while (true) {
    const StandardBasis sb = std_basis(ideal, order, bound);
    if (sb.complete) {
      std::vector<Poly> kept;
      for (const auto& g : sb.basis) {
        if (g.support().without(retained).empty()) kept.push_back(g.restrict_to(retained));
      }
      return {Ideal(retained, std::move(kept)), bound};
    }
    bound += 2;
    if (bound > max_degree_bound) {
      throw Error(ErrorKind::Undecided, "elimination undecided up to degree bound " + std::to_string(max_degree_bound));
    }
  }
}

}  // namespace germcalc
