#include <random>

#include "doctest.h"
#include "germcalc/error.hpp"
#include "germcalc/local_algebra.hpp"
#include "oracles.hpp"

using namespace germcalc;

namespace {

Poly P(const std::string& s, VarSet vs = vars::source) { return parse_poly(s, vs); }

std::size_t local_colength(const std::vector<Poly>& gens, VarSet vs, bool reversed = false) {
  const Colength c = colength_with_retry(Ideal(vs, gens), MonomialOrder::local_on(vs, reversed), 8, 64);
  REQUIRE(c.value);
  return *c.value;
}

}  // namespace

TEST_CASE("local ordering ranks 1 above every monomial") {
  const auto order = MonomialOrder::local_on(vars::source);
  CHECK(order.greater(Monomial{}, Monomial::of(Var::x)));
  CHECK(order.greater(Monomial::of(Var::x), Monomial::of(Var::y, 2)));
  const auto global = MonomialOrder::global({Var::x, Var::y});
  CHECK(global.greater(Monomial::of(Var::y, 2), Monomial::of(Var::x)));
}

TEST_CASE("elimination ordering puts eliminated variables first") {
  const auto order = MonomialOrder::elimination({Var::y1}, {Var::x, Var::y});
  CHECK(order.greater(Monomial::of(Var::y1), Monomial{}));
  CHECK(order.greater(Monomial::of(Var::y1), Monomial::of(Var::x)));
}

TEST_CASE("standard basis examples") {
  const auto local = MonomialOrder::local_on(vars::source);
  const StandardBasis a = std_basis(Ideal(vars::source, {P("x"), P("y")}), local, 4);
  CHECK(a.complete);
  CHECK(a.leading.size() == 2);

  const StandardBasis b = std_basis(Ideal(vars::double_source, {P("y + y'", vars::double_source), P("x", vars::double_source)}),
                                    MonomialOrder::local_on(vars::double_source), 4);
  CHECK(b.complete);
  CHECK(b.basis.size() == 2);

  const StandardBasis c = std_basis(Ideal(vars::source, {P("2*y"), P("3*y^2 + x^3")}), local, 6);
  CHECK(c.complete);
  std::vector<Monomial> lead = c.leading;
  std::sort(lead.begin(), lead.end());
  std::vector<Monomial> expected{Monomial::of(Var::y), Monomial::of(Var::x, 3)};
  std::sort(expected.begin(), expected.end());
  CHECK(lead == expected);
}

TEST_CASE("colength examples") {
  CHECK(local_colength({P("x"), P("y")}, vars::source) == 1);
  CHECK(local_colength({P("x^2"), P("y^3")}, vars::source) == 6);
  CHECK(local_colength({P("y"), P("x^3")}, vars::source) == 3);
  const Colength inf = colength(Ideal(vars::source, {P("y^2")}), MonomialOrder::local_on(vars::source), 6);
  CHECK(inf.infinite());
}

TEST_CASE("units of the local ring are invertible") {
  CHECK(local_colength({P("1 + x"), P("y^5")}, vars::source) == 0);
  CHECK(local_colength({P("y*(1 + x)"), P("x^2*(1 - y)")}, vars::source) == 2);
}

TEST_CASE("small degree bounds are undecided or exact") {
  const Ideal hard(vars::source, {P("y^3 - x^5"), P("x*y^2 + x^6")});
  const auto expected = oracle::linear_algebra_colength(hard.generators(), vars::source);
  REQUIRE(expected);
  for (int bound = 1; bound <= 12; ++bound) {
    try {
      const Colength c = colength(hard, MonomialOrder::local_on(vars::source), bound);
      CHECK(c.value == expected);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Undecided);
    }
  }
}

TEST_CASE("colength matches the linear algebra oracle") {
  const std::vector<std::vector<std::string>> ideals{
      {"y^2 - x^3", "x^2*y"},
      {"x*y + y^3", "x^2 - y^5"},
      {"y + x^2 + x*y", "x^5"},
      {"2*y + x^4", "4*x^3 + y^2"},
      {"x^3 + y^3", "x*y*(x - y)"},
  };
  for (const auto& gens : ideals) {
    std::vector<Poly> ps;
    for (const auto& s : gens) ps.push_back(P(s));
    const auto expected = oracle::linear_algebra_colength(ps, vars::source);
    REQUIRE(expected);
    CHECK(local_colength(ps, vars::source) == *expected);
    CHECK(local_colength(ps, vars::source, true) == *expected);
  }
  const VarSet three{Var::X, Var::Y, Var::Z};
  const std::vector<Poly> f{P("X*Y", three), P("Y*Z", three), P("X*Z", three), P("X^2 - Y^2 + Z^3", three),
                            P("Y^3", three)};
  const auto expected = oracle::linear_algebra_colength(f, three);
  REQUIRE(expected);
  CHECK(local_colength(f, three) == *expected);
  CHECK(local_colength(f, three, true) == *expected);
}

TEST_CASE("adding generators never raises the colength") {
  const std::vector<Poly> base{P("y^3 - x^2"), P("x*y^2")};
  const std::size_t c0 = local_colength(base, vars::source);
  auto more = base;
  more.push_back(P("x^2*y"));
  CHECK(local_colength(more, vars::source) <= c0);
  more.push_back(Poly(vars::source));
  CHECK(local_colength(more, vars::source) == local_colength({base[0], base[1], P("x^2*y")}, vars::source));
}

TEST_CASE("staircase count matches brute force enumeration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Monomial> leading{Monomial::of(Var::x, 1 + rng() % 6), Monomial::of(Var::y, 1 + rng() % 6),
                                  Monomial::of(Var::Z, 1 + rng() % 4)};
    for (int extra = 0; extra < 3; ++extra) {
      leading.push_back(Monomial::of(Var::x, rng() % 4) * Monomial::of(Var::y, rng() % 4) *
                        Monomial::of(Var::Z, rng() % 3));
    }
    const VarSet vs{Var::x, Var::y, Var::Z};
    const auto fast = count_standard_monomials(leading, vs);
    REQUIRE(fast);
    CHECK(*fast == oracle::brute_force_staircase(leading, vs, 7));
  }
  CHECK_FALSE(count_standard_monomials({Monomial::of(Var::x, 2)}, vars::source));
}

TEST_CASE("normal form decides membership") {
  const auto sb = std_basis(Ideal(vars::source, {P("y^2 - x^3"), P("x*y")}), MonomialOrder::local_on(vars::source), 10);
  CHECK(contains(sb, P("x^4")));
  CHECK(contains(sb, P("y^3")));
  CHECK_FALSE(contains(sb, P("x^2")));
  CHECK(contains(sb, P("(1 + x)*(y^2 - x^3)")));
}

TEST_CASE("Milnor numbers of plane curves") {
  CHECK(milnor_number_plane_curve(P("x")) == 0);
  CHECK(milnor_number_plane_curve(P("y^2 + x^4")) == 3);
  CHECK(milnor_number_plane_curve(P("x*y")) == 1);
  CHECK(milnor_number_plane_curve(P("5*(y^2 + x^4)")) == 3);
  CHECK(milnor_number_plane_curve(P("-1/3*x*y")) == 1);
  for (const char* s : {"y^3 - x^7", "x*y*(x + y)*(x - 2*y)", "y^2 - x^5 + x^3*y", "(y - x^2)*(y + x^3)"}) {
    const Poly g = P(s);
    const auto expected = oracle::milnor_number(g);
    REQUIRE(expected);
    CHECK_MESSAGE(milnor_number_plane_curve(g) == *expected, s);
    CHECK(milnor_number_plane_curve(g, true) == *expected);
  }
  CHECK_THROWS_AS(milnor_number_plane_curve(P("y^2")), Error);
  CHECK_THROWS_AS(milnor_number_plane_curve(P("1 + x")), Error);
}

TEST_CASE("minors") {
  const std::vector<Poly> cap{P("x"), P("y^2"), P("x*y")};
  const Ideal j = minors(jacobian(cap, {Var::x, Var::y}), 2);
  CHECK(local_colength(j.generators(), vars::source) == 1);
  CHECK(j.generators().size() == 3);

  PolyMatrix m(2, 2, vars::target);
  m(0, 0) = P("Z", vars::target);
  m(0, 1) = P("-X*Y", vars::target);
  m(1, 0) = P("-X", vars::target);
  m(1, 1) = P("Z", vars::target);
  CHECK(minors(m, 1).generators().size() == 4);
  CHECK(minors(m, 0).has_constant_generator());
  CHECK(minors(m, 2).generators().front() == P("Z^2 - X^2*Y", vars::target));
}

TEST_CASE("serial and parallel minors agree") {
  PolyMatrix m(4, 4, vars::source);
  std::mt19937_64 rng(5);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      m(i, k) = Poly::term(vars::source, Monomial::of(Var::x, rng() % 3) * Monomial::of(Var::y, rng() % 3),
                           Rational(static_cast<long>(rng() % 7) - 3)) +
                Poly::constant(vars::source, Rational(static_cast<long>(rng() % 5)));
    }
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    CHECK(minors(m, k, Execution::serial).generators() == minors(m, k, Execution::parallel).generators());
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(9);
  for (std::size_t n = 1; n <= 4; ++n) {
    PolyMatrix m(n, n, vars::target);
    std::vector<std::vector<Poly>> dense(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        m(i, k) = Poly::term(vars::target, Monomial::of(Var::X, rng() % 2) * Monomial::of(Var::Z, rng() % 2),
                             Rational(static_cast<long>(rng() % 5) - 2));
        dense[i][k] = m(i, k);
      }
    }
    CHECK(determinant(m) == oracle::cofactor_determinant(dense, vars::target));
  }
}

TEST_CASE("elimination examples") {
  const VarSet ds = vars::double_source;
  const Elimination a = eliminate(Ideal(ds, {P("y + y'", ds), P("x", ds)}), VarSet{Var::y1}, 6);
  REQUIRE(a.ideal.generators().size() == 1);
  CHECK(oracle::proportional(a.ideal.generators().front(), P("x")));

  const Elimination b = eliminate(Ideal(ds, {P("y + y'", ds), P("y^2 + y*y' + y'^2 + x^3", ds)}), VarSet{Var::y1}, 6);
  Poly common(vars::source);
  for (const auto& g : b.ideal.generators()) common = gcd(common, g);
  CHECK(oracle::proportional(common, P("y^2 + x^3")));

  const Ideal i(vars::source, {P("x^2"), P("y")});
  const Elimination c = eliminate(i, VarSet{}, 6);
  CHECK(local_colength(c.ideal.generators(), vars::source) == 2);
}
