#include "doctest.h"

#include <algorithm>
#include <random>

#include "disclocus/hilbert.hpp"
#include "disclocus/parse.hpp"
#include "disclocus/solve.hpp"

using namespace disc;

namespace {

Polynomial<Rational> qp(const RingPtr& r, const std::string& s) {
  return parse_polynomial<Rational>(r, s);
}

template <class K>
Ideal<K> ideal_of(const RingPtr& r, const std::vector<std::string>& gens) {
  Ideal<K> I(r);
  for (auto& s : gens) I.gens.push_back(parse_polynomial<K>(r, s));
  return I;
}

}  // namespace

TEST_CASE("normal form") {
  auto r = make_ring({"x", "y"});
  auto gbx = buchberger(ideal_of<Rational>(r, {"x"}), MonomialOrder::lex());
  CHECK(normal_form(qp(r, "x^2"), gbx).is_zero_poly());
  for (auto& g : gbx.elems) CHECK(normal_form(g, gbx).is_zero_poly());
  auto gb2 = buchberger(ideal_of<Rational>(r, {"x - y"}), MonomialOrder::lex());
  CHECK(normal_form(qp(r, "x^2 + y"), gb2) == qp(r, "y^2 + y"));
}

TEST_CASE("buchberger small oracles") {
  auto r = make_ring({"t", "x", "y"});
  auto gb = buchberger(ideal_of<Rational>(r, {"x - t", "y - t^2"}), MonomialOrder::lex());
  bool has_parabola = false;
  auto target = qp(r, "y - x^2").reorder(MonomialOrder::lex());
  auto target2 = qp(r, "x^2 - y").reorder(MonomialOrder::lex());
  for (auto& g : gb.elems)
    if (g == target || g == target2) has_parabola = true;
  CHECK(has_parabola);

  auto r2 = make_ring({"x", "y"});
  auto gb2 = buchberger(ideal_of<Rational>(r2, {"x^2 + y^2 - 1", "x - y"}),
                        MonomialOrder::lex());
  REQUIRE(gb2.elems.size() == 2);
  CHECK(monic(gb2.elems[0]) == monic(qp(r2, "2y^2 - 1").reorder(MonomialOrder::lex())));
  CHECK(monic(gb2.elems[1]) == monic(qp(r2, "x - y").reorder(MonomialOrder::lex())));
}

TEST_CASE("reduced basis is independent of generator presentation") {
  auto r = make_ring({"x", "y", "z"});
  auto I = ideal_of<Rational>(r, {"x^2 + y*z - 1", "x*y - z^2", "x + y + z - 1"});
  auto base = buchberger(I, MonomialOrder::grevlex());
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    Ideal<Rational> J(r);
    J.gens = I.gens;
    std::shuffle(J.gens.begin(), J.gens.end(), rng);
    for (auto& g : J.gens) {
      int c = std::uniform_int_distribution<int>(1, 9)(rng);
      if (std::uniform_int_distribution<int>(0, 1)(rng)) c = -c;
      g = g.scaled(Rational(c));
    }
    auto gb = buchberger(J, MonomialOrder::grevlex());
    REQUIRE(gb.elems.size() == base.elems.size());
    for (std::size_t i = 0; i < gb.elems.size(); ++i)
      CHECK(monic(gb.elems[i]) == monic(base.elems[i]));
  }
}

TEST_CASE("eliminate") {
  auto r = make_ring({"t", "x", "y"});
  auto E = eliminate(ideal_of<Rational>(r, {"x - t", "y - t^2"}), 1);
  REQUIRE(E.gens.size() == 1);
  CHECK(monic(E.gens[0]) == monic(qp(r, "x^2 - y")));

  auto r2 = make_ring({"l", "m", "x", "y", "z"});
  auto E2 = eliminate(ideal_of<Rational>(r2, {"x - l*m", "y - l", "z - m"}), 2);
  REQUIRE(E2.gens.size() == 1);
  CHECK(monic(E2.gens[0]) == monic(qp(r2, "y*z - x")));

  // eliminate(I, k) is contained in I
  auto I = ideal_of<Rational>(r2, {"x*l - y*m", "l^2 - z", "m^2 - x + y"});
  auto gb = buchberger(I, MonomialOrder::grevlex());
  for (auto& g : eliminate(I, 2).gens) CHECK(normal_form(g, gb).is_zero_poly());
}

TEST_CASE("saturate") {
  auto r = make_ring({"x", "y", "z"});
  auto S = saturate(ideal_of<Rational>(r, {"x*y", "x*z"}), qp(r, "x"));
  auto gb = buchberger(S, MonomialOrder::grevlex());
  auto expect = buchberger(ideal_of<Rational>(r, {"y", "z"}), MonomialOrder::grevlex());
  REQUIRE(gb.elems.size() == expect.elems.size());
  for (std::size_t i = 0; i < gb.elems.size(); ++i)
    CHECK(gb.elems[i] == expect.elems[i]);

  auto I = ideal_of<Rational>(r, {"x^2 - y*z", "x*y - z^2"});
  auto S1 = saturate(I, qp(r, "1"));
  auto gba = buchberger(S1, MonomialOrder::grevlex());
  auto gbb = buchberger(I, MonomialOrder::grevlex());
  REQUIRE(gba.elems.size() == gbb.elems.size());
  for (std::size_t i = 0; i < gba.elems.size(); ++i) CHECK(gba.elems[i] == gbb.elems[i]);

  auto U = saturate(ideal_of<Rational>(r, {"x^2"}), qp(r, "x"));
  CHECK(is_unit_ideal(buchberger(U, MonomialOrder::grevlex())));
}

TEST_CASE("saturate_irrelevant") {
  auto r = make_ring({"x0", "x1", "l"});
  auto S = saturate_irrelevant(ideal_of<Rational>(r, {"x0*l", "x1*l"}), {0, 1});
  auto gb = buchberger(S, MonomialOrder::grevlex());
  REQUIRE(gb.elems.size() == 1);
  CHECK(monic(gb.elems[0]) == qp(r, "l"));

  auto S2 = saturate_irrelevant(ideal_of<Rational>(r, {"x0"}), {0, 1});
  auto gb2 = buchberger(S2, MonomialOrder::grevlex());
  REQUIRE(gb2.elems.size() == 1);
  CHECK(monic(gb2.elems[0]) == qp(r, "x0"));
}

TEST_CASE("saturation laws on random instances") {
  auto r = make_ring({"x", "y"});
  std::mt19937_64 rng(29);
  auto rnd = [&]() {
    Polynomial<Rational> f(r);
    for (int t = 0; t < 3; ++t) {
      Monomial m(2);
      m.e[0] = std::uniform_int_distribution<int>(0, 2)(rng);
      m.e[1] = std::uniform_int_distribution<int>(0, 2)(rng);
      f += Polynomial<Rational>::monomial(r, m,
          Rational(std::uniform_int_distribution<int>(-3, 3)(rng)));
    }
    return f;
  };
  for (int trial = 0; trial < 10; ++trial) {
    Ideal<Rational> I(r, {rnd(), rnd()});
    if (is_zero_ideal(I)) continue;
    auto f = rnd();
    if (f.is_zero_poly()) continue;
    auto S = saturate(I, f);
    auto gbS = buchberger(S, MonomialOrder::grevlex());
    for (auto& g : I.gens) CHECK(normal_form(g, gbS).is_zero_poly());
    // f*g in I implies g in I:f^inf
    auto g = rnd();
    Ideal<Rational> J = I;
    J.gens.push_back(f * g);
    auto SJ = saturate(J, f);
    auto gbSJ = buchberger(SJ, MonomialOrder::grevlex());
    CHECK(normal_form(g, gbSJ).is_zero_poly());
  }
}

TEST_CASE("dimension and degree") {
  auto r4 = make_ring({"x0", "x1", "x2", "x3"});
  auto dd = dimension_degree(ideal_of<Rational>(r4, {"x0"}));
  CHECK(dd.dim == 3);
  CHECK(dd.deg == 1);

  // twisted cubic: 2-minors of [[x0,x1,x2],[x1,x2,x3]]
  auto tc = ideal_of<Rational>(r4, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
  auto dd2 = dimension_degree(tc);
  CHECK(dd2.dim == 2);  // affine cone over a curve
  CHECK(dd2.deg == 3);

  auto unit = dimension_degree(ideal_of<Rational>(r4, {"1"}));
  CHECK(unit.dim == -1);

  auto zero = dimension_degree(Ideal<Rational>(r4, {Polynomial<Rational>::zero(r4)}));
  CHECK(zero.dim == 4);
  CHECK(zero.deg == 1);
}

TEST_CASE("quotient colength") {
  auto r = make_ring({"x", "y"});
  CHECK(quotient_colength(ideal_of<Rational>(r, {"x", "y"})) == 1);
  CHECK(quotient_colength(ideal_of<Rational>(r, {"x^2", "y^2"})) == 4);
  CHECK(quotient_colength(ideal_of<Rational>(r, {"2x", "3y^2"})) == 2);
  CHECK(quotient_colength(ideal_of<Rational>(r, {"x^2"})) == -1);
  // monotone and stabilizing for a zero-dimensional ideal at the origin
  auto J = ideal_of<Rational>(r, {"x^2 - y^3", "x*y"});
  long long prev = -2;
  for (int N = 2; N <= 8; ++N) {
    Ideal<Rational> JN = J;
    for (int a = 0; a <= N; ++a) {
      Monomial m(2);
      m.e[0] = a; m.e[1] = N - a;
      JN.gens.push_back(Polynomial<Rational>::monomial(r, m, Rational(1)));
    }
    long long c = quotient_colength(JN);
    if (prev >= 0) CHECK(c >= prev);
    prev = c;
  }
  CHECK(prev == quotient_colength(J));
}

TEST_CASE("membership and radical membership") {
  auto r = make_ring({"x", "y"});
  auto gbx = buchberger(ideal_of<Rational>(r, {"x"}), MonomialOrder::grevlex());
  CHECK(member(qp(r, "x^2"), gbx));
  auto I2 = ideal_of<Rational>(r, {"x^2"});
  auto gb2 = buchberger(I2, MonomialOrder::grevlex());
  CHECK(!member(qp(r, "x"), gb2));
  CHECK(radical_member(qp(r, "x"), I2));
  CHECK(!radical_member(qp(r, "y"), I2));
}

TEST_CASE("intersection of ideals") {
  auto r = make_ring({"x", "y"});
  auto I = intersect(ideal_of<Rational>(r, {"x"}), ideal_of<Rational>(r, {"y"}));
  auto gb = buchberger(I, MonomialOrder::grevlex());
  REQUIRE(gb.elems.size() == 1);
  CHECK(monic(gb.elems[0]) == qp(r, "x*y"));
}

TEST_CASE("GF(p) and Q agree on dimension/degree of the twisted cubic") {
  auto rq = make_ring({"x0", "x1", "x2", "x3"});
  auto rp = make_ring({"x0", "x1", "x2", "x3"}, FieldKind::GF, 32003);
  std::vector<std::string> gens = {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"};
  auto a = dimension_degree(ideal_of<Rational>(rq, gens));
  auto b = dimension_degree(ideal_of<Fp>(rp, gens));
  CHECK(a.dim == b.dim);
  CHECK(a.deg == b.deg);
}

TEST_CASE("solver: univariate and zero-dimensional systems") {
  auto r = make_ring({"x", "y"});
  auto f = qp(r, "x^3 - 2x^2 - x + 2");  // roots 1, -1, 2
  auto rl = univariate_roots_of(f, 0);
  CHECK(rl.unresolved_degree == 0);
  REQUIRE(rl.roots.size() == 3);

  auto sys = ideal_of<Rational>(r, {"x^2 - 1", "y - x"});
  auto sol = affine_solve(sys, {0, 1});
  CHECK(sol.complete);
  REQUIRE(sol.points.size() == 2);

  auto rp = make_ring({"x"}, FieldKind::GF, 101);
  auto fp = parse_polynomial<Fp>(rp, "x^2 + 1");  // roots 10, 91 mod 101
  auto rlp = univariate_roots_of(fp, 0);
  CHECK(rlp.unresolved_degree == 0);
  REQUIRE(rlp.roots.size() == 2);
}

TEST_CASE("projective points of a finite scheme") {
  auto r = make_ring({"x", "y", "z"});
  // three coordinate points
  auto I = ideal_of<Rational>(r, {"x*y", "x*z", "y*z"});
  auto pts = projective_points(I, {0, 1, 2});
  CHECK(pts.complete);
  CHECK(pts.points.size() == 3);
}
