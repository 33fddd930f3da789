#include "doctest.h"

#include <random>

#include "disclocus/gcd.hpp"
#include "disclocus/parse.hpp"

using namespace disc;

namespace {

RingPtr qring3() { return make_ring({"x0", "x1", "x2"}); }
RingPtr qxy() { return make_ring({"x", "y"}); }

Polynomial<Rational> qp(const RingPtr& r, const std::string& s) {
  return parse_polynomial<Rational>(r, s);
}

Polynomial<Rational> random_poly(const RingPtr& r, std::mt19937_64& rng, int maxdeg = 3,
                                 int nterms = 4) {
  Polynomial<Rational> f(r);
  std::uniform_int_distribution<int> ed(0, maxdeg);
  std::uniform_int_distribution<int> cd(-5, 5);
  for (int t = 0; t < nterms; ++t) {
    Monomial m(r->nvars());
    for (std::size_t v = 0; v < r->nvars(); ++v) m.e[v] = ed(rng);
    f += Polynomial<Rational>::monomial(r, m, Rational(cd(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  auto r = qxy();
  CHECK(qp(r, "x+y") * qp(r, "x-y") == qp(r, "x^2-y^2"));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto f = random_poly(r, rng);
    CHECK((f * Polynomial<Rational>::zero(r)).is_zero_poly());
  }
}

TEST_CASE("squared ternary quadric has six terms with coefficients 1,1,1,2,2,2") {
  auto r = qring3();
  auto f = qp(r, "x0^2+x1^2+x2^2");
  auto g = f * f;
  REQUIRE(g.terms.size() == 6);
  int ones = 0, twos = 0;
  for (auto& t : g.terms) {
    if (t.second == 1) ++ones;
    if (t.second == 2) ++twos;
  }
  CHECK(ones == 3);
  CHECK(twos == 3);
}

TEST_CASE("differentiate") {
  auto r = qxy();
  CHECK(differentiate(qp(r, "x^3"), 0) == qp(r, "3x^2"));
  // degree-m Fermat-type term
  auto r3 = qring3();
  CHECK(differentiate(qp(r3, "5x0^4 + 2x1^4 + x2^4"), 0) == qp(r3, "20x0^3"));
}

TEST_CASE("Euler and Leibniz on random inputs") {
  auto r = qring3();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    auto f = random_poly(r, rng);
    auto g = random_poly(r, rng);
    auto fg = f * g;
    for (int v = 0; v < 3; ++v) {
      CHECK(differentiate(fg, v) == f * differentiate(g, v) + g * differentiate(f, v));
    }
  }
  // Euler on homogeneous inputs
  for (int i = 0; i < 20; ++i) {
    Polynomial<Rational> f(r);
    std::uniform_int_distribution<int> cd(-4, 4);
    for (int t = 0; t < 4; ++t) {
      Monomial m(3);
      m.e[0] = std::uniform_int_distribution<int>(0, 3)(rng);
      m.e[1] = std::uniform_int_distribution<int>(0, 3 - m.e[0])(rng);
      m.e[2] = 3 - m.e[0] - m.e[1];
      f += Polynomial<Rational>::monomial(r, m, Rational(cd(rng)));
    }
    REQUIRE(f.is_homogeneous());
    Polynomial<Rational> acc(r);
    for (int v = 0; v < 3; ++v)
      acc += Polynomial<Rational>::variable(r, v, Rational(1)) * differentiate(f, v);
    CHECK(acc == f.scaled(Rational(f.is_zero_poly() ? 0 : f.total_degree())));
  }
}

TEST_CASE("substitute") {
  auto src = make_ring({"y1", "y2"});
  auto dst = make_ring({"x1", "x2"});
  auto f = qp(src, "y1 + y2^2");
  std::vector<Polynomial<Rational>> vals = {qp(dst, "x1^3"), qp(dst, "x2")};
  CHECK(substitute(f, vals) == qp(dst, "x1^3 + x2^2"));

  auto r = qring3();
  auto g = qp(r, "x0*x2 - x1^2");
  std::vector<Polynomial<Rational>> dehom = {
      Polynomial<Rational>::constant(r, Rational(1)),
      Polynomial<Rational>::variable(r, 1, Rational(1)),
      Polynomial<Rational>::variable(r, 2, Rational(1))};
  CHECK(substitute(g, dehom) == qp(r, "x2 - x1^2"));
}

TEST_CASE("gcd") {
  auto r = make_ring({"x", "y", "z"});
  CHECK(gcd(qp(r, "x^2-y^2"), qp(r, "x-y")) == qp(r, "x-y"));
  auto f = qp(r, "3x^2-3y^2");
  CHECK(gcd(f, Polynomial<Rational>::zero(r)) == qp(r, "x^2-y^2"));
  auto g1 = qp(r, "x^2*z + 2x*y*z + y^2*z");   // (x+y)^2 z
  auto g2 = qp(r, "x*z^2 + y*z^2");            // (x+y) z^2
  CHECK(gcd(g1, g2) == qp(r, "x*z + y*z"));
  // gcd divides both inputs
  std::mt19937_64 rng(13);
  for (int i = 0; i < 15; ++i) {
    auto a = random_poly(r, rng, 2, 3);
    auto b = random_poly(r, rng, 2, 3);
    if (a.is_zero_poly() || b.is_zero_poly()) continue;
    auto d = gcd(a, b);
    CHECK(divides_poly(d, a));
    CHECK(divides_poly(d, b));
  }
}

TEST_CASE("squarefree part") {
  auto r = qxy();
  CHECK(squarefree_part(qp(r, "x^3 - 3x^2*y + 3x*y^2 - y^3")) == qp(r, "x - y"));
  CHECK(squarefree_part(qp(r, "x^2*y^3")) == qp(r, "x*y"));
  auto f = qp(r, "x^2 - 2x*y + y^2");
  CHECK(squarefree_part(f * f) == squarefree_part(f));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    auto a = random_poly(r, rng, 2, 3);
    if (a.is_constant()) continue;
    auto s1 = squarefree_part(a);
    CHECK(squarefree_part(a * a) == s1);
    CHECK(squarefree_part(a * a * a) == s1);
  }
}

TEST_CASE("parse/print round trip") {
  auto r = qring3();
  for (const char* s : {"x0^3 - x1*x2^2 + x1^2*x2", "1/2*x0^2 + 7", "-x0 + 2/3*x1 - x2",
                        "x0*x1*x2", "0"}) {
    auto f = qp(r, s);
    CHECK(qp(r, to_string(f)) == f);
  }
  // implicit multiplication
  CHECK(qp(r, "2x0 x1") == qp(r, "2*x0*x1"));
  CHECK_THROWS_AS(qp(r, "x0 + w"), ParseError);
  CHECK_THROWS_AS(qp(r, "x0 + "), ParseError);
}

TEST_CASE("GF(p) arithmetic and parsing") {
  auto r = make_ring({"x", "y"}, FieldKind::GF, 32003);
  auto f = parse_polynomial<Fp>(r, "x^2 - y^2");
  auto g = parse_polynomial<Fp>(r, "x + y");
  CHECK(divides_poly(g, f));
  CHECK(exact_divide(f, g) == parse_polynomial<Fp>(r, "x - y"));
  auto h = parse_polynomial<Fp>(r, "1/2*x");
  CHECK(h.leading_coeff() == Fp(16002, 32003));  // (p+1)/2
}

TEST_CASE("monomial orders") {
  MonomialOrder grevlex = MonomialOrder::grevlex();
  MonomialOrder lex = MonomialOrder::lex();
  Monomial a(std::vector<int>{1, 0, 1});  // xz
  Monomial b(std::vector<int>{0, 2, 0});  // y^2
  CHECK(lex.greater(a, b));
  CHECK(grevlex.greater(b, a));  // same degree, grevlex prefers fewer trailing vars
  // refines divisibility
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> ed(0, 4);
  for (int i = 0; i < 100; ++i) {
    Monomial m(3), extra(3);
    for (int v = 0; v < 3; ++v) { m.e[v] = ed(rng); extra.e[v] = ed(rng); }
    if (extra.is_one()) continue;
    for (auto ord : {grevlex, lex, MonomialOrder::elim(2)}) {
      CHECK(ord.greater(m * extra, m));
    }
  }
  // elimination block dominates
  MonomialOrder e1 = MonomialOrder::elim(1);
  Monomial t(std::vector<int>{1, 0, 0});
  Monomial big(std::vector<int>{0, 5, 5});
  CHECK(e1.greater(t, big));
}
