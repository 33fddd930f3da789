// Randomized invariant suites shared by the property tests and the
// acceptance runner. Each suite returns ok + a short diagnostic.

#ifndef DISC_PROPERTY_SUITES_HPP
#define DISC_PROPERTY_SUITES_HPP

#include <algorithm>
#include <random>
#include <sstream>

#include "disclocus/catalog.hpp"

namespace suites {

using namespace disc;

struct SuiteResult {
  bool ok = true;
  int trials = 0;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

inline Polynomial<Fp> random_poly(const RingPtr& r, std::mt19937_64& rng, int max_deg,
                                  int terms) {
  Polynomial<Fp> f(r);
  std::uniform_int_distribution<int> dc(1, static_cast<int>(r->prime - 1));
  std::uniform_int_distribution<int> de(0, max_deg);
  for (int t = 0; t < terms; ++t) {
    Monomial m(r->nvars());
    for (std::size_t v = 0; v < r->nvars(); ++v) m.e[v] = de(rng);
    f += Polynomial<Fp>::monomial(r, m, Fp(dc(rng), r->prime));
  }
  return f;
}

inline Polynomial<Fp> random_homogeneous(const RingPtr& r, std::mt19937_64& rng, int deg,
                                         int terms) {
  Polynomial<Fp> f(r);
  std::uniform_int_distribution<int> dc(1, static_cast<int>(r->prime - 1));
  while (f.is_zero_poly() || !f.is_homogeneous() || f.total_degree() != deg) {
    f = Polynomial<Fp>(r);
    for (int t = 0; t < terms; ++t) {
      Monomial m(r->nvars());
      int left = deg;
      for (std::size_t v = 0; v + 1 < r->nvars(); ++v) {
        std::uniform_int_distribution<int> de(0, left);
        m.e[v] = de(rng);
        left -= m.e[v];
      }
      m.e[r->nvars() - 1] = left;
      f += Polynomial<Fp>::monomial(r, m, Fp(dc(rng), r->prime));
    }
  }
  return f;
}

// Reduced Groebner bases do not depend on generator order or scaling.
inline SuiteResult suite_groebner_determinism(int trials = 200) {
  SuiteResult res;
  res.trials = trials;
  std::mt19937_64 rng(101);
  auto r = make_ring({"x", "y", "z"}, FieldKind::GF, 32003);
  for (int t = 0; t < trials; ++t) {
    Ideal<Fp> I(r);
    int n = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < n; ++i) I.gens.push_back(random_poly(r, rng, 2, 3));
    auto gb1 = buchberger(I, MonomialOrder::grevlex());
    Ideal<Fp> J(r);
    std::vector<std::size_t> perm(I.gens.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto i : perm)
      J.gens.push_back(I.gens[i].scaled(Fp(1 + rng() % (32003 - 1), 32003)));
    auto gb2 = buchberger(J, MonomialOrder::grevlex());
    if (gb1.elems != gb2.elems) res.fail("trial " + std::to_string(t));
  }
  return res;
}

// Euler: sum x_i d f/d x_i = deg(f) f for homogeneous f.
inline SuiteResult suite_euler(int trials = 200) {
  SuiteResult res;
  res.trials = trials;
  std::mt19937_64 rng(102);
  auto r = make_ring({"x", "y", "z"}, FieldKind::GF, 32003);
  for (int t = 0; t < trials; ++t) {
    int d = 1 + static_cast<int>(rng() % 5);
    auto f = random_homogeneous(r, rng, d, 4);
    Polynomial<Fp> lhs(r);
    Fp one(1, 32003);
    for (int v = 0; v < 3; ++v)
      lhs += Polynomial<Fp>::variable(r, v, one) * differentiate(f, v);
    if (lhs != f.scaled(Fp(d, 32003))) res.fail("trial " + std::to_string(t));
  }
  return res;
}

// Leibniz: d(fg) = f dg + g df.
inline SuiteResult suite_leibniz(int trials = 200) {
  SuiteResult res;
  res.trials = trials;
  std::mt19937_64 rng(103);
  auto r = make_ring({"x", "y", "z"}, FieldKind::GF, 32003);
  for (int t = 0; t < trials; ++t) {
    auto f = random_poly(r, rng, 3, 3);
    auto g = random_poly(r, rng, 3, 3);
    int v = static_cast<int>(rng() % 3);
    if (differentiate(f * g, v) != f * differentiate(g, v) + g * differentiate(f, v))
      res.fail("trial " + std::to_string(t));
  }
  return res;
}

// saturate(I, f) contains I, and f g in I implies g in the saturation.
inline SuiteResult suite_saturation(int trials = 200) {
  SuiteResult res;
  res.trials = trials;
  std::mt19937_64 rng(104);
  auto r = make_ring({"x", "y", "z"}, FieldKind::GF, 32003);
  for (int t = 0; t < trials; ++t) {
    Ideal<Fp> I(r);
    I.gens.push_back(random_poly(r, rng, 2, 2));
    I.gens.push_back(random_poly(r, rng, 2, 2));
    Polynomial<Fp> f = random_poly(r, rng, 1, 2);
    if (f.is_zero_poly()) continue;
    Ideal<Fp> S = saturate(I, f);
    auto gbS = buchberger(S, MonomialOrder::grevlex());
    for (auto& g : I.gens)
      if (!member(g, gbS)) res.fail("I not inside saturation, trial " + std::to_string(t));
    // plant a witness: g random, add f*g to I, then g must be in the saturation
    Polynomial<Fp> g = random_poly(r, rng, 2, 2);
    Ideal<Fp> I2 = I;
    I2.gens.push_back(f * g);
    auto gb2 = buchberger(saturate(I2, f), MonomialOrder::grevlex());
    if (!member(g, gb2)) res.fail("planted witness missing, trial " + std::to_string(t));
  }
  return res;
}

inline LinearSystem<Fp> random_web(const RingPtr& r, std::mt19937_64& rng, int nsec,
                                   int deg) {
  while (true) {
    LinearSystem<Fp> V;
    V.ring = r;
    for (int j = 0; j < nsec; ++j) V.sections.push_back(random_homogeneous(r, rng, deg, 4));
    try {
      validate(V);
      if (base_point_free(V)) return V;
    } catch (const std::exception&) {
    }
  }
}

// Bertini: the discriminant is a proper subvariety, so its dual defect is
// nonnegative on every instance.
inline SuiteResult suite_bertini_defect(int trials = 200) {
  SuiteResult res;
  res.trials = trials;
  std::mt19937_64 rng(105);
  auto r = make_ring({"x", "y", "z"}, FieldKind::GF, 32003);
  for (int t = 0; t < trials; ++t) {
    auto V = random_web(r, rng, 3, 2);
    auto rep = discriminant(V, /*with_strata=*/false);
    if (!rep.empty && rep.defect < 0) res.fail("trial " + std::to_string(t));
    if (!rep.empty && rep.dim_affine > V.n_dual()) res.fail("trial " + std::to_string(t));
  }
  return res;
}

// Immersion law: when J_1 is empty and the image is a proper subvariety,
// the discriminant is the dual variety of the image. Exercised on random
// coordinate changes of the degree-2 Veronese of P^1 (an immersion onto a
// conic), with both sides computed independently.
inline SuiteResult suite_immersion(int trials = 200) {
  SuiteResult res;
  res.trials = trials;
  std::mt19937_64 rng(106);
  auto r = make_ring({"s", "t"}, FieldKind::GF, 32003);
  Fp one(1, 32003);
  for (int t = 0; t < trials; ++t) {
    // random invertible substitution s -> a s + b t, t -> c s + d t
    std::int64_t a, b, c, d;
    do {
      a = rng() % 32003, b = rng() % 32003, c = rng() % 32003, d = rng() % 32003;
    } while ((a * d - b * c) % 32003 == 0);
    auto sub = [&](const Polynomial<Fp>& f) {
      std::vector<Polynomial<Fp>> vals = {
          Polynomial<Fp>::variable(r, 0, one).scaled(Fp(a, 32003)) +
              Polynomial<Fp>::variable(r, 1, one).scaled(Fp(b, 32003)),
          Polynomial<Fp>::variable(r, 0, one).scaled(Fp(c, 32003)) +
              Polynomial<Fp>::variable(r, 1, one).scaled(Fp(d, 32003))};
      return substitute(f, vals);
    };
    LinearSystem<Fp> V;
    V.ring = r;
    auto s = Polynomial<Fp>::variable(r, 0, one);
    auto tt = Polynomial<Fp>::variable(r, 1, one);
    V.sections = {sub(s * s), sub(s * tt), sub(tt * tt)};
    auto rep = discriminant(V, /*with_strata=*/false);
    if (!rep.jumping.is_empty(1)) {
      res.fail("jumping set unexpectedly nonempty, trial " + std::to_string(t));
      continue;
    }
    // image ideal of the conic: eliminate the source from the 2x2 minors of
    // [point coords; sections]
    RingPtr prod = extend_back(r, {"y0", "y1", "y2"});
    RingPtr yring = make_ring({"y0", "y1", "y2"}, r->field, r->prime);
    Ideal<Fp> graph(prod);
    std::vector<Polynomial<Fp>> ys, ss;
    for (int j = 0; j < 3; ++j) {
      ys.push_back(Polynomial<Fp>::variable(prod, 2 + j, one));
      ss.push_back(map_to_ring(V.sections[static_cast<std::size_t>(j)], prod));
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        graph.gens.push_back(ys[i] * ss[j] - ys[j] * ss[i]);
    graph = saturate_irrelevant(graph, {0, 1});
    Ideal<Fp> image = drop_front_vars(eliminate(graph, 2), 2, yring);
    ConormalOptions copts;
    copts.dual_names = rep.dual_ring->vars;  // hyperplane coefficients L_j
    Ideal<Fp> image_dual = dual_variety(image, copts);
    // image_dual's ring carries the same names as the discriminant's ring
    Ideal<Fp> back(rep.dual_ring);
    for (auto& g : image_dual.gens) back.gens.push_back(map_to_ring(g, rep.dual_ring));
    if (!radical_equal(rep.ideal, back)) res.fail("trial " + std::to_string(t));
  }
  return res;
}

// Hyperplane law: the discriminant contains a hyperplane iff the top
// jumping set is nonempty. Catalog instances plus random webs.
inline SuiteResult suite_hyperplane_law(const std::string& fixture_dir, int trials = 200) {
  SuiteResult res;
  res.trials = trials;
  std::mt19937_64 rng(107);
  auto r = make_ring({"x", "y", "z"}, FieldKind::GF, 32003);
  for (int t = 0; t < trials; ++t) {
    auto V = random_web(r, rng, 3, 2);
    auto rep = discriminant(V, /*with_strata=*/false);
    if (!rep.hyperplanes.jn_finite) continue;  // positive-dimensional J_n: no claim
    bool has_forms = !rep.hyperplanes.forms.empty();
    bool jn = !rep.jumping.is_empty(rep.jumping.n);
    if (rep.hyperplanes.complete && has_forms != jn)
      res.fail("random web trial " + std::to_string(t));
    if (has_forms && !jn) res.fail("form without jumping point, trial " + std::to_string(t));
  }
  for (auto& path : fixture_roster(fixture_dir)) {
    auto text = read_linsys_file(path);
    if (text.kind != "symbolic") continue;
    if (!text.hypersurface.empty()) continue;  // no jet analysis off projective space
    RingPtr fr = realize_ring<Fp>(text.ring, FieldKind::GF, 32003);
    auto V = realize_linear_system<Fp>(text, fr);
    auto rep = discriminant(V, /*with_strata=*/false);
    if (!rep.hyperplanes.jn_finite || !rep.hyperplanes.complete) continue;
    if (rep.hyperplanes.forms.empty() != rep.jumping.is_empty(rep.jumping.n))
      res.fail("fixture " + text.id);
  }
  return res;
}

// c_n of the jet bundle bounds the codegree from above... the identity
// c_n = sum m_i d_i with m_i >= 1 makes c_n >= sum d_i >= codegree.
inline SuiteResult suite_cn_inequality(int trials = 200) {
  SuiteResult res;
  res.trials = trials;
  std::mt19937_64 rng(108);
  // nets on the line: image curves of degree m, duals bounded by 2(m-1)+...
  auto line = make_ring({"s", "t"}, FieldKind::GF, 32003);
  for (int t = 0; t < trials; ++t) {
    int m = 2 + static_cast<int>(rng() % 4);
    auto V = random_web(line, rng, 3, m);
    auto rep = discriminant(V, /*with_strata=*/false);
    if (rep.codegree > cn_jet_pn(1, m)) res.fail("line trial " + std::to_string(t));
  }
  // a smaller sample of conic webs on the plane (heavier eliminations)
  auto plane = make_ring({"x", "y", "z"}, FieldKind::GF, 32003);
  for (int t = 0; t < 40; ++t) {
    auto V = random_web(plane, rng, 3, 2);
    auto rep = discriminant(V, /*with_strata=*/false);
    if (rep.codegree > cn_jet_pn(2, 2)) res.fail("plane trial " + std::to_string(t));
  }
  return res;
}

// Thm 3.5-style lower bound: every non-identity catalog instance has
// codegree >= 2; the identity system has codegree 0.
inline SuiteResult suite_codegree_bound(const std::string& fixture_dir) {
  SuiteResult res;
  for (auto& path : fixture_roster(fixture_dir)) {
    auto text = read_linsys_file(path);
    if (text.kind != "symbolic") continue;
    ++res.trials;
    RingPtr fr = realize_ring<Fp>(text.ring, FieldKind::GF, 32003);
    auto V = realize_linear_system<Fp>(text, fr);
    auto rep = discriminant(V, /*with_strata=*/false);
    if (text.id == "identity-pn") {
      if (rep.codegree != 0) res.fail("identity system has nonzero codegree");
    } else if (rep.codegree < 2) {
      res.fail("fixture " + text.id + " has codegree " + std::to_string(rep.codegree));
    }
  }
  return res;
}

}  // namespace suites

#endif
