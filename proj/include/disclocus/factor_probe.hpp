#ifndef DISCLOCUS_FACTOR_PROBE_HPP
#define DISCLOCUS_FACTOR_PROBE_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gcd.hpp"
#include "solve.hpp"

namespace disc {

namespace detail {

/// Does the ternary form F admit the linear factor x_{i0} + s*x_{i1} +
/// t*x_{i2} for some s, t? Substituting x_{i0} = -(s*x_{i1} + t*x_{i2})
/// must kill F; the coefficients give a system in s, t.
template <class K>
bool linear_factor_chart(const Polynomial<K>& F, int i0, int i1, int i2) {
  auto st = make_ring({"s", "t"}, F.ring->field, F.ring->prime);
  auto big = extend_back(st, F.ring->vars);
  K one = field_one<K>(big);
  int o = 2;  // offset of the original variables inside `big`
  std::vector<Polynomial<K>> vals(F.ring->nvars());
  for (std::size_t v = 0; v < F.ring->nvars(); ++v)
    vals[v] = Polynomial<K>::variable(big, o + static_cast<int>(v), one);
  vals[static_cast<std::size_t>(i0)] =
      -(Polynomial<K>::variable(big, 0, one) * Polynomial<K>::variable(big, o + i1, one) +
        Polynomial<K>::variable(big, 1, one) * Polynomial<K>::variable(big, o + i2, one));
  Polynomial<K> sub = substitute(F, vals);
  // collect the coefficients of the x-monomials as polynomials in s, t
  std::map<Monomial, Polynomial<K>> coeffs;
  for (auto& term : sub.terms) {
    Monomial xpart(big->nvars()), stpart(big->nvars());
    xpart.e = term.first.e;
    xpart.e[0] = xpart.e[1] = 0;
    stpart.e[0] = term.first.e[0];
    stpart.e[1] = term.first.e[1];
    auto it = coeffs.find(xpart);
    auto piece = Polynomial<K>::monomial(big, stpart, term.second);
    if (it == coeffs.end()) coeffs.emplace(xpart, piece);
    else it->second += piece;
  }
  Ideal<K> I(st);
  for (auto& kv : coeffs) {
    if (kv.second.is_zero_poly()) continue;
    I.gens.push_back(map_to_ring(kv.second, st));
  }
  if (I.gens.empty()) return true;
  return !is_unit_ideal(buchberger(I, MonomialOrder::grevlex()));
}

}  // namespace detail

/// Ternary form: does F have a linear factor (over the coefficient field)?
template <class K>
bool ternary_has_linear_factor(const Polynomial<K>& F) {
  if (F.ring->nvars() != 3) throw std::invalid_argument("expects a ternary form");
  if (F.total_degree() == 1) return true;
  // x0 + s x1 + t x2 ; x1 + t x2 (s row dropped) ; x2 alone
  if (detail::linear_factor_chart(F, 0, 1, 2)) return true;
  // chart with zero x0 coefficient: factor x1 + t x2
  {
    auto st = make_ring({"t"}, F.ring->field, F.ring->prime);
    auto big = extend_back(st, F.ring->vars);
    K one = field_one<K>(big);
    std::vector<Polynomial<K>> vals(3);
    vals[0] = Polynomial<K>::variable(big, 1, one);
    vals[1] = -(Polynomial<K>::variable(big, 0, one) * Polynomial<K>::variable(big, 3, one));
    vals[2] = Polynomial<K>::variable(big, 3, one);
    Polynomial<K> sub = substitute(F, vals);
    Ideal<K> I(st);
    std::map<Monomial, Polynomial<K>> coeffs;
    for (auto& term : sub.terms) {
      Monomial xpart(big->nvars()), tpart(big->nvars());
      xpart.e = term.first.e;
      xpart.e[0] = 0;
      tpart.e[0] = term.first.e[0];
      auto piece = Polynomial<K>::monomial(big, tpart, term.second);
      auto it = coeffs.find(xpart);
      if (it == coeffs.end()) coeffs.emplace(xpart, piece);
      else it->second += piece;
    }
    for (auto& kv : coeffs)
      if (!kv.second.is_zero_poly()) I.gens.push_back(map_to_ring(kv.second, st));
    if (I.gens.empty()) return true;
    if (!is_unit_ideal(buchberger(I, MonomialOrder::grevlex()))) return true;
  }
  // the factor x2 itself
  {
    bool all_div = true;
    for (auto& term : F.terms)
      if (term.first.e[2] == 0) { all_div = false; break; }
    if (all_div) return true;
  }
  return false;
}

/// Ternary quartic: does F split as a product of two quadrics? Solved as a
/// bilinear coefficient system, one branch per choice of the quadric
/// monomial normalized to 1.
template <class K>
bool ternary_conic_split(const Polynomial<K>& F) {
  if (F.ring->nvars() != 3 || F.total_degree() != 4)
    throw std::invalid_argument("expects a ternary quartic");
  std::vector<Monomial> quad;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; a + b <= 2; ++b)
      quad.push_back(Monomial(std::vector<int>{a, b, 2 - a - b}));
  // unknowns: g0..g5, h0..h5
  std::vector<std::string> names;
  for (int i = 0; i < 6; ++i) names.push_back("g" + std::to_string(i));
  for (int i = 0; i < 6; ++i) names.push_back("h" + std::to_string(i));
  auto cr = make_ring(names, F.ring->field, F.ring->prime);
  auto big = extend_back(cr, F.ring->vars);
  K one = field_one<K>(big);
  Polynomial<K> G(big), H(big);
  for (int i = 0; i < 6; ++i) {
    Monomial mg(big->nvars()), mh(big->nvars());
    mg.e[static_cast<std::size_t>(i)] = 1;
    mh.e[static_cast<std::size_t>(6 + i)] = 1;
    for (int v = 0; v < 3; ++v) {
      mg.e[12 + static_cast<std::size_t>(v)] = quad[static_cast<std::size_t>(i)].e[static_cast<std::size_t>(v)];
      mh.e[12 + static_cast<std::size_t>(v)] = quad[static_cast<std::size_t>(i)].e[static_cast<std::size_t>(v)];
    }
    G += Polynomial<K>::monomial(big, mg, one);
    H += Polynomial<K>::monomial(big, mh, one);
  }
  Polynomial<K> Fb = map_to_ring(F, big);
  Polynomial<K> diff = G * H - Fb;
  // coefficient equations: group by x-monomial
  std::map<Monomial, Polynomial<K>> coeffs;
  for (auto& term : diff.terms) {
    Monomial xpart(big->nvars()), cpart(big->nvars());
    cpart.e = term.first.e;
    for (int v = 0; v < 3; ++v) {
      xpart.e[12 + static_cast<std::size_t>(v)] = term.first.e[12 + static_cast<std::size_t>(v)];
      cpart.e[12 + static_cast<std::size_t>(v)] = 0;
    }
    auto piece = Polynomial<K>::monomial(big, cpart, term.second);
    auto it = coeffs.find(xpart);
    if (it == coeffs.end()) coeffs.emplace(xpart, piece);
    else it->second += piece;
  }
  for (int branch = 0; branch < 6; ++branch) {
    Ideal<K> I(cr);
    for (auto& kv : coeffs)
      if (!kv.second.is_zero_poly()) I.gens.push_back(map_to_ring(kv.second, cr));
    // normalize g_branch = 1, g_j = 0 for j < branch
    K onec = field_one<K>(cr);
    I.gens.push_back(Polynomial<K>::variable(cr, branch, onec) -
                     Polynomial<K>::constant(cr, onec));
    for (int j = 0; j < branch; ++j)
      I.gens.push_back(Polynomial<K>::variable(cr, j, onec));
    if (!is_unit_ideal(buchberger(I, MonomialOrder::grevlex()))) return true;
  }
  return false;
}

/// Irreducibility over the coefficient field for ternary forms of degree
/// <= 4: squarefree, no linear factor, and (degree 4) no conic-conic split.
template <class K>
bool ternary_irreducible(const Polynomial<K>& F) {
  int d = F.total_degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  if (squarefree_part(F) != normalized(F)) return false;
  if (ternary_has_linear_factor(F)) return false;
  if (d == 2 || d == 3) return true;
  if (d == 4) return !ternary_conic_split(F);
  throw std::invalid_argument("ternary_irreducible supports degree <= 4");
}

/// Probabilistic irreducibility probe for a form in >= 3 variables: cut by
/// random hyperplanes down to a ternary form (an irreducible plane section
/// certifies irreducibility of the hypersurface), over the polynomial's own
/// field. Returns true when certified irreducible; false means no
/// certificate found.
template <class K>
bool irreducible_probe(const Polynomial<K>& F, std::uint64_t seed, int trials = 4) {
  std::size_t n = F.ring->nvars();
  if (n < 3) throw std::invalid_argument("irreducible_probe expects >= 3 variables");
  if (F.total_degree() > 4 || F.total_degree() <= 0) return false;
  if (n == 3) return ternary_irreducible(F);
  std::mt19937_64 rng(seed);
  auto tri = make_ring({"y0", "y1", "y2"}, F.ring->field, F.ring->prime);
  for (int t = 0; t < trials; ++t) {
    std::vector<Polynomial<K>> vals;
    for (std::size_t v = 0; v < n; ++v) {
      Polynomial<K> lin(tri);
      for (int j = 0; j < 3; ++j) {
        long c = std::uniform_int_distribution<long>(-20, 20)(rng);
        lin += Polynomial<K>::variable(tri, j, field_one<K>(tri))
                   .scaled(field_from_int<K>(tri, c));
      }
      vals.push_back(lin);
    }
    Polynomial<K> section = substitute(F, vals);
    if (section.is_zero_poly() || section.total_degree() != F.total_degree()) continue;
    if (ternary_irreducible(section)) return true;
  }
  return false;
}

}  // namespace disc

#endif
