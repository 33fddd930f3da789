#ifndef DISCLOCUS_GCD_HPP
#define DISCLOCUS_GCD_HPP

#include <vector>

#include "polynomial.hpp"

namespace disc {

/// Exact division f / g under a single-divisor division algorithm.
/// Throws if g does not divide f.
template <class K>
Polynomial<K> exact_divide(const Polynomial<K>& f, const Polynomial<K>& g) {
  if (g.is_zero_poly()) throw std::domain_error("division by zero polynomial");
  Polynomial<K> q(f.ring, f.ord);
  Polynomial<K> r = f;
  Polynomial<K> gg = g.reorder(f.ord);
  while (!r.is_zero_poly()) {
    if (!divides(gg.leading_monomial(), r.leading_monomial()))
      throw std::domain_error("exact_divide: not divisible");
    Monomial m = r.leading_monomial() / gg.leading_monomial();
    K c = r.leading_coeff() * inv(gg.leading_coeff());
    q += Polynomial<K>::monomial(f.ring, m, c, f.ord);
    r.sub_mul(c, m, gg);
  }
  return q;
}

template <class K>
bool divides_poly(const Polynomial<K>& g, const Polynomial<K>& f) {
  if (g.is_zero_poly()) return f.is_zero_poly();
  Polynomial<K> r = f;
  Polynomial<K> gg = g.reorder(f.ord);
  while (!r.is_zero_poly()) {
    if (!divides(gg.leading_monomial(), r.leading_monomial())) return false;
    Monomial m = r.leading_monomial() / gg.leading_monomial();
    K c = r.leading_coeff() * inv(gg.leading_coeff());
    r.sub_mul(c, m, gg);
  }
  return true;
}

namespace detail {

/// Coefficient of var^k in f, as a polynomial of the same ring.
template <class K>
Polynomial<K> coeff_of(const Polynomial<K>& f, int var, int k) {
  Polynomial<K> r(f.ring, f.ord);
  for (auto& t : f.terms) {
    if (t.first.e[var] != k) continue;
    Monomial m = t.first;
    m.e[var] = 0;
    r += Polynomial<K>::monomial(f.ring, m, t.second, f.ord);
  }
  return r;
}

template <class K>
Polynomial<K> times_var_pow(const Polynomial<K>& f, int var, int k) {
  Polynomial<K> r = f;
  for (auto& t : r.terms) t.first.e[var] += k;
  // multiplying every term by the same monomial preserves the order
  return r;
}

template <class K>
Polynomial<K> gcd_impl(Polynomial<K> f, Polynomial<K> g);

template <class K>
Polynomial<K> content_in(const Polynomial<K>& f, int var) {
  Polynomial<K> c(f.ring, f.ord);
  for (int k = 0; k <= f.degree_in(var); ++k) {
    Polynomial<K> ck = coeff_of(f, var, k);
    if (!ck.is_zero_poly()) c = gcd_impl(c, ck);
  }
  return c;
}

/// Pseudo-remainder of f by g with respect to var.
template <class K>
Polynomial<K> prem(Polynomial<K> f, const Polynomial<K>& g, int var) {
  int dg = g.degree_in(var);
  Polynomial<K> lg = coeff_of(g, var, dg);
  while (!f.is_zero_poly() && f.degree_in(var) >= dg) {
    int df = f.degree_in(var);
    Polynomial<K> lf = coeff_of(f, var, df);
    f = lg * f - times_var_pow(lf, var, df - dg) * g;
  }
  return f;
}

template <class K>
Polynomial<K> gcd_impl(Polynomial<K> f, Polynomial<K> g) {
  if (f.is_zero_poly()) return normalized(g);
  if (g.is_zero_poly()) return normalized(f);
  if (f.is_constant() || g.is_constant())
    return Polynomial<K>::constant(f.ring, field_one<K>(f.ring), f.ord);
  // main variable: highest-index variable occurring in either
  int var = -1;
  for (int i = static_cast<int>(f.ring->nvars()) - 1; i >= 0; --i) {
    if (f.depends_on(i) || g.depends_on(i)) { var = i; break; }
  }
  if (!f.depends_on(var) || !g.depends_on(var)) {
    // one side is free of the main variable: gcd is gcd of it with the
    // other's content
    if (f.depends_on(var)) std::swap(f, g);
    return gcd_impl(f, content_in(g, var));
  }
  Polynomial<K> cf = content_in(f, var);
  Polynomial<K> cg = content_in(g, var);
  Polynomial<K> cont = gcd_impl(cf, cg);
  Polynomial<K> pf = exact_divide(f, cf);
  Polynomial<K> pg = exact_divide(g, cg);
  if (pf.degree_in(var) < pg.degree_in(var)) std::swap(pf, pg);
  while (!pg.is_zero_poly()) {
    Polynomial<K> r = prem(pf, pg, var);
    pf = pg;
    if (r.is_zero_poly()) { pg = r; break; }
    pg = exact_divide(r, content_in(r, var));  // primitive PRS
  }
  Polynomial<K> pp = exact_divide(pf, content_in(pf, var));
  return normalized(cont * pp);
}

}  // namespace detail

/// Multivariate gcd (primitive pseudo-remainder sequences). The result is
/// normalized: monic over GF(p), integer-primitive with positive leading
/// coefficient over Q.
template <class K>
Polynomial<K> gcd(const Polynomial<K>& f, const Polynomial<K>& g) {
  Polynomial<K>::check_compat(f, g);
  return detail::gcd_impl(f, g);
}

/// Product of the distinct irreducible factors of f, up to normalization:
/// f / gcd(f, df/dv1, ..., df/dvn).
template <class K>
Polynomial<K> squarefree_part(const Polynomial<K>& f) {
  if (f.is_zero_poly()) return f;
  if (f.is_constant())
    return Polynomial<K>::constant(f.ring, field_one<K>(f.ring), f.ord);
  Polynomial<K> g = f;
  for (std::size_t v = 0; v < f.ring->nvars(); ++v) {
    if (!f.depends_on(static_cast<int>(v))) continue;
    g = gcd(g, differentiate(f, static_cast<int>(v)));
  }
  return normalized(exact_divide(f, g));
}

}  // namespace disc

#endif
