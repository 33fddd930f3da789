#ifndef DISCLOCUS_SOLVE_HPP
#define DISCLOCUS_SOLVE_HPP

#include <algorithm>
#include <numeric>
#include <type_traits>
#include <utility>
#include <vector>

#include "ideal_ops.hpp"

namespace disc {

/// Dense coefficient vector of f viewed as univariate in `var`; throws if f
/// involves any other variable.
template <class K>
std::vector<K> dense_coeffs(const Polynomial<K>& f, int var) {
  std::vector<K> c(static_cast<std::size_t>(f.degree_in(var)) + 1, K{});
  for (auto& t : f.terms) {
    for (std::size_t v = 0; v < f.ring->nvars(); ++v)
      if (static_cast<int>(v) != var && t.first.e[v] != 0)
        throw std::invalid_argument("dense_coeffs: polynomial is not univariate");
    c[static_cast<std::size_t>(t.first.e[var])] = t.second;
  }
  return c;
}

namespace detail {

template <class K>
K horner(const std::vector<K>& c, const K& x) {
  K acc{};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// deflate by (X - r); assumes r is a root
template <class K>
std::vector<K> deflate(const std::vector<K>& c, const K& r) {
  std::vector<K> q(c.size() - 1, K{});
  K carry{};
  for (std::size_t i = c.size(); i-- > 1;) {
    carry = c[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

inline std::vector<long long> small_divisors(mpz_class n) {
  n = abs(n);
  if (n == 0) return {};
  if (!n.fits_slong_p())
    throw std::domain_error("rational root search: coefficient too large to factor");
  long long m = n.get_si();
  std::vector<long long> divs;
  for (long long d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      divs.push_back(d);
      if (d != m / d) divs.push_back(m / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace detail

template <class K>
struct RootList {
  std::vector<std::pair<K, int>> roots;  // value, multiplicity
  int unresolved_degree = 0;             // degree of the factor with no roots in the field
};

/// Roots in GF(p) by exhaustive scan with deflation.
inline RootList<Fp> univariate_roots(const std::vector<Fp>& coeffs, std::int64_t p) {
  RootList<Fp> out;
  std::vector<Fp> c = coeffs;
  while (!c.empty() && is_zero(c.back())) c.pop_back();
  if (c.empty()) throw std::domain_error("roots of the zero polynomial");
  // root 0
  std::size_t k = 0;
  while (k < c.size() && is_zero(c[k])) ++k;
  if (k > 0) {
    out.roots.emplace_back(Fp(0, p), static_cast<int>(k));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
  }
  for (std::int64_t a = 1; a < p && c.size() > 1; ++a) {
    Fp x(a, p);
    if (!is_zero(detail::horner(c, x))) continue;
    int mult = 0;
    while (c.size() > 1 && is_zero(detail::horner(c, x))) {
      c = detail::deflate(c, x);
      ++mult;
    }
    out.roots.emplace_back(x, mult);
  }
  out.unresolved_degree = static_cast<int>(c.size()) - 1;
  return out;
}

/// Rational roots via the rational root theorem on the primitive integer
/// model; factors that have no rational root are reported by degree.
inline RootList<Rational> univariate_roots(const std::vector<Rational>& coeffs) {
  RootList<Rational> out;
  std::vector<Rational> c = coeffs;
  while (!c.empty() && is_zero(c.back())) c.pop_back();
  if (c.empty()) throw std::domain_error("roots of the zero polynomial");
  std::size_t k = 0;
  while (k < c.size() && is_zero(c[k])) ++k;
  if (k > 0) {
    out.roots.emplace_back(Rational(0), static_cast<int>(k));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
  }
  if (c.size() > 1) {
    mpz_class den = 1;
    for (auto& q : c) den = lcm(den, q.get_den());
    std::vector<mpz_class> z;
    for (auto& q : c) z.push_back(q.get_num() * (den / q.get_den()));
    std::vector<long long> nums = detail::small_divisors(z.front());
    std::vector<long long> dens = detail::small_divisors(z.back());
    for (long long u : nums) {
      for (long long v : dens) {
        if (std::gcd(u, v) != 1) continue;
        for (int sign : {1, -1}) {
          Rational r(mpz_class(static_cast<long>(sign * u)),
                     mpz_class(static_cast<long>(v)));
          r.canonicalize();
          int mult = 0;
          while (c.size() > 1 && is_zero(detail::horner(c, r))) {
            c = detail::deflate(c, r);
            ++mult;
          }
          if (mult > 0) out.roots.emplace_back(r, mult);
        }
        if (c.size() <= 1) break;
      }
      if (c.size() <= 1) break;
    }
  }
  out.unresolved_degree = static_cast<int>(c.size()) - 1;
  return out;
}

template <class K>
RootList<K> univariate_roots_of(const Polynomial<K>& f, int var);

template <>
inline RootList<Fp> univariate_roots_of(const Polynomial<Fp>& f, int var) {
  return univariate_roots(dense_coeffs(f, var), f.ring->prime);
}

template <>
inline RootList<Rational> univariate_roots_of(const Polynomial<Rational>& f, int var) {
  return univariate_roots(dense_coeffs(f, var));
}

/// Roots of a homogeneous binary form in P^1 as (value at t/s chart, plus a
/// possible root at infinity). Points are reported as coordinate pairs.
template <class K>
struct ProjectiveRootList {
  std::vector<std::pair<std::vector<K>, int>> roots;  // ((s,t), multiplicity)
  int unresolved_degree = 0;
};

template <class K>
ProjectiveRootList<K> binary_form_roots(const Polynomial<K>& f, int svar, int tvar) {
  if (f.is_zero_poly()) throw std::domain_error("roots of the zero form");
  int d = f.total_degree();
  K one = field_one<K>(f.ring);
  // dehomogenize at t = 1
  std::vector<K> c(static_cast<std::size_t>(d) + 1, K{});
  int smax = -1;
  for (auto& t : f.terms) {
    c[static_cast<std::size_t>(t.first.e[svar])] = t.second;
    smax = std::max(smax, t.first.e[svar]);
  }
  ProjectiveRootList<K> out;
  if (smax < d) out.roots.push_back({{one, K{}}, d - smax});  // root (1:0)
  c.resize(static_cast<std::size_t>(smax) + 1);
  RootList<K> rl;
  if constexpr (std::is_same_v<K, Fp>) {
    rl = univariate_roots(c, f.ring->prime);
  } else {
    rl = univariate_roots(c);
  }
  for (auto& r : rl.roots) out.roots.push_back({{r.first, one}, r.second});
  out.unresolved_degree = rl.unresolved_degree;
  return out;
}

/// Solve a zero-dimensional affine system by lex elimination and back
/// substitution. `complete` is false when some branch hits a factor with no
/// root in the field, or when the system is not zero-dimensional.
template <class K>
struct AffineSolutions {
  bool zero_dimensional = true;
  bool complete = true;
  std::vector<std::vector<K>> points;
};

namespace detail {

template <class K>
void affine_solve_rec(const Ideal<K>& I, const std::vector<int>& vars, std::size_t lvl,
                      std::vector<K>& partial, AffineSolutions<K>& out) {
  GroebnerBasis<K> gb = buchberger(I, MonomialOrder::lex());
  if (is_unit_ideal(gb)) return;
  if (lvl == vars.size()) {
    out.points.push_back(partial);
    return;
  }
  // find a basis element univariate in one of the still unsolved variables
  // (for a zero-dimensional ideal the lex basis always contains one, in the
  // lex-smallest remaining variable)
  int var = -1;
  const Polynomial<K>* uni = nullptr;
  for (std::size_t c = vars.size(); c-- > lvl && !uni;) {
    int cand = vars[c];
    for (auto& g : gb.elems) {
      bool ok = !g.is_zero_poly() && g.depends_on(cand);
      for (std::size_t v = 0; v < I.ring->nvars() && ok; ++v)
        if (static_cast<int>(v) != cand && g.depends_on(static_cast<int>(v))) ok = false;
      if (ok) { uni = &g; var = cand; break; }
    }
  }
  if (!uni) {
    out.zero_dimensional = false;
    out.complete = false;
    return;
  }
  std::vector<int> rest;
  for (std::size_t c = lvl; c < vars.size(); ++c)
    if (vars[c] != var) rest.push_back(vars[c]);
  RootList<K> rl = univariate_roots_of(*uni, var);
  if (rl.unresolved_degree > 0) out.complete = false;
  for (auto& r : rl.roots) {
    partial[static_cast<std::size_t>(var)] = r.first;
    Ideal<K> J(I.ring);
    std::vector<Polynomial<K>> vals;
    for (std::size_t v = 0; v < I.ring->nvars(); ++v) {
      if (static_cast<int>(v) == var)
        vals.push_back(Polynomial<K>::constant(I.ring, r.first));
      else
        vals.push_back(Polynomial<K>::variable(I.ring, static_cast<int>(v),
                                               field_one<K>(I.ring)));
    }
    for (auto& g : I.gens) {
      Polynomial<K> s = substitute(g, vals);
      if (!s.is_zero_poly()) J.gens.push_back(std::move(s));
    }
    if (J.gens.empty()) J.gens.push_back(Polynomial<K>::zero(I.ring));
    affine_solve_rec(J, rest, 0, partial, out);
  }
}

}  // namespace detail

/// vars: the variables to solve for, in elimination order (first = solved
/// first); other ring variables must not occur in the generators.
template <class K>
AffineSolutions<K> affine_solve(const Ideal<K>& I, const std::vector<int>& vars) {
  AffineSolutions<K> out;
  if (is_zero_ideal(I)) {
    out.zero_dimensional = vars.empty();
    out.complete = vars.empty();
    return out;
  }
  std::vector<K> partial(I.ring->nvars(), K{});
  detail::affine_solve_rec(I, vars, 0, partial, out);
  // dedupe (different branches cannot collide, but be safe)
  std::sort(out.points.begin(), out.points.end(),
            [](const std::vector<K>& a, const std::vector<K>& b) {
              for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] == b[i]) continue;
                return coeff_str(a[i]) < coeff_str(b[i]);
              }
              return false;
            });
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

/// Points of a projective scheme cut out by a homogeneous ideal whose cone
/// is at most one-dimensional. Coordinates are normalized so the first
/// nonzero entry equals 1. Charts are taken in variable order; chart i sets
/// x_i = 1 and x_j = 0 for j < i.
template <class K>
AffineSolutions<K> projective_points(const Ideal<K>& I, const std::vector<int>& vars) {
  AffineSolutions<K> all;
  K one = field_one<K>(I.ring);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::vector<Polynomial<K>> vals;
    for (std::size_t v = 0; v < I.ring->nvars(); ++v)
      vals.push_back(Polynomial<K>::variable(I.ring, static_cast<int>(v), one));
    for (std::size_t j = 0; j < i; ++j)
      vals[static_cast<std::size_t>(vars[j])] = Polynomial<K>::zero(I.ring);
    vals[static_cast<std::size_t>(vars[i])] = Polynomial<K>::constant(I.ring, one);
    Ideal<K> J(I.ring);
    for (auto& g : I.gens) {
      Polynomial<K> s = substitute(g, vals);
      if (!s.is_zero_poly()) J.gens.push_back(std::move(s));
    }
    std::vector<int> rest(vars.begin() + static_cast<std::ptrdiff_t>(i) + 1, vars.end());
    if (J.gens.empty()) {
      // chart is entirely contained: not zero-dimensional unless no vars left
      if (!rest.empty()) { all.zero_dimensional = false; all.complete = false; continue; }
      std::vector<K> pt(I.ring->nvars(), K{});
      pt[static_cast<std::size_t>(vars[i])] = one;
      all.points.push_back(std::move(pt));
      continue;
    }
    AffineSolutions<K> sol = affine_solve(J, rest);
    if (!sol.zero_dimensional) all.zero_dimensional = false;
    if (!sol.complete) all.complete = false;
    for (auto& p : sol.points) {
      std::vector<K> pt = p;
      pt[static_cast<std::size_t>(vars[i])] = one;
      for (std::size_t j = 0; j < i; ++j) pt[static_cast<std::size_t>(vars[j])] = K{};
      all.points.push_back(std::move(pt));
    }
  }
  return all;
}

}  // namespace disc

#endif
