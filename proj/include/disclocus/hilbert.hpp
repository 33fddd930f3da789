#ifndef DISCLOCUS_HILBERT_HPP
#define DISCLOCUS_HILBERT_HPP

#include <map>
#include <utility>
#include <vector>

#include "groebner.hpp"

namespace disc {

namespace detail {

using ZPoly = std::vector<long long>;  // coefficients in t, index = exponent

inline void zp_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zp_trim(r);
  return r;
}

inline ZPoly zp_shift(const ZPoly& a, int k) {
  if (a.empty()) return a;
  ZPoly r(a.size() + static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + static_cast<std::size_t>(k)] = a[i];
  return r;
}

inline ZPoly zp_mul_one_minus_t(const ZPoly& a) {
  ZPoly r(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) { r[i] += a[i]; r[i + 1] -= a[i]; }
  zp_trim(r);
  return r;
}

inline long long zp_eval1(const ZPoly& a) {
  long long s = 0;
  for (long long c : a) s += c;
  return s;
}

// divide by (1 - t); caller guarantees divisibility
inline ZPoly zp_div_one_minus_t(const ZPoly& a) {
  ZPoly r(a.size() ? a.size() - 1 : 0, 0);
  long long carry = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    carry += a[i];
    r[i] = carry;
  }
  zp_trim(r);
  return r;
}

inline void minimalize_monomials(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& m : gens) {
    bool red = false;
    for (auto& g : out)
      if (divides(g, m)) { red = true; break; }
    if (!red) out.push_back(m);
  }
  gens = std::move(out);
}

struct HilbertCache {
  std::map<std::vector<std::vector<int>>, ZPoly> memo;
};

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of R/I for a monomial
/// ideal given by generators. Recursion: pick a variable x occurring in a
/// generator, then N(I) = t * N(I:x) + (1-t) * N(I restricted to x-free
/// generators), using that x lies in I + (x).
inline ZPoly hilbert_numerator(std::vector<Monomial> gens, HilbertCache& cache) {
  minimalize_monomials(gens);
  if (gens.empty()) return ZPoly{1};
  for (auto& m : gens)
    if (m.is_one()) return ZPoly{};
  std::vector<std::vector<int>> key;
  key.reserve(gens.size());
  for (auto& m : gens) key.push_back(m.e);
  std::sort(key.begin(), key.end());
  auto it = cache.memo.find(key);
  if (it != cache.memo.end()) return it->second;

  std::size_t n = gens[0].e.size();
  // all pure powers: N = prod (1 - t^{a_i})
  bool all_pure = true;
  for (auto& m : gens) {
    int nz = 0;
    for (int e : m.e) nz += e > 0;
    if (nz > 1) { all_pure = false; break; }
  }
  ZPoly result;
  if (all_pure) {
    result = ZPoly{1};
    for (auto& m : gens) {
      int d = m.degree();
      ZPoly factor(static_cast<std::size_t>(d) + 1, 0);
      factor[0] = 1;
      factor[static_cast<std::size_t>(d)] = -1;
      ZPoly nr(result.size() + factor.size(), 0);
      for (std::size_t i = 0; i < result.size(); ++i)
        for (std::size_t j = 0; j < factor.size(); ++j) nr[i + j] += result[i] * factor[j];
      zp_trim(nr);
      result = std::move(nr);
    }
  } else {
    // pivot: variable appearing in the most non-pure generators
    int best = -1, best_count = -1;
    for (std::size_t v = 0; v < n; ++v) {
      int count = 0;
      for (auto& m : gens) {
        int nz = 0;
        for (int e : m.e) nz += e > 0;
        if (nz > 1 && m.e[v] > 0) ++count;
      }
      if (count > best_count) { best_count = count; best = static_cast<int>(v); }
    }
    std::vector<Monomial> colon, free_of;
    for (auto& m : gens) {
      Monomial c = m;
      if (c.e[best] > 0) c.e[best] -= 1;
      colon.push_back(std::move(c));
      if (m.e[best] == 0) free_of.push_back(m);
    }
    ZPoly a = zp_shift(hilbert_numerator(std::move(colon), cache), 1);
    ZPoly b = zp_mul_one_minus_t(hilbert_numerator(std::move(free_of), cache));
    result = zp_add(a, b);
  }
  cache.memo.emplace(std::move(key), result);
  return result;
}

}  // namespace detail

struct DimensionDegree {
  int dim;        // Krull dimension of the affine cone (-1: empty)
  long long deg;  // degree of the corresponding projective cycle
};

/// Dimension and degree of R/I read off the Hilbert series of the leading
/// term ideal. For homogeneous I this is the affine cone dimension; the
/// projective dimension is one less.
template <class K>
DimensionDegree dimension_degree(const GroebnerBasis<K>& gb) {
  int n = static_cast<int>(gb.ring->nvars());
  std::vector<Monomial> lts;
  for (auto& g : gb.elems) lts.push_back(g.leading_monomial());
  detail::HilbertCache cache;
  detail::ZPoly N = detail::hilbert_numerator(std::move(lts), cache);
  if (N.empty()) return {-1, 0};  // unit ideal
  int s = 0;
  while (detail::zp_eval1(N) == 0) {
    N = detail::zp_div_one_minus_t(N);
    ++s;
  }
  return {n - s, detail::zp_eval1(N)};
}

template <class K>
DimensionDegree dimension_degree(const Ideal<K>& I) {
  return dimension_degree(buchberger(I, MonomialOrder::grevlex()));
}

/// Number of standard monomials of the leading term ideal; -1 if infinite.
template <class K>
long long quotient_colength(const GroebnerBasis<K>& gb) {
  std::size_t n = gb.ring->nvars();
  std::vector<Monomial> lts;
  for (auto& g : gb.elems) lts.push_back(g.leading_monomial());
  detail::minimalize_monomials(lts);
  for (auto& m : lts)
    if (m.is_one()) return 0;
  std::vector<int> bound(n, -1);
  for (auto& m : lts) {
    int nz = 0, var = -1;
    for (std::size_t v = 0; v < n; ++v)
      if (m.e[v] > 0) { ++nz; var = static_cast<int>(v); }
    if (nz == 1 && (bound[var] < 0 || m.e[var] < bound[var])) bound[var] = m.e[var];
  }
  for (std::size_t v = 0; v < n; ++v)
    if (bound[v] < 0) return -1;
  // walk the box, counting monomials outside the leading term ideal
  long long count = 0;
  Monomial cur(n);
  while (true) {
    bool in_lt = false;
    for (auto& m : lts)
      if (divides(m, cur)) { in_lt = true; break; }
    if (!in_lt) ++count;
    std::size_t v = 0;
    while (v < n) {
      if (++cur.e[v] < bound[v]) break;
      cur.e[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return count;
}

template <class K>
long long quotient_colength(const Ideal<K>& I) {
  return quotient_colength(buchberger(I, MonomialOrder::grevlex()));
}

}  // namespace disc

#endif
