#ifndef DISCLOCUS_GROEBNER_HPP
#define DISCLOCUS_GROEBNER_HPP

#include <algorithm>
#include <list>
#include <vector>

#include "gcd.hpp"
#include "polynomial.hpp"

namespace disc {

template <class K>
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial<K>> gens;

  Ideal() = default;
  explicit Ideal(RingPtr r) : ring(std::move(r)) {}
  Ideal(RingPtr r, std::vector<Polynomial<K>> g) : ring(std::move(r)), gens(std::move(g)) {}
};

template <class K>
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder ord;
  std::vector<Polynomial<K>> elems;  // reduced basis, ascending by leading monomial
};

/// Full normal form of f modulo basis G (every term reduced). G need not be
/// a Groebner basis; for one, the result is the unique remainder.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& G,
                          MonomialOrder ord) {
  Polynomial<K> work = f.reorder(ord);
  Polynomial<K> rem(f.ring, ord);
  while (!work.is_zero_poly()) {
    bool reduced = false;
    const Monomial& lm = work.leading_monomial();
    for (auto& g : G) {
      if (g.is_zero_poly()) continue;
      if (divides(g.leading_monomial(), lm)) {
        Monomial m = lm / g.leading_monomial();
        K c = work.leading_coeff() * inv(g.leading_coeff());
        work.sub_mul(c, m, g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.terms.push_back(work.terms.front());
      work.terms.erase(work.terms.begin());
    }
  }
  return rem;
}

namespace detail {

template <class K>
struct SPair {
  int i, j;
  Monomial lcm_ij;
  int deg;
};

/// Gebauer-Moeller pair update: add generator index t to the pair queue.
template <class K>
void gm_update(std::vector<SPair<K>>& pairs, const std::vector<Polynomial<K>>& G, int t) {
  const Monomial& lt = G[t].leading_monomial();
  std::vector<SPair<K>> fresh;
  for (int i = 0; i < t; ++i) {
    if (G[i].is_zero_poly()) continue;
    SPair<K> p{i, t, lcm(G[i].leading_monomial(), lt), 0};
    p.deg = p.lcm_ij.degree();
    fresh.push_back(std::move(p));
  }
  // drop old pairs whose lcm is strictly covered by the new leading term
  pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                             [&](const SPair<K>& p) {
                               return divides(lt, p.lcm_ij) &&
                                      lcm(G[p.i].leading_monomial(), lt) != p.lcm_ij &&
                                      lcm(G[p.j].leading_monomial(), lt) != p.lcm_ij;
                             }),
              pairs.end());
  // among the fresh pairs keep only those with minimal lcm
  std::vector<SPair<K>> kept;
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
      if (a == b) continue;
      if (fresh[b].lcm_ij == fresh[a].lcm_ij) {
        if (b < a) drop = true;  // keep one representative
      } else if (divides(fresh[b].lcm_ij, fresh[a].lcm_ij)) {
        drop = true;
      }
    }
    if (!drop) kept.push_back(fresh[a]);
  }
  // Buchberger's coprimality criterion
  for (auto& p : kept) {
    if (!coprime(G[p.i].leading_monomial(), G[p.j].leading_monomial()))
      pairs.push_back(p);
  }
}

}  // namespace detail

/// Make the basis reduced: each element fully reduced against the others,
/// normalized, sorted by ascending leading monomial.
template <class K>
void interreduce(std::vector<Polynomial<K>>& G, MonomialOrder ord) {
  // discard elements whose leading monomial is divisible by another's
  std::vector<Polynomial<K>> mins;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero_poly()) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || G[j].is_zero_poly()) continue;
      if (divides(G[j].leading_monomial(), G[i].leading_monomial())) {
        if (G[j].leading_monomial() == G[i].leading_monomial() && j > i) continue;
        redundant = true;
      }
    }
    if (!redundant) mins.push_back(G[i]);
  }
  std::vector<Polynomial<K>> out;
  for (std::size_t i = 0; i < mins.size(); ++i) {
    std::vector<Polynomial<K>> others;
    for (std::size_t j = 0; j < mins.size(); ++j)
      if (j != i) others.push_back(mins[j]);
    Polynomial<K> r = normal_form(mins[i], others, ord);
    if (!r.is_zero_poly()) out.push_back(normalized(r));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
    return ord.less(a.leading_monomial(), b.leading_monomial());
  });
  G = std::move(out);
}

/// Buchberger with normal (sugarless degree) selection and Gebauer-Moeller
/// pair elimination; returns the reduced basis.
template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, MonomialOrder ord) {
  GroebnerBasis<K> gb;
  gb.ring = I.ring;
  gb.ord = ord;
  std::vector<Polynomial<K>> G;
  std::vector<detail::SPair<K>> pairs;
  std::vector<Polynomial<K>> input;
  for (auto& f : I.gens)
    if (!f.is_zero_poly()) input.push_back(normalized(f.reorder(ord)));
  // feed smaller inputs first
  std::sort(input.begin(), input.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
    return ord.less(a.leading_monomial(), b.leading_monomial());
  });
  for (auto& f : input) {
    Polynomial<K> r = normal_form(f, G, ord);
    if (r.is_zero_poly()) continue;
    G.push_back(normalized(r));
    detail::gm_update(pairs, G, static_cast<int>(G.size()) - 1);
  }
  while (!pairs.empty()) {
    // normal selection: minimal lcm degree, ties by the order on lcms
    std::size_t best = 0;
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      if (pairs[i].deg < pairs[best].deg ||
          (pairs[i].deg == pairs[best].deg && ord.less(pairs[i].lcm_ij, pairs[best].lcm_ij)))
        best = i;
    }
    detail::SPair<K> p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    const Polynomial<K>& f = G[p.i];
    const Polynomial<K>& g = G[p.j];
    Monomial mf = p.lcm_ij / f.leading_monomial();
    Monomial mg = p.lcm_ij / g.leading_monomial();
    Polynomial<K> s(f.ring, ord);
    s.sub_mul(-inv(f.leading_coeff()), mf, f);
    s.sub_mul(inv(g.leading_coeff()), mg, g);
    Polynomial<K> r = normal_form(s, G, ord);
    if (r.is_zero_poly()) continue;
    G.push_back(normalized(r));
    detail::gm_update(pairs, G, static_cast<int>(G.size()) - 1);
  }
  interreduce(G, ord);
  gb.elems = std::move(G);
  return gb;
}

template <class K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& gens, MonomialOrder ord) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list needs a ring");
  return buchberger(Ideal<K>(gens[0].ring, gens), ord);
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
  return normal_form(f, gb.elems, gb.ord);
}

template <class K>
bool is_unit_ideal(const GroebnerBasis<K>& gb) {
  return gb.elems.size() == 1 && gb.elems[0].is_constant() && !gb.elems[0].is_zero_poly();
}

template <class K>
bool member(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
  return normal_form(f, gb).is_zero_poly();
}

}  // namespace disc

#endif
