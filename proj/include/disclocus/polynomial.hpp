#ifndef DISCLOCUS_POLYNOMIAL_HPP
#define DISCLOCUS_POLYNOMIAL_HPP

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"
#include "ring.hpp"

namespace disc {

/// Sparse polynomial. Terms are kept sorted in strictly descending order
/// under `ord`; no zero coefficients are stored. Arithmetic requires both
/// operands to carry the same order (reorder() a copy otherwise).
template <class K>
class Polynomial {
 public:
  using Term = std::pair<Monomial, K>;

  RingPtr ring;
  MonomialOrder ord = MonomialOrder::grevlex();
  std::vector<Term> terms;  // descending under ord

  Polynomial() = default;
  explicit Polynomial(RingPtr r, MonomialOrder o = MonomialOrder::grevlex())
      : ring(std::move(r)), ord(o) {}

  static Polynomial zero(RingPtr r, MonomialOrder o = MonomialOrder::grevlex()) {
    return Polynomial(std::move(r), o);
  }

  static Polynomial constant(RingPtr r, const K& c,
                             MonomialOrder o = MonomialOrder::grevlex()) {
    Polynomial p(r, o);
    if (!is_zero(c)) p.terms.emplace_back(Monomial(r->nvars()), c);
    return p;
  }

  static Polynomial variable(RingPtr r, int i, const K& one,
                             MonomialOrder o = MonomialOrder::grevlex()) {
    Polynomial p(r, o);
    Monomial m(r->nvars());
    m.e[i] = 1;
    p.terms.emplace_back(m, one);
    return p;
  }

  static Polynomial monomial(RingPtr r, Monomial m, const K& c,
                             MonomialOrder o = MonomialOrder::grevlex()) {
    Polynomial p(std::move(r), o);
    if (!is_zero(c)) p.terms.emplace_back(std::move(m), c);
    return p;
  }

  bool is_zero_poly() const { return terms.empty(); }
  bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].first.is_one()); }

  const Monomial& leading_monomial() const {
    if (terms.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms.front().first;
  }
  const K& leading_coeff() const {
    if (terms.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms.front().second;
  }

  int total_degree() const {
    int d = -1;
    for (auto& t : terms) d = std::max(d, t.first.degree());
    return d;
  }

  int degree_in(int var) const {
    int d = 0;
    for (auto& t : terms) d = std::max(d, t.first.e[var]);
    return d;
  }

  bool depends_on(int var) const {
    for (auto& t : terms)
      if (t.first.e[var] > 0) return true;
    return false;
  }

  bool is_homogeneous() const {
    if (terms.empty()) return true;
    int d = terms[0].first.degree();
    for (auto& t : terms)
      if (t.first.degree() != d) return false;
    return true;
  }

  Polynomial reorder(MonomialOrder o) const {
    if (o == ord) return *this;
    Polynomial r(ring, o);
    r.terms = terms;
    std::sort(r.terms.begin(), r.terms.end(),
              [&](const Term& a, const Term& b) { return o.greater(a.first, b.first); });
    return r;
  }

  bool operator==(const Polynomial& o) const {
    if (!same_ring(ring, o.ring)) return false;
    if (ord == o.ord) return terms == o.terms;
    return terms == o.reorder(ord).terms;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator-() const {
    Polynomial r(ring, ord);
    r.terms.reserve(terms.size());
    for (auto& t : terms) r.terms.emplace_back(t.first, -t.second);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_compat(a, b);
    Polynomial r(a.ring ? a.ring : b.ring, a.ring ? a.ord : b.ord);
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
      int c = r.ord.cmp(a.terms[i].first, b.terms[j].first);
      if (c > 0) {
        r.terms.push_back(a.terms[i++]);
      } else if (c < 0) {
        r.terms.push_back(b.terms[j++]);
      } else {
        K s = a.terms[i].second + b.terms[j].second;
        if (!is_zero(s)) r.terms.emplace_back(a.terms[i].first, s);
        ++i; ++j;
      }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_compat(a, b);
    Polynomial r(a.ring ? a.ring : b.ring, a.ring ? a.ord : b.ord);
    if (a.terms.empty() || b.terms.empty()) return r;
    // accumulate in a map keyed by exponent vector, then sort once
    std::map<Monomial, K> acc;
    for (auto& ta : a.terms)
      for (auto& tb : b.terms) {
        Monomial m = ta.first * tb.first;
        auto it = acc.find(m);
        if (it == acc.end()) acc.emplace(std::move(m), ta.second * tb.second);
        else it->second += ta.second * tb.second;
      }
    r.terms.reserve(acc.size());
    for (auto& kv : acc)
      if (!is_zero(kv.second)) r.terms.emplace_back(kv.first, kv.second);
    std::sort(r.terms.begin(), r.terms.end(), [&](const Term& x, const Term& y) {
      return r.ord.greater(x.first, y.first);
    });
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
  Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
  Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

  Polynomial scaled(const K& c) const {
    Polynomial r(ring, ord);
    if (is_zero(c)) return r;
    r.terms.reserve(terms.size());
    for (auto& t : terms) r.terms.emplace_back(t.first, t.second * c);
    return r;
  }

  /// f - c * m * g, the basic reduction step; single merge pass.
  void sub_mul(const K& c, const Monomial& m, const Polynomial& g) {
    Polynomial shifted(ring, ord);
    shifted.terms.reserve(g.terms.size());
    for (auto& t : g.terms) shifted.terms.emplace_back(t.first * m, -(t.second * c));
    *this = *this + shifted;
  }

  K evaluate(const std::vector<K>& point, const K& one) const {
    K acc{};
    for (auto& t : terms) {
      K v = t.second;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (int k = 0; k < t.first.e[i]; ++k) v *= point[i];
      acc += v;
    }
    (void)one;
    return acc;
  }

  static void check_compat(const Polynomial& a, const Polynomial& b) {
    if (a.ring && b.ring) {
      if (!same_ring(a.ring, b.ring)) throw std::invalid_argument("ring mismatch");
      if (!(a.ord == b.ord)) throw std::invalid_argument("monomial order mismatch");
    }
  }
};

template <class K>
Polynomial<K> differentiate(const Polynomial<K>& f, int var) {
  Polynomial<K> r(f.ring, f.ord);
  r.terms.reserve(f.terms.size());
  for (auto& t : f.terms) {
    int e = t.first.e[var];
    if (e == 0) continue;
    Monomial m = t.first;
    m.e[var] -= 1;
    K c = t.second;
    K mult{};  // build e as a field element: e * coeff via repeated addition
    for (int k = 0; k < e; ++k) mult += c;
    if (!is_zero(mult)) r.terms.emplace_back(std::move(m), std::move(mult));
  }
  std::sort(r.terms.begin(), r.terms.end(),
            [&](const typename Polynomial<K>::Term& a, const typename Polynomial<K>::Term& b) {
              return r.ord.greater(a.first, b.first);
            });
  return r;
}

/// Substitute polynomials for variables: vals[i] replaces variable i.
/// All vals must live in the target ring of the result.
template <class K>
Polynomial<K> substitute(const Polynomial<K>& f, const std::vector<Polynomial<K>>& vals) {
  if (vals.size() != f.ring->nvars())
    throw std::invalid_argument("substitute: need one value per variable");
  RingPtr target = vals.empty() ? f.ring : vals[0].ring;
  MonomialOrder ord = vals.empty() ? f.ord : vals[0].ord;
  Polynomial<K> acc(target, ord);
  for (auto& t : f.terms) {
    Polynomial<K> term = Polynomial<K>::constant(target, t.second, ord);
    for (std::size_t i = 0; i < vals.size(); ++i) {
      for (int k = 0; k < t.first.e[i] && !term.is_zero_poly(); ++k) term *= vals[i];
    }
    acc += term;
  }
  return acc;
}

/// Move f into ring `target` which must contain all variables f uses
/// (matched by name; positions may differ).
template <class K>
Polynomial<K> map_to_ring(const Polynomial<K>& f, const RingPtr& target) {
  std::vector<int> pos(f.ring->nvars(), -1);
  for (std::size_t i = 0; i < f.ring->nvars(); ++i)
    pos[i] = target->var_index(f.ring->vars[i]);
  Polynomial<K> r(target, f.ord);
  r.terms.reserve(f.terms.size());
  for (auto& t : f.terms) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < f.ring->nvars(); ++i) {
      if (t.first.e[i] == 0) continue;
      if (pos[i] < 0)
        throw std::invalid_argument("map_to_ring: variable " + f.ring->vars[i] +
                                    " missing from target ring");
      m.e[pos[i]] = t.first.e[i];
    }
    r.terms.emplace_back(std::move(m), t.second);
  }
  std::sort(r.terms.begin(), r.terms.end(),
            [&](const typename Polynomial<K>::Term& a, const typename Polynomial<K>::Term& b) {
              return r.ord.greater(a.first, b.first);
            });
  return r;
}

// ---- normalization ---------------------------------------------------------

/// Over GF(p): make monic. Over Q: clear denominators and divide by the
/// integer content, sign so the leading coefficient is positive.
inline Polynomial<Fp> normalized(const Polynomial<Fp>& f) {
  if (f.terms.empty()) return f;
  return f.scaled(inv(f.leading_coeff()));
}

inline Polynomial<Rational> normalized(const Polynomial<Rational>& f) {
  if (f.terms.empty()) return f;
  mpz_class den = 1;
  for (auto& t : f.terms) den = lcm(den, t.second.get_den());
  mpz_class num = 0;
  for (auto& t : f.terms) num = gcd(num, mpz_class(t.second.get_num() * (den / t.second.get_den())));
  Rational scale(den, num);
  scale.canonicalize();
  if (f.leading_coeff() * scale < 0) scale = -scale;
  return f.scaled(scale);
}

/// Monic under the polynomial's own order (used for reporting equations).
template <class K>
Polynomial<K> monic(const Polynomial<K>& f) {
  if (f.terms.empty()) return f;
  return f.scaled(inv(f.leading_coeff()));
}

template <class K>
K field_one(const RingPtr& r);

template <>
inline Rational field_one<Rational>(const RingPtr&) { return Rational(1); }

template <>
inline Fp field_one<Fp>(const RingPtr& r) { return Fp(1, r->prime); }

template <class K>
K field_from_int(const RingPtr& r, long v);

template <>
inline Rational field_from_int<Rational>(const RingPtr&, long v) { return Rational(v); }

template <>
inline Fp field_from_int<Fp>(const RingPtr& r, long v) { return Fp(v, r->prime); }

}  // namespace disc

#endif
