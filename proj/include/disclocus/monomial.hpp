#ifndef DISCLOCUS_MONOMIAL_HPP
#define DISCLOCUS_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace disc {

struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return !(e == o.e); }
  bool operator<(const Monomial& o) const { return e < o.e; }  // container use only
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial operator/(const Monomial& b, const Monomial& a) {
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    r.e[i] = b.e[i] - a.e[i];
    if (r.e[i] < 0) throw std::domain_error("monomial quotient not integral");
  }
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

/// Term orders. Elimination order (block k) compares total degree in the
/// first k variables first, breaking ties by grevlex on all variables; the
/// first k variables are thus the ones eliminated.
struct MonomialOrder {
  enum Kind { Lex, Grevlex, Elim };
  Kind kind = Grevlex;
  int block = 0;

  static MonomialOrder lex() { return {Lex, 0}; }
  static MonomialOrder grevlex() { return {Grevlex, 0}; }
  static MonomialOrder elim(int k) { return {Elim, k}; }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != Elim || block == o.block);
  }

  // -1 if a < b, 0 if equal, 1 if a > b
  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Lex: {
        for (std::size_t i = 0; i < a.e.size(); ++i) {
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
      }
      case Grevlex:
        return grevlex_cmp(a, b);
      case Elim: {
        int da = 0, db = 0;
        for (int i = 0; i < block; ++i) { da += a.e[i]; db += b.e[i]; }
        if (da != db) return da > db ? 1 : -1;
        return grevlex_cmp(a, b);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

 private:
  static int grevlex_cmp(const Monomial& a, const Monomial& b) {
    int da = 0, db = 0;
    for (std::size_t i = 0; i < a.e.size(); ++i) { da += a.e[i]; db += b.e[i]; }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.e.size(); i-- > 0;) {
      int d = a.e[i] - b.e[i];
      if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
  }
};

}  // namespace disc

#endif
