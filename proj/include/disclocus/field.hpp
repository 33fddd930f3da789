#ifndef DISCLOCUS_FIELD_HPP
#define DISCLOCUS_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace disc {

using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return a == 0; }
inline bool is_one(const Rational& a) { return a == 1; }
inline Rational inv(const Rational& a) {
  if (a == 0) throw std::domain_error("division by zero in Q");
  return Rational(1) / a;
}
inline std::string coeff_str(const Rational& a) {
  return a.get_str();
}

/// Prime-field element. The modulus travels with the value; a default
/// constructed zero (p == 0) acts as a wildcard identity so that empty
/// accumulators work without knowing the field up front.
struct Fp {
  std::int64_t v = 0;
  std::int64_t p = 0;

  Fp() = default;
  Fp(std::int64_t value, std::int64_t prime) : p(prime) {
    if (prime <= 1) throw std::domain_error("Fp: modulus must be a prime > 1");
    v = value % prime;
    if (v < 0) v += prime;
  }

  static std::int64_t join(std::int64_t a, std::int64_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a != b) throw std::domain_error("Fp: mixed moduli");
    return a;
  }
};

inline bool is_zero(const Fp& a) { return a.v == 0; }
inline bool is_one(const Fp& a) { return a.v == 1; }
inline bool operator==(const Fp& a, const Fp& b) {
  Fp::join(a.p, b.p);
  return a.v == b.v;
}
inline bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

inline Fp operator+(const Fp& a, const Fp& b) {
  std::int64_t p = Fp::join(a.p, b.p);
  if (p == 0) return Fp{};
  std::int64_t s = a.v + b.v;
  if (s >= p) s -= p;
  Fp r; r.v = s; r.p = p; return r;
}
inline Fp operator-(const Fp& a) {
  Fp r; r.p = a.p; r.v = a.v == 0 ? 0 : a.p - a.v; return r;
}
inline Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
inline Fp operator*(const Fp& a, const Fp& b) {
  std::int64_t p = Fp::join(a.p, b.p);
  if (p == 0) return Fp{};
  Fp r; r.p = p;
  r.v = static_cast<std::int64_t>((static_cast<__int128>(a.v) * b.v) % p);
  return r;
}
inline Fp& operator+=(Fp& a, const Fp& b) { a = a + b; return a; }
inline Fp& operator-=(Fp& a, const Fp& b) { a = a - b; return a; }
inline Fp& operator*=(Fp& a, const Fp& b) { a = a * b; return a; }

inline Fp inv(const Fp& a) {
  if (a.v == 0) throw std::domain_error("division by zero in GF(p)");
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = a.p, nr = a.v;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  if (t < 0) t += a.p;
  Fp x; x.v = t; x.p = a.p; return x;
}
inline Fp operator/(const Fp& a, const Fp& b) { return a * inv(b); }

inline std::string coeff_str(const Fp& a) { return std::to_string(a.v); }

}  // namespace disc

#endif
