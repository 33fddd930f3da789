#ifndef DISCLOCUS_PARSE_HPP
#define DISCLOCUS_PARSE_HPP

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "polynomial.hpp"

namespace disc {

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at)
      : std::runtime_error(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

namespace detail {

class PolyLexer {
 public:
  explicit PolyLexer(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eof() { skip_ws(); return i_ >= s_.size(); }
  char peek() { skip_ws(); return i_ < s_.size() ? s_[i_] : '\0'; }
  char get() { skip_ws(); return s_[i_++]; }
  std::size_t pos() const { return i_; }

  bool at_ident() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

  std::string ident() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
      ++i_;
    if (i_ == start) throw ParseError("expected identifier", i_);
    return s_.substr(start, i_ - start);
  }

  std::string digits() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == start) throw ParseError("expected number", i_);
    return s_.substr(start, i_ - start);
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

template <class K>
K parse_coeff(const RingPtr& ring, const std::string& num, const std::string& den);

template <>
inline Rational parse_coeff<Rational>(const RingPtr&, const std::string& num,
                                      const std::string& den) {
  Rational r(num + (den.empty() ? "" : "/" + den));
  r.canonicalize();
  return r;
}

template <>
inline Fp parse_coeff<Fp>(const RingPtr& ring, const std::string& num,
                          const std::string& den) {
  // reduce the (possibly huge) integer literal mod p via gmp
  mpz_class n(num);
  Fp a(mpz_class(n % ring->prime).get_si(), ring->prime);
  if (den.empty()) return a;
  mpz_class d(den);
  Fp b(mpz_class(d % ring->prime).get_si(), ring->prime);
  return a / b;
}

}  // namespace detail

/// Parse the textual polynomial grammar: sums/differences of terms, each a
/// product of an optional integer or a/b coefficient and powers `v^e`
/// (the `*` between factors is optional).
template <class K>
Polynomial<K> parse_polynomial(const RingPtr& ring, const std::string& text,
                               MonomialOrder ord = MonomialOrder::grevlex()) {
  detail::PolyLexer lex(text);
  Polynomial<K> acc(ring, ord);
  bool first = true;
  while (!lex.eof()) {
    int sign = 1;
    if (lex.peek() == '+' || lex.peek() == '-') {
      if (lex.get() == '-') sign = -1;
      while (lex.peek() == '+' || lex.peek() == '-')
        if (lex.get() == '-') sign = -sign;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", lex.pos());
    }
    first = false;
    if (lex.eof()) throw ParseError("dangling sign", lex.pos());

    K coeff = field_one<K>(ring);
    if (sign < 0) coeff = -coeff;
    Monomial mono(ring->nvars());
    bool saw_factor = false;
    while (true) {
      if (lex.at_digit()) {
        std::string num = lex.digits();
        std::string den;
        if (lex.peek() == '/') { lex.get(); den = lex.digits(); }
        coeff *= detail::parse_coeff<K>(ring, num, den);
        saw_factor = true;
      } else if (lex.at_ident()) {
        std::size_t at = lex.pos();
        std::string name = lex.ident();
        int idx = ring->var_index(name);
        if (idx < 0) throw ParseError("unknown variable '" + name + "'", at);
        int e = 1;
        if (lex.peek() == '^') {
          lex.get();
          e = std::stoi(lex.digits());
        }
        mono.e[idx] += e;
        saw_factor = true;
      } else {
        break;
      }
      if (lex.peek() == '*') { lex.get(); continue; }
      if (lex.at_digit() || lex.at_ident()) continue;  // juxtaposition
      break;
    }
    if (!saw_factor) throw ParseError("expected a term", lex.pos());
    acc += Polynomial<K>::monomial(ring, mono, coeff, ord);
  }
  return acc;
}

template <class K>
std::string term_str(const RingPtr& ring, const Monomial& m, const K& c, bool lead) {
  std::ostringstream out;
  std::string cs = coeff_str(c);
  bool neg = !cs.empty() && cs[0] == '-';
  std::string abs = neg ? cs.substr(1) : cs;
  if (lead) {
    if (neg) out << "-";
  } else {
    out << (neg ? " - " : " + ");
  }
  bool has_vars = !m.is_one();
  if (!has_vars || abs != "1") {
    out << abs;
    if (has_vars) out << "*";
  }
  bool firstv = true;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (m.e[i] == 0) continue;
    if (!firstv) out << "*";
    firstv = false;
    out << ring->vars[i];
    if (m.e[i] > 1) out << "^" << m.e[i];
  }
  return out.str();
}

/// Canonical printing: descending grevlex, explicit `*` and `^`.
template <class K>
std::string to_string(const Polynomial<K>& f) {
  if (f.terms.empty()) return "0";
  Polynomial<K> g = f.reorder(MonomialOrder::grevlex());
  std::string out;
  for (std::size_t i = 0; i < g.terms.size(); ++i)
    out += term_str(g.ring, g.terms[i].first, g.terms[i].second, i == 0);
  return out;
}

}  // namespace disc

#endif
