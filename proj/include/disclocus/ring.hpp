#ifndef DISCLOCUS_RING_HPP
#define DISCLOCUS_RING_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace disc {

enum class FieldKind { Q, GF };

/// A polynomial ring: an ordered list of variable names plus the coefficient
/// field. Rings are shared by pointer; polynomials over different ring
/// objects never mix even if the variable lists agree.
struct Ring {
  std::vector<std::string> vars;
  FieldKind field = FieldKind::Q;
  std::int64_t prime = 0;  // set when field == GF

  std::size_t nvars() const { return vars.size(); }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }

  std::string field_str() const {
    return field == FieldKind::Q ? "QQ" : "GF(" + std::to_string(prime) + ")";
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, FieldKind field = FieldKind::Q,
                         std::int64_t prime = 0) {
  if (field == FieldKind::GF && prime <= 1)
    throw std::invalid_argument("GF ring needs a prime modulus");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        throw std::invalid_argument("duplicate variable name: " + vars[i]);
  auto r = std::make_shared<Ring>();
  r->vars = std::move(vars);
  r->field = field;
  r->prime = prime;
  return r;
}

/// Same ring up to identity of variable list and field (used when moving
/// polynomials between independently constructed rings).
inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  return a->vars == b->vars && a->field == b->field && a->prime == b->prime;
}

inline RingPtr extend_front(const RingPtr& r, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = extra;
  vars.insert(vars.end(), r->vars.begin(), r->vars.end());
  return make_ring(std::move(vars), r->field, r->prime);
}

inline RingPtr extend_back(const RingPtr& r, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = r->vars;
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make_ring(std::move(vars), r->field, r->prime);
}

/// Pick a variable name not already present: base, base', base'', ... then
/// base_0, base_1, ...
inline std::string fresh_var(const RingPtr& r, const std::string& base) {
  auto taken = [&](const std::string& s) { return r->var_index(s) >= 0; };
  if (!taken(base)) return base;
  for (int i = 0; i < 100; ++i) {
    std::string s = base + "_" + std::to_string(i);
    if (!taken(s)) return s;
  }
  throw std::runtime_error("could not find a fresh variable name");
}

}  // namespace disc

#endif
