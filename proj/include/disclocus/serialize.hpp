#ifndef DISCLOCUS_SERIALIZE_HPP
#define DISCLOCUS_SERIALIZE_HPP

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "linsys.hpp"
#include "parse.hpp"

namespace disc {

// Field selector text: "q" or "gf:<p>".
inline std::pair<FieldKind, std::int64_t> parse_field_spec(const std::string& s) {
  if (s == "q" || s == "Q") return {FieldKind::Q, 0};
  if (s.rfind("gf:", 0) == 0) {
    std::int64_t p = std::stoll(s.substr(3));
    if (p < 2) throw std::invalid_argument("field spec: prime must be >= 2");
    return {FieldKind::GF, p};
  }
  throw std::invalid_argument("field spec must be q or gf:<p>, got '" + s + "'");
}

inline std::string field_spec_string(FieldKind f, std::int64_t p) {
  return f == FieldKind::Q ? "q" : "gf:" + std::to_string(p);
}

struct RingDecl {
  std::vector<std::string> vars;
  FieldKind field = FieldKind::Q;
  std::int64_t prime = 0;
};

// "ring x y z over q" / "ring x0 x1 over gf:32003"
inline RingDecl parse_ring_decl(const std::string& line) {
  std::istringstream in(line);
  std::string tok;
  in >> tok;
  if (tok != "ring") throw std::invalid_argument("expected 'ring ... over <field>'");
  RingDecl d;
  std::vector<std::string> toks;
  while (in >> tok) toks.push_back(tok);
  if (toks.size() < 3 || toks[toks.size() - 2] != "over")
    throw std::invalid_argument("ring line must end with 'over <field>'");
  for (std::size_t i = 0; i + 2 < toks.size(); ++i) d.vars.push_back(toks[i]);
  auto [f, p] = parse_field_spec(toks.back());
  d.field = f;
  d.prime = p;
  return d;
}

inline std::string ring_decl_string(const RingPtr& r) {
  std::string s = "ring";
  for (auto& v : r->vars) s += " " + v;
  s += " over " + field_spec_string(r->field, r->prime);
  return s;
}

inline std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Ideal file: ring declaration header, then one polynomial per line.
struct IdealText {
  RingDecl ring;
  std::vector<std::string> polys;
};

inline IdealText read_ideal_text(std::istream& in) {
  IdealText out;
  std::string line;
  bool have_ring = false;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    if (!have_ring) {
      out.ring = parse_ring_decl(line);
      have_ring = true;
    } else {
      out.polys.push_back(line);
    }
  }
  if (!have_ring) throw std::invalid_argument("ideal file has no ring declaration");
  return out;
}

template <class K>
RingPtr realize_ring(const RingDecl& d, FieldKind field, std::int64_t prime) {
  if constexpr (std::is_same_v<K, Fp>) {
    if (field != FieldKind::GF) throw std::invalid_argument("Fp realization needs gf field");
    return make_ring(d.vars, FieldKind::GF, prime);
  } else {
    (void)field;
    (void)prime;
    return make_ring(d.vars);
  }
}

template <class K>
Ideal<K> realize_ideal(const IdealText& t, const RingPtr& r) {
  Ideal<K> I(r);
  for (auto& p : t.polys) I.gens.push_back(parse_polynomial<K>(r, p));
  return I;
}

template <class K>
void write_ideal(std::ostream& out, const Ideal<K>& I) {
  out << ring_decl_string(I.ring) << "\n";
  for (auto& g : I.gens) out << to_string(g) << "\n";
}

// Linear system / fixture file. Shared reader: fixtures are linear-system
// files with extra metadata keys and an expected block.
struct LinearSystemText {
  std::string id;
  std::string kind = "symbolic";
  RingDecl ring;
  bool have_ring = false;
  std::vector<std::string> run_fields;  // e.g. {"gf", "q"}; empty = gf only
  std::string hypersurface;             // empty if none
  std::vector<std::string> sections;
  std::vector<std::string> ideal_gens;  // for dual-kind fixtures
  std::vector<std::string> dual_names;
  std::vector<long long> dual_scale;    // per dual coordinate; empty = all 1
  std::vector<std::string> checks;      // numeric "check: ..." payloads
  std::vector<std::pair<std::string, std::string>> params;  // kind-specific inputs
  std::string note;

  std::string param_one(const std::string& key, const std::string& fallback = "") const {
    for (auto& [k, v] : params)
      if (k == key) return v;
    return fallback;
  }
  // expected block: repeatable key -> values, insertion-ordered per key
  std::vector<std::pair<std::string, std::string>> expected;

  std::vector<std::string> expect_all(const std::string& key) const {
    std::vector<std::string> out;
    for (auto& [k, v] : expected)
      if (k == key) out.push_back(v);
    return out;
  }
  std::string expect_one(const std::string& key, const std::string& fallback = "") const {
    for (auto& [k, v] : expected)
      if (k == key) return v;
    return fallback;
  }
  bool has_expect(const std::string& key) const {
    for (auto& [k, v] : expected)
      if (k == key) return true;
    return false;
  }
};

inline LinearSystemText read_linsys_text(std::istream& in) {
  LinearSystemText out;
  std::string line;
  bool in_expected = false;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    if (line == "expected:") {
      in_expected = true;
      continue;
    }
    if (line.rfind("ring ", 0) == 0) {
      out.ring = parse_ring_decl(line);
      out.have_ring = true;
      continue;
    }
    std::size_t c = line.find(':');
    if (c == std::string::npos)
      throw std::invalid_argument("bad fixture line: '" + line + "'");
    std::string key = strip(line.substr(0, c));
    std::string val = strip(line.substr(c + 1));
    if (in_expected) {
      out.expected.emplace_back(key, val);
      continue;
    }
    if (key == "id") {
      out.id = val;
    } else if (key == "kind") {
      out.kind = val;
    } else if (key == "fields") {
      std::istringstream vs(val);
      std::string t;
      while (vs >> t) out.run_fields.push_back(t);
    } else if (key == "hypersurface") {
      out.hypersurface = val;
    } else if (key == "section") {
      out.sections.push_back(val);
    } else if (key == "gen") {
      out.ideal_gens.push_back(val);
    } else if (key == "dual") {
      std::istringstream vs(val);
      std::string t;
      while (vs >> t) out.dual_names.push_back(t);
    } else if (key == "dual_scale") {
      std::istringstream vs(val);
      long long t;
      while (vs >> t) out.dual_scale.push_back(t);
    } else if (key == "check") {
      out.checks.push_back(val);
    } else if (key == "param") {
      std::istringstream vs(val);
      std::string pk;
      vs >> pk;
      std::string pv;
      std::getline(vs, pv);
      out.params.emplace_back(pk, strip(pv));
    } else if (key == "note") {
      out.note = val;
    } else {
      throw std::invalid_argument("unknown fixture key '" + key + "'");
    }
  }
  return out;
}

inline LinearSystemText read_linsys_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_linsys_text(in);
}

template <class K>
LinearSystem<K> realize_linear_system(const LinearSystemText& t, const RingPtr& r) {
  LinearSystem<K> V;
  V.ring = r;
  if (!t.hypersurface.empty())
    V.hypersurface = parse_polynomial<K>(r, t.hypersurface);
  for (auto& s : t.sections) V.sections.push_back(parse_polynomial<K>(r, s));
  V.dual_names = t.dual_names;
  return V;
}

template <class K>
void write_linear_system(std::ostream& out, const LinearSystem<K>& V) {
  out << ring_decl_string(V.ring) << "\n";
  if (V.hypersurface) out << "hypersurface: " << to_string(*V.hypersurface) << "\n";
  for (auto& s : V.sections) out << "section: " << to_string(s) << "\n";
  if (!V.dual_names.empty()) {
    out << "dual:";
    for (auto& d : V.dual_names) out << " " << d;
    out << "\n";
  }
}

// Surface invariants as a key:value block.
inline SurfaceNumerics read_surface_numerics(std::istream& in) {
  SurfaceNumerics s;
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    std::size_t c = line.find(':');
    if (c == std::string::npos) throw std::invalid_argument("bad surface line: " + line);
    std::string key = strip(line.substr(0, c));
    long long val = std::stoll(strip(line.substr(c + 1)));
    if (key == "e") s.e = val;
    else if (key == "K2") s.K2 = val;
    else if (key == "KL") s.KL = val;
    else if (key == "L2") s.L2 = val;
    else if (key == "q") s.q = val;
    else if (key == "gL") s.gL = val;
    else throw std::invalid_argument("unknown surface key '" + key + "'");
  }
  return s;
}

}  // namespace disc

#endif
