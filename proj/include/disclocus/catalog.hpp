#ifndef DISCLOCUS_CATALOG_HPP
#define DISCLOCUS_CATALOG_HPP

#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pencil.hpp"
#include "serialize.hpp"
#include "wronskian.hpp"

namespace disc {

struct FixtureReport {
  std::string id;
  bool pass = true;
  std::vector<std::string> lines;  // per-check outcomes and diffs

  void check(bool ok, const std::string& what) {
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    if (!ok) pass = false;
  }
  void info(const std::string& what) { lines.push_back("note " + what); }
};

namespace detail {

template <class K>
Polynomial<K> apply_dual_scale(const Polynomial<K>& f, const std::vector<long long>& scale) {
  if (scale.empty()) return f;
  RingPtr r = f.ring;
  if (scale.size() != r->nvars())
    throw std::invalid_argument("dual_scale length does not match dual ring");
  K one = field_one<K>(r);
  std::vector<Polynomial<K>> vals;
  for (std::size_t v = 0; v < r->nvars(); ++v)
    vals.push_back(Polynomial<K>::variable(r, static_cast<int>(v), one)
                       .scaled(field_from_int<K>(r, static_cast<long>(scale[v]))));
  return substitute(f, vals);
}

template <class K>
Ideal<K> apply_dual_scale(const Ideal<K>& I, const std::vector<long long>& scale) {
  Ideal<K> out(I.ring);
  for (auto& g : I.gens) out.gens.push_back(apply_dual_scale(g, scale));
  return out;
}

template <class K>
bool same_equation(const Polynomial<K>& computed, const Polynomial<K>& expected,
                   const std::vector<long long>& scale) {
  return normalized(apply_dual_scale(computed, scale)) == normalized(expected);
}

inline std::vector<long long> ints_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<long long> out;
  long long v;
  while (in >> v) out.push_back(v);
  return out;
}

// Milnor numbers of the singular points of a plane curve given by eq.
template <class K>
bool curve_has_exactly_nodes(const Polynomial<K>& eq, int expected_nodes,
                             std::string& diag) {
  RingPtr r = eq.ring;
  Ideal<K> S(r, {eq});
  for (std::size_t v = 0; v < r->nvars(); ++v)
    S.gens.push_back(differentiate(eq, static_cast<int>(v)));
  S = saturate_irrelevant(S);
  std::vector<int> vars;
  for (std::size_t v = 0; v < r->nvars(); ++v) vars.push_back(static_cast<int>(v));
  auto pts = projective_points(S, vars);
  if (!pts.zero_dimensional || !pts.complete) {
    diag = "singular locus not a finite rational point set";
    return false;
  }
  if (static_cast<int>(pts.points.size()) != expected_nodes) {
    diag = "found " + std::to_string(pts.points.size()) + " singular points";
    return false;
  }
  for (auto& p : pts.points) {
    std::size_t chart = 0;
    while (chart < p.size() && is_zero(p[chart])) ++chart;
    std::vector<std::string> affvars;
    for (std::size_t v = 0; v < r->nvars(); ++v)
      if (v != chart) affvars.push_back("y_" + r->vars[v]);
    auto aring = make_ring(affvars, r->field, r->prime);
    auto local = dehomogenize_at(eq, p, chart, aring);
    auto md = milnor(local);
    if (md.infinite || md.mu != 1) {
      diag = "singular point is not a node (mu = " + std::to_string(md.mu) + ")";
      return false;
    }
  }
  return true;
}

}  // namespace detail

template <class K>
void run_symbolic_fixture(const LinearSystemText& t, const RingPtr& r, FixtureReport& rep) {
  LinearSystem<K> V = realize_linear_system<K>(t, r);
  auto disc_rep = discriminant(V);
  RingPtr dring = disc_rep.dual_ring;

  for (auto& [key, val] : t.expected) {
    if (key == "equation") {
      bool ok = false;
      if (val == "none") {
        ok = disc_rep.empty;
      } else if (disc_rep.reduced_equation) {
        auto want = parse_polynomial<K>(dring, val);
        ok = detail::same_equation(*disc_rep.reduced_equation, want, t.dual_scale);
      }
      std::string got = disc_rep.reduced_equation
                            ? to_string(normalized(detail::apply_dual_scale(
                                  *disc_rep.reduced_equation, t.dual_scale)))
                            : std::string("<none>");
      rep.check(ok, "equation = " + val + (ok ? "" : " (got " + got + ")"));
    } else if (key == "codegree") {
      rep.check(disc_rep.codegree == std::stoi(val),
                "codegree = " + val + (disc_rep.codegree == std::stoi(val)
                                           ? ""
                                           : " (got " + std::to_string(disc_rep.codegree) + ")"));
    } else if (key == "defect") {
      rep.check(disc_rep.defect == std::stoi(val), "defect = " + val);
    } else if (key == "empty") {
      rep.check(disc_rep.empty == (val == "true"), "empty = " + val);
    } else if (key == "hyperplane_count") {
      int got = static_cast<int>(disc_rep.hyperplanes.forms.size());
      rep.check(got == std::stoi(val),
                "hyperplane_count = " + val +
                    (got == std::stoi(val) ? "" : " (got " + std::to_string(got) + ")"));
    } else if (key == "hyperplane") {
      auto want = monic(parse_polynomial<K>(dring, val));
      bool found = false;
      for (auto& f : disc_rep.hyperplanes.forms)
        if (f == want) found = true;
      rep.check(found, "hyperplane " + val + " detected");
    } else if (key.rfind("stratum", 0) == 0) {
      int i = std::stoi(key.substr(7));
      auto it = disc_rep.strata.find(i);
      bool ok = false;
      std::string got = "<missing>";
      if (it != disc_rep.strata.end()) {
        Ideal<K> want(dring);
        std::istringstream vs(val);
        std::string piece;
        while (std::getline(vs, piece, ';'))
          want.gens.push_back(parse_polynomial<K>(dring, strip(piece)));
        Ideal<K> scaled = detail::apply_dual_scale(it->second, t.dual_scale);
        ok = radical_equal(scaled, want);
        got.clear();
        for (auto& g : scaled.gens) got += to_string(normalized(g)) + "; ";
      }
      rep.check(ok, key + " = " + val + (ok ? "" : " (got " + got + ")"));
    } else if (key == "jumping_nonempty") {
      for (long long i : detail::ints_of(val))
        rep.check(!disc_rep.jumping.is_empty(static_cast<int>(i)),
                  "J_" + std::to_string(i) + " nonempty");
    } else if (key == "jumping_empty") {
      for (long long i : detail::ints_of(val))
        rep.check(disc_rep.jumping.is_empty(static_cast<int>(i)),
                  "J_" + std::to_string(i) + " empty");
    } else if (key == "smooth_discriminant") {
      bool ok = false;
      if (disc_rep.reduced_equation) {
        Ideal<K> S(dring, {*disc_rep.reduced_equation});
        for (std::size_t v = 0; v < dring->nvars(); ++v)
          S.gens.push_back(differentiate(*disc_rep.reduced_equation, static_cast<int>(v)));
        S = saturate_irrelevant(S);
        ok = dimension_degree(S).dim <= 0;
      }
      rep.check(ok == (val == "true"), "smooth discriminant = " + val);
    } else if (key == "nodes") {
      std::string diag;
      bool ok = disc_rep.reduced_equation &&
                detail::curve_has_exactly_nodes(*disc_rep.reduced_equation,
                                                std::stoi(val), diag);
      rep.check(ok, "exactly " + val + " node(s)" + (ok ? "" : " (" + diag + ")"));
    } else if (key == "pencil") {
      // value: <seed> <cn> [<mu-per-singularity>]
      if constexpr (std::is_same_v<K, Rational>) {
        // a random pencil section only splits over Q when the discriminant
        // is a product of rational hyperplanes; fixtures opt in explicitly
        if (t.param_one("pencil_over_q") != "true") {
          rep.info("pencil identity checked over finite fields only");
          continue;
        }
      }
      auto nums = detail::ints_of(val);
      auto prep = pencil_verify(V, static_cast<std::uint64_t>(nums.at(0)));
      rep.check(prep.ok, "pencil draw succeeded" + (prep.ok ? "" : ": " + prep.failure));
      if (prep.ok) {
        rep.check(prep.cn == nums.at(1), "pencil c_n = " + std::to_string(nums.at(1)));
        rep.check(prep.identity_holds,
                  "sum of Milnor numbers " + std::to_string(prep.milnor_sum) +
                      " equals c_n " + std::to_string(prep.cn));
        if (nums.size() > 2)
          for (auto& mem : prep.members)
            for (long long mu : mem.milnor_numbers)
              rep.check(mu == nums[2], "member Milnor number = " + std::to_string(nums[2]));
      }
    } else {
      rep.check(false, "unknown symbolic expectation '" + key + "'");
    }
  }
}

template <class K>
void run_dual_fixture(const LinearSystemText& t, const RingPtr& r, FixtureReport& rep) {
  Ideal<K> X(r);
  for (auto& g : t.ideal_gens) X.gens.push_back(parse_polynomial<K>(r, g));
  ConormalOptions opts;
  if (!t.param_one("smooth_hint").empty()) opts.smooth_hint = std::stoi(t.param_one("smooth_hint"));
  if (t.param_one("cheap_saturation") == "true") opts.cheap_saturation = true;
  opts.dual_names = t.dual_names;
  Ideal<K> D = dual_variety(X, opts);
  RingPtr dring = D.ring;

  for (auto& [key, val] : t.expected) {
    if (key == "dual_degree") {
      auto dd = dimension_degree(buchberger(D, MonomialOrder::grevlex()));
      bool ok = dd.deg == std::stoll(val);
      rep.check(ok, "dual degree = " + val +
                        (ok ? "" : " (got " + std::to_string(dd.deg) + ")"));
    } else if (key == "dual_equation") {
      bool ok = D.gens.size() == 1 &&
                detail::same_equation(D.gens[0], parse_polynomial<K>(dring, val), t.dual_scale);
      rep.check(ok, "dual equation = " + val);
    } else if (key == "radical_equal") {
      Ideal<K> want(dring, {parse_polynomial<K>(dring, val)});
      bool ok = radical_equal(detail::apply_dual_scale(D, t.dual_scale), want);
      rep.check(ok, "dual ideal radical-equal to " + val);
    } else if (key == "bidual") {
      bool ok = bidual_check(X) == (val == "true");
      rep.check(ok, "bidual recovers the source = " + val);
    } else {
      rep.check(false, "unknown dual expectation '" + key + "'");
    }
  }
}

// Flex projection: the input curve F is projected from a coordinate point
// listed as `param: center`. Checks: the listed flexes lie on the curve and
// its hessian, their tangents pass through the center, and the branch form
// (eliminating the center coordinate from (F, polar)) has the expected
// number of distinct roots.
template <class K>
void run_flexproj_fixture(const LinearSystemText& t, const RingPtr& r, FixtureReport& rep) {
  if (t.ideal_gens.size() != 1) throw std::invalid_argument("flexproj needs one gen");
  Polynomial<K> F = parse_polynomial<K>(r, t.ideal_gens[0]);
  auto center = detail::ints_of(t.param_one("center"));
  std::size_t cv = 0;
  for (std::size_t v = 0; v < center.size(); ++v)
    if (center[v] != 0) cv = v;
  int nv = static_cast<int>(r->nvars());
  // hessian determinant of F
  std::vector<std::vector<Polynomial<K>>> H(nv);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) H[i].push_back(differentiate(differentiate(F, i), j));
  auto hess = matrix_minors(H, nv).at(0);

  K one = field_one<K>(r);
  for (auto& fx : t.expect_all("flex")) {
    auto coords = detail::ints_of(fx);
    std::vector<K> p;
    for (auto c : coords) p.push_back(field_from_int<K>(r, static_cast<long>(c)));
    bool on_curve = is_zero(F.evaluate(p, one));
    bool on_hess = is_zero(hess.evaluate(p, one));
    // the tangent line at p contains the center iff the polar of the center
    // vanishes at p
    K pol = K{};
    for (int v = 0; v < nv; ++v)
      pol += differentiate(F, v).evaluate(p, one) *
             field_from_int<K>(r, static_cast<long>(center[static_cast<std::size_t>(v)]));
    rep.check(on_curve && on_hess, "flex (" + fx + ") lies on the curve and its hessian");
    rep.check(is_zero(pol), "tangent at (" + fx + ") passes through the center");
  }
  if (t.has_expect("branch_values")) {
    if (cv != 0)
      throw std::invalid_argument("flexproj center must be the first coordinate point");
    Ideal<K> I(r, {F, differentiate(F, static_cast<int>(cv))});
    Ideal<K> E = eliminate(I, 1);
    std::vector<std::string> rest(r->vars.begin() + 1, r->vars.end());
    Ideal<K> B = drop_front_vars(E, 1, make_ring(rest, r->field, r->prime));
    bool ok = false;
    int got = -1;
    if (B.gens.size() == 1) {
      auto roots = binary_form_roots(squarefree_part(B.gens[0]), 0, 1);
      if (roots.unresolved_degree == 0) got = static_cast<int>(roots.roots.size());
      ok = got == std::stoi(t.expect_one("branch_values"));
    }
    rep.check(ok, t.expect_one("branch_values") + " branch values" +
                      (ok ? "" : " (got " + std::to_string(got) + ")"));
  }
}

// Rational normal curve of degree r projected from a general P^{r-2} inside
// the top osculating space at p1 and containing the intersection with the
// (r-2)-nd osculating space at p2. Coordinates are normalized so that
// p1 = (1:0) and p2 = (0:1); the remaining freedom is a random point of the
// osculating pencil, drawn from the seed and validated by the ramification
// profile.
template <class K>
void run_rncproj_fixture(const LinearSystemText& t, const RingPtr& r, FixtureReport& rep) {
  int deg = std::stoi(t.param_one("r", "3"));
  std::uint64_t seed = std::stoull(t.param_one("seed", "1"));
  std::mt19937_64 rng(seed);
  auto want_profile = detail::ints_of(t.expect_one("ram_profile"));
  int want_values = std::stoi(t.expect_one("branch_values"));

  bool done = false;
  for (int attempt = 0; attempt < 10 && !done; ++attempt) {
    long a = 0, b = 0;
    while (a == 0) a = static_cast<long>(rng() % 41) - 20;
    while (b == 0) b = static_cast<long>(rng() % 41) - 20;
    // projection planes through T: H0 = x_r, H1 = b x_0 - a x_1, restricted
    // to the curve (s^r, s^{r-1} t, ..., t^r)
    K one = field_one<K>(r);
    Polynomial<K> s = Polynomial<K>::variable(r, 0, one);
    Polynomial<K> tt = Polynomial<K>::variable(r, 1, one);
    Polynomial<K> f = tt;
    for (int i = 1; i < deg; ++i) f = f * tt;
    Polynomial<K> sr = s;
    for (int i = 1; i < deg; ++i) sr = sr * s;
    Polynomial<K> smt = tt;  // s^{r-1} t
    for (int i = 0; i < deg - 1; ++i) smt = smt * s;
    Polynomial<K> g = sr.scaled(field_from_int<K>(r, b)) - smt.scaled(field_from_int<K>(r, a));
    BranchReport<K> br;
    try {
      br = wronskian_branch(f, g);
    } catch (const std::exception&) {
      continue;
    }
    if (!br.complete) continue;
    std::vector<long long> profile;
    for (auto& ram : br.ramification) profile.push_back(ram.second);
    std::sort(profile.rbegin(), profile.rend());
    if (profile == want_profile && br.codegree == want_values) {
      rep.check(true, "ramification profile " + t.expect_one("ram_profile") +
                          " and " + t.expect_one("branch_values") +
                          " branch values (draw " + std::to_string(attempt + 1) + ")");
      done = true;
    }
  }
  if (!done) rep.check(false, "no draw matched the expected branch data");
}

// Hyperelliptic double cover y^2 = h: the branch values on P^1 are the
// distinct roots of the ramification form h, expected count 2g+2.
template <class K>
void run_hyperell_fixture(const LinearSystemText& t, const RingPtr& r, FixtureReport& rep) {
  if (t.ideal_gens.size() != 1) throw std::invalid_argument("hyperell needs one gen");
  Polynomial<K> h = parse_polynomial<K>(r, t.ideal_gens[0]);
  int genus = std::stoi(t.param_one("genus", "2"));
  Polynomial<K> hs = squarefree_part(h);
  auto roots = binary_form_roots(hs, 0, 1);
  int got = roots.unresolved_degree == 0 ? static_cast<int>(roots.roots.size()) : -1;
  int want = std::stoi(t.expect_one("branch_values"));
  rep.check(got == want, std::to_string(want) + " branch values" +
                             (got == want ? "" : " (got " + std::to_string(got) + ")"));
  rep.check(want == 2 * genus + 2, "branch count = 2g+2 at g = " + std::to_string(genus));
}

inline std::string marchionna_name(MarchionnaVerdict v) {
  switch (v) {
    case MarchionnaVerdict::Pass: return "pass";
    case MarchionnaVerdict::ScrollEquality: return "scroll";
    case MarchionnaVerdict::FlaggedException: return "flagged";
    default: return "fail";
  }
}

// Numeric checks: "fn args = expected".
inline void run_numeric_check(const std::string& line, FixtureReport& rep) {
  std::size_t eq = line.rfind('=');
  if (eq == std::string::npos) throw std::invalid_argument("check needs '=': " + line);
  std::string lhs = strip(line.substr(0, eq));
  std::string want = strip(line.substr(eq + 1));
  std::istringstream in(lhs);
  std::string fn;
  in >> fn;
  auto want_ints = detail::ints_of(want);
  auto ok_int = [&](long long got) {
    bool ok = !want_ints.empty() && got == want_ints[0];
    rep.check(ok, line + (ok ? "" : " (got " + std::to_string(got) + ")"));
  };
  auto ok_bool = [&](bool got) {
    bool ok = got == (want == "true");
    rep.check(ok, line);
  };

  if (fn == "c2_jet_surface") {
    SurfaceNumerics s;
    in >> s.e >> s.KL >> s.L2;
    ok_int(c2_jet_surface(s));
  } else if (fn == "cn_jet_pn") {
    int n, m;
    in >> n >> m;
    ok_int(cn_jet_pn(n, m));
  } else if (fn == "c2_jet_cyclic") {
    int d, b;
    in >> d >> b;
    auto c = c2_jet_cyclic(d, b);
    bool ok = want_ints.size() == 3 && c.c2 == want_ints[0] &&
              c.branch_class == want_ints[1] && c.multiplier == want_ints[2];
    rep.check(ok, line + (ok ? ""
                             : " (got " + std::to_string(c.c2) + " " +
                                   std::to_string(c.branch_class) + " " +
                                   std::to_string(c.multiplier) + ")"));
  } else if (fn == "ruled_dot") {
    RuledClass d1, d2;
    in >> d1.a >> d1.b >> d2.a >> d2.b >> d1.e >> d1.g;
    d2.e = d1.e;
    d2.g = d1.g;
    ok_int(ruled_dot(d1, d2));
  } else if (fn == "ruled_canonical") {
    long long g, e;
    in >> g >> e;
    auto k = ruled_canonical(g, e);
    bool ok = want_ints.size() == 2 && k.a == want_ints[0] && k.b == want_ints[1];
    rep.check(ok, line);
  } else if (fn == "dual_degree_plane_curve") {
    int d, g;
    in >> d >> g;
    ok_int(dual_degree_plane_curve(d, g));
  } else if (fn == "single_branch_impossible") {
    int d, m;
    in >> d >> m;
    ok_bool(single_branch_impossible(d, m));
  } else if (fn == "codegree_identity") {
    long long cn;
    in >> cn;
    std::vector<std::pair<long long, long long>> comps;
    std::string tok;
    while (in >> tok) {
      std::size_t c = tok.find(':');
      comps.emplace_back(std::stoll(tok.substr(0, c)), std::stoll(tok.substr(c + 1)));
    }
    ok_bool(codegree_identity_check(comps, cn));
  } else if (fn == "tame") {
    long long codeg, cn;
    in >> codeg >> cn;
    ok_bool(tame_check(codeg, cn));
  } else if (fn == "marchionna") {
    long long codeg, degim;
    int p2o2, scroll;
    in >> codeg >> degim >> p2o2 >> scroll;
    auto v = marchionna_check(codeg, degim, p2o2 != 0, scroll != 0);
    bool ok = marchionna_name(v) == want;
    rep.check(ok, line + (ok ? "" : " (got " + marchionna_name(v) + ")"));
  } else if (fn == "noether") {
    long long chi;
    SurfaceNumerics s;
    in >> chi >> s.e >> s.K2;
    ok_bool(s.noether_consistent(chi));
  } else if (fn == "genus_consistent") {
    SurfaceNumerics s;
    in >> s.e >> s.K2 >> s.KL >> s.L2 >> s.q >> s.gL;
    ok_bool(s.genus_consistent());
  } else if (fn == "product_profile") {
    // product_profile <i> <dims...> / <dims...> [/ ...] = <dim>
    int i;
    in >> i;
    std::vector<std::vector<long long>> profiles(1);
    std::string tok;
    while (in >> tok) {
      if (tok == "/")
        profiles.emplace_back();
      else
        profiles.back().push_back(std::stoll(tok));
    }
    ok_int(product_jumping_profile(profiles, i));
  } else if (fn == "scan6_count") {
    long long emax, amax, bmax;
    in >> emax >> amax >> bmax;
    ok_int(static_cast<long long>(scan_section6(emax, amax, bmax).size()));
  } else if (fn == "scan6_families") {
    long long emax, amax, bmax;
    in >> emax >> amax >> bmax;
    bool all = true;
    for (auto& s : scan_section6(emax, amax, bmax))
      if (!scan_survivor_in_expected_families(s)) all = false;
    ok_bool(all);
  } else {
    rep.check(false, "unknown check function '" + fn + "'");
  }
}

template <class K>
void run_fixture_typed(const LinearSystemText& t, FixtureReport& rep, FieldKind field,
                       std::int64_t prime) {
  RingPtr r;
  if (t.have_ring) r = realize_ring<K>(t.ring, field, prime);
  if (t.kind == "symbolic") {
    run_symbolic_fixture<K>(t, r, rep);
  } else if (t.kind == "dual") {
    run_dual_fixture<K>(t, r, rep);
  } else if (t.kind == "flexproj") {
    run_flexproj_fixture<K>(t, r, rep);
  } else if (t.kind == "rncproj") {
    run_rncproj_fixture<K>(t, r, rep);
  } else if (t.kind == "hyperell") {
    run_hyperell_fixture<K>(t, r, rep);
  } else {
    rep.check(false, "unknown fixture kind '" + t.kind + "'");
  }
}

/// Run one fixture under the requested field. Numeric and documentation
/// fixtures ignore the field; symbolic fixtures are skipped (vacuous pass)
/// when the fixture does not declare the field feasible.
inline FixtureReport run_fixture(const LinearSystemText& t, FieldKind field,
                                 std::int64_t prime) {
  FixtureReport rep;
  rep.id = t.id;
  try {
    if (t.kind == "numeric") {
      for (auto& c : t.checks) run_numeric_check(c, rep);
    } else if (t.kind == "doc") {
      rep.info(t.note.empty() ? "documentation-only entry" : t.note);
    } else {
      bool feasible = t.run_fields.empty()
                          ? field == FieldKind::GF
                          : std::find(t.run_fields.begin(), t.run_fields.end(),
                                      field == FieldKind::Q ? "q" : "gf") !=
                                t.run_fields.end();
      if (!feasible) {
        rep.info("skipped: fixture not declared feasible over " +
                 field_spec_string(field, prime));
      } else if (field == FieldKind::Q) {
        run_fixture_typed<Rational>(t, rep, field, prime);
      } else {
        run_fixture_typed<Fp>(t, rep, field, prime);
      }
    }
  } catch (const std::exception& ex) {
    rep.check(false, std::string("engine error: ") + ex.what());
  }
  return rep;
}

inline FixtureReport run_fixture_file(const std::string& path, FieldKind field,
                                      std::int64_t prime) {
  return run_fixture(read_linsys_file(path), field, prime);
}

/// Sorted roster of fixture files (*.fix) in a directory.
inline std::vector<std::string> fixture_roster(const std::string& dir) {
  std::vector<std::string> out;
  for (auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".fix") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace disc

#endif
