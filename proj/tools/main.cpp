// dlocus: command-line driver for the discriminant-locus toolkit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "disclocus/catalog.hpp"

using namespace disc;

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field_spec;
  std::uint64_t seed = 1;
  bool machine = false;
  FieldKind field = FieldKind::GF;
  std::int64_t prime = 32003;

  void resolve() {
    if (field_spec.empty()) {
      const char* env = std::getenv("DLOCUS_FIELD");
      field_spec = env ? env : "gf:32003";
    }
    auto [f, p] = parse_field_spec(field_spec);
    field = f;
    prime = p;
  }
};

void kv(const std::string& key, const std::string& val) {
  std::cout << key << ": " << val << "\n";
}

// Infer a ring for an inline polynomial: identifiers, sorted.
std::vector<std::string> inline_vars(const std::string& text) {
  std::set<std::string> names;
  std::string cur;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    char c = i < text.size() ? text[i] : ' ';
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
        (!cur.empty() && std::isdigit(static_cast<unsigned char>(c)))) {
      cur += c;
    } else {
      if (!cur.empty()) names.insert(cur);
      cur.clear();
    }
  }
  return {names.begin(), names.end()};
}

template <class K>
void print_ideal_block(const Ideal<K>& I, bool machine) {
  if (machine) {
    kv("ring", ring_decl_string(I.ring));
    kv("gens", std::to_string(I.gens.size()));
    for (std::size_t i = 0; i < I.gens.size(); ++i)
      kv("gen" + std::to_string(i), to_string(normalized(I.gens[i])));
  } else {
    std::cout << ring_decl_string(I.ring) << "\n";
    for (auto& g : I.gens) std::cout << to_string(normalized(g)) << "\n";
  }
}

template <class K>
int cmd_dual(const std::string& path, const Options& opt) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  auto text = read_ideal_text(in);
  RingPtr r = realize_ring<K>(text.ring, opt.field, opt.prime);
  Ideal<K> X = realize_ideal<K>(text, r);
  Ideal<K> D = dual_variety(X);
  print_ideal_block(D, opt.machine);
  return 0;
}

template <class K>
int cmd_discriminant(const std::string& path, const Options& opt, const std::string& verb) {
  auto text = read_linsys_file(path);
  RingPtr r = realize_ring<K>(text.ring, opt.field, opt.prime);
  LinearSystem<K> V = realize_linear_system<K>(text, r);
  auto rep = discriminant(V);
  if (verb == "codegree") {
    kv("codegree", std::to_string(rep.codegree));
    kv("defect", std::to_string(rep.defect));
    return 0;
  }
  if (verb == "jumping-sets") {
    kv("n", std::to_string(rep.jumping.n));
    for (int i = 1; i <= rep.jumping.n; ++i) {
      std::string gens;
      for (auto& g : rep.jumping.J(i).gens) gens += to_string(normalized(g)) + "; ";
      kv("J" + std::to_string(i) + "_dim", std::to_string(rep.jumping.dims[i - 1]));
      kv("J" + std::to_string(i) + "_empty", rep.jumping.is_empty(i) ? "true" : "false");
      kv("J" + std::to_string(i), gens);
    }
    return 0;
  }
  if (verb == "strata") {
    for (auto& [i, D] : rep.strata) {
      std::string gens;
      for (auto& g : D.gens) gens += to_string(normalized(g)) + "; ";
      kv("D" + std::to_string(i), gens);
    }
    return 0;
  }
  kv("dual_ring", ring_decl_string(rep.dual_ring));
  kv("empty", rep.empty ? "true" : "false");
  if (rep.reduced_equation) kv("equation", to_string(normalized(*rep.reduced_equation)));
  kv("codegree", std::to_string(rep.codegree));
  kv("defect", std::to_string(rep.defect));
  kv("hyperplanes", std::to_string(rep.hyperplanes.forms.size()));
  for (std::size_t i = 0; i < rep.hyperplanes.forms.size(); ++i)
    kv("hyperplane" + std::to_string(i), to_string(rep.hyperplanes.forms[i]));
  for (auto& [i, D] : rep.strata) {
    std::string gens;
    for (auto& g : D.gens) gens += to_string(normalized(g)) + "; ";
    kv("D" + std::to_string(i), gens);
  }
  return 0;
}

template <class K>
int cmd_milnor(const std::string& expr, const Options& opt) {
  auto vars = inline_vars(expr);
  if (vars.empty()) throw std::invalid_argument("no variables in '" + expr + "'");
  RingPtr r = opt.field == FieldKind::GF ? make_ring(vars, FieldKind::GF, opt.prime)
                                         : make_ring(vars);
  auto f = parse_polynomial<K>(r, expr);
  auto md = milnor(f);
  kv("mu", md.infinite ? "infinite" : std::to_string(md.mu));
  if (md.infinite) throw CheckFailure("singularity is not isolated");
  return 0;
}

template <class K>
int cmd_pencil(const std::string& path, const Options& opt) {
  auto text = read_linsys_file(path);
  RingPtr r = realize_ring<K>(text.ring, opt.field, opt.prime);
  LinearSystem<K> V = realize_linear_system<K>(text, r);
  auto rep = pencil_verify(V, opt.seed);
  kv("ok", rep.ok ? "true" : "false");
  if (!rep.ok) throw CheckFailure("pencil draw failed: " + rep.failure);
  kv("cn", std::to_string(rep.cn));
  kv("milnor_sum", std::to_string(rep.milnor_sum));
  kv("draws", std::to_string(rep.draws_used));
  kv("members", std::to_string(rep.members.size()));
  kv("identity", rep.identity_holds ? "true" : "false");
  if (!rep.identity_holds) throw CheckFailure("Milnor sum does not match c_n");
  return 0;
}

template <class K>
int cmd_wronskian(const std::string& fs, const std::string& gs, const Options& opt) {
  auto vars = inline_vars(fs + " " + gs);
  if (vars.size() != 2)
    throw std::invalid_argument("wronskian expects binary forms in two variables");
  RingPtr r = opt.field == FieldKind::GF ? make_ring(vars, FieldKind::GF, opt.prime)
                                         : make_ring(vars);
  auto rep = wronskian_branch(parse_polynomial<K>(r, fs), parse_polynomial<K>(r, gs));
  kv("wronskian", to_string(normalized(rep.wronskian)));
  kv("complete", rep.complete ? "true" : "false");
  kv("codegree", std::to_string(rep.codegree));
  std::string prof;
  for (auto& ram : rep.ramification) prof += std::to_string(ram.second) + " ";
  kv("ram_profile", prof);
  return 0;
}

int cmd_invariants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  SurfaceNumerics s = read_surface_numerics(in);
  kv("c2_jet", std::to_string(c2_jet_surface(s)));
  kv("genus_consistent", s.genus_consistent() ? "true" : "false");
  if (!s.genus_consistent()) throw CheckFailure("genus formula fails on the input block");
  return 0;
}

int cmd_scan6(long long emax, long long amax, long long bmax) {
  auto survivors = scan_section6(emax, amax, bmax);
  kv("survivors", std::to_string(survivors.size()));
  bool all = true;
  for (auto& s : survivors) {
    std::cout << "e " << s.e << " a " << s.a << " b " << s.b
              << (scan_survivor_in_expected_families(s) ? "" : "  UNEXPECTED") << "\n";
    if (!scan_survivor_in_expected_families(s)) all = false;
  }
  kv("all_in_expected_families", all ? "true" : "false");
  if (!all) throw CheckFailure("scanner found a survivor outside the expected families");
  return 0;
}

int print_fixture(const FixtureReport& rep, bool machine) {
  if (machine) {
    kv("fixture", rep.id);
    kv("pass", rep.pass ? "true" : "false");
  } else {
    std::cout << (rep.pass ? "PASS " : "FAIL ") << rep.id << "\n";
    for (auto& l : rep.lines) std::cout << "  " << l << "\n";
  }
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discriminant loci of spanned linear systems"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--field", opt.field_spec, "coefficient field: q or gf:<p>");
  app.add_option("--seed", opt.seed, "seed for randomized operations");
  app.add_flag("--machine", opt.machine, "machine-readable key: value output");

  std::string path, path2, fixtures_dir = "fixtures";
  long long emax = 5, amax = 6, bmax = 40;

  auto* dual = app.add_subcommand("dual", "dual variety of a projective ideal");
  dual->add_option("ideal", path, "ideal file")->required();
  auto* disc_cmd = app.add_subcommand("discriminant", "discriminant of a linear system");
  disc_cmd->add_option("system", path, "linear system file")->required();
  auto* jsets = app.add_subcommand("jumping-sets", "jumping sets of a linear system");
  jsets->add_option("system", path, "linear system file")->required();
  auto* strata_cmd = app.add_subcommand("strata", "discriminant strata D_i");
  strata_cmd->add_option("system", path, "linear system file")->required();
  auto* codeg = app.add_subcommand("codegree", "codegree and dual defect");
  codeg->add_option("system", path, "linear system file")->required();
  auto* miln = app.add_subcommand("milnor", "Milnor number at the origin");
  miln->add_option("poly", path, "polynomial text")->required();
  auto* pencil = app.add_subcommand("pencil-verify", "Milnor-sum identity on a random pencil");
  pencil->add_option("system", path, "linear system file")->required();
  auto* wrons = app.add_subcommand("wronskian", "branch data of a pencil on P^1");
  wrons->add_option("f", path, "first binary form")->required();
  wrons->add_option("g", path2, "second binary form")->required();
  auto* inv = app.add_subcommand("invariants", "surface jet invariants from a key:value block");
  inv->add_option("surface", path, "surface numerics file")->required();
  auto* scan = app.add_subcommand("scan6", "ruled-surface inequality scan");
  scan->add_option("emax", emax, "e bound");
  scan->add_option("amax", amax, "a bound");
  scan->add_option("bmax", bmax, "b bound");
  auto* fix = app.add_subcommand("fixture", "run one catalog fixture");
  fix->add_option("fixture", path, "fixture file")->required();
  auto* fixall = app.add_subcommand("fixture-all", "run the whole fixture roster");
  fixall->add_option("--fixtures", fixtures_dir, "fixture directory");
  fix->add_option("--fixtures", fixtures_dir, "fixture directory");

  CLI11_PARSE(app, argc, argv);

  try {
    opt.resolve();
    auto dispatch_linsys = [&](const std::string& verb) {
      return opt.field == FieldKind::Q ? cmd_discriminant<Rational>(path, opt, verb)
                                       : cmd_discriminant<Fp>(path, opt, verb);
    };
    if (dual->parsed())
      return opt.field == FieldKind::Q ? cmd_dual<Rational>(path, opt)
                                       : cmd_dual<Fp>(path, opt);
    if (disc_cmd->parsed()) return dispatch_linsys("discriminant");
    if (jsets->parsed()) return dispatch_linsys("jumping-sets");
    if (strata_cmd->parsed()) return dispatch_linsys("strata");
    if (codeg->parsed()) return dispatch_linsys("codegree");
    if (miln->parsed())
      return opt.field == FieldKind::Q ? cmd_milnor<Rational>(path, opt)
                                       : cmd_milnor<Fp>(path, opt);
    if (pencil->parsed())
      return opt.field == FieldKind::Q ? cmd_pencil<Rational>(path, opt)
                                       : cmd_pencil<Fp>(path, opt);
    if (wrons->parsed())
      return opt.field == FieldKind::Q ? cmd_wronskian<Rational>(path, path2, opt)
                                       : cmd_wronskian<Fp>(path, path2, opt);
    if (inv->parsed()) return cmd_invariants(path);
    if (scan->parsed()) return cmd_scan6(emax, amax, bmax);
    if (fix->parsed()) {
      std::string p = path;
      if (p.find('/') == std::string::npos && p.rfind(".fix") == std::string::npos)
        p = fixtures_dir + "/" + p + ".fix";
      return print_fixture(run_fixture_file(p, opt.field, opt.prime), opt.machine);
    }
    if (fixall->parsed()) {
      int fails = 0;
      for (auto& f : fixture_roster(fixtures_dir))
        fails += print_fixture(run_fixture_file(f, opt.field, opt.prime), opt.machine);
      kv("failures", std::to_string(fails));
      return fails == 0 ? 0 : 1;
    }
  } catch (const CheckFailure& ex) {
    std::cerr << "check failed: " << ex.what() << "\n";
    return 1;
  } catch (const ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
