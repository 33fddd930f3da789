// Python module: thin text-based wrappers around the symbolic engine.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "disclocus/catalog.hpp"

namespace py = pybind11;
using namespace disc;

namespace {

std::pair<FieldKind, std::int64_t> field_of(const std::string& spec) {
  return parse_field_spec(spec);
}

template <class K>
std::vector<std::string> dual_impl(const std::string& ideal_text, FieldKind f,
                                   std::int64_t p) {
  std::istringstream in(ideal_text);
  auto text = read_ideal_text(in);
  RingPtr r = realize_ring<K>(text.ring, f, p);
  Ideal<K> D = dual_variety(realize_ideal<K>(text, r));
  std::vector<std::string> out;
  for (auto& g : D.gens) out.push_back(to_string(normalized(g)));
  return out;
}

template <class K>
py::dict discriminant_impl(const std::string& lsys_text, FieldKind f, std::int64_t p) {
  std::istringstream in(lsys_text);
  auto text = read_linsys_text(in);
  RingPtr r = realize_ring<K>(text.ring, f, p);
  auto rep = discriminant(realize_linear_system<K>(text, r));
  py::dict d;
  d["empty"] = rep.empty;
  d["codegree"] = rep.codegree;
  d["defect"] = rep.defect;
  if (rep.reduced_equation)
    d["equation"] = to_string(normalized(*rep.reduced_equation));
  std::vector<std::string> hyp;
  for (auto& h : rep.hyperplanes.forms) hyp.push_back(to_string(h));
  d["hyperplanes"] = hyp;
  py::dict strata;
  for (auto& [i, Di] : rep.strata) {
    std::vector<std::string> gens;
    for (auto& g : Di.gens) gens.push_back(to_string(normalized(g)));
    strata[py::int_(i)] = gens;
  }
  d["strata"] = strata;
  std::vector<int> jdims(rep.jumping.dims.begin(), rep.jumping.dims.end());
  d["jumping_dims"] = jdims;
  return d;
}

template <class K>
py::object milnor_impl(const std::string& expr, const std::vector<std::string>& vars,
                       FieldKind f, std::int64_t p) {
  RingPtr r = f == FieldKind::GF ? make_ring(vars, FieldKind::GF, p) : make_ring(vars);
  auto md = milnor(parse_polynomial<K>(r, expr));
  if (md.infinite) return py::none();
  return py::int_(md.mu);
}

template <class K>
py::dict pencil_impl(const std::string& lsys_text, std::uint64_t seed, FieldKind f,
                     std::int64_t p) {
  std::istringstream in(lsys_text);
  auto text = read_linsys_text(in);
  RingPtr r = realize_ring<K>(text.ring, f, p);
  auto rep = pencil_verify(realize_linear_system<K>(text, r), seed);
  py::dict d;
  d["ok"] = rep.ok;
  d["identity"] = rep.identity_holds;
  d["cn"] = rep.cn;
  d["milnor_sum"] = rep.milnor_sum;
  d["members"] = static_cast<int>(rep.members.size());
  if (!rep.ok) d["failure"] = rep.failure;
  return d;
}

template <class K>
py::dict wronskian_impl(const std::string& fs, const std::string& gs,
                        const std::vector<std::string>& vars, FieldKind f,
                        std::int64_t p) {
  RingPtr r = f == FieldKind::GF ? make_ring(vars, FieldKind::GF, p) : make_ring(vars);
  auto rep = wronskian_branch(parse_polynomial<K>(r, fs), parse_polynomial<K>(r, gs));
  py::dict d;
  d["wronskian"] = to_string(normalized(rep.wronskian));
  d["complete"] = rep.complete;
  d["codegree"] = rep.codegree;
  std::vector<int> prof;
  for (auto& ram : rep.ramification) prof.push_back(ram.second);
  d["ram_profile"] = prof;
  return d;
}

template <class K>
std::vector<std::string> groebner_impl(const std::string& ideal_text, FieldKind f,
                                       std::int64_t p) {
  std::istringstream in(ideal_text);
  auto text = read_ideal_text(in);
  RingPtr r = realize_ring<K>(text.ring, f, p);
  auto gb = buchberger(realize_ideal<K>(text, r), MonomialOrder::grevlex());
  std::vector<std::string> out;
  for (auto& g : gb.elems) out.push_back(to_string(normalized(g)));
  return out;
}

py::dict fixture_impl(const std::string& path, const std::string& field) {
  auto [f, p] = field_of(field);
  auto rep = run_fixture_file(path, f, p);
  py::dict d;
  d["id"] = rep.id;
  d["pass"] = rep.pass;
  d["lines"] = rep.lines;
  return d;
}

}  // namespace

PYBIND11_MODULE(_disclocus, m) {
  m.doc() = "discriminant loci of spanned linear systems";

  m.def("dual", [](const std::string& t, const std::string& field) {
    auto [f, p] = field_of(field);
    return f == FieldKind::Q ? dual_impl<Rational>(t, f, p) : dual_impl<Fp>(t, f, p);
  }, py::arg("ideal_text"), py::arg("field") = "gf:32003");

  m.def("groebner", [](const std::string& t, const std::string& field) {
    auto [f, p] = field_of(field);
    return f == FieldKind::Q ? groebner_impl<Rational>(t, f, p) : groebner_impl<Fp>(t, f, p);
  }, py::arg("ideal_text"), py::arg("field") = "gf:32003");

  m.def("discriminant", [](const std::string& t, const std::string& field) {
    auto [f, p] = field_of(field);
    return f == FieldKind::Q ? discriminant_impl<Rational>(t, f, p)
                             : discriminant_impl<Fp>(t, f, p);
  }, py::arg("lsys_text"), py::arg("field") = "gf:32003");

  m.def("milnor", [](const std::string& e, const std::vector<std::string>& vars,
                     const std::string& field) {
    auto [f, p] = field_of(field);
    return f == FieldKind::Q ? milnor_impl<Rational>(e, vars, f, p)
                             : milnor_impl<Fp>(e, vars, f, p);
  }, py::arg("poly"), py::arg("vars"), py::arg("field") = "gf:32003");

  m.def("pencil_verify", [](const std::string& t, std::uint64_t seed,
                            const std::string& field) {
    auto [f, p] = field_of(field);
    return f == FieldKind::Q ? pencil_impl<Rational>(t, seed, f, p)
                             : pencil_impl<Fp>(t, seed, f, p);
  }, py::arg("lsys_text"), py::arg("seed") = 1, py::arg("field") = "gf:32003");

  m.def("wronskian_branch", [](const std::string& fs, const std::string& gs,
                               const std::vector<std::string>& vars,
                               const std::string& field) {
    auto [f, p] = field_of(field);
    return f == FieldKind::Q ? wronskian_impl<Rational>(fs, gs, vars, f, p)
                             : wronskian_impl<Fp>(fs, gs, vars, f, p);
  }, py::arg("f"), py::arg("g"), py::arg("vars"), py::arg("field") = "gf:32003");

  m.def("run_fixture", &fixture_impl, py::arg("path"), py::arg("field") = "gf:32003");

  m.def("c2_jet_surface", [](long long e, long long KL, long long L2) {
    SurfaceNumerics s;
    s.e = e;
    s.KL = KL;
    s.L2 = L2;
    return c2_jet_surface(s);
  }, py::arg("e"), py::arg("KL"), py::arg("L2"));
  m.def("cn_jet_pn", &cn_jet_pn, py::arg("n"), py::arg("m"));
  m.def("c2_jet_cyclic", [](int d, int b) {
    auto c = c2_jet_cyclic(d, b);
    return py::make_tuple(c.c2, c.branch_class, c.multiplier);
  }, py::arg("d"), py::arg("b"));
  m.def("dual_degree_plane_curve", &dual_degree_plane_curve, py::arg("d"), py::arg("g"));
  m.def("single_branch_impossible", &single_branch_impossible, py::arg("d"), py::arg("m"));
  m.def("scan_section6", [](long long e, long long a, long long b) {
    std::vector<py::tuple> out;
    for (auto& s : scan_section6(e, a, b)) out.push_back(py::make_tuple(s.e, s.a, s.b));
    return out;
  }, py::arg("e_max"), py::arg("a_max"), py::arg("b_max"));
}
