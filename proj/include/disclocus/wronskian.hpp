#ifndef DISCLOCUS_WRONSKIAN_HPP
#define DISCLOCUS_WRONSKIAN_HPP

#include <vector>

#include "gcd.hpp"
#include "solve.hpp"

namespace disc {

template <class K>
struct BranchReport {
  Polynomial<K> wronskian;
  std::vector<std::pair<std::vector<K>, int>> ramification;  // point on P^1, W-multiplicity
  std::vector<std::vector<K>> branch_values;                 // distinct (f:g) images
  int codegree = 0;
  bool complete = true;  // all ramification points found over the field
};

/// Branch data of the degree-d map (f:g): P^1 -> P^1 given by two coprime
/// binary forms of the same degree. Ramification points are the roots of
/// the Wronskian f g' - f' g (derivatives in the first variable suffice up
/// to scale; we use the full 2x2 jacobian determinant).
template <class K>
BranchReport<K> wronskian_branch(const Polynomial<K>& f, const Polynomial<K>& g) {
  if (!same_ring(f.ring, g.ring) || f.ring->nvars() != 2)
    throw std::invalid_argument("wronskian_branch expects binary forms in one ring");
  if (f.is_zero_poly() || g.is_zero_poly() || !f.is_homogeneous() || !g.is_homogeneous())
    throw std::invalid_argument("wronskian_branch expects nonzero homogeneous forms");
  int d = f.total_degree();
  if (d < 1 || g.total_degree() != d)
    throw std::invalid_argument("wronskian_branch expects equal degrees >= 1");
  if (!gcd(f, g).is_constant())
    throw std::invalid_argument("wronskian_branch expects coprime forms");
  Polynomial<K> W = differentiate(f, 0) * differentiate(g, 1) -
                    differentiate(f, 1) * differentiate(g, 0);
  if (W.is_zero_poly())
    throw std::invalid_argument("forms are proportional");

  BranchReport<K> rep;
  rep.wronskian = W;
  auto roots = binary_form_roots(W, 0, 1);
  rep.complete = roots.unresolved_degree == 0;
  K one = field_one<K>(f.ring);
  for (auto& rt : roots.roots) {
    rep.ramification.emplace_back(rt.first, rt.second);
    K fv = f.evaluate(rt.first, one);
    K gv = g.evaluate(rt.first, one);
    std::vector<K> value;
    if (!is_zero(fv))
      value = {one, gv * inv(fv)};
    else
      value = {K{}, one};
    bool dup = false;
    for (auto& v : rep.branch_values)
      if (v == value) dup = true;
    if (!dup) rep.branch_values.push_back(std::move(value));
  }
  rep.codegree = static_cast<int>(rep.branch_values.size());
  return rep;
}

}  // namespace disc

#endif
