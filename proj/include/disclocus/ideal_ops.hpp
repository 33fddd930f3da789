#ifndef DISCLOCUS_IDEAL_OPS_HPP
#define DISCLOCUS_IDEAL_OPS_HPP

#include <string>
#include <vector>

#include "groebner.hpp"

namespace disc {

/// Generators of the elimination ideal I ∩ k[vars k..n-1]: Groebner basis
/// under the block order, keeping elements free of the first k variables.
/// The result lives in the original ring.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, int k) {
  GroebnerBasis<K> gb = buchberger(I, MonomialOrder::elim(k));
  Ideal<K> out(I.ring);
  for (auto& g : gb.elems) {
    bool uses = false;
    for (int v = 0; v < k && !uses; ++v) uses = g.depends_on(v);
    if (!uses) out.gens.push_back(g.reorder(MonomialOrder::grevlex()));
  }
  return out;
}

/// Restrict an ideal known to be free of the first k variables into the
/// smaller ring on the remaining ones.
template <class K>
Ideal<K> drop_front_vars(const Ideal<K>& I, int k, const RingPtr& target) {
  Ideal<K> out(target);
  for (auto& g : I.gens) out.gens.push_back(map_to_ring(g, target));
  return out;
}

/// Saturation I : f^infinity by the Rabinowitsch trick: eliminate w from
/// I + (1 - w f) in an extended ring with w in front.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Polynomial<K>& f) {
  if (f.is_zero_poly()) throw std::invalid_argument("saturate by zero");
  std::string w = fresh_var(I.ring, "satw");
  RingPtr ext = extend_front(I.ring, {w});
  Ideal<K> J(ext);
  for (auto& g : I.gens) J.gens.push_back(map_to_ring(g, ext));
  Polynomial<K> one = Polynomial<K>::constant(ext, field_one<K>(ext));
  Polynomial<K> wf = Polynomial<K>::variable(ext, 0, field_one<K>(ext)) * map_to_ring(f, ext);
  J.gens.push_back(one - wf);
  Ideal<K> E = eliminate(J, 1);
  return drop_front_vars(E, 1, I.ring);
}

/// Ideal intersection: eliminate t from t*I + (1-t)*J.
template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J) {
  std::string tname = fresh_var(I.ring, "isect");
  RingPtr ext = extend_front(I.ring, {tname});
  Polynomial<K> t = Polynomial<K>::variable(ext, 0, field_one<K>(ext));
  Polynomial<K> omt = Polynomial<K>::constant(ext, field_one<K>(ext)) - t;
  Ideal<K> M(ext);
  for (auto& g : I.gens) M.gens.push_back(t * map_to_ring(g, ext));
  for (auto& g : J.gens) M.gens.push_back(omt * map_to_ring(g, ext));
  Ideal<K> E = eliminate(M, 1);
  return drop_front_vars(E, 1, I.ring);
}

/// Saturation by an ideal: intersection of the saturations by its
/// generators.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Ideal<K>& J) {
  bool first = true;
  Ideal<K> acc(I.ring);
  for (auto& f : J.gens) {
    if (f.is_zero_poly()) continue;
    Ideal<K> S = saturate(I, f);
    acc = first ? S : intersect(acc, S);
    first = false;
  }
  if (first) throw std::invalid_argument("saturate by the zero ideal");
  return acc;
}

/// Remove components supported on coordinate hyperplanes of the listed
/// variables: intersection over v of I : v^infinity.
template <class K>
Ideal<K> saturate_irrelevant(const Ideal<K>& I, const std::vector<int>& vars) {
  bool first = true;
  Ideal<K> acc(I.ring);
  for (int v : vars) {
    Ideal<K> S = saturate(I, Polynomial<K>::variable(I.ring, v, field_one<K>(I.ring)));
    acc = first ? S : intersect(acc, S);
    first = false;
  }
  return first ? I : acc;
}

template <class K>
Ideal<K> saturate_irrelevant(const Ideal<K>& I) {
  std::vector<int> vars;
  for (std::size_t i = 0; i < I.ring->nvars(); ++i) vars.push_back(static_cast<int>(i));
  return saturate_irrelevant(I, vars);
}

/// Radical membership: f lies in the radical of I iff 1 is in
/// I + (1 - w f).
template <class K>
bool radical_member(const Polynomial<K>& f, const Ideal<K>& I) {
  if (f.is_zero_poly()) return true;
  std::string w = fresh_var(I.ring, "radw");
  RingPtr ext = extend_front(I.ring, {w});
  Ideal<K> J(ext);
  for (auto& g : I.gens) J.gens.push_back(map_to_ring(g, ext));
  Polynomial<K> one = Polynomial<K>::constant(ext, field_one<K>(ext));
  J.gens.push_back(one - Polynomial<K>::variable(ext, 0, field_one<K>(ext)) * map_to_ring(f, ext));
  return is_unit_ideal(buchberger(J, MonomialOrder::grevlex()));
}

/// Equality as radical ideals, checked by mutual radical membership of
/// generators.
template <class K>
bool radical_equal(const Ideal<K>& I, const Ideal<K>& J) {
  for (auto& f : I.gens)
    if (!radical_member(f, J)) return false;
  for (auto& g : J.gens)
    if (!radical_member(g, I)) return false;
  return true;
}

template <class K>
Ideal<K> operator+(const Ideal<K>& I, const Ideal<K>& J) {
  Ideal<K> out(I.ring);
  out.gens = I.gens;
  for (auto& g : J.gens) out.gens.push_back(g);
  return out;
}

template <class K>
bool is_zero_ideal(const Ideal<K>& I) {
  for (auto& g : I.gens)
    if (!g.is_zero_poly()) return false;
  return true;
}

}  // namespace disc

#endif
