#ifndef DISCLOCUS_LINSYS_HPP
#define DISCLOCUS_LINSYS_HPP

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "duality.hpp"
#include "numerics.hpp"
#include "solve.hpp"

namespace disc {

/// The triplet (X, L, V): X is either P^n (no hypersurface equation) or a
/// hypersurface V(F) in P^M; the sections span the subsystem V of |O(m)|.
template <class K>
struct LinearSystem {
  RingPtr ring;  // source coordinates
  std::optional<Polynomial<K>> hypersurface;
  std::vector<Polynomial<K>> sections;
  std::vector<std::string> dual_names;  // defaults to L0..LN

  int n_dual() const { return static_cast<int>(sections.size()) - 1; }  // N
  int source_dim() const {
    int amb = static_cast<int>(ring->nvars()) - 1;
    return hypersurface ? amb - 1 : amb;  // n
  }
  int section_degree() const {
    return sections.empty() ? -1 : sections[0].total_degree();
  }
};

template <class K>
void validate(const LinearSystem<K>& V) {
  if (V.sections.size() < 2)
    throw std::invalid_argument("linear system needs at least two sections");
  int m = V.sections[0].total_degree();
  for (auto& s : V.sections) {
    if (s.is_zero_poly() || !s.is_homogeneous() || s.total_degree() != m)
      throw std::invalid_argument("sections must be nonzero homogeneous of equal degree");
    if (!same_ring(s.ring, V.ring)) throw std::invalid_argument("section ring mismatch");
  }
  if (V.hypersurface && (!V.hypersurface->is_homogeneous() || V.hypersurface->is_zero_poly()))
    throw std::invalid_argument("hypersurface equation must be nonzero homogeneous");
  // linear independence: Gaussian elimination on the coefficient matrix
  std::vector<Monomial> cols;
  std::map<Monomial, std::size_t> colof;
  std::vector<std::vector<K>> rows;
  for (auto& s : V.sections) {
    for (auto& t : s.terms)
      if (!colof.count(t.first)) {
        colof.emplace(t.first, cols.size());
        cols.push_back(t.first);
      }
  }
  for (auto& s : V.sections) {
    std::vector<K> row(cols.size(), K{});
    for (auto& t : s.terms) row[colof[t.first]] = t.second;
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size() && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && is_zero(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    K ip = inv(rows[rank][c]);
    for (std::size_t j = c; j < cols.size(); ++j) rows[rank][j] *= ip;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || is_zero(rows[r][c])) continue;
      K f = rows[r][c];
      for (std::size_t j = c; j < cols.size(); ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  if (rank != V.sections.size())
    throw std::invalid_argument("sections are linearly dependent");
}

/// Base locus: (sections) + (F), saturated by the irrelevant ideal. Empty
/// (unit ideal) iff V is base-point free.
template <class K>
Ideal<K> base_locus(const LinearSystem<K>& V) {
  Ideal<K> I(V.ring);
  for (auto& s : V.sections) I.gens.push_back(s);
  if (V.hypersurface) I.gens.push_back(*V.hypersurface);
  return saturate_irrelevant(I);
}

template <class K>
bool base_point_free(const LinearSystem<K>& V) {
  return is_unit_ideal(buchberger(base_locus(V), MonomialOrder::grevlex()));
}

template <class K>
struct IncidenceResult {
  RingPtr product_ring;  // source vars then dual vars
  RingPtr dual_ring;     // dual vars only
  int n_source = 0;
  Ideal<K> ideal;
};

template <class K>
std::vector<std::string> dual_var_names(const LinearSystem<K>& V) {
  if (!V.dual_names.empty()) {
    if (static_cast<int>(V.dual_names.size()) != V.n_dual() + 1)
      throw std::invalid_argument("need one dual name per section");
    return V.dual_names;
  }
  std::vector<std::string> d;
  for (int i = 0; i <= V.n_dual(); ++i) d.push_back("L" + std::to_string(i));
  return d;
}

/// The incidence correspondence: pairs (x, member) with the member singular
/// at x. For source P^n the ideal of the partials of s = sum l_j s_j; for a
/// hypersurface source, F, s, and the 2-minors of the gradients. Saturated
/// by the source irrelevant ideal.
template <class K>
IncidenceResult<K> incidence_ideal(const LinearSystem<K>& V, bool saturated = true) {
  validate(V);
  {
    Ideal<K> B = base_locus(V);
    if (!is_unit_ideal(buchberger(B, MonomialOrder::grevlex()))) {
      std::string msg = "linear system has base points; witness ideal:";
      for (auto& g : B.gens) msg += " " + to_string(g) + ";";
      throw std::invalid_argument(msg);
    }
  }
  std::vector<std::string> dual = dual_var_names(V);
  RingPtr prod = extend_back(V.ring, dual);
  RingPtr dring = make_ring(dual, V.ring->field, V.ring->prime);
  int nsrc = static_cast<int>(V.ring->nvars());
  K one = field_one<K>(prod);

  Polynomial<K> s(prod);
  for (std::size_t j = 0; j < V.sections.size(); ++j)
    s += Polynomial<K>::variable(prod, nsrc + static_cast<int>(j), one) *
         map_to_ring(V.sections[j], prod);

  Ideal<K> I(prod);
  if (!V.hypersurface) {
    for (int v = 0; v < nsrc; ++v) I.gens.push_back(differentiate(s, v));
  } else {
    Polynomial<K> F = map_to_ring(*V.hypersurface, prod);
    I.gens.push_back(F);
    I.gens.push_back(s);
    std::vector<std::vector<Polynomial<K>>> grads(2);
    for (int v = 0; v < nsrc; ++v) {
      grads[0].push_back(differentiate(F, v));
      grads[1].push_back(differentiate(s, v));
    }
    for (auto& m : matrix_minors(grads, 2)) I.gens.push_back(std::move(m));
  }
  if (saturated) {
    std::vector<int> srcvars;
    for (int v = 0; v < nsrc; ++v) srcvars.push_back(v);
    I = saturate_irrelevant(I, srcvars);
  }
  IncidenceResult<K> out;
  out.product_ring = prod;
  out.dual_ring = dring;
  out.n_source = nsrc;
  out.ideal = std::move(I);
  return out;
}

template <class K>
struct JumpingSetReport {
  std::vector<Ideal<K>> sets;     // index i = 1..n; J_i in source ring
  std::vector<int> dims;          // affine cone dimension of J_i (-1 empty)
  std::vector<bool> empty_flags;  // projectively empty
  int n = 0;

  const Ideal<K>& J(int i) const { return sets.at(static_cast<std::size_t>(i - 1)); }
  bool is_empty(int i) const {
    if (i > n) return true;
    return empty_flags.at(static_cast<std::size_t>(i - 1));
  }
};

/// J_i: points where the differential of the associated map drops rank by
/// at least i, encoded as the vanishing of the (n-i+2)-minors of the
/// homogeneous Jacobian (the Euler relation shifts the rank by one).
template <class K>
JumpingSetReport<K> jumping_sets(const LinearSystem<K>& V) {
  if (V.hypersurface)
    throw std::invalid_argument("jumping_sets supports only projective space sources");
  validate(V);
  int n = V.source_dim();
  int nsrc = n + 1;
  std::vector<std::vector<Polynomial<K>>> J = jacobian(V.sections, V.ring, nsrc);
  JumpingSetReport<K> rep;
  rep.n = n;
  for (int i = 1; i <= n; ++i) {
    int size = n - i + 2;
    Ideal<K> Ji(V.ring);
    auto minors = matrix_minors(J, size);
    if (size > static_cast<int>(J.size()) || size > nsrc) {
      // no minors of that size: the rank bound holds everywhere
      Ji.gens.push_back(Polynomial<K>::zero(V.ring));
    } else {
      for (auto& m : minors) Ji.gens.push_back(std::move(m));
      if (Ji.gens.empty()) Ji.gens.push_back(Polynomial<K>::zero(V.ring));
    }
    if (!is_zero_ideal(Ji)) Ji = saturate_irrelevant(Ji);
    DimensionDegree dd = dimension_degree(Ji);
    rep.sets.push_back(std::move(Ji));
    rep.dims.push_back(dd.dim);
    rep.empty_flags.push_back(dd.dim <= 0);
  }
  return rep;
}

template <class K>
struct HyperplaneComponents {
  bool jn_finite = true;
  std::vector<std::vector<K>> points;       // J_n points, source coordinates
  std::vector<Polynomial<K>> forms;         // linear forms in the dual ring
  bool complete = true;                     // all points extracted over the field
};

/// Cor-style hyperplane detection: each point x of the top jumping set
/// J_n contributes the hyperplane sum_j s_j(x) l_j; the discriminant
/// contains a hyperplane iff J_n is nonempty.
template <class K>
HyperplaneComponents<K> hyperplane_components(const LinearSystem<K>& V,
                                              const JumpingSetReport<K>& js,
                                              const RingPtr& dual_ring) {
  HyperplaneComponents<K> out;
  int n = js.n;
  if (n < 1) return out;
  const Ideal<K>& Jn = js.J(n);
  if (js.dims[static_cast<std::size_t>(n - 1)] > 1) {
    out.jn_finite = false;
    return out;
  }
  if (js.is_empty(n)) return out;
  std::vector<int> vars;
  for (std::size_t v = 0; v < V.ring->nvars(); ++v) vars.push_back(static_cast<int>(v));
  auto pts = projective_points(Jn, vars);
  out.complete = pts.complete && pts.zero_dimensional;
  out.points = pts.points;
  K one = field_one<K>(dual_ring);
  for (auto& p : out.points) {
    Polynomial<K> form(dual_ring);
    for (std::size_t j = 0; j < V.sections.size(); ++j) {
      K val = V.sections[j].evaluate(p, one);
      if (!is_zero(val))
        form += Polynomial<K>::variable(dual_ring, static_cast<int>(j), one).scaled(val);
    }
    form = monic(form);
    bool dup = false;
    for (auto& f : out.forms)
      if (f == form) dup = true;
    if (!dup) out.forms.push_back(std::move(form));
  }
  return out;
}

template <class K>
struct DiscriminantReport {
  RingPtr dual_ring;
  Ideal<K> ideal;  // in dual_ring, radical-reported when principal
  std::optional<Polynomial<K>> reduced_equation;
  bool empty = false;
  int dim_affine = -1;
  int codegree = 0;
  int defect = 0;
  HyperplaneComponents<K> hyperplanes;
  std::map<int, Ideal<K>> strata;  // D_i per jumping index, dual ring
  JumpingSetReport<K> jumping;
};

/// D_i: members singular at a point of the i-th stratum, computed by
/// eliminating the source from incidence + J_i, after removing the branch
/// supported on J_{i+1} (saturation), so that D_i reflects X_i = J_i
/// minus J_{i+1}.
template <class K>
std::map<int, Ideal<K>> strata(const LinearSystem<K>& V, const JumpingSetReport<K>& js,
                               const IncidenceResult<K>& inc) {
  std::map<int, Ideal<K>> out;
  for (int i = 1; i <= js.n; ++i) {
    if (js.is_empty(i) && is_zero_ideal(js.J(i))) continue;
    Ideal<K> Sum = inc.ideal;
    for (auto& g : js.J(i).gens)
      if (!g.is_zero_poly()) Sum.gens.push_back(map_to_ring(g, inc.product_ring));
    if (i + 1 <= js.n && !js.is_empty(i + 1)) {
      Ideal<K> next(inc.product_ring);
      for (auto& g : js.J(i + 1).gens)
        if (!g.is_zero_poly()) next.gens.push_back(map_to_ring(g, inc.product_ring));
      if (!next.gens.empty()) Sum = saturate(Sum, next);
    }
    // intersecting with J_i reintroduces the source-origin cone component
    std::vector<int> srcvars;
    for (int v = 0; v < inc.n_source; ++v) srcvars.push_back(v);
    Sum = saturate_irrelevant(Sum, srcvars);
    Ideal<K> E = eliminate(Sum, inc.n_source);
    Ideal<K> Di = drop_front_vars(E, inc.n_source, inc.dual_ring);
    if (Di.gens.size() == 1 && !Di.gens[0].is_zero_poly())
      Di.gens[0] = squarefree_part(Di.gens[0]);
    out.emplace(i, std::move(Di));
  }
  return out;
}

template <class K>
DiscriminantReport<K> discriminant(const LinearSystem<K>& V, bool with_strata = true) {
  IncidenceResult<K> inc = incidence_ideal(V);
  DiscriminantReport<K> rep;
  rep.dual_ring = inc.dual_ring;
  Ideal<K> E = eliminate(inc.ideal, inc.n_source);
  rep.ideal = drop_front_vars(E, inc.n_source, inc.dual_ring);
  if (rep.ideal.gens.size() == 1 && !rep.ideal.gens[0].is_zero_poly()) {
    rep.ideal.gens[0] = squarefree_part(rep.ideal.gens[0]);
    rep.reduced_equation = rep.ideal.gens[0];
  }
  int N = V.n_dual();
  DimensionDegree dd = dimension_degree(rep.ideal);
  rep.dim_affine = dd.dim;
  rep.empty = dd.dim <= 0;
  rep.codegree = rep.empty ? 0 : static_cast<int>(dd.deg);
  rep.defect = rep.empty ? 0 : N - dd.dim;
  if (!V.hypersurface) {
    rep.jumping = jumping_sets(V);
    rep.hyperplanes = hyperplane_components(V, rep.jumping, inc.dual_ring);
    if (with_strata) rep.strata = strata(V, rep.jumping, inc);
  }
  return rep;
}

/// Singular locus of one member of the system: solve the gradient system
/// over the source.
template <class K>
struct SingularPointsResult {
  bool zero_dimensional = true;
  bool complete = true;
  std::vector<std::vector<K>> points;
  Ideal<K> locus;  // saturated singular ideal (useful when positive-dim)
};

template <class K>
SingularPointsResult<K> singular_points(const Polynomial<K>& member,
                                        const std::optional<Polynomial<K>>& hypersurface) {
  RingPtr r = member.ring;
  Ideal<K> I(r);
  for (std::size_t v = 0; v < r->nvars(); ++v)
    I.gens.push_back(differentiate(member, static_cast<int>(v)));
  if (hypersurface) {
    I.gens.push_back(*hypersurface);
    I.gens.push_back(member);
  }
  I = saturate_irrelevant(I);
  SingularPointsResult<K> out;
  out.locus = I;
  DimensionDegree dd = dimension_degree(I);
  if (dd.dim > 1) {
    out.zero_dimensional = false;
    out.complete = false;
    return out;
  }
  if (dd.dim <= 0) return out;  // smooth member
  std::vector<int> vars;
  for (std::size_t v = 0; v < r->nvars(); ++v) vars.push_back(static_cast<int>(v));
  auto pts = projective_points(I, vars);
  out.complete = pts.complete && pts.zero_dimensional;
  out.points = pts.points;
  return out;
}

struct MilnorDatum {
  long long mu = 0;
  int stabilization_N = 0;
  bool infinite = false;
};

/// Milnor number of an isolated singularity at the origin: stabilized
/// colength of the Jacobian ideal truncated by powers of the maximal
/// ideal.
template <class K>
MilnorDatum milnor(const Polynomial<K>& f, int cutoff = 40) {
  RingPtr r = f.ring;
  std::size_t n = r->nvars();
  Ideal<K> J(r);
  for (std::size_t v = 0; v < n; ++v) J.gens.push_back(differentiate(f, static_cast<int>(v)));
  MilnorDatum out;
  long long prev = -1;
  for (int N = 2; N <= cutoff; ++N) {
    Ideal<K> JN = J;
    // append all monomials of degree N
    std::vector<int> e(n, 0);
    std::function<void(std::size_t, int)> emit = [&](std::size_t v, int left) {
      if (v + 1 == n) {
        e[v] = left;
        Monomial m(n);
        m.e = e;
        JN.gens.push_back(Polynomial<K>::monomial(r, m, field_one<K>(r)));
        return;
      }
      for (int k = 0; k <= left; ++k) {
        e[v] = k;
        emit(v + 1, left - k);
      }
    };
    emit(0, N);
    long long c = quotient_colength(JN);
    if (c >= 0 && c == prev) {
      out.mu = c;
      out.stabilization_N = N;
      return out;
    }
    prev = c;
  }
  out.infinite = true;
  out.stabilization_N = cutoff;
  return out;
}

/// Hessian determinant at the origin (for the mu = 1 iff nondegenerate
/// cross-check).
template <class K>
K hessian_det_at_origin(const Polynomial<K>& f) {
  std::size_t n = f.ring->nvars();
  std::vector<std::vector<K>> H(n, std::vector<K>(n, K{}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial<K> d2 = differentiate(differentiate(f, static_cast<int>(i)), static_cast<int>(j));
      for (auto& t : d2.terms)
        if (t.first.is_one()) H[i][j] = t.second;
    }
  // Gaussian elimination determinant
  K det = field_one<K>(f.ring);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(H[piv][c])) ++piv;
    if (piv == n) return K{};
    if (piv != c) {
      std::swap(H[piv], H[c]);
      det = -det;
    }
    det *= H[c][c];
    K ip = inv(H[c][c]);
    for (std::size_t rr = c + 1; rr < n; ++rr) {
      K fct = H[rr][c] * ip;
      for (std::size_t j = c; j < n; ++j) H[rr][j] -= fct * H[c][j];
    }
  }
  return det;
}

}  // namespace disc

#endif
