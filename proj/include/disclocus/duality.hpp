#ifndef DISCLOCUS_DUALITY_HPP
#define DISCLOCUS_DUALITY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "factor_probe.hpp"
#include "hilbert.hpp"
#include "ideal_ops.hpp"

namespace disc {

/// Minors of the given size of a matrix of polynomials.
template <class K>
std::vector<Polynomial<K>> matrix_minors(const std::vector<std::vector<Polynomial<K>>>& M,
                                         int size) {
  std::vector<Polynomial<K>> out;
  int rows = static_cast<int>(M.size());
  int cols = rows ? static_cast<int>(M[0].size()) : 0;
  if (size > rows || size > cols || size <= 0) return out;
  std::vector<int> ri(size), ci(size);
  std::function<void(int, int)> pick_cols;
  std::function<void(int, int)> pick_rows = [&](int start, int k) {
    if (k == size) {
      pick_cols(0, 0);
      return;
    }
    for (int i = start; i <= rows - (size - k); ++i) {
      ri[k] = i;
      pick_rows(i + 1, k + 1);
    }
  };
  RingPtr ring = M[0][0].ring;
  std::function<Polynomial<K>(std::vector<int>, std::vector<int>)> det =
      [&](std::vector<int> rs, std::vector<int> cs) -> Polynomial<K> {
    if (rs.size() == 1) return M[rs[0]][cs[0]];
    Polynomial<K> acc(ring);
    for (std::size_t j = 0; j < cs.size(); ++j) {
      std::vector<int> sub_cs;
      for (std::size_t t = 0; t < cs.size(); ++t)
        if (t != j) sub_cs.push_back(cs[t]);
      std::vector<int> sub_rs(rs.begin() + 1, rs.end());
      Polynomial<K> cof = M[rs[0]][cs[j]] * det(sub_rs, sub_cs);
      acc = (j % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
  };
  pick_cols = [&](int start, int k) {
    if (k == size) {
      Polynomial<K> m = det(ri, ci);
      if (!m.is_zero_poly()) out.push_back(std::move(m));
      return;
    }
    for (int j = start; j <= cols - (size - k); ++j) {
      ci[k] = j;
      pick_cols(j + 1, k + 1);
    }
  };
  pick_rows(0, 0);
  return out;
}

struct ConormalOptions {
  int smooth_hint = -1;        // -1 auto-detect, 0 force singular handling, 1 skip it
  bool cheap_saturation = false;  // saturate the source block by a single variable
                                  // (valid for irreducible X not inside a
                                  // coordinate hyperplane)
  std::vector<std::string> dual_names;  // defaults to L0..LM
};

template <class K>
struct ConormalResult {
  RingPtr product_ring;  // source vars then dual vars
  int n_source = 0;
  Ideal<K> ideal;
};

/// Jacobian of the generators: rows = generators, columns = variables.
template <class K>
std::vector<std::vector<Polynomial<K>>> jacobian(const std::vector<Polynomial<K>>& gens,
                                                 const RingPtr& ring, int nvars) {
  std::vector<std::vector<Polynomial<K>>> J;
  for (auto& g : gens) {
    std::vector<Polynomial<K>> row;
    for (int v = 0; v < nvars; ++v) row.push_back(differentiate(g, v));
    J.push_back(std::move(row));
  }
  (void)ring;
  return J;
}

/// Ideal of the singular locus of X (Jacobian criterion): X plus the
/// c-minors of the Jacobian, c = codim X.
template <class K>
Ideal<K> singular_locus_ideal(const Ideal<K>& X, int codim) {
  auto J = jacobian(X.gens, X.ring, static_cast<int>(X.ring->nvars()));
  Ideal<K> S = X;
  for (auto& m : matrix_minors(J, codim)) S.gens.push_back(std::move(m));
  return S;
}

template <class K>
bool is_smooth(const Ideal<K>& X, int codim) {
  Ideal<K> S = saturate_irrelevant(singular_locus_ideal(X, codim));
  return is_unit_ideal(buchberger(S, MonomialOrder::grevlex()));
}

/// Conormal variety of X in P^M: pairs (x, H) with the tangent space of X
/// at x inside H. Generators: X, the incidence form sum(x_i l_i), and the
/// (c+1)-minors of the Jacobian augmented by the row l (c = codim X); then
/// saturated by the singular locus and the source irrelevant ideal.
template <class K>
ConormalResult<K> conormal_ideal(const Ideal<K>& X, const ConormalOptions& opts = {}) {
  auto gb = buchberger(X, MonomialOrder::grevlex());
  if (is_unit_ideal(gb)) throw std::invalid_argument("conormal of the unit ideal");
  int M = static_cast<int>(X.ring->nvars()) - 1;
  DimensionDegree dd = dimension_degree(gb);
  int codim = M + 1 - dd.dim;
  if (codim <= 0) throw std::invalid_argument("conormal of the whole space");

  std::vector<std::string> dual = opts.dual_names;
  if (dual.empty())
    for (int i = 0; i <= M; ++i) dual.push_back("L" + std::to_string(i));
  RingPtr prod = extend_back(X.ring, dual);
  K one = field_one<K>(prod);
  int nsrc = M + 1;

  ConormalResult<K> out;
  out.product_ring = prod;
  out.n_source = nsrc;
  Ideal<K> I(prod);
  for (auto& g : X.gens) I.gens.push_back(map_to_ring(g, prod));
  Polynomial<K> incidence(prod);
  for (int i = 0; i <= M; ++i)
    incidence += Polynomial<K>::variable(prod, i, one) *
                 Polynomial<K>::variable(prod, nsrc + i, one);
  I.gens.push_back(incidence);

  std::vector<Polynomial<K>> lifted;
  for (auto& g : X.gens) lifted.push_back(map_to_ring(g, prod));
  auto J = jacobian(lifted, prod, nsrc);
  std::vector<Polynomial<K>> lrow;
  for (int i = 0; i < nsrc; ++i) lrow.push_back(Polynomial<K>::variable(prod, nsrc + i, one));
  J.push_back(lrow);
  for (auto& m : matrix_minors(J, codim + 1)) I.gens.push_back(std::move(m));

  bool smooth = opts.smooth_hint == 1 ||
                (opts.smooth_hint == -1 && is_smooth(X, codim));
  if (!smooth) {
    Ideal<K> S(prod);
    for (auto& g : singular_locus_ideal(X, codim).gens)
      if (!g.is_zero_poly() && !g.is_constant()) S.gens.push_back(map_to_ring(g, prod));
    if (!S.gens.empty()) I = saturate(I, S);
  }
  if (opts.cheap_saturation) {
    // one variable with X not inside its hyperplane suffices for smooth
    // irreducible X to clear the cone-apex junk
    auto gbx = buchberger(X, MonomialOrder::grevlex());
    for (int v = 0; v < nsrc; ++v) {
      if (member(Polynomial<K>::variable(X.ring, v, field_one<K>(X.ring)), gbx)) continue;
      I = saturate(I, Polynomial<K>::variable(prod, v, one));
      break;
    }
  } else {
    std::vector<int> srcvars;
    for (int v = 0; v < nsrc; ++v) srcvars.push_back(v);
    I = saturate_irrelevant(I, srcvars);
  }
  out.ideal = std::move(I);
  return out;
}

/// Dual variety: eliminate the source coordinates from the conormal ideal
/// and report the result reduced (squarefree generator when principal), in
/// a ring on the dual coordinates only.
template <class K>
Ideal<K> dual_variety(const Ideal<K>& X, const ConormalOptions& opts = {}) {
  ConormalResult<K> cn = conormal_ideal(X, opts);
  Ideal<K> E = eliminate(cn.ideal, cn.n_source);
  std::vector<std::string> dualnames(cn.product_ring->vars.begin() + cn.n_source,
                                     cn.product_ring->vars.end());
  RingPtr dring = make_ring(dualnames, X.ring->field, X.ring->prime);
  Ideal<K> D = drop_front_vars(E, cn.n_source, dring);
  if (D.gens.size() == 1 && !D.gens[0].is_zero_poly())
    D.gens[0] = squarefree_part(D.gens[0]);
  return D;
}

/// Irreducibility guard usable over both fields: exact for GF(p); over Q it
/// checks irreducibility of the reduction mod 32003, falling back to the
/// exact test on bad reduction.
template <class K>
bool ternary_irreducible_guard(const Polynomial<K>& F, std::uint64_t seed);

/// Biduality for irreducible plane curves of degree 2..4: the dual of the
/// dual equals the curve.
template <class K>
bool bidual_check(const Ideal<K>& X, std::uint64_t probe_seed = 1) {
  if (X.ring->nvars() != 3 || X.gens.size() != 1)
    throw std::invalid_argument("bidual_check expects a plane curve given by one equation");
  const Polynomial<K>& F = X.gens[0];
  int d = F.total_degree();
  if (d < 2 || d > 4)
    throw std::invalid_argument("bidual_check supports degrees 2..4");
  if (!ternary_irreducible_guard(F, probe_seed))
    throw std::invalid_argument("bidual_check expects an irreducible curve");
  ConormalOptions o1;
  Ideal<K> D = dual_variety(X, o1);
  if (D.gens.size() != 1) return false;
  ConormalOptions o2;
  o2.dual_names = X.ring->vars;  // come back in the original coordinates
  Ideal<K> DD = dual_variety(D, o2);
  if (DD.gens.size() != 1) return false;
  return normalized(DD.gens[0]) == normalized(F);
}

template <>
inline bool ternary_irreducible_guard<Fp>(const Polynomial<Fp>& F, std::uint64_t) {
  return ternary_irreducible(F);
}

template <>
inline bool ternary_irreducible_guard<Rational>(const Polynomial<Rational>& F,
                                                std::uint64_t) {
  auto rp = make_ring(F.ring->vars, FieldKind::GF, 32003);
  Polynomial<Fp> G(rp);
  Polynomial<Rational> N = normalized(F);
  for (auto& t : N.terms) {
    mpz_class num = t.second.get_num() % 32003;
    G += Polynomial<Fp>::monomial(rp, t.first, Fp(num.get_si(), 32003));
  }
  if (G.is_zero_poly() || G.total_degree() != N.total_degree())
    return ternary_irreducible(N);  // bad reduction; fall back to exact
  return ternary_irreducible(G) || ternary_irreducible(N);
}

}  // namespace disc

#endif
