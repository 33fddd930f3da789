#ifndef DISCLOCUS_PENCIL_HPP
#define DISCLOCUS_PENCIL_HPP

#include <random>
#include <sstream>

#include "linsys.hpp"

namespace disc {

template <class K>
struct PencilMember {
  std::vector<K> parameter;  // (t0, t1) on the pencil line
  std::vector<std::vector<K>> singular_points;
  std::vector<long long> milnor_numbers;
};

template <class K>
struct PencilReport {
  bool ok = false;
  bool identity_holds = false;
  long long cn = 0;
  long long milnor_sum = 0;
  int draws_used = 0;
  std::vector<PencilMember<K>> members;
  std::string failure;
};

namespace detail {

template <class K>
Polynomial<K> dehomogenize_at(const Polynomial<K>& f, const std::vector<K>& point,
                              std::size_t chart, const RingPtr& affine_ring) {
  // translate the point to the origin of the chart x_chart = 1 and drop the
  // chart variable; affine_ring has the remaining variables in order
  RingPtr r = f.ring;
  K one = field_one<K>(affine_ring);
  std::vector<Polynomial<K>> vals;
  std::size_t a = 0;
  for (std::size_t v = 0; v < r->nvars(); ++v) {
    if (v == chart) {
      vals.push_back(Polynomial<K>::constant(affine_ring, one));
    } else {
      // x_v -> y_a + p_v / p_chart
      K shift = point[v] * inv(point[chart]);
      Polynomial<K> sub = Polynomial<K>::variable(affine_ring, static_cast<int>(a), one) +
                          Polynomial<K>::constant(affine_ring, shift);
      vals.push_back(std::move(sub));
      ++a;
    }
  }
  return substitute(f, vals);
}

}  // namespace detail

/// Verify the top Chern number identity on a random pencil inside V: the
/// pencil meets the discriminant in deg D points; the Milnor numbers of the
/// singular members must sum to c_n of the first jet bundle.
template <class K>
PencilReport<K> pencil_verify(const LinearSystem<K>& V, std::uint64_t seed) {
  PencilReport<K> rep;
  if (V.hypersurface) {
    rep.failure = "pencil_verify supports only projective space sources";
    return rep;
  }
  validate(V);
  int n = V.source_dim();
  int m = V.section_degree();
  rep.cn = cn_jet_pn(n, m);

  DiscriminantReport<K> disc_rep = discriminant(V, /*with_strata=*/false);
  if (!disc_rep.reduced_equation) {
    rep.failure = "discriminant is not principal; pencil restriction unsupported";
    return rep;
  }
  const Polynomial<K>& D = *disc_rep.reduced_equation;
  RingPtr dring = disc_rep.dual_ring;
  int d = D.total_degree();

  std::mt19937_64 rng(seed);
  auto rand_coeff = [&]() -> K {
    if constexpr (std::is_same_v<K, Fp>) {
      return Fp(std::uniform_int_distribution<std::int64_t>(0, V.ring->prime - 1)(rng),
                V.ring->prime);
    } else {
      return Rational(std::uniform_int_distribution<int>(-20, 20)(rng));
    }
  };

  auto pencil_ring = make_ring({"t0", "t1"}, V.ring->field, V.ring->prime);
  std::ostringstream diag;
  for (int attempt = 1; attempt <= 10; ++attempt) {
    rep.draws_used = attempt;
    rep.members.clear();
    rep.milnor_sum = 0;
    std::vector<K> a(V.sections.size()), b(V.sections.size());
    for (auto& c : a) c = rand_coeff();
    for (auto& c : b) c = rand_coeff();
    // restrict D to l_j = a_j t0 + b_j t1
    K one = field_one<K>(pencil_ring);
    std::vector<Polynomial<K>> vals;
    for (std::size_t j = 0; j < V.sections.size(); ++j) {
      Polynomial<K> lin = Polynomial<K>::variable(pencil_ring, 0, one).scaled(a[j]) +
                          Polynomial<K>::variable(pencil_ring, 1, one).scaled(b[j]);
      vals.push_back(std::move(lin));
    }
    Polynomial<K> beta = substitute(D, vals);
    if (beta.is_zero_poly() || beta.total_degree() != d) {
      diag << "draw " << attempt << ": degenerate restriction\n";
      continue;
    }
    auto roots = binary_form_roots(beta, 0, 1);
    bool simple = roots.unresolved_degree == 0;
    for (auto& rt : roots.roots)
      if (rt.second != 1) simple = false;
    if (!simple) {
      diag << "draw " << attempt << ": pencil tangent to the discriminant or roots "
           << "outside the field\n";
      continue;
    }
    bool good = true;
    for (auto& rt : roots.roots) {
      PencilMember<K> mem;
      mem.parameter = rt.first;
      // the member section at (t0, t1)
      Polynomial<K> member(V.ring);
      for (std::size_t j = 0; j < V.sections.size(); ++j) {
        K coef = a[j] * rt.first[0] + b[j] * rt.first[1];
        if (!is_zero(coef)) member += V.sections[j].scaled(coef);
      }
      auto sing = singular_points(member, std::optional<Polynomial<K>>{});
      if (!sing.zero_dimensional || !sing.complete || sing.points.empty()) {
        diag << "draw " << attempt << ": member with bad singular locus\n";
        good = false;
        break;
      }
      for (auto& p : sing.points) {
        std::size_t chart = 0;
        while (chart < p.size() && is_zero(p[chart])) ++chart;
        std::vector<std::string> affvars;
        for (std::size_t v = 0; v < V.ring->nvars(); ++v)
          if (v != chart) affvars.push_back("y_" + V.ring->vars[v]);
        auto aring = make_ring(affvars, V.ring->field, V.ring->prime);
        Polynomial<K> local = detail::dehomogenize_at(member, p, chart, aring);
        MilnorDatum md = milnor(local);
        if (md.infinite) {
          diag << "draw " << attempt << ": non-isolated singularity\n";
          good = false;
          break;
        }
        mem.singular_points.push_back(p);
        mem.milnor_numbers.push_back(md.mu);
        rep.milnor_sum += md.mu;
      }
      if (!good) break;
      rep.members.push_back(std::move(mem));
    }
    if (!good) continue;
    rep.ok = true;
    rep.identity_holds = rep.milnor_sum == rep.cn;
    return rep;
  }
  rep.failure = "10 degenerate pencil draws; diagnostics:\n" + diag.str();
  return rep;
}

}  // namespace disc

#endif
