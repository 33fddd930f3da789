#ifndef DISCLOCUS_NUMERICS_HPP
#define DISCLOCUS_NUMERICS_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace disc {

/// Abstract surface invariants, user supplied.
struct SurfaceNumerics {
  long long e = 0;    // topological Euler characteristic
  long long K2 = 0;   // K.K
  long long KL = 0;   // K.L
  long long L2 = 0;   // L.L
  long long q = 0;    // irregularity
  long long gL = 0;   // sectional genus

  bool genus_consistent() const { return 2 * gL - 2 == KL + L2; }
  // 12 chi(O) = K^2 + e when chi is supplied
  bool noether_consistent(long long chi) const { return 12 * chi == K2 + e; }
};

inline long long c2_jet_surface(const SurfaceNumerics& s) {
  return s.e + 2 * s.KL + 3 * s.L2;
}

inline long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// c_n of the first jet bundle of O(m) on P^n.
inline long long cn_jet_pn(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("cn_jet_pn: need n >= 1, m >= 1");
  return (n + 1) * ipow(m - 1, n);
}

struct CyclicCoverData {
  long long c2;            // (d-1) b d (b d - 1)
  long long branch_class;  // bd(bd-1), the class of the branch curve setup
  long long multiplier;    // m = d-1
};

/// Degree-d cyclic cover of P^2 branched along a smooth curve of degree bd.
inline CyclicCoverData c2_jet_cyclic(int d, int b) {
  if (d < 2 || b < 1) throw std::invalid_argument("c2_jet_cyclic: need d >= 2, b >= 1");
  long long bd = static_cast<long long>(b) * d;
  return {(d - 1) * bd * (bd - 1), bd * (bd - 1), d - 1};
}

/// Divisor class a C0 + b f on a P^1-bundle with invariant e over a base of
/// genus g. Intersection form: C0^2 = -e, C0.f = 1, f^2 = 0.
struct RuledClass {
  long long a = 0;
  long long b = 0;
  long long e = 0;
  long long g = 0;
};

inline long long ruled_dot(const RuledClass& d1, const RuledClass& d2) {
  if (d1.e != d2.e || d1.g != d2.g)
    throw std::invalid_argument("ruled_dot: classes live on different surfaces");
  return -d1.a * d2.a * d1.e + d1.a * d2.b + d2.a * d1.b;
}

inline RuledClass ruled_canonical(long long g, long long e) {
  return {-2, 2 * g - 2 - e, e, g};
}

inline long long dual_degree_plane_curve(int d, int g) {
  if (d < 2 || g < 0) throw std::invalid_argument("dual_degree_plane_curve: need d >= 2, g >= 0");
  return 2LL * (d + g - 1);
}

/// A degree-d map P^1 -> P^1 with a single branch point of local
/// multiplicity m would force 2g - 2 = -d - m; no integer g >= 0 works.
inline bool single_branch_impossible(int d, int m) {
  if (d < 2 || m < 1 || m > d)
    throw std::invalid_argument("single_branch_impossible: need d >= 2, 1 <= m <= d");
  for (int g = 0; g <= d + m; ++g)
    if (2 * g - 2 == -d - m) return false;
  return true;
}

struct ScanSurvivor {
  long long e, a, b;
  bool operator==(const ScanSurvivor&) const = default;
};

/// Brute-force scan of the inequality
///   4 + 2ae - 4a - 4b + 6ab - 3a^2 e <= 4ab - 2a^2 e - 2
/// over a >= 2, e >= 0, b >= ae+1 (very ampleness threshold), with b >= a
/// when e = 0 (the two coordinates of a section class can be swapped).
inline std::vector<ScanSurvivor> scan_section6(long long e_max, long long a_max,
                                               long long b_max) {
  std::vector<ScanSurvivor> out;
  for (long long e = 0; e <= e_max; ++e)
    for (long long a = 2; a <= a_max; ++a)
      for (long long b = a * e + 1; b <= b_max; ++b) {
        if (e == 0 && b < a) continue;
        long long lhs = 4 + 2 * a * e - 4 * a - 4 * b + 6 * a * b - 3 * a * a * e;
        long long rhs = 4 * a * b - 2 * a * a * e - 2;
        if (lhs <= rhs) out.push_back({e, a, b});
      }
  return out;
}

/// Survivors must lie in the families: a = 2 (any e), or e = 0 with
/// a = b = 3, or e = 1 with a = 3 (b = 4 at the ampleness threshold).
inline bool scan_survivor_in_expected_families(const ScanSurvivor& s) {
  if (s.a == 2) return true;
  if (s.e == 0 && s.a == 3 && s.b == 3) return true;
  if (s.e == 1 && s.a == 3 && s.b == 4) return true;
  return false;
}

/// Sum over components of multiplier*degree equals c_n, and the plain
/// degree sum stays below it.
inline bool codegree_identity_check(
    const std::vector<std::pair<long long, long long>>& components,  // (degree, multiplier)
    long long cn) {
  long long weighted = 0, plain = 0;
  for (auto& [d, m] : components) {
    if (d < 1 || m < 1) throw std::invalid_argument("codegree_identity_check: need d, m >= 1");
    weighted += m * d;
    plain += d;
  }
  return weighted == cn && plain <= cn;
}

inline bool tame_check(long long codeg, long long cn) { return codeg == cn; }

enum class MarchionnaVerdict { Pass, ScrollEquality, FlaggedException, Fail };

/// codeg(S,V) >= deg(image) except for (P^2, O(2)); equality characterizes
/// scrolls.
inline MarchionnaVerdict marchionna_check(long long codeg, long long deg_image,
                                          bool is_p2_o2, bool is_scroll) {
  if (is_p2_o2) return MarchionnaVerdict::FlaggedException;
  if (codeg < deg_image) return MarchionnaVerdict::Fail;
  if (codeg == deg_image)
    return is_scroll ? MarchionnaVerdict::ScrollEquality : MarchionnaVerdict::Pass;
  return MarchionnaVerdict::Pass;
}

/// Jumping profile of a Segre product: the jumping index of a product
/// point is the sum of the factor indices. `profiles[j][i]` = dimension of
/// J_i of factor j (-1 for empty); entry 0 holds the factor's dimension.
/// Returns dim J_i of the product (-1 for empty).
inline long long product_jumping_profile(const std::vector<std::vector<long long>>& profiles,
                                         int i) {
  if (profiles.size() < 2)
    throw std::invalid_argument("product_jumping_profile: need at least two factors");
  // maximize sum of factor stratum dimensions over index splits with sum >= i
  std::vector<long long> best(static_cast<std::size_t>(i) + 1, -1);
  best[0] = 0;
  // best[s] = max total dimension achieving joint index at least s
  for (auto& prof : profiles) {
    std::vector<long long> next(best.size(), -1);
    for (std::size_t s = 0; s < best.size(); ++s) {
      if (best[s] < 0) continue;
      for (std::size_t j = 0; j < prof.size(); ++j) {
        if (prof[j] < 0) continue;
        std::size_t ns = std::min(best.size() - 1, s + j);
        next[ns] = std::max(next[ns], best[s] + prof[j]);
      }
    }
    best = std::move(next);
  }
  return best[static_cast<std::size_t>(i)];
}

}  // namespace disc

#endif
