#ifndef ATLAS_ORBITS_HPP
#define ATLAS_ORBITS_HPP

#include <optional>

#include "atlas/lattice.hpp"
#include "atlas/linalg.hpp"

namespace atlas {

// Block structure of the centralizer of the one-parameter subgroup with
// weight vector r: multiplicities of the distinct weights.
struct CentralizerProfile {
  std::vector<int> block_sizes;  // in order of first appearance in sorted r
  int dim_c = 0;                 // sum n_b^2 - 1
  int dim_c_mod_h = 0;           // sum n_b^2 - 2
  bool is_toric = false;         // all blocks of size 1
};

inline CentralizerProfile centralizer_profile(const Weight& r) {
  if (is_zero_weight(r))
    throw std::invalid_argument("centralizer_profile: zero weight vector");
  Weight s = r;
  std::sort(s.begin(), s.end());
  CentralizerProfile out;
  int i = 0;
  while (i < kNumVars) {
    int j = i;
    while (j < kNumVars && s[j] == s[i]) ++j;
    out.block_sizes.push_back(j - i);
    i = j;
  }
  int sq = 0;
  for (int n : out.block_sizes) sq += n * n;
  out.dim_c = sq - 1;
  out.dim_c_mod_h = sq - 2;
  out.is_toric =
      std::all_of(out.block_sizes.begin(), out.block_sizes.end(),
                  [](int n) { return n == 1; });
  return out;
}

inline MonomialSet fixed_subspace(const Weight& r) {
  return halfspace(r, Relation::EqZero);
}

struct ClosedOrbitCertificate {
  enum class Kind { ConvexHull, CfCone };
  Kind kind;
  bool verdict = false;
  // ConvexHull: one strictly positive coefficient per support monomial.
  std::vector<Rat> hull_coefficients;
  // CfCone: integer basis of the lineality space of the admissible cone.
  std::vector<std::vector<long>> lineality_basis;
};

// Convex-hull closed-orbit test for a toric centralizer: the orbit of phi is
// closed iff the origin is in the relative interior of the hull of
// { u - eta : u in Supp(phi) }.
inline ClosedOrbitCertificate convex_hull_closed_test(const MonomialSet& supp,
                                                      const Weight& r) {
  if (!centralizer_profile(r).is_toric)
    throw std::invalid_argument("convex_hull_closed_test: non-toric centralizer");
  for (const auto& u : supp.members)
    if (dot(r, u) != 0)
      throw std::invalid_argument("convex_hull_closed_test: support off the wall");
  std::vector<std::vector<long>> pts;
  for (const auto& u : supp.members) {
    std::vector<long> p(kNumVars);
    for (int i = 0; i < kNumVars; ++i) p[i] = u[i] - kBarycenter[i];
    pts.push_back(std::move(p));
  }
  ClosedOrbitCertificate cert;
  cert.kind = ClosedOrbitCertificate::Kind::ConvexHull;
  auto coeffs = positive_combination_zero(pts);
  cert.verdict = coeffs.has_value();
  if (coeffs) cert.hull_coefficients = std::move(*coeffs);
  return cert;
}

// Casimiro-Florentino test in its diagonal cone form: the admissible-weight
// cone { w : sum w = 0, w.u >= 0 for u in Supp } must be a linear subspace,
// equivalently every support objective has maximum 0 over the cone.
inline ClosedOrbitCertificate cf_cone_test(const MonomialSet& supp) {
  if (supp.members.empty())
    throw std::invalid_argument("cf_cone_test: zero form");
  std::vector<std::vector<long>> rows;
  for (const auto& u : supp.members)
    rows.push_back({u[0], u[1], u[2], u[3], u[4]});

  ClosedOrbitCertificate cert;
  cert.kind = ClosedOrbitCertificate::Kind::CfCone;
  cert.verdict = true;
  for (const auto& u : rows)
    if (!cone_max_is_zero(rows, u)) {
      cert.verdict = false;
      break;
    }
  if (cert.verdict) {
    // lineality space = kernel of the support rows together with sum w = 0
    QQ K;
    Mat<QQ> M(rows.size() + 1, kNumVars, Rat(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < kNumVars; ++j) M.at(i, j) = Rat(rows[i][j]);
    for (int j = 0; j < kNumVars; ++j) M.at(rows.size(), j) = 1;
    for (const auto& v : kernel_basis(K, M)) {
      mpz_class den(1);
      for (const auto& x : v) den = lcm(den, rat_den(x));
      std::vector<long> w(kNumVars);
      mpz_class g(0);
      std::vector<mpz_class> z(kNumVars);
      for (int j = 0; j < kNumVars; ++j) {
        z[j] = rat_num(v[j]) * (den / rat_den(v[j]));
        g = gcd(g, z[j]);
      }
      for (int j = 0; j < kNumVars; ++j)
        w[j] = mpz_class(g == 0 ? z[j] : z[j] / g).get_si();
      cert.lineality_basis.push_back(std::move(w));
    }
  }
  return cert;
}

// Is the weight vector r contained in the span of the lineality basis?
inline bool lineality_contains(const std::vector<std::vector<long>>& basis,
                               const Weight& r) {
  QQ K;
  Mat<QQ> M(basis.size(), kNumVars, Rat(0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (int j = 0; j < kNumVars; ++j) M.at(i, j) = Rat(basis[i][j]);
  auto rank0 = rank_of(K, M);
  Mat<QQ> M2(basis.size() + 1, kNumVars, Rat(0));
  M2.a.assign(M.a.begin(), M.a.end());
  M2.a.resize((basis.size() + 1) * kNumVars, Rat(0));
  for (int j = 0; j < kNumVars; ++j) M2.at(basis.size(), j) = Rat(r[j]);
  return rank_of(K, M2) == rank0;
}

}  // namespace atlas

#endif
