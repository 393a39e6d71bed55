#ifndef ATLAS_LATTICE_HPP
#define ATLAS_LATTICE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "atlas/simplex.hpp"

namespace atlas {

inline constexpr int kNumVars = 5;
inline constexpr int kDegree = 5;
inline constexpr int kLatticeSize = 126;  // C(9,4)

// Exponent vector of a degree-5 monomial in 5 variables.
using Expo = std::array<int, kNumVars>;

// Integer weight vector with zero coordinate sum (a diagonal 1-PS of SL(5)).
using Weight = std::array<long, kNumVars>;

inline constexpr Expo kBarycenter{1, 1, 1, 1, 1};

inline long dot(const Weight& r, const Expo& u) {
  long s = 0;
  for (int i = 0; i < kNumVars; ++i) s += r[i] * u[i];
  return s;
}

inline int expo_degree(const Expo& u) {
  return u[0] + u[1] + u[2] + u[3] + u[4];
}

inline long weight_sum(const Weight& r) {
  return r[0] + r[1] + r[2] + r[3] + r[4];
}

inline bool is_zero_weight(const Weight& r) {
  return std::all_of(r.begin(), r.end(), [](long v) { return v == 0; });
}

// gcd-reduced copy, preserving signs.
inline Weight reduce_weight(Weight r) {
  long g = 0;
  for (long v : r) g = std::gcd(g, v < 0 ? -v : v);
  if (g > 1)
    for (auto& v : r) v /= g;
  return r;
}

inline bool is_dominant(const Weight& r) {
  for (int i = 0; i + 1 < kNumVars; ++i)
    if (r[i] < r[i + 1]) return false;
  return true;
}

inline bool is_antidominant(const Weight& r) {
  for (int i = 0; i + 1 < kNumVars; ++i)
    if (r[i] > r[i + 1]) return false;
  return true;
}

inline Weight negate_weight(Weight r) {
  for (auto& v : r) v = -v;
  return r;
}

// sigma acts by moving coordinate i to position sigma[i].
using Perm = std::array<int, kNumVars>;

inline Weight apply_permutation(const Perm& sigma, const Weight& r) {
  Weight out{};
  for (int i = 0; i < kNumVars; ++i) out[sigma[i]] = r[i];
  return out;
}

inline Expo apply_permutation(const Perm& sigma, const Expo& u) {
  Expo out{};
  for (int i = 0; i < kNumVars; ++i) out[sigma[i]] = u[i];
  return out;
}

inline std::vector<Perm> all_permutations() {
  Perm p{0, 1, 2, 3, 4};
  std::vector<Perm> out;
  out.reserve(120);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// A set of exponent vectors, kept sorted lexicographically so that every
// serialization of the same set is identical.
struct MonomialSet {
  std::vector<Expo> members;

  void normalize() {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
  std::size_t size() const { return members.size(); }
  bool contains(const Expo& u) const {
    return std::binary_search(members.begin(), members.end(), u);
  }
  bool subset_of(const MonomialSet& other) const {
    return std::includes(other.members.begin(), other.members.end(),
                         members.begin(), members.end());
  }
  bool operator==(const MonomialSet& o) const { return members == o.members; }

  MonomialSet permuted(const Perm& sigma) const {
    MonomialSet out;
    out.members.reserve(members.size());
    for (const auto& u : members) out.members.push_back(apply_permutation(sigma, u));
    out.normalize();
    return out;
  }
};

// The full exponent lattice I (126 points), in lexicographic order.
inline const MonomialSet& full_lattice() {
  static const MonomialSet I = [] {
    MonomialSet s;
    for (int a = 0; a <= kDegree; ++a)
      for (int b = 0; a + b <= kDegree; ++b)
        for (int c = 0; a + b + c <= kDegree; ++c)
          for (int d = 0; a + b + c + d <= kDegree; ++d)
            s.members.push_back({a, b, c, d, kDegree - a - b - c - d});
    s.normalize();
    return s;
  }();
  return I;
}

enum class Relation { GeqZero, EqZero, GtZero };

inline MonomialSet halfspace(const Weight& r, Relation rel) {
  MonomialSet out;
  for (const auto& u : full_lattice().members) {
    long v = dot(r, u);
    bool keep = (rel == Relation::GeqZero)  ? v >= 0
                : (rel == Relation::EqZero) ? v == 0
                                            : v > 0;
    if (keep) out.members.push_back(u);
  }
  return out;  // already lexicographically sorted
}

enum class Stability { Stable, StrictlySemistable, Unstable };

inline const char* to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::StrictlySemistable: return "strictly_semistable";
    default: return "unstable";
  }
}

// Position of the barycenter eta relative to Conv(S), decided by exact LP on
// the shifted points u - eta.
inline Stability barycenter_position(const MonomialSet& S) {
  if (S.members.empty()) throw std::invalid_argument("barycenter_position: empty set");
  std::vector<std::vector<long>> pts;
  pts.reserve(S.size());
  for (const auto& u : S.members) {
    std::vector<long> p(kNumVars);
    for (int i = 0; i < kNumVars; ++i) p[i] = u[i] - kBarycenter[i];
    pts.push_back(std::move(p));
  }
  switch (origin_hull_position(pts)) {
    case HullPosition::Interior: return Stability::Stable;
    case HullPosition::Boundary: return Stability::StrictlySemistable;
    default: return Stability::Unstable;
  }
}

}  // namespace atlas

#endif
