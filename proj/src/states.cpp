#include "atlas/states.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "atlas/linalg.hpp"

namespace atlas {

namespace {

using Bits = std::array<std::uint64_t, 2>;

inline void bit_set(Bits& b, int i) { b[i >> 6] |= (1ULL << (i & 63)); }
inline bool bits_subset(const Bits& a, const Bits& b) {
  return (a[0] & ~b[0]) == 0 && (a[1] & ~b[1]) == 0;
}

int lattice_index(const Expo& u) {
  const auto& I = full_lattice().members;
  auto it = std::lower_bound(I.begin(), I.end(), u);
  return static_cast<int>(it - I.begin());
}

Bits support_bits(const Weight& r) {
  Bits b{0, 0};
  const auto& I = full_lattice().members;
  for (int i = 0; i < kLatticeSize; ++i)
    if (dot(r, I[i]) >= 0) bit_set(b, i);
  return b;
}

int popcount(const Bits& b) {
  return __builtin_popcountll(b[0]) + __builtin_popcountll(b[1]);
}

MonomialSet bits_to_set(const Bits& b) {
  MonomialSet s;
  const auto& I = full_lattice().members;
  for (int i = 0; i < kLatticeSize; ++i)
    if (b[i >> 6] & (1ULL << (i & 63))) s.members.push_back(I[i]);
  return s;
}

}  // namespace

std::vector<Weight> candidate_normals() {
  const auto& I = full_lattice().members;
  const int N = kLatticeSize;

  unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<Weight>> found(nthreads);
  std::atomic<int> next_a{0};

  auto worker = [&](unsigned tid) {
    auto& out = found[tid];
    for (;;) {
      int a = next_a.fetch_add(1);
      if (a >= N) break;
      for (int b = a + 1; b < N; ++b)
        for (int c = b + 1; c < N; ++c) {
          std::array<std::array<long, 5>, 4> m{};
          for (int j = 0; j < 5; ++j) {
            m[0][j] = I[a][j];
            m[1][j] = I[b][j];
            m[2][j] = I[c][j];
            m[3][j] = 1;  // the barycenter row
          }
          auto v = cross5(m);
          bool zero = true;
          for (long x : v) zero = zero && x == 0;
          if (zero) continue;  // span dimension <= 3
          Weight r{v[0], v[1], v[2], v[3], v[4]};
          // Keep only normals sorted into the dominant chamber; the other
          // orientation of the hyperplane is met by a permuted triple.
          if (is_dominant(r))
            out.push_back(r);
          else if (is_antidominant(r))
            out.push_back(negate_weight(r));
        }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
  for (auto& th : pool) th.join();

  std::vector<Weight> all;
  for (auto& v : found) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<EnumeratedClass> enumerate_support_classes() {
  auto normals = candidate_normals();

  // Group normals by the support they cut out.
  std::map<Bits, std::vector<Weight>> by_support;
  for (const auto& r : normals) by_support[support_bits(r)].push_back(r);

  struct Cand {
    Bits bits;
    int size;
    std::vector<Weight> normals;
  };
  std::vector<Cand> cands;
  cands.reserve(by_support.size());
  for (auto& [bits, rs] : by_support)
    cands.push_back({bits, popcount(bits), std::move(rs)});

  // Identify permutation-equivalent supports: keep one representative per
  // orbit, merging the generating normals.
  auto perms = all_permutations();
  std::vector<std::array<int, kLatticeSize>> perm_idx(perms.size());
  const auto& I = full_lattice().members;
  for (std::size_t p = 0; p < perms.size(); ++p)
    for (int i = 0; i < kLatticeSize; ++i)
      perm_idx[p][i] = lattice_index(apply_permutation(perms[p], I[i]));

  auto image = [&](const Bits& b, std::size_t p) {
    Bits out{0, 0};
    for (int i = 0; i < kLatticeSize; ++i)
      if (b[i >> 6] & (1ULL << (i & 63))) bit_set(out, perm_idx[p][i]);
    return out;
  };

  std::map<Bits, std::size_t> orbit_rep;  // canonical image -> index in kept
  std::vector<Cand> kept;
  for (auto& c : cands) {
    Bits canon = c.bits;
    for (std::size_t p = 0; p < perms.size(); ++p)
      canon = std::min(canon, image(c.bits, p));
    auto it = orbit_rep.find(canon);
    if (it == orbit_rep.end()) {
      orbit_rep.emplace(canon, kept.size());
      kept.push_back(std::move(c));
    } else {
      auto& dst = kept[it->second].normals;
      dst.insert(dst.end(), c.normals.begin(), c.normals.end());
    }
  }

  // Inclusion-maximality modulo the permutation action: drop any support
  // contained in a permuted image of a strictly larger one.
  std::sort(kept.begin(), kept.end(),
            [](const Cand& x, const Cand& y) { return x.size > y.size; });
  std::vector<std::vector<Bits>> images(kept.size());
  std::vector<bool> dead(kept.size(), false);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    images[i].reserve(perms.size());
    for (std::size_t p = 0; p < perms.size(); ++p)
      images[i].push_back(image(kept[i].bits, p));
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = 0; j < i && !dead[i]; ++j) {
      if (dead[j] || kept[j].size <= kept[i].size) continue;
      for (const auto& img : images[j])
        if (bits_subset(kept[i].bits, img)) {
          dead[i] = true;
          break;
        }
    }
  }

  std::vector<EnumeratedClass> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (dead[i]) continue;
    MonomialSet supp = bits_to_set(kept[i].bits);
    if (barycenter_position(supp) != Stability::StrictlySemistable) continue;
    std::sort(kept[i].normals.begin(), kept[i].normals.end());
    out.push_back({std::move(kept[i].normals), std::move(supp)});
  }
  std::sort(out.begin(), out.end(), [](const EnumeratedClass& x,
                                       const EnumeratedClass& y) {
    if (x.support.size() != y.support.size())
      return x.support.size() < y.support.size();
    return x.normals.front() < y.normals.front();
  });
  return out;
}

std::vector<State> enumerate_maximal_supports(
    const std::vector<GoldenState>& golden) {
  auto classes = enumerate_support_classes();
  if (classes.size() != golden.size())
    throw std::runtime_error(
        "state enumeration count mismatch: got " +
        std::to_string(classes.size()) + ", expected " +
        std::to_string(golden.size()));

  std::vector<State> states;
  std::vector<bool> used(classes.size(), false);
  for (const auto& g : golden) {
    bool matched = false;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (used[i]) continue;
      const auto& ns = classes[i].normals;
      if (std::find(ns.begin(), ns.end(), g.r) == ns.end()) continue;
      if (static_cast<int>(classes[i].support.size()) != g.support_size)
        throw std::runtime_error("support size mismatch at k=" +
                                 std::to_string(g.k));
      State st;
      st.k = g.k;
      st.r = g.r;
      st.support = classes[i].support;
      st.wall = halfspace(g.r, Relation::EqZero);
      st.dim_phi = g.dim_phi;
      states.push_back(std::move(st));
      used[i] = true;
      matched = true;
      break;
    }
    if (!matched)
      throw std::runtime_error("enumerated states do not contain k=" +
                               std::to_string(g.k));
  }
  std::sort(states.begin(), states.end(),
            [](const State& a, const State& b) { return a.k < b.k; });
  return states;
}

}  // namespace atlas
