#ifndef ATLAS_APOLAR_HPP
#define ATLAS_APOLAR_HPP

#include <array>

#include "atlas/forms.hpp"

namespace atlas {

inline const std::vector<Expo>& monomials_of_degree(int d) {
  static std::vector<std::vector<Expo>> cache;
  while (static_cast<int>(cache.size()) <= d) {
    int dd = static_cast<int>(cache.size());
    std::vector<Expo> out;
    for (int a = 0; a <= dd; ++a)
      for (int b = 0; a + b <= dd; ++b)
        for (int c = 0; a + b + c <= dd; ++c)
          for (int e = 0; a + b + c + e <= dd; ++e)
            out.push_back({a, b, c, e, dd - a - b - c - e});
    std::sort(out.begin(), out.end());
    cache.push_back(std::move(out));
  }
  return cache[d];
}

// Catalecticant of the contraction pairing: rows are degree-q differential
// monomials v, columns are degree-(5-q) monomials w, and the (v, w) entry is
// the coefficient of x^w in d^v f, i.e. a_{v+w} * prod_i (v_i + w_i)! / w_i!.
template <class F>
Mat<F> catalecticant(const F& K, const QuinticForm<F>& f, int q) {
  if (q < 0 || q > 5) throw std::invalid_argument("catalecticant: q out of range");
  const auto& rows = monomials_of_degree(q);
  const auto& cols = monomials_of_degree(5 - q);
  Mat<F> M(rows.size(), cols.size(), K.zero());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      Expo s;
      for (int t = 0; t < 5; ++t) s[t] = rows[i][t] + cols[j][t];
      auto it = f.coeffs.find(s);
      if (it == f.coeffs.end()) continue;
      long factor = 1;
      for (int t = 0; t < 5; ++t)
        for (int e = cols[j][t] + 1; e <= s[t]; ++e) factor *= e;
      M.at(i, j) = K.mul(it->second, K.from_int(factor));
    }
  return M;
}

struct ApolarProfile {
  std::array<long, 6> hf{};
  long length = 0;
  bool operator==(const ApolarProfile& o) const { return hf == o.hf; }
  bool operator!=(const ApolarProfile& o) const { return !(*this == o); }
};

template <class F>
ApolarProfile apolar_profile(const F& K, const QuinticForm<F>& f) {
  if (f.is_zero()) throw std::invalid_argument("apolar_profile: zero form");
  ApolarProfile p;
  for (int q = 0; q <= 5; ++q) {
    p.hf[q] = static_cast<long>(rank_of(K, catalecticant(K, f, q)));
    p.length += p.hf[q];
  }
  return p;
}

struct StableProfileResult {
  ApolarProfile profile;
  int trials = 0;
};

// Repeats apolar_profile on fresh generic samples until `protocol`
// consecutive identical profiles occur.
template <class F>
StableProfileResult stable_profile(const F& K, const MonomialSet& S, Rng& rng,
                                   int protocol = 4, int trial_cap = 64) {
  if (protocol < 2) throw std::invalid_argument("stable_profile: protocol < 2");
  StableProfileResult res;
  int agree = 0;
  ApolarProfile last;
  for (int t = 1; t <= trial_cap; ++t) {
    auto f = sample_generic(K, S, rng);
    auto p = apolar_profile(K, f);
    if (t > 1 && p == last)
      ++agree;
    else
      agree = 1;
    last = p;
    if (agree >= protocol) {
      res.profile = last;
      res.trials = t;
      return res;
    }
  }
  throw std::runtime_error("stable_profile: no stabilization within trial cap");
}

// Graded Betti tables in the Macaulay display: entry (row r, column i) is
// beta_{i, i+r}.  The B_m family is parametric; C and D are fixed.
struct BettiTable {
  std::string type;  // "B0", "B14", "C", "D", ...
  std::array<std::array<int, 6>, 6> grid{};

  std::array<int, 6> totals() const {
    std::array<int, 6> t{};
    for (int r = 0; r < 6; ++r)
      for (int i = 0; i < 6; ++i) t[i] += grid[r][i];
    return t;
  }
};

inline BettiTable betti_Bm(int m) {
  BettiTable b;
  b.type = "B" + std::to_string(m);
  b.grid[0][0] = 1;
  b.grid[2][1] = 20;
  b.grid[2][2] = 35;
  b.grid[2][3] = m;
  b.grid[3][2] = m;
  b.grid[3][3] = 35;
  b.grid[3][4] = 20;
  b.grid[5][5] = 1;
  return b;
}

inline BettiTable betti_C() {
  BettiTable b;
  b.type = "C";
  b.grid[0][0] = 1;
  b.grid[2][1] = 20;
  b.grid[2][2] = 36;
  b.grid[2][3] = 4;
  b.grid[2][4] = 1;
  b.grid[3][1] = 1;
  b.grid[3][2] = 4;
  b.grid[3][3] = 36;
  b.grid[3][4] = 20;
  b.grid[5][5] = 1;
  return b;
}

inline BettiTable betti_D() {
  BettiTable b;
  b.type = "D";
  b.grid[0][0] = 1;
  b.grid[1][1] = 1;
  b.grid[2][1] = 16;
  b.grid[2][2] = 30;
  b.grid[3][3] = 30;
  b.grid[3][4] = 16;
  b.grid[4][4] = 1;
  b.grid[5][5] = 1;
  return b;
}

}  // namespace atlas

#endif
