#ifndef ATLAS_HILBERT_HPP
#define ATLAS_HILBERT_HPP

#include <cstdint>
#include <map>

#include "atlas/gb.hpp"

namespace atlas {
namespace gb {

// Hilbert data of a homogeneous quotient S/I in 5 variables: the Hilbert
// function on a degree window, the affine Krull dimension (-1 for the zero
// ring), and the degree of the projective scheme (0 when projectively empty).
struct HilbertData {
  std::vector<long> hf;
  int krull_dim = -1;
  long degree = 0;

  bool operator==(const HilbertData& o) const {
    return hf == o.hf && krull_dim == o.krull_dim && degree == o.degree;
  }
};

namespace detail {

using Series = std::vector<long long>;  // numerator coefficients, index = degree

inline Series series_mul_one_minus(const Series& a, int d) {
  if (a.empty()) return {};
  Series out(a.size() + d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] += a[i];
    out[i + d] -= a[i];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline Series series_add_shift(const Series& a, const Series& b, int shift) {
  Series out(std::max(a.size(), b.size() + shift), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + shift] += b[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline void minimalize_monomials(std::vector<Mono>& g) {
  std::sort(g.begin(), g.end(), [](const Mono& a, const Mono& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.e < b.e;
  });
  std::vector<Mono> out;
  for (const auto& m : g) {
    bool red = false;
    for (const auto& s : out)
      if (s.divides(m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  g.swap(out);
}

// Numerator of the Hilbert series of S/(monomial ideal) over (1-t)^5, by the
// standard pivot recursion HS(S/I) = HS(S/(I+(x))) + t * HS(S/(I:x)).
class HilbertNumerator {
 public:
  Series run(std::vector<Mono> gens) {
    minimalize_monomials(gens);
    return go(std::move(gens));
  }

 private:
  using Key = std::vector<std::array<std::uint16_t, kMaxVars>>;

  Series go(std::vector<Mono> gens) {
    if (gens.empty()) return {1};
    if (gens.front().deg == 0) return {};  // unit ideal, zero module
    // pairwise coprime generators form a regular sequence
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (!gens[i].coprime(gens[j])) {
          coprime = false;
          break;
        }
    if (coprime) {
      Series s{1};
      for (const auto& m : gens) s = series_mul_one_minus(s, m.deg);
      return s;
    }
    Key key;
    key.reserve(gens.size());
    for (const auto& m : gens) key.push_back(m.e);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    // pivot on the most frequent variable
    int counts[5] = {0, 0, 0, 0, 0};
    for (const auto& m : gens)
      for (int v = 0; v < 5; ++v)
        if (m.e[v] > 0) ++counts[v];
    int v = 0;
    for (int i = 1; i < 5; ++i)
      if (counts[i] > counts[v]) v = i;

    std::vector<Mono> plus;  // I + (x_v)
    Mono xv;
    xv.e[v] = 1;
    xv.deg = 1;
    plus.push_back(xv);
    for (const auto& m : gens)
      if (m.e[v] == 0) plus.push_back(m);
    minimalize_monomials(plus);

    std::vector<Mono> colon;  // I : x_v
    for (auto m : gens) {
      if (m.e[v] > 0) {
        m.e[v] -= 1;
        m.deg -= 1;
      }
      colon.push_back(m);
    }
    minimalize_monomials(colon);

    Series out = series_add_shift(go(std::move(plus)), go(std::move(colon)), 1);
    memo_.emplace(std::move(key), out);
    return out;
  }

  std::map<Key, Series> memo_;
};

}  // namespace detail

// Hilbert data from a reduced Groebner basis (via its lead-term ideal).
template <class F>
HilbertData hilbert_data(const std::vector<Poly<F>>& reduced_gb,
                         int qmax = 30) {
  std::vector<Mono> leads;
  for (const auto& g : reduced_gb)
    if (!g.empty()) leads.push_back(g.front().m);
  detail::HilbertNumerator hn;
  auto N = hn.run(std::move(leads));

  HilbertData out;
  out.hf.assign(qmax + 1, 0);
  // h(q) = sum_j N_j * C(q - j + 4, 4)
  auto choose4 = [](long n) -> long {
    if (n < 4) return 0;
    return n * (n - 1) * (n - 2) * (n - 3) / 24;
  };
  for (int q = 0; q <= qmax; ++q) {
    long long h = 0;
    for (std::size_t j = 0; j < N.size() && static_cast<int>(j) <= q; ++j)
      h += N[j] * choose4(q - static_cast<long>(j) + 4);
    out.hf[q] = static_cast<long>(h);
  }
  if (N.empty()) {  // zero ring
    out.krull_dim = -1;
    out.degree = 0;
    return out;
  }
  // strip (1-t) factors: e = multiplicity of the root t=1
  detail::Series cur = N;
  int e = 0;
  for (;;) {
    long long at1 = 0;
    for (auto c : cur) at1 += c;
    if (at1 != 0) {
      out.degree = static_cast<long>(at1 < 0 ? -at1 : at1);
      break;
    }
    // divide by (1-t): q_i = sum_{j<=i} n_j
    detail::Series q(cur.size() ? cur.size() - 1 : 0, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < cur.size() || i < q.size(); ++i) {
      if (i >= q.size()) break;
      acc += cur[i];
      q[i] = acc;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    cur = std::move(q);
    ++e;
    if (e > 5) throw std::logic_error("hilbert: excess (1-t) factors");
  }
  out.krull_dim = 5 - e;
  if (out.krull_dim <= 0) out.degree = 0;  // projectively empty by convention
  return out;
}

}  // namespace gb
}  // namespace atlas

#endif
