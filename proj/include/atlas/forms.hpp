#ifndef ATLAS_FORMS_HPP
#define ATLAS_FORMS_HPP

#include <map>

#include "atlas/ideals.hpp"
#include "atlas/lattice.hpp"

namespace atlas {

inline GF::Elem random_nonzero(const GF& K, Rng& rng, long /*bound*/) {
  return rng.unit_mod(K);
}
inline Rat random_nonzero(const QQ&, Rng& rng, long bound) {
  return rng.nonzero_int(bound);
}

// A degree-5 form as a sparse coefficient map; zero coefficients are never
// stored, so the support is exactly the key set.
template <class F>
struct QuinticForm {
  std::map<Expo, typename F::Elem> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  void set(const F& K, const Expo& u, const typename F::Elem& c) {
    if (K.is_zero(c))
      coeffs.erase(u);
    else
      coeffs[u] = c;
  }
  void add_to(const F& K, const Expo& u, const typename F::Elem& c) {
    auto it = coeffs.find(u);
    if (it == coeffs.end()) {
      if (!K.is_zero(c)) coeffs.emplace(u, c);
      return;
    }
    it->second = K.add(it->second, c);
    if (K.is_zero(it->second)) coeffs.erase(it);
  }
  MonomialSet support() const {
    MonomialSet s;
    s.members.reserve(coeffs.size());
    for (const auto& [u, c] : coeffs) s.members.push_back(u);
    return s;  // map keys are already sorted lexicographically
  }
  gb::Poly<F> to_poly(const F& K, const gb::MonOrder& ord) const {
    gb::Poly<F> p;
    p.reserve(coeffs.size());
    for (const auto& [u, c] : coeffs) {
      gb::Term<F> t;
      for (int i = 0; i < kNumVars; ++i)
        t.m.e[i] = static_cast<std::uint16_t>(u[i]);
      t.m.recompute_deg();
      t.c = c;
      p.push_back(t);
    }
    gb::sort_and_combine(K, ord, p);
    return p;
  }
};

// Independent uniform nonzero coefficients on exactly the given support.
template <class F>
QuinticForm<F> sample_generic(const F& K, const MonomialSet& S, Rng& rng,
                              long bound = 50) {
  if (S.members.empty())
    throw std::invalid_argument("sample_generic: empty support");
  QuinticForm<F> f;
  for (const auto& u : S.members) f.coeffs.emplace(u, random_nonzero(K, rng, bound));
  return f;
}

// Monomial basis of the truncated space: 3-variable exponent triples v with
// |v| = m and rho . v >= beta.
struct TruncatedFormSpace {
  std::array<long, 3> rho;
  int m;
  long beta;
  std::vector<std::array<int, 3>> basis;
};

inline TruncatedFormSpace truncated_form_basis(const std::array<long, 3>& rho,
                                               int m, long beta) {
  if (m < 0) throw std::invalid_argument("truncated_form_basis: m < 0");
  TruncatedFormSpace out{rho, m, beta, {}};
  for (int v0 = 0; v0 <= m; ++v0)
    for (int v1 = 0; v0 + v1 <= m; ++v1) {
      int v2 = m - v0 - v1;
      if (rho[0] * v0 + rho[1] * v1 + rho[2] * v2 >= beta)
        out.basis.push_back({v0, v1, v2});
    }
  std::sort(out.basis.begin(), out.basis.end());
  return out;
}

// The uniform generic form attached to a state: sum over a+b <= 5 of
// x3^a x4^b times a fresh generic element of the truncated space of degree
// 5-a-b and threshold -a r3 - b r4.  The support must come out as exactly the
// state's support halfspace.
template <class F>
QuinticForm<F> assemble_uniform_form(const F& K, const Weight& r,
                                     const MonomialSet& expected_support,
                                     Rng& rng, long bound = 50) {
  std::array<long, 3> rho{r[0], r[1], r[2]};
  QuinticForm<F> f;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b) {
      auto space = truncated_form_basis(rho, 5 - a - b, -a * r[3] - b * r[4]);
      for (const auto& v : space.basis) {
        Expo u{v[0], v[1], v[2], a, b};
        f.add_to(K, u, random_nonzero(K, rng, bound));
      }
    }
  if (!(f.support() == expected_support))
    throw std::runtime_error("assemble_uniform_form: support mismatch");
  return f;
}

// One-parameter-subgroup limit under t -> 0 with x^u scaling by t^{r.u}:
// weight-positive terms die, weight-zero terms survive, a negative weight
// anywhere means the limit does not exist.
template <class F>
QuinticForm<F> ops_limit(const F& K, const QuinticForm<F>& f, const Weight& r) {
  QuinticForm<F> out;
  for (const auto& [u, c] : f.coeffs) {
    long w = dot(r, u);
    if (w < 0) throw std::domain_error("ops_limit: limit does not exist");
    if (w == 0) out.coeffs.emplace(u, c);
  }
  return out;
}

template <class F>
Mat<F> hessian_matrix(const F& K, const QuinticForm<F>& f,
                      const std::array<typename F::Elem, 5>& x) {
  Mat<F> H(5, 5, K.zero());
  for (const auto& [u, c] : f.coeffs) {
    for (int i = 0; i < 5; ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < 5; ++j) {
        int uj = u[j] - (i == j ? 1 : 0);
        if (uj <= 0) continue;
        // coefficient u_i * (u_j - delta_ij) on x^{u - e_i - e_j}
        auto v = K.mul(c, K.from_int(u[i] * uj));
        for (int t = 0; t < 5; ++t) {
          int e = u[t] - (t == i ? 1 : 0) - (t == j ? 1 : 0);
          for (int q = 0; q < e; ++q) v = K.mul(v, x[t]);
        }
        H.at(i, j) = K.add(H.at(i, j), v);
      }
    }
  }
  return H;
}

template <class F>
std::size_t hessian_rank_at(const F& K, const QuinticForm<F>& f,
                            const std::array<typename F::Elem, 5>& x) {
  if (f.is_zero()) throw std::invalid_argument("hessian_rank_at: zero form");
  return rank_of(K, hessian_matrix(K, f, x));
}

// Dimension of the infinitesimal stabilizer of f in sl(5): the kernel of the
// 126 x 24 matrix of the derivation action A |-> sum A_ij x_i df/dx_j on the
// traceless matrices.
template <class F>
std::size_t lie_stabilizer_dim(const F& K, const QuinticForm<F>& f) {
  if (f.is_zero()) throw std::invalid_argument("lie_stabilizer_dim: zero form");
  const auto& I = full_lattice().members;
  auto row_of = [&](const Expo& u) {
    auto it = std::lower_bound(I.begin(), I.end(), u);
    return static_cast<std::size_t>(it - I.begin());
  };
  Mat<F> M(kLatticeSize, 24, K.zero());
  // columns 0..19: E_{ab}, a != b (lex order); 20..23: E_{cc} - E_{44}
  int col = 0;
  auto add_action = [&](int a, int b, int c, const typename F::Elem& sign) {
    // contribution of coeff * x_a d/dx_b
    for (const auto& [u, cf] : f.coeffs) {
      if (u[b] == 0) continue;
      Expo w = u;
      w[b] -= 1;
      w[a] += 1;
      auto val = K.mul(cf, K.mul(sign, K.from_int(u[b])));
      std::size_t r = row_of(w);
      M.at(r, c) = K.add(M.at(r, c), val);
    }
  };
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      if (a == b) continue;
      add_action(a, b, col, K.one());
      ++col;
    }
  for (int c = 0; c < 4; ++c) {
    add_action(c, c, col, K.one());
    add_action(4, 4, col, K.neg(K.one()));
    ++col;
  }
  return kernel_dim(K, M);
}

}  // namespace atlas

#endif
