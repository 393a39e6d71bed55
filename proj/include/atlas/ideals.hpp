#ifndef ATLAS_IDEALS_HPP
#define ATLAS_IDEALS_HPP

#include "atlas/gb.hpp"
#include "atlas/linalg.hpp"

namespace atlas {
namespace gb {

template <class F>
Poly<F> poly_from_terms(const F& K, const MonOrder& ord,
                        std::vector<Term<F>> terms) {
  sort_and_combine(K, ord, terms);
  return terms;
}

template <class F>
Poly<F> poly_derivative(const F& K, const Poly<F>& p, int var) {
  Poly<F> out;
  out.reserve(p.size());
  for (const auto& t : p) {
    if (t.m.e[var] == 0) continue;
    Term<F> d;
    d.m = t.m;
    d.c = K.mul(t.c, K.from_int(t.m.e[var]));
    d.m.e[var] -= 1;
    d.m.deg -= 1;
    if (!K.is_zero(d.c)) out.push_back(d);
  }
  // dropping x_var once from every surviving term is a uniform shift, so the
  // term order is preserved
  return out;
}

template <class F>
typename F::Elem poly_eval(const F& K, const Poly<F>& p,
                           const std::array<typename F::Elem, 5>& x) {
  auto acc = K.zero();
  for (const auto& t : p) {
    auto v = t.c;
    for (int i = 0; i < 5; ++i)
      for (int e = 0; e < t.m.e[i]; ++e) v = K.mul(v, x[i]);
    acc = K.add(acc, v);
  }
  return acc;
}

// f(A x): substitute x_i -> sum_j A[i][j] x_j (5 variables).
template <class F>
Poly<F> substitute_linear(const F& K, const MonOrder& ord, const Poly<F>& p,
                          const Mat<F>& A) {
  // linear forms and their powers, computed on demand
  std::array<Poly<F>, 5> lin;
  for (int i = 0; i < 5; ++i) {
    Poly<F> l;
    for (int j = 0; j < 5; ++j) {
      if (K.is_zero(A.at(i, j))) continue;
      Term<F> t;
      t.m = Mono{};
      t.m.e[j] = 1;
      t.m.deg = 1;
      t.c = A.at(i, j);
      l.push_back(t);
    }
    sort_and_combine(K, ord, l);
    lin[i] = std::move(l);
  }
  std::array<std::vector<Poly<F>>, 5> pow;  // pow[i][e] = lin_i^e
  for (int i = 0; i < 5; ++i) {
    pow[i].push_back(Poly<F>{Term<F>{Mono{}, K.one()}});
  }
  auto power = [&](int i, int e) -> const Poly<F>& {
    while (static_cast<int>(pow[i].size()) <= e)
      pow[i].push_back(poly_mul(K, ord, pow[i].back(), lin[i]));
    return pow[i][e];
  };
  Poly<F> out;
  for (const auto& t : p) {
    Poly<F> term{Term<F>{Mono{}, t.c}};
    for (int i = 0; i < 5; ++i)
      if (t.m.e[i] > 0) term = poly_mul(K, ord, term, power(i, t.m.e[i]));
    out = poly_add(K, ord, out, term);
  }
  return out;
}

// Exact division p / f; throws if the division leaves a remainder.
template <class F>
Poly<F> poly_exact_divide(const F& K, const MonOrder& ord, Poly<F> p,
                          const Poly<F>& f) {
  if (f.empty()) throw std::domain_error("division by zero polynomial");
  Poly<F> q;
  while (!p.empty()) {
    if (!f.front().m.divides(p.front().m))
      throw std::domain_error("inexact polynomial division");
    Term<F> t;
    t.m = mono_div(p.front().m, f.front().m);
    t.c = K.div(p.front().c, f.front().c);
    q.push_back(t);
    auto sub = poly_mul_term(K, f, t.m, K.neg(t.c));
    p = poly_add(K, ord, p, sub);
  }
  return q;  // terms emitted in decreasing order
}

// ---------------------------------------------------------------------------
// Ideal-level operations.  All generator lists are 5-variable polynomials;
// intersections go through the auxiliary t variable with an elimination
// order.
// ---------------------------------------------------------------------------

template <class F>
std::vector<Poly<F>> canonical_gb(const F& K, std::vector<Poly<F>> gens) {
  MonOrder ord;
  return groebner(K, ord, std::move(gens));
}

// A subset of B, given any generators of A and a reduced GB of B under ordB.
template <class F>
bool ideal_subset(const F& K, const MonOrder& ordB,
                  const std::vector<Poly<F>>& gens_a,
                  const std::vector<Poly<F>>& gb_b) {
  for (auto g : gens_a) {
    sort_and_combine(K, ordB, g);
    if (!normal_form(K, ordB, g, gb_b).empty()) return false;
  }
  return true;
}

template <class F>
std::vector<Poly<F>> intersect_ideals(const F& K,
                                      const std::vector<Poly<F>>& a,
                                      const std::vector<Poly<F>>& b) {
  MonOrder elim = MonOrder::elim_t();
  Mono t;
  t.e[kTVar] = 1;
  std::vector<Poly<F>> gens;
  for (const auto& f : a) {
    auto g = poly_mul_term(K, f, t, K.one());
    sort_and_combine(K, elim, g);
    gens.push_back(std::move(g));
  }
  for (const auto& f : b) {  // (1 - t) f
    auto g = f;
    auto tf = poly_mul_term(K, f, t, K.neg(K.one()));
    for (auto& tt : tf) g.push_back(tt);
    sort_and_combine(K, elim, g);
    gens.push_back(std::move(g));
  }
  auto G = groebner(K, elim, std::move(gens));
  std::vector<Poly<F>> out;
  for (auto& g : G)
    if (g.front().m.e[kTVar] == 0) out.push_back(std::move(g));
  // t-free elements of an elim-order GB are t-free throughout and sorted
  // consistently with the plain order
  return out;
}

// (I : f) for a single nonzero polynomial, via (I n (f)) / f.
template <class F>
std::vector<Poly<F>> ideal_quotient_poly(const F& K,
                                         const std::vector<Poly<F>>& gens,
                                         const Poly<F>& f) {
  MonOrder ord;
  auto inter = intersect_ideals(K, gens, std::vector<Poly<F>>{f});
  std::vector<Poly<F>> out;
  for (const auto& g : inter)
    out.push_back(poly_exact_divide(K, ord, g, f));
  return canonical_gb(K, std::move(out));
}

// (I : x_var^inf) by the degrevlex division trick: compute a GB with x_var
// least significant and strip the x_var content of every element.  Requires
// a homogeneous ideal.  Returns a reduced GB under drl_with_last(var).
template <class F>
std::vector<Poly<F>> saturate_variable(const F& K,
                                       const std::vector<Poly<F>>& gens,
                                       int var) {
  MonOrder ord = MonOrder::drl_with_last(var);
  auto G = groebner(K, ord, gens);
  bool changed = false;
  for (auto& g : G) {
    std::uint16_t a = 0xffff;
    for (const auto& t : g) a = std::min(a, t.m.e[var]);
    if (a == 0 || a == 0xffff) continue;
    changed = true;
    for (auto& t : g) {
      t.m.e[var] -= a;
      t.m.deg -= a;
    }
  }
  if (changed) G = groebner(K, ord, std::move(G));
  return G;
}

// (I : l^inf) for a linear form, by an invertible change of coordinates that
// sends l to x4 followed by the variable trick.
template <class F>
std::vector<Poly<F>> saturate_linear(const F& K,
                                     const std::vector<Poly<F>>& gens,
                                     const std::array<typename F::Elem, 5>& l) {
  MonOrder ord;
  int pivot = -1;
  for (int i = 0; i < 5; ++i)
    if (!K.is_zero(l[i])) pivot = i;
  if (pivot < 0) throw std::invalid_argument("saturate_linear: zero form");

  // Build B with l(Bx) = x4:  columns b_j satisfy l . b_j = delta_{j,4}.
  Mat<F> B(5, 5, K.zero());
  int col = 0;
  for (int i = 0; i < 5; ++i) {
    if (i == pivot) continue;
    // e_i - (l_i / l_pivot) e_pivot  spans ker(l)
    B.at(i, col) = K.one();
    B.at(pivot, col) = K.neg(K.div(l[i], l[pivot]));
    ++col;
  }
  B.at(pivot, 4) = K.inv(l[pivot]);
  Mat<F> Binv = inverse_of(K, B);

  std::vector<Poly<F>> moved;
  for (const auto& g : gens)
    moved.push_back(substitute_linear(K, ord, g, B));
  auto sat = saturate_variable(K, moved, 4);
  std::vector<Poly<F>> back;
  for (const auto& g : sat)
    back.push_back(substitute_linear(K, ord, g, Binv));
  return canonical_gb(K, std::move(back));
}

// (I : f^inf) for a general polynomial: iterate single quotients to a fixed
// point (compared via canonical reduced bases).
template <class F>
std::vector<Poly<F>> saturate_poly(const F& K,
                                   const std::vector<Poly<F>>& gens,
                                   const Poly<F>& f) {
  auto cur = canonical_gb(K, gens);
  MonOrder ord;
  for (;;) {
    auto next = ideal_quotient_poly(K, cur, f);
    if (same_ideal(K, ord, cur, next)) return cur;
    cur = std::move(next);
  }
}

// Single quotient I : (x0,...,x4) as the intersection of the five quotients
// by the variables.
template <class F>
std::vector<Poly<F>> ideal_quotient_irrelevant(const F& K,
                                               const std::vector<Poly<F>>& gens) {
  MonOrder ord;
  std::vector<Poly<F>> acc;
  for (int v = 0; v < 5; ++v) {
    Poly<F> xv{Term<F>{Mono{}, K.one()}};
    xv[0].m.e[v] = 1;
    xv[0].m.deg = 1;
    auto q = ideal_quotient_poly(K, gens, xv);
    acc = (v == 0) ? std::move(q) : intersect_ideals(K, acc, q);
  }
  return canonical_gb(K, std::move(acc));
}

// I : (x0,...,x4)^inf as the intersection of the five single-variable
// saturations; the fixed point is certified with one extra quotient round
// (J : m = J).
template <class F>
std::vector<Poly<F>> saturate_irrelevant(const F& K,
                                         const std::vector<Poly<F>>& gens,
                                         bool verify = true) {
  std::vector<Poly<F>> acc;
  for (int v = 0; v < 5; ++v) {
    auto sat = saturate_variable(K, gens, v);
    acc = (v == 0) ? std::move(sat) : intersect_ideals(K, acc, sat);
  }
  auto out = canonical_gb(K, std::move(acc));
  if (verify) {
    MonOrder ord;
    auto quot = ideal_quotient_irrelevant(K, out);
    if (!ideal_subset(K, ord, quot, out))
      throw std::runtime_error("saturation did not reach a fixed point");
  }
  return out;
}

// Fast irrelevant-ideal saturation: saturating with respect to one generic
// linear form removes exactly the m-primary components, and the variable
// trick applies after a random change of coordinates.  The result is
// certified m-saturated by one quotient round against an independent random
// linear form; on failure we fall back to the intersection method.
template <class F>
std::vector<Poly<F>> saturate_irrelevant_fast(const F& K,
                                              const std::vector<Poly<F>>& gens,
                                              Rng& rng) {
  static_assert(F::is_finite, "fast saturation is used over GF(p) only");
  MonOrder ord;
  Mat<F> A(5, 5, K.zero());
  for (;;) {
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) A.at(i, j) = rng.elem_mod(K);
    try {
      inverse_of(K, A);
      break;
    } catch (const std::domain_error&) {
    }
  }
  Mat<F> Ainv = inverse_of(K, A);
  std::vector<Poly<F>> moved;
  for (const auto& g : gens) moved.push_back(substitute_linear(K, ord, g, A));
  auto sat = saturate_variable(K, moved, 4);
  std::vector<Poly<F>> back;
  for (const auto& g : sat)
    back.push_back(substitute_linear(K, ord, g, Ainv));
  auto out = canonical_gb(K, std::move(back));

  Poly<F> ell;
  for (int i = 0; i < 5; ++i) {
    Term<F> t;
    t.m.e[i] = 1;
    t.m.deg = 1;
    t.c = rng.unit_mod(K);
    ell.push_back(t);
  }
  sort_and_combine(K, ord, ell);
  auto quot = ideal_quotient_poly(K, out, ell);
  if (!ideal_subset(K, ord, quot, out))
    return saturate_irrelevant(K, gens, true);
  return out;
}

}  // namespace gb
}  // namespace atlas

#endif
