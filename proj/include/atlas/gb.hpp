#ifndef ATLAS_GB_HPP
#define ATLAS_GB_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "atlas/field.hpp"

namespace atlas {
namespace gb {

// Up to 6 variables: x0..x4 plus one elimination variable for intersections.
inline constexpr int kMaxVars = 6;
inline constexpr int kTVar = 5;

struct Mono {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint16_t deg = 0;  // total degree over x0..x4 (the t-exponent is separate)

  void recompute_deg() {
    deg = 0;
    for (int i = 0; i < 5; ++i) deg = static_cast<std::uint16_t>(deg + e[i]);
  }
  bool operator==(const Mono& o) const { return e == o.e; }
  bool divides(const Mono& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  bool coprime(const Mono& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
  }
};

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i)
    m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  m.deg = static_cast<std::uint16_t>(a.deg + b.deg);
  return m;
}
inline Mono mono_div(const Mono& a, const Mono& b) {  // requires b | a
  Mono m;
  for (int i = 0; i < kMaxVars; ++i)
    m.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  m.deg = static_cast<std::uint16_t>(a.deg - b.deg);
  return m;
}
inline Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
  m.recompute_deg();
  return m;
}

// Degrevlex on the x-variables, with a configurable significance permutation
// (perm[0] most significant ... perm[4] least).  With `elim` set, the t-degree
// dominates, giving an elimination order for the t variable.
struct MonOrder {
  std::array<std::uint8_t, 5> perm{0, 1, 2, 3, 4};
  bool elim = false;

  // move `var` to the least significant slot, keeping the others in order
  static MonOrder drl_with_last(int var) {
    MonOrder o;
    int w = 0;
    for (int i = 0; i < 5; ++i)
      if (i != var) o.perm[w++] = static_cast<std::uint8_t>(i);
    o.perm[4] = static_cast<std::uint8_t>(var);
    return o;
  }
  static MonOrder elim_t() {
    MonOrder o;
    o.elim = true;
    return o;
  }

  int cmp(const Mono& a, const Mono& b) const {  // <0: a<b, 0: equal, >0: a>b
    if (elim) {
      if (a.e[kTVar] != b.e[kTVar]) return a.e[kTVar] < b.e[kTVar] ? -1 : 1;
    }
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int i = 4; i >= 0; --i) {
      int v = perm[i];
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
    }
    return 0;
  }
  bool less(const Mono& a, const Mono& b) const { return cmp(a, b) < 0; }
};

template <class F>
struct Term {
  Mono m;
  typename F::Elem c;
};

// Terms sorted strictly descending in the ambient order; no zero coefficients.
template <class F>
using Poly = std::vector<Term<F>>;

template <class F>
bool poly_is_zero(const Poly<F>& p) {
  return p.empty();
}

template <class F>
void sort_and_combine(const F& K, const MonOrder& ord, Poly<F>& p) {
  std::sort(p.begin(), p.end(), [&](const Term<F>& a, const Term<F>& b) {
    return ord.cmp(a.m, b.m) > 0;
  });
  Poly<F> out;
  out.reserve(p.size());
  for (auto& t : p) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c = K.add(out.back().c, t.c);
    else
      out.push_back(t);
    if (!out.empty() && K.is_zero(out.back().c)) out.pop_back();
  }
  p.swap(out);
}

template <class F>
Poly<F> poly_add(const F& K, const MonOrder& ord, const Poly<F>& a,
                 const Poly<F>& b) {
  Poly<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ord.cmp(a[i].m, b[j].m);
    if (c > 0)
      out.push_back(a[i++]);
    else if (c < 0)
      out.push_back(b[j++]);
    else {
      auto s = K.add(a[i].c, b[j].c);
      if (!K.is_zero(s)) out.push_back({a[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

template <class F>
Poly<F> poly_scale(const F& K, Poly<F> p, const typename F::Elem& c) {
  if (K.is_zero(c)) return {};
  for (auto& t : p) t.c = K.mul(t.c, c);
  return p;
}

template <class F>
Poly<F> poly_mul_term(const F& K, const Poly<F>& p, const Mono& m,
                      const typename F::Elem& c) {
  Poly<F> out;
  out.reserve(p.size());
  for (const auto& t : p) {
    auto cc = K.mul(t.c, c);
    if (!K.is_zero(cc)) out.push_back({mono_mul(t.m, m), cc});
  }
  return out;
}

template <class F>
Poly<F> poly_mul(const F& K, const MonOrder& ord, const Poly<F>& a,
                 const Poly<F>& b) {
  Poly<F> out;
  out.reserve(a.size() * b.size());
  for (const auto& t : a)
    for (const auto& s : b)
      out.push_back({mono_mul(t.m, s.m), K.mul(t.c, s.c)});
  sort_and_combine(K, ord, out);
  return out;
}

template <class F>
void make_monic(const F& K, Poly<F>& p) {
  if (p.empty()) return;
  auto inv = K.inv(p.front().c);
  for (auto& t : p) t.c = K.mul(t.c, inv);
}

// ---------------------------------------------------------------------------
// Heap-based polynomial reduction (merging term streams).  A stream is a
// scaled, shifted traversal of one polynomial; the heap always exposes the
// largest pending monomial.
// ---------------------------------------------------------------------------

template <class F>
class ReductionHeap {
 public:
  ReductionHeap(const F& K, const MonOrder& ord) : K_(K), ord_(ord) {}

  // Pushes scale * x^shift * p, starting at term index `from` (so a reducer
  // whose head cancels an extracted term is pushed with from = 1).
  void push_stream(const Poly<F>* p, const Mono& shift,
                   const typename F::Elem& scale, std::size_t from = 0) {
    if (from >= p->size()) return;
    streams_.push_back({p, shift, scale, from, mono_mul(shift, (*p)[from].m)});
    heap_.push_back(streams_.size() - 1);
    std::push_heap(heap_.begin(), heap_.end(), cmp());
  }

  // Extract the next nonzero (monomial, coefficient), combining duplicates.
  bool pop(Mono& m_out, typename F::Elem& c_out) {
    while (!heap_.empty()) {
      Mono top = streams_[heap_.front()].cur;
      auto c = K_.zero();
      while (!heap_.empty() && streams_[heap_.front()].cur == top) {
        std::pop_heap(heap_.begin(), heap_.end(), cmp());
        std::size_t s = heap_.back();
        heap_.pop_back();
        auto& st = streams_[s];
        c = K_.add(c, K_.mul(st.scale, (*st.p)[st.pos].c));
        if (++st.pos < st.p->size()) {
          st.cur = mono_mul(st.shift, (*st.p)[st.pos].m);
          heap_.push_back(s);
          std::push_heap(heap_.begin(), heap_.end(), cmp());
        }
      }
      if (!K_.is_zero(c)) {
        m_out = top;
        c_out = c;
        return true;
      }
    }
    return false;
  }

 private:
  struct Stream {
    const Poly<F>* p;
    Mono shift;
    typename F::Elem scale;
    std::size_t pos;
    Mono cur;
  };
  struct Cmp {
    const ReductionHeap* h;
    bool operator()(std::size_t a, std::size_t b) const {
      return h->ord_.less(h->streams_[a].cur, h->streams_[b].cur);
    }
  };
  Cmp cmp() const { return Cmp{this}; }

  const F& K_;
  const MonOrder& ord_;
  std::vector<Stream> streams_;
  std::vector<std::size_t> heap_;
};

// Full normal form of p modulo basis (head- and tail-reducing).  Reducer
// choice is the first basis element whose lead divides the current monomial,
// so the result is deterministic for a fixed basis order; on a reduced basis
// the reducer is unique anyway.
template <class F>
Poly<F> normal_form(const F& K, const MonOrder& ord, const Poly<F>& p,
                    const std::vector<Poly<F>>& basis) {
  ReductionHeap<F> heap(K, ord);
  heap.push_stream(&p, Mono{}, K.one());
  Poly<F> result;
  Mono m;
  typename F::Elem c;
  while (heap.pop(m, c)) {
    const Poly<F>* red = nullptr;
    for (const auto& g : basis)
      if (!g.empty() && g.front().m.divides(m)) {
        red = &g;
        break;
      }
    if (!red) {
      result.push_back({m, c});
      continue;
    }
    // Cancel (m, c) against the reducer's head and push its scaled tail.
    auto q = K.neg(K.div(c, red->front().c));
    heap.push_stream(red, mono_div(m, red->front().m), q, 1);
  }
  return result;
}

// Normal form of the S-polynomial of f and g: the two heads cancel at the
// lcm by construction, so only the tails enter the heap.
template <class F>
Poly<F> spoly_normal_form(const F& K, const MonOrder& ord, const Poly<F>& f,
                          const Poly<F>& g,
                          const std::vector<Poly<F>>& basis) {
  Mono L = mono_lcm(f.front().m, g.front().m);
  ReductionHeap<F> heap(K, ord);
  heap.push_stream(&f, mono_div(L, f.front().m), K.inv(f.front().c), 1);
  heap.push_stream(&g, mono_div(L, g.front().m), K.neg(K.inv(g.front().c)), 1);
  Poly<F> result;
  Mono m;
  typename F::Elem c;
  while (heap.pop(m, c)) {
    const Poly<F>* red = nullptr;
    for (const auto& h : basis)
      if (!h.empty() && h.front().m.divides(m)) {
        red = &h;
        break;
      }
    if (!red) {
      result.push_back({m, c});
      continue;
    }
    auto q = K.neg(K.div(c, red->front().c));
    heap.push_stream(red, mono_div(m, red->front().m), q, 1);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Buchberger with Gebauer-Moeller pair elimination.  Pair selection is the
// normal strategy: lowest lcm degree first, ties by (i, j).
// ---------------------------------------------------------------------------

template <class F>
class Buchberger {
 public:
  Buchberger(const F& K, const MonOrder& ord) : K_(K), ord_(ord) {}

  std::vector<Poly<F>> run(std::vector<Poly<F>> gens) {
    for (auto& g : gens) {
      sort_and_combine(K_, ord_, g);
      if (g.empty()) continue;
      auto r = normal_form(K_, ord_, g, basis_);
      if (r.empty()) continue;
      make_monic(K_, r);
      update(std::move(r));
    }
    while (!pairs_.empty()) {
      auto it = pairs_.begin();
      auto [deg, i, j] = *it;
      pairs_.erase(it);
      auto r = spoly_normal_form(K_, ord_, basis_[i], basis_[j], basis_);
      if (r.empty()) continue;
      make_monic(K_, r);
      update(std::move(r));
    }
    return reduced_basis();
  }

 private:
  using PairKey = std::tuple<std::uint32_t, std::size_t, std::size_t>;

  void update(Poly<F> h) {
    const Mono lh = h.front().m;
    const std::size_t t = basis_.size();

    // Gebauer-Moeller filtering of the new pairs (i, t).
    const std::size_t n = basis_.size();
    std::vector<Mono> lcms(n);
    for (std::size_t i = 0; i < n; ++i)
      lcms[i] = mono_lcm(basis_[i].front().m, lh);

    std::vector<bool> keep(n, true);
    // strict-divisor criterion
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && lcms[j].divides(lcms[i]) && !(lcms[j] == lcms[i])) {
          keep[i] = false;
          break;
        }
    // equal lcms: keep one representative
    for (std::size_t i = 0; i < n; ++i) {
      if (!keep[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (keep[j] && lcms[i] == lcms[j]) keep[j] = false;
    }
    // product (coprime-leads) criterion
    for (std::size_t i = 0; i < n; ++i)
      if (keep[i] && basis_[i].front().m.coprime(lh)) keep[i] = false;

    // Prune old pairs by the chain criterion.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      auto [deg, i, j] = *it;
      Mono lij = mono_lcm(basis_[i].front().m, basis_[j].front().m);
      if (lh.divides(lij) && !(lcms[i] == lij) && !(lcms[j] == lij))
        it = pairs_.erase(it);
      else
        ++it;
    }

    for (std::size_t i = 0; i < n; ++i)
      if (keep[i])
        pairs_.insert({static_cast<std::uint32_t>(lcms[i].deg +
                                                  lcms[i].e[kTVar]),
                       i, t});
    basis_.push_back(std::move(h));
  }

  std::vector<Poly<F>> reduced_basis() {
    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<Poly<F>> min;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const Mono &li = basis_[i].front().m, &lj = basis_[j].front().m;
        if (lj.divides(li) && !(li == lj)) redundant = true;
        if (li == lj && j < i) redundant = true;
      }
      if (!redundant) min.push_back(basis_[i]);
    }
    // Tail-reduce each element modulo the others.
    std::vector<Poly<F>> out(min.size());
    for (std::size_t i = 0; i < min.size(); ++i) {
      std::vector<Poly<F>> others;
      for (std::size_t j = 0; j < min.size(); ++j)
        if (j != i) others.push_back(min[j]);
      out[i] = normal_form(K_, ord_, min[i], others);
      make_monic(K_, out[i]);
    }
    std::sort(out.begin(), out.end(), [&](const Poly<F>& a, const Poly<F>& b) {
      return ord_.cmp(a.front().m, b.front().m) < 0;
    });
    return out;
  }

  const F& K_;
  const MonOrder& ord_;
  std::vector<Poly<F>> basis_;
  std::set<PairKey> pairs_;
};

template <class F>
std::vector<Poly<F>> groebner(const F& K, const MonOrder& ord,
                              std::vector<Poly<F>> gens) {
  Buchberger<F> b(K, ord);
  return b.run(std::move(gens));
}

template <class F>
bool ideal_contains(const F& K, const MonOrder& ord,
                    const std::vector<Poly<F>>& reduced_gb, const Poly<F>& p) {
  return normal_form(K, ord, p, reduced_gb).empty();
}

template <class F>
bool same_ideal(const F& K, const MonOrder& ord,
                const std::vector<Poly<F>>& gb_a,
                const std::vector<Poly<F>>& gb_b) {
  // Reduced GBs are canonical for a fixed order.
  if (gb_a.size() != gb_b.size()) return false;
  for (std::size_t i = 0; i < gb_a.size(); ++i) {
    if (gb_a[i].size() != gb_b[i].size()) return false;
    for (std::size_t j = 0; j < gb_a[i].size(); ++j)
      if (!(gb_a[i][j].m == gb_b[i][j].m) ||
          !K.eq(gb_a[i][j].c, gb_b[i][j].c))
        return false;
  }
  return true;
}

}  // namespace gb
}  // namespace atlas

#endif
