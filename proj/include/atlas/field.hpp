#ifndef ATLAS_FIELD_HPP
#define ATLAS_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace atlas {

// Exact rationals are GMP-backed: mpq_class keeps gcd(|num|,den)=1 and den>0
// on construction, which is exactly the normalization we rely on for
// structural equality.
using Rat = mpq_class;

inline mpz_class rat_num(const Rat& x) { return x.get_num(); }
inline mpz_class rat_den(const Rat& x) { return x.get_den(); }
inline std::string rat_str(const Rat& x) { return x.get_str(); }

// The rational field as a stateless field object, so that field-generic code
// can be instantiated over QQ and GF(p) alike.
struct QQ {
  using Elem = Rat;
  static constexpr bool is_finite = false;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(long v) const { return Rat(v); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("QQ: inverse of zero");
    return Rat(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string str(const Elem& a) const { return a.get_str(); }

 private:
  const Elem& inv_guard(const Elem& b) const {
    if (is_zero(b)) throw std::domain_error("QQ: division by zero");
    return b;
  }
};

// Prime field GF(p) for a runtime modulus.  Elements are plain uint32_t in
// [0,p); all arithmetic goes through the field object.
struct GF {
  using Elem = std::uint32_t;
  static constexpr bool is_finite = true;
  std::uint32_t p;

  explicit GF(std::uint32_t prime = 32003) : p(prime) {
    if (p < 2) throw std::invalid_argument("GF: modulus must be >= 2");
  }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<Elem>(r);
  }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    if (s >= p) s -= p;
    return s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((std::uint64_t)a * b % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = one(), base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("GF: inverse of zero");
    // p is prime in all uses; Fermat is fine and branch-free.
    return pow(a, p - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string str(Elem a) const { return std::to_string(a); }
};

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Deterministic splittable RNG.  All randomness in the project flows from a
// root seed through named derivations, so identical configurations produce
// byte-identical artifacts on any platform.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed = 1) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n) by rejection; implementation-defined distributions from
  // <random> are avoided on purpose.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    std::uint64_t lim = ~0ULL - (~0ULL % n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= lim);
    return v % n;
  }
  std::uint32_t unit_mod(const GF& K) {  // uniform in [1, p)
    return static_cast<std::uint32_t>(1 + below(K.p - 1));
  }
  std::uint32_t elem_mod(const GF& K) {  // uniform in [0, p)
    return static_cast<std::uint32_t>(below(K.p));
  }
  // Uniform nonzero integer in [-bound, bound], as a rational.
  Rat nonzero_int(long bound) {
    long v = static_cast<long>(below(2 * bound)) - bound;
    if (v >= 0) ++v;
    return Rat(v);
  }
};

// Derive a task seed from a root seed and a label; the label keeps parallel
// tasks decoupled without any shared RNG state.
inline std::uint64_t derive_seed(std::uint64_t root, const std::string& tag,
                                 std::uint64_t counter = 0) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  h ^= counter + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  Rng mix(root ^ h);
  return mix.next();
}

}  // namespace atlas

#endif
