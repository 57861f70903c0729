#ifndef SYZLAB_FF_HPP
#define SYZLAB_FF_HPP

#include <cstdint>
#include <stdexcept>

// Prime-field parameter selection and the modular primitives shared by the
// whole library.  Moduli are small odd primes (the default search window is
// 10^4 < p < 3*10^4), so a single 32-bit word holds any residue and a 64-bit
// word holds any product of two residues.

namespace syzlab {

// A prime p together with a torsion level ell and an element r of F_p of
// exact multiplicative order ell.
struct FieldParams {
  std::uint32_t p = 0;
  std::uint32_t ell = 0;
  std::uint32_t r = 0;
};

struct PrimeRange {
  std::uint32_t lo = 10001;  // 10^4 < p
  std::uint32_t hi = 29999;  // p < 3*10^4
};

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t)a * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);

// Inverse by extended Euclid; requires gcd(a, p) = 1, 0 < a < p.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

bool is_prime_u32(std::uint32_t n);

// True iff a has exact multiplicative order ell modulo p.
bool has_order(std::uint32_t a, std::uint32_t ell, std::uint32_t p);

// Smallest prime p in [range.lo, range.hi] with p odd and p = 1 (mod ell),
// paired with the smallest r >= 2 of exact order ell.  Deterministic.
// Throws std::invalid_argument if ell < 2 or no such prime exists in range.
FieldParams select_prime_and_root(std::uint32_t ell, PrimeRange range = {});

}  // namespace syzlab

#endif
