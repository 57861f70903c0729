#include "syzlab/ff.hpp"

namespace syzlab {

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t base = a % p, acc = 1 % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::invalid_argument("inv_mod: zero is not invertible");
  // Extended Euclid tracking only the coefficient of a.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::invalid_argument("inv_mod: argument shares a factor with the modulus");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint32_t d = 5; (std::uint64_t)d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

bool has_order(std::uint32_t a, std::uint32_t ell, std::uint32_t p) {
  if (a % p == 0) return false;
  if (pow_mod(a, ell, p) != 1) return false;
  // Exact order: no proper divisor of ell may already give 1.
  for (std::uint32_t d = 1; d < ell; ++d) {
    if (ell % d == 0 && pow_mod(a, d, p) == 1) return false;
  }
  return true;
}

FieldParams select_prime_and_root(std::uint32_t ell, PrimeRange range) {
  if (ell < 2) throw std::invalid_argument("select_prime_and_root: ell must be >= 2");
  if (range.lo > range.hi) throw std::invalid_argument("select_prime_and_root: empty range");
  for (std::uint32_t p = range.lo; p <= range.hi; ++p) {
    if (p % 2 == 0 || (p - 1) % ell != 0 || !is_prime_u32(p)) continue;
    for (std::uint32_t r = 2; r < p; ++r) {
      if (has_order(r, ell, p)) return FieldParams{p, ell, r};
    }
  }
  throw std::invalid_argument("select_prime_and_root: no prime = 1 (mod ell) in range");
}

}  // namespace syzlab
