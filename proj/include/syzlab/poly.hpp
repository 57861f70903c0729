#ifndef SYZLAB_POLY_HPP
#define SYZLAB_POLY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "syzlab/ff.hpp"

// Dense univariate polynomials over F_p, kept as fixed-length coefficient
// vectors (index = degree) so that spaces of polynomials are plain coordinate
// spaces.  Trailing zero coefficients are allowed and meaningful: a vector of
// length d+1 lives in the coefficient space of degree bound d.

namespace syzlab {

class Poly {
 public:
  Poly() = default;
  // Zero polynomial with degree bound `bound` (bound + 1 coefficients).
  Poly(std::uint32_t p, std::size_t bound) : p_(p), c_(bound + 1, 0) {}
  Poly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {}

  std::uint32_t modulus() const { return p_; }
  std::size_t size() const { return c_.size(); }
  std::uint32_t operator[](std::size_t i) const { return c_[i]; }
  std::uint32_t& operator[](std::size_t i) { return c_[i]; }
  std::span<const std::uint32_t> coeffs() const { return c_; }

  // Degree ignoring trailing zeros; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }

 private:
  std::uint32_t p_ = 0;
  std::vector<std::uint32_t> c_;
};

// Coefficient-wise convolution; result length = |f| + |h| - 1.
Poly poly_mul(const Poly& f, const Poly& h);

std::uint32_t evaluate_at(const Poly& f, std::uint32_t x);

// Monic gcd by Euclid with exact field inverses; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

}  // namespace syzlab

#endif
