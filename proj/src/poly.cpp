#include "syzlab/poly.hpp"

#include <stdexcept>

namespace syzlab {

int Poly::degree() const {
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly poly_mul(const Poly& f, const Poly& h) {
  if (f.modulus() != h.modulus()) throw std::invalid_argument("poly_mul: modulus mismatch");
  const std::uint32_t p = f.modulus();
  if (f.size() == 0 || h.size() == 0) return Poly(p, std::vector<std::uint32_t>{});
  std::vector<std::uint32_t> out(f.size() + h.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::uint64_t fi = f[i];
    if (fi == 0) continue;
    for (std::size_t j = 0; j < h.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + fi * h[j]) % p);
  }
  return Poly(p, std::move(out));
}

std::uint32_t evaluate_at(const Poly& f, std::uint32_t x) {
  const std::uint32_t p = f.modulus();
  std::uint32_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, p), f[i], p);
  return acc;
}

namespace {

// a mod b in place; b nonzero.
void poly_rem(std::vector<std::uint32_t>& a, int& da, const std::vector<std::uint32_t>& b, int db,
              std::uint32_t p) {
  const std::uint32_t lead_inv = inv_mod(b[db], p);
  while (da >= db) {
    const std::uint32_t q = mul_mod(a[da], lead_inv, p);
    if (q != 0) {
      const std::size_t shift = da - db;
      for (int j = 0; j <= db; ++j)
        a[shift + j] = sub_mod(a[shift + j], mul_mod(q, b[j], p), p);
    }
    --da;
    while (da >= 0 && a[da] == 0) --da;
  }
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
  const std::uint32_t p = a.modulus();
  std::vector<std::uint32_t> x(a.coeffs().begin(), a.coeffs().end());
  std::vector<std::uint32_t> y(b.coeffs().begin(), b.coeffs().end());
  int dx = a.degree(), dy = b.degree();
  while (dy >= 0) {
    poly_rem(x, dx, y, dy, p);
    std::swap(x, y);
    std::swap(dx, dy);
  }
  if (dx < 0) return Poly(p, std::vector<std::uint32_t>{0});
  std::vector<std::uint32_t> g(x.begin(), x.begin() + dx + 1);
  const std::uint32_t s = inv_mod(g[dx], p);
  for (auto& c : g) c = mul_mod(c, s, p);
  return Poly(p, std::move(g));
}

}  // namespace syzlab
