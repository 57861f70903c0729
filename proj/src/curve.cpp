#include "syzlab/curve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace syzlab {

Poly SectionSpace::section(std::size_t i) const {
  std::vector<std::uint32_t> c(basis.row(i).begin(), basis.row(i).end());
  return Poly(basis.modulus(), std::move(c));
}

NodalRationalCurve random_curve(unsigned g, const FieldParams& field, std::uint64_t seed) {
  if (field.p <= 2 * g) throw std::invalid_argument("random_curve: need p > 2g");
  SplitMix64 rng(seed);
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::uint32_t> pts;
  pts.reserve(2 * g);
  while (pts.size() < 2 * g) {
    const std::uint32_t v = rng.below(field.p);
    if (seen.insert(v).second) pts.push_back(v);
  }
  NodalRationalCurve c{g, field, {}};
  c.nodes.reserve(g);
  for (unsigned j = 0; j < g; ++j) c.nodes.emplace_back(pts[2 * j], pts[2 * j + 1]);
  return c;
}

LineBundleData canonical_multipliers(const NodalRationalCurve& curve) {
  const std::uint32_t p = curve.field.p;
  const unsigned g = curve.g;
  LineBundleData out{2L * g - 2, std::vector<std::uint32_t>(g, 1)};
  for (unsigned j = 0; j < g; ++j) {
    const auto [pj, qj] = curve.nodes[j];
    std::uint32_t num = 1, den = 1;
    for (unsigned i = 0; i < g; ++i) {
      if (i == j) continue;
      const auto [pi, qi] = curve.nodes[i];
      num = mul_mod(num, mul_mod(sub_mod(qj, pi, p), sub_mod(qj, qi, p), p), p);
      den = mul_mod(den, mul_mod(sub_mod(pj, pi, p), sub_mod(pj, qi, p), p), p);
    }
    out.multipliers[j] = mul_mod(num, inv_mod(den, p), p);
  }
  return out;
}

LineBundleData trivial_bundle(const NodalRationalCurve& curve) {
  return LineBundleData{0, std::vector<std::uint32_t>(curve.g, 1)};
}

LineBundleData tensor(const LineBundleData& a, const LineBundleData& b, std::uint32_t p) {
  if (a.multipliers.size() != b.multipliers.size())
    throw std::invalid_argument("tensor: bundles live on different curves");
  LineBundleData out{a.degree + b.degree, a.multipliers};
  for (std::size_t j = 0; j < out.multipliers.size(); ++j)
    out.multipliers[j] = mul_mod(a.multipliers[j], b.multipliers[j], p);
  return out;
}

LineBundleData dual(const LineBundleData& a, std::uint32_t p) {
  LineBundleData out{-a.degree, a.multipliers};
  for (auto& m : out.multipliers) m = inv_mod(m, p);
  return out;
}

LineBundleData bundle_power(const LineBundleData& a, long k, std::uint32_t p) {
  const LineBundleData base = k < 0 ? dual(a, p) : a;
  const unsigned long n = k < 0 ? -(unsigned long)k : (unsigned long)k;
  LineBundleData out{base.degree * (long)n, base.multipliers};
  for (std::size_t j = 0; j < out.multipliers.size(); ++j)
    out.multipliers[j] = pow_mod(base.multipliers[j], n, p);
  return out;
}

LineBundleData torsion_bundle(const NodalRationalCurve& curve, const std::vector<unsigned>& support) {
  const std::uint32_t p = curve.field.p;
  LineBundleData out = trivial_bundle(curve);
  if (support.empty()) {
    for (auto& m : out.multipliers) m = curve.field.r % p;
  } else {
    for (unsigned j : support) {
      if (j < 1 || j > curve.g) throw std::invalid_argument("torsion_bundle: support index out of range");
      out.multipliers[j - 1] = curve.field.r % p;
    }
  }
  if (std::all_of(out.multipliers.begin(), out.multipliers.end(), [](std::uint32_t m) { return m == 1; }))
    throw std::invalid_argument("torsion_bundle: trivial bundle (empty support or r = 1)");
  return out;
}

bool is_torsion(const LineBundleData& a, std::uint32_t ell, std::uint32_t p) {
  if (a.degree != 0) return false;
  for (auto m : a.multipliers)
    if (pow_mod(m, ell, p) != 1) return false;
  return true;
}

std::uint64_t bundle_order(const LineBundleData& a, std::uint32_t p) {
  std::uint64_t ord = 1;
  for (auto m : a.multipliers) {
    std::uint64_t o = 1;
    std::uint32_t v = m % p;
    while (v != 1) {
      v = mul_mod(v, m, p);
      ++o;
    }
    ord = std::lcm(ord, o);
  }
  return ord;
}

LineBundleData random_bundle(const NodalRationalCurve& curve, long degree, std::uint64_t seed) {
  SplitMix64 rng(seed);
  LineBundleData out{degree, std::vector<std::uint32_t>(curve.g)};
  for (auto& m : out.multipliers) m = rng.nonzero_below(curve.field.p);
  return out;
}

SectionSpace section_space(const NodalRationalCurve& curve, const LineBundleData& bundle) {
  const std::uint32_t p = curve.field.p;
  if (bundle.multipliers.size() != curve.g)
    throw std::invalid_argument("section_space: bundle does not match curve");
  if (bundle.degree < 0) return SectionSpace{bundle, MatrixFp(0, 0, p)};
  const std::size_t nc = static_cast<std::size_t>(bundle.degree) + 1;
  MatrixFp constraints(curve.g, nc, p);
  for (unsigned j = 0; j < curve.g; ++j) {
    const auto [pj, qj] = curve.nodes[j];
    const std::uint32_t aj = bundle.multipliers[j];
    std::uint32_t pk = 1, qk = 1;  // p_j^k, q_j^k
    for (std::size_t k = 0; k < nc; ++k) {
      constraints.at(j, k) = sub_mod(mul_mod(aj, pk, p), qk, p);
      pk = mul_mod(pk, pj, p);
      qk = mul_mod(qk, qj, p);
    }
  }
  return SectionSpace{bundle, transpose(kernel_basis(constraints))};
}

MatrixFp multiplication_matrix(const SectionSpace& v, const SectionSpace& w) {
  const std::uint32_t p = v.basis.modulus();
  const std::size_t nrows = static_cast<std::size_t>(v.bundle.degree + w.bundle.degree) + 1;
  MatrixFp out(nrows, v.dim() * w.dim(), p);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const Poly fi = v.section(i);
    for (std::size_t j = 0; j < w.dim(); ++j) {
      const Poly prod = poly_mul(fi, w.section(j));
      for (std::size_t k = 0; k < prod.size(); ++k) out.at(k, i * w.dim() + j) = prod[k];
    }
  }
  return out;
}

SectionSpace recombine(const SectionSpace& s, const MatrixFp& m) {
  return SectionSpace{s.bundle, matmul(m, s.basis)};
}

}  // namespace syzlab
