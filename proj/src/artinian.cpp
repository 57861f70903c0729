#include "syzlab/artinian.hpp"

#include <string>

namespace syzlab {

namespace {

const ElimConfig kElim{512, 64};

// Rows of products s_a * w_b for a over `pair_rows` of v, b over all of w,
// inside the coefficient space of degree deg v + deg w.
MatrixFp ideal_product_rows(const SectionSpace& v, const std::array<std::size_t, 2>& pair_rows,
                            const SectionSpace& w) {
  const std::uint32_t p = v.basis.modulus();
  const std::size_t nc = static_cast<std::size_t>(v.bundle.degree + w.bundle.degree) + 1;
  MatrixFp out(2 * w.dim(), nc, p);
  std::size_t r = 0;
  for (std::size_t a : pair_rows) {
    const Poly sa = v.section(a);
    for (std::size_t b = 0; b < w.dim(); ++b, ++r) {
      const Poly prod = poly_mul(sa, w.section(b));
      for (std::size_t c = 0; c < prod.size(); ++c) out.at(r, c) = prod[c];
    }
  }
  return out;
}

// Assembles the Koszul-matrix-with-module-coefficients map
//   wedge^top V' (x) M_lo -> wedge^{top-1} V' (x) M_hi
// where V' = rows 0..nvars-1 of `v`, M_lo has basis `lo`, and the action of
// s_j on a basis element is `reduce(j, b)` in M_hi coordinates.
MatrixFp assemble_reduced_koszul(const SectionSpace& v, unsigned nvars, unsigned top,
                                 const MatrixFp& reduced,  // (nvars * dim_lo) x dim_hi, row j*dim_lo+b
                                 std::size_t dim_lo, std::size_t dim_hi, const KoszulLimits& limits) {
  const std::uint32_t p = v.basis.modulus();
  const WedgeBasis wt = WedgeBasis::make(nvars, top);
  const WedgeBasis wb = WedgeBasis::make(nvars, top - 1);
  const std::size_t rows = wb.size() * dim_hi;
  const std::size_t cols = wt.size() * dim_lo;
  if (rows != 0 && cols > limits.max_entries / rows) throw FeasibilityError(rows, cols);

  MatrixFp m(rows, cols, p);
  std::vector<unsigned> sub;
  for (std::size_t s = 0; s < wt.size(); ++s) {
    const auto& full = wt.subsets[s];
    for (unsigned t = 0; t < top; ++t) {
      sub = full;
      sub.erase(sub.begin() + t);
      const std::size_t rbase = wb.index_of(sub) * dim_hi;
      const bool negative = (t % 2 == 1);
      const unsigned j = full[t];
      for (std::size_t b = 0; b < dim_lo; ++b) {
        const std::size_t col = s * dim_lo + b;
        for (std::size_t c = 0; c < dim_hi; ++c) {
          const std::uint32_t val = reduced.at(j * dim_lo + b, c);
          if (val) m.at(rbase + c, col) = negative ? p - val : val;
        }
      }
    }
  }
  return m;
}

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw RegularPairError(std::string("artinian reduction: ") + what + " has dimension " +
                           std::to_string(got) + ", expected " + std::to_string(want));
}

}  // namespace

bool regular_pair_ok(const Poly& a, const Poly& b, long full_degree) {
  if (a.is_zero() || b.is_zero()) return false;
  // Common zero at infinity = both leading coefficients vanish.
  if (a.degree() < full_degree && b.degree() < full_degree) return false;
  return poly_gcd(a, b).degree() == 0;
}

RegularPairChoice choose_regular_pair(const SectionSpace& v, std::uint64_t seed) {
  const std::size_t n = v.dim();
  if (n < 2) throw std::invalid_argument("choose_regular_pair: need dim >= 2");
  const long d = v.bundle.degree;
  SectionSpace cur = v;
  for (unsigned attempt = 0; attempt <= 32; ++attempt) {
    if (regular_pair_ok(cur.section(n - 2), cur.section(n - 1), d))
      return RegularPairChoice{std::move(cur), attempt};
    SplitMix64 rng(derive_seed(seed, 0x9a1f + attempt));
    cur = recombine(v, random_invertible(n, v.basis.modulus(), rng));
  }
  throw RegularPairError("choose_regular_pair: no admissible pair after 32 recombinations");
}

OmegaReduction artinian_reduce_omega(const NodalRationalCurve& curve, const LineBundleData& eta,
                                     std::uint64_t seed) {
  const std::uint32_t p = curve.field.p;
  const unsigned g = curve.g;
  if (!is_torsion(eta, curve.field.ell, p) || bundle_order(eta, p) == 1)
    throw std::invalid_argument("artinian_reduce_omega: eta must be nontrivial torsion");

  const LineBundleData kcan = canonical_multipliers(curve);
  const LineBundleData l = tensor(kcan, eta, p);
  RegularPairChoice pair = choose_regular_pair(section_space(curve, l), seed);
  const std::array<std::size_t, 2> pr{g - 3, g - 2};  // rows of the pair in the arranged basis

  const SectionSpace omega = section_space(curve, kcan);
  require_dim(omega.dim(), g, "H^0(K)");
  require_dim(pair.sections.dim(), g - 1, "H^0(K (x) eta)");

  // A_1 = H^0(K*L) / (s_{g-3}, s_{g-2}) H^0(K).
  const SectionSpace kl = section_space(curve, tensor(kcan, l, p));
  require_dim(kl.dim(), 3 * g - 3, "H^0(K (x) L)");
  const MatrixFp ideal1 = ideal_product_rows(pair.sections, pr, omega);
  SubspaceQuotient a1(ideal1, kl.basis);
  if (a1.dim() != g - 3)
    throw RegularPairError("artinian reduction: dim A_1 = " + std::to_string(a1.dim()) +
                           ", expected g-3 (regular pair failed)");

  // A_2 = H^0(K*L^2) / (pair) H^0(K*L); the pair image there has dimension
  // 2(3g-3) - g and the quotient is a line.
  const SectionSpace kll = section_space(curve, tensor(kcan, tensor(l, l, p), p));
  require_dim(kll.dim(), 5 * g - 5, "H^0(K (x) L^2)");
  const MatrixFp ideal2 = ideal_product_rows(pair.sections, pr, kl);
  SubspaceQuotient a2(ideal2, kll.basis);
  if (a2.dim() != 1)
    throw RegularPairError("artinian reduction: dim A_2 = " + std::to_string(a2.dim()) +
                           ", expected 1 (regular pair failed)");

  return OmegaReduction{std::move(pair.sections), omega, std::move(a1),
                        {g, g - 3, 1}, pair.attempts};
}

std::size_t prym_green_kernel_dim(const NodalRationalCurve& curve, const LineBundleData& eta,
                                  std::uint64_t seed, const KoszulLimits& limits) {
  const unsigned g = curve.g;
  if (g % 2 != 0 || g < 6)
    throw std::invalid_argument("prym_green_kernel_dim: even genus >= 6 required");
  OmegaReduction red = artinian_reduce_omega(curve, eta, seed);

  // Entries: s_j * omega_b projected to A_1 representatives.
  const unsigned nvars = g - 3;
  const std::size_t dim_lo = g;        // A_0
  const std::size_t dim_hi = g - 3;    // A_1
  MatrixFp reduced(nvars * dim_lo, dim_hi, curve.field.p);
  for (unsigned j = 0; j < nvars; ++j) {
    const Poly sj = red.paracanonical.section(j);
    for (std::size_t b = 0; b < dim_lo; ++b) {
      const Poly prod = poly_mul(sj, red.canonical.section(b));
      const auto coords = red.a1.apply(prod.coeffs());
      for (std::size_t c = 0; c < dim_hi; ++c) reduced.at(j * dim_lo + b, c) = coords[c];
    }
  }

  MatrixFp m = assemble_reduced_koszul(red.paracanonical, nvars, g / 2, reduced, dim_lo, dim_hi, limits);
  const std::size_t cols = m.cols();
  return cols - rank(std::move(m), kElim);
}

std::size_t torsion_module_kernel_dim(const NodalRationalCurve& curve, const LineBundleData& eta,
                                      unsigned k, std::uint64_t seed, const KoszulLimits& limits) {
  const std::uint32_t p = curve.field.p;
  const unsigned g = curve.g;
  if (g % 2 != 0 || g < 6)
    throw std::invalid_argument("torsion_module_kernel_dim: even genus >= 6 required");
  if (k < 1 || k > curve.field.ell - 2)
    throw std::invalid_argument("torsion_module_kernel_dim: need 1 <= k <= ell-2");

  const LineBundleData kcan = canonical_multipliers(curve);
  const LineBundleData l = tensor(kcan, eta, p);
  const LineBundleData etak = bundle_power(eta, k, p);
  if (section_space(curve, etak).dim() != 0)
    throw std::invalid_argument("torsion_module_kernel_dim: eta^k has sections");

  RegularPairChoice pair = choose_regular_pair(section_space(curve, l), seed);
  const std::array<std::size_t, 2> pr{g - 3, g - 2};

  // B_1 = H^0(eta^k (x) L), B_2 = H^0(eta^k (x) L^2) / (pair) B_1; Hilbert
  // values (g-1, g-1), and the next quotient vanishes.
  const SectionSpace b1 = section_space(curve, tensor(etak, l, p));
  require_dim(b1.dim(), g - 1, "H^0(eta^k (x) L)");
  const SectionSpace h2 = section_space(curve, tensor(etak, tensor(l, l, p), p));
  require_dim(h2.dim(), 3 * g - 3, "H^0(eta^k (x) L^2)");
  const MatrixFp ideal1 = ideal_product_rows(pair.sections, pr, b1);
  SubspaceQuotient b2(ideal1, h2.basis);
  if (b2.dim() != g - 1)
    throw RegularPairError("torsion reduction: dim B_2 = " + std::to_string(b2.dim()) +
                           ", expected g-1 (regular pair failed)");
  {
    const SectionSpace h3 = section_space(curve, tensor(etak, bundle_power(l, 3, p), p));
    require_dim(h3.dim(), 5 * g - 5, "H^0(eta^k (x) L^3)");
    const MatrixFp ideal2 = ideal_product_rows(pair.sections, pr, h2);
    SubspaceQuotient b3(ideal2, h3.basis);
    if (b3.dim() != 0)
      throw RegularPairError("torsion reduction: B_3 nonzero (regular pair failed)");
  }

  const unsigned nvars = g - 3;
  const std::size_t dim_lo = g - 1;
  const std::size_t dim_hi = g - 1;
  MatrixFp reduced(nvars * dim_lo, dim_hi, p);
  for (unsigned j = 0; j < nvars; ++j) {
    const Poly sj = pair.sections.section(j);
    for (std::size_t b = 0; b < dim_lo; ++b) {
      const Poly prod = poly_mul(sj, b1.section(b));
      const auto coords = b2.apply(prod.coeffs());
      for (std::size_t c = 0; c < dim_hi; ++c) reduced.at(j * dim_lo + b, c) = coords[c];
    }
  }

  MatrixFp m = assemble_reduced_koszul(pair.sections, nvars, g / 2 - 1, reduced, dim_lo, dim_hi, limits);
  if (m.rows() != m.cols())
    throw std::logic_error("torsion_module_kernel_dim: strand matrix is not square");
  const std::size_t cols = m.cols();
  return cols - rank(std::move(m), kElim);
}

}  // namespace syzlab
