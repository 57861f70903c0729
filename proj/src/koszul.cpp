#include "syzlab/koszul.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace syzlab {

namespace {

const ElimConfig kKoszulElim{512, 64};  // heavy strand matrices go blocked early

std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Parity of the permutation sorting (a, b) concatenated, for disjoint sorted a, b.
int merge_sign(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  std::size_t inversions = 0;
  for (unsigned x : b)
    for (unsigned y : a)
      if (y > x) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

FeasibilityError::FeasibilityError(std::size_t r, std::size_t c)
    : std::runtime_error("koszul: direct strand assembly refused, " + std::to_string(r) + " x " +
                         std::to_string(c) + " = " + std::to_string(r * c) +
                         " entries exceeds the configured limit"),
      rows(r),
      cols(c) {}

WedgeBasis WedgeBasis::make(unsigned n, unsigned k) {
  WedgeBasis w{n, k, {}};
  if (k > n) return w;
  std::vector<unsigned> cur(k);
  for (unsigned i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    w.subsets.push_back(cur);
    if (k == 0) break;
    // next lexicographic k-subset
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (unsigned j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return w;
}

std::size_t WedgeBasis::index_of(const std::vector<unsigned>& subset) const {
  // Lexicographic rank: count subsets preceding it.
  std::size_t idx = 0;
  unsigned prev = 0;
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = prev; j < subset[i]; ++j) idx += binom_u64(n - 1 - j, k - 1 - i);
    prev = subset[i] + 1;
  }
  return idx;
}

MonomialBasis MonomialBasis::make(unsigned n, unsigned d) {
  MonomialBasis m{n, d, {}};
  std::vector<unsigned> cur(d, 0);
  if (n == 0 && d > 0) return m;
  for (;;) {
    m.monomials.push_back(cur);
    if (d == 0) break;
    int i = static_cast<int>(d) - 1;
    while (i >= 0 && cur[i] == n - 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (unsigned j = i + 1; j < d; ++j) cur[j] = cur[i];
    // keep non-decreasing
  }
  return m;
}

std::size_t MonomialBasis::index_of(const std::vector<unsigned>& mono) const {
  // Multisets of size d over n symbols biject with d-subsets of {0..n+d-2}
  // via m_i -> m_i + i, preserving lexicographic order.
  std::size_t idx = 0;
  unsigned prev = 0;
  const unsigned nn = n + d - 1;
  for (unsigned i = 0; i < d; ++i) {
    const unsigned s = mono[i] + i;
    for (unsigned j = prev; j < s; ++j) idx += binom_u64(nn - 1 - j, d - 1 - i);
    prev = s + 1;
  }
  return idx;
}

MatrixFp koszul_differential_on_sections(const SectionSpace& v, const SectionSpace& w, unsigned p,
                                         const KoszulLimits& limits) {
  if (p < 1) throw std::invalid_argument("koszul_differential_on_sections: p >= 1 required");
  const std::uint32_t mod = v.basis.modulus();
  const std::size_t nv = v.dim(), nw = w.dim();
  const WedgeBasis top = WedgeBasis::make(static_cast<unsigned>(nv), p);
  const WedgeBasis bot = WedgeBasis::make(static_cast<unsigned>(nv), p - 1);
  const std::size_t nc = static_cast<std::size_t>(v.bundle.degree + w.bundle.degree) + 1;
  const std::size_t rows = bot.size() * nc;
  const std::size_t cols = top.size() * nw;
  if (rows != 0 && cols > limits.max_entries / rows) throw FeasibilityError(rows, cols);

  // All products f_i * h_w up front.
  std::vector<std::vector<Poly>> prod(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    prod[i].reserve(nw);
    const Poly fi = v.section(i);
    for (std::size_t j = 0; j < nw; ++j) prod[i].push_back(poly_mul(fi, w.section(j)));
  }

  MatrixFp m(rows, cols, mod);
  std::vector<unsigned> sub;
  for (std::size_t s = 0; s < top.size(); ++s) {
    const std::vector<unsigned>& full = top.subsets[s];
    for (unsigned t = 0; t < p; ++t) {
      sub = full;
      sub.erase(sub.begin() + t);
      const std::size_t rbase = bot.index_of(sub) * nc;
      const bool negative = (t % 2 == 1);
      const unsigned i = full[t];
      for (std::size_t j = 0; j < nw; ++j) {
        const std::size_t col = s * nw + j;
        const Poly& q = prod[i][j];
        for (std::size_t c = 0; c < q.size(); ++c) {
          const std::uint32_t val = q[c];
          if (val) m.at(rbase + c, col) = negative ? mod - val : val;
        }
      }
    }
  }
  return m;
}

std::size_t koszul_dim_twisted(const NodalRationalCurve& curve, const LineBundleData& f,
                               const LineBundleData& l, unsigned p, const KoszulLimits& limits) {
  if (section_space(curve, f).dim() != 0)
    throw std::invalid_argument("koszul_dim_twisted: F has sections; use the ring strand instead");
  const SectionSpace v = section_space(curve, l);
  const SectionSpace w = section_space(curve, tensor(f, l, curve.field.p));
  MatrixFp m = koszul_differential_on_sections(v, w, p, limits);
  const std::size_t cols = m.cols();
  return cols - rank(std::move(m), kKoszulElim);
}

TwistedStrandDims koszul_dims_twisted_pair(const NodalRationalCurve& curve, const LineBundleData& f,
                                           const LineBundleData& l, unsigned p,
                                           const KoszulLimits& limits) {
  if (section_space(curve, f).dim() != 0)
    throw std::invalid_argument("koszul_dims_twisted_pair: F has sections");
  const std::uint32_t mod = curve.field.p;
  const SectionSpace v = section_space(curve, l);
  const SectionSpace w1 = section_space(curve, tensor(f, l, mod));
  const SectionSpace w2 = section_space(curve, tensor(f, tensor(l, l, mod), mod));

  MatrixFp m1 = koszul_differential_on_sections(v, w1, p, limits);
  const std::size_t cols1 = m1.cols();
  const std::size_t r1 = rank(std::move(m1), kKoszulElim);

  TwistedStrandDims out;
  out.k_p1 = cols1 - r1;
  if (p == 1) {
    // d_{0,2} is the zero map out of wedge^0 V (x) W2.
    out.k_pm1_2 = w2.dim() - r1;
  } else {
    MatrixFp m2 = koszul_differential_on_sections(v, w2, p - 1, limits);
    const std::size_t cols2 = m2.cols();
    const std::size_t ker2 = cols2 - rank(std::move(m2), kKoszulElim);
    out.k_pm1_2 = ker2 - r1;
  }
  return out;
}

std::size_t koszul_dim_ring(const NodalRationalCurve& curve, const LineBundleData& l, unsigned p,
                            unsigned q, const KoszulLimits& limits) {
  const std::uint32_t mod = curve.field.p;
  const SectionSpace v = section_space(curve, l);
  if (q == 1) {
    MatrixFp m = koszul_differential_on_sections(v, v, p, limits);
    const std::size_t cols = m.cols();
    const std::size_t ker = cols - rank(std::move(m), kKoszulElim);
    // The pure Koszul differential wedge^{p+1} V -> wedge^p V (x) V is
    // injective; its image sits inside the kernel above.
    const std::size_t pure = binom_u64(v.dim(), p + 1);
    assert(ker >= pure);
    return ker - pure;
  }
  if (q == 2) {
    const SectionSpace w2 = section_space(curve, tensor(l, l, mod));
    MatrixFp m2 = koszul_differential_on_sections(v, w2, p, limits);
    const std::size_t cols2 = m2.cols();
    const std::size_t ker2 = cols2 - rank(std::move(m2), kKoszulElim);
    MatrixFp m1 = koszul_differential_on_sections(v, v, p + 1, limits);
    const std::size_t r1 = rank(std::move(m1), kKoszulElim);
    assert(ker2 >= r1);
    return ker2 - r1;
  }
  throw std::invalid_argument("koszul_dim_ring: q must be 1 or 2");
}

IdealPiece ideal_graded_dim(const NodalRationalCurve& curve, const LineBundleData& l, unsigned d) {
  if (d < 2 || d > 3) throw std::invalid_argument("ideal_graded_dim: d must be 2 or 3");
  const std::uint32_t mod = curve.field.p;
  const SectionSpace v = section_space(curve, l);
  const MonomialBasis mono = MonomialBasis::make(static_cast<unsigned>(v.dim()), d);
  const std::size_t nc = static_cast<std::size_t>(l.degree) * d + 1;
  MatrixFp m(nc, mono.size(), mod);
  for (std::size_t c = 0; c < mono.size(); ++c) {
    Poly acc = v.section(mono.monomials[c][0]);
    for (unsigned i = 1; i < d; ++i) acc = poly_mul(acc, v.section(mono.monomials[c][i]));
    for (std::size_t k = 0; k < acc.size(); ++k) m.at(k, c) = acc[k];
  }
  IdealPiece out;
  out.basis = kernel_basis(m);
  out.dim = out.basis.cols();
  const std::size_t image = mono.size() - out.dim;
  out.multiplication_surjective = image == section_space(curve, bundle_power(l, d, mod)).dim();
  return out;
}

SyzygySpace linear_syzygy_space(const NodalRationalCurve& curve, const LineBundleData& l) {
  const std::uint32_t mod = curve.field.p;
  const SectionSpace v = section_space(curve, l);
  const unsigned nv = static_cast<unsigned>(v.dim());
  const IdealPiece i2 = ideal_graded_dim(curve, l, 2);
  const MonomialBasis sym2 = MonomialBasis::make(nv, 2);
  const MonomialBasis sym3 = MonomialBasis::make(nv, 3);

  // Formal multiplication (Q_a, y_i) -> y_i * Q_a in Sym^3 coordinates.
  MatrixFp m(sym3.size(), i2.dim * nv, mod);
  std::vector<unsigned> target(3);
  for (std::size_t a = 0; a < i2.dim; ++a) {
    for (unsigned i = 0; i < nv; ++i) {
      const std::size_t col = a * nv + i;
      for (std::size_t mu = 0; mu < sym2.size(); ++mu) {
        const std::uint32_t cval = i2.basis.at(mu, a);
        if (cval == 0) continue;
        target = {sym2.monomials[mu][0], sym2.monomials[mu][1], i};
        std::sort(target.begin(), target.end());
        const std::size_t row = sym3.index_of(target);
        m.at(row, col) = add_mod(m.at(row, col), cval, mod);
      }
    }
  }

  const MatrixFp kern = kernel_basis(m);
  SyzygySpace out;
  out.dim = kern.cols();
  out.tensors.reserve(out.dim);
  for (std::size_t k = 0; k < out.dim; ++k) {
    MatrixFp t(nv, i2.dim, mod);
    for (std::size_t a = 0; a < i2.dim; ++a)
      for (unsigned i = 0; i < nv; ++i) t.at(i, a) = kern.at(a * nv + i, k);
    out.tensors.push_back(std::move(t));
  }
  return out;
}

std::size_t syzygy_rank(const MatrixFp& gamma) {
  bool nonzero = false;
  for (std::size_t i = 0; i < gamma.rows() && !nonzero; ++i)
    for (std::size_t j = 0; j < gamma.cols(); ++j)
      if (gamma.at(i, j) != 0) {
        nonzero = true;
        break;
      }
  if (!nonzero) throw std::invalid_argument("syzygy_rank: zero tensor");
  return rank(gamma);
}

MiddleKoszulCheck middle_koszul_symmetry_check(unsigned m) {
  if (m < 1) throw std::invalid_argument("middle_koszul_symmetry_check: m >= 1 required");
  const unsigned n = 2 * m + 1;
  const WedgeBasis wb = WedgeBasis::make(n, m + 1);
  const std::size_t nsub = wb.size();

  // psi(I, J) is nonzero only when I and J share exactly one index c, and is
  // then sign * e_c; store sign in a coord-times-sign pair per (I, J).
  struct Entry {
    int coord = -1;
    int sign = 0;
  };
  std::vector<Entry> psi(nsub * nsub);
  std::vector<unsigned> rest, inter;
  for (std::size_t a = 0; a < nsub; ++a) {
    const auto& I = wb.subsets[a];
    for (std::size_t b = 0; b < nsub; ++b) {
      const auto& J = wb.subsets[b];
      inter.clear();
      std::set_intersection(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(inter));
      if (inter.size() != 1) continue;
      const unsigned c = inter[0];
      const unsigned pos = static_cast<unsigned>(std::find(I.begin(), I.end(), c) - I.begin());
      rest = I;
      rest.erase(rest.begin() + pos);
      const int sgn = ((pos % 2 == 0) ? 1 : -1) * merge_sign(rest, J);
      psi[a * nsub + b] = Entry{static_cast<int>(c), sgn};
    }
  }

  MiddleKoszulCheck out;
  out.m = m;
  out.size = nsub;
  out.symmetric = true;
  out.skew_symmetric = true;
  out.diagonal_zero = true;
  bool any_nonzero = false;
  for (std::size_t a = 0; a < nsub; ++a) {
    if (psi[a * nsub + a].sign != 0) out.diagonal_zero = false;
    for (std::size_t b = 0; b < nsub; ++b) {
      const Entry& e = psi[a * nsub + b];
      const Entry& f = psi[b * nsub + a];
      if (e.sign != 0) any_nonzero = true;
      if (e.coord != f.coord || e.sign != f.sign) out.symmetric = false;
      if (e.coord != f.coord || e.sign != -f.sign) out.skew_symmetric = false;
    }
  }
  assert(any_nonzero);
  (void)any_nonzero;
  return out;
}

}  // namespace syzlab
