#include "syzlab/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "syzlab/threads.hpp"

namespace syzlab {

namespace {

// Word-sized modular reduction of a 32-bit value (Lemire's fastmod); valid
// for any x < 2^32 and 1 < p < 2^32.
struct Reducer {
  std::uint32_t p;
  std::uint64_t magic;
  explicit Reducer(std::uint32_t p_) : p(p_), magic(~std::uint64_t{0} / p_ + 1) {}
  std::uint32_t mod(std::uint32_t x) const {
    std::uint64_t low = magic * x;
    return static_cast<std::uint32_t>((static_cast<unsigned __int128>(low) * p) >> 64);
  }
};

void swap_rows(std::uint32_t* a, std::size_t n, std::size_t i, std::size_t j) {
  if (i == j) return;
  std::swap_ranges(a + i * n, a + (i + 1) * n, a + j * n);
}

}  // namespace

MatrixFp::MatrixFp(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), e_(rows * cols, 0) {
  if (p < 3 || p >= (1u << 16)) throw std::invalid_argument("MatrixFp: modulus must satisfy 3 <= p < 2^16");
}

MatrixFp MatrixFp::identity(std::size_t n, std::uint32_t p) {
  MatrixFp m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::size_t row_echelon_naive(MatrixFp& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  if (nr == 0 || nc == 0) return 0;
  const std::uint32_t p = m.modulus();
  const Reducer red(p);
  std::uint32_t* a = m.data();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && a[piv * nc + c] == 0) ++piv;
    if (piv == nr) continue;
    swap_rows(a, nc, piv, r);
    const std::uint32_t pvinv = inv_mod(a[r * nc + c], p);
    const std::uint32_t* src = a + r * nc;
    for (std::size_t i = r + 1; i < nr; ++i) {
      std::uint32_t* dst = a + i * nc;
      const std::uint32_t f = dst[c];
      if (f == 0) continue;
      const std::uint32_t nf = p - mul_mod(f, pvinv, p);
      dst[c] = 0;
      for (std::size_t j = c + 1; j < nc; ++j) dst[j] = red.mod(dst[j] + nf * src[j]);
    }
    ++r;
  }
  return r;
}

// Blocked echelon: pivots are chosen exactly as in the naive path (panel
// columns are updated eagerly), but updates to trailing columns are replayed
// per panel with 64-bit accumulators, one reduction per entry per panel.
std::size_t row_echelon_blocked(MatrixFp& m, std::size_t panel_cols) {
  const std::size_t nr = m.rows(), nc = m.cols();
  if (nr == 0 || nc == 0) return 0;
  if (panel_cols == 0) panel_cols = 64;
  const std::uint32_t p = m.modulus();
  const Reducer red(p);
  std::uint32_t* a = m.data();

  std::vector<std::uint32_t> factors;  // (nr - rbase) x pc, negated multipliers
  std::size_t r = 0;
  for (std::size_t c0 = 0; c0 < nc && r < nr; c0 += panel_cols) {
    const std::size_t pc = std::min(panel_cols, nc - c0);
    const std::size_t rbase = r;
    factors.assign((nr - rbase) * pc, 0);
    std::size_t nb = 0;  // pivots found in this panel

    for (std::size_t c = c0; c < c0 + pc && r < nr; ++c) {
      std::size_t piv = r;
      while (piv < nr && a[piv * nc + c] == 0) ++piv;
      if (piv == nr) continue;
      swap_rows(a, nc, piv, r);
      if (piv != r) {
        std::swap_ranges(factors.begin() + (piv - rbase) * pc, factors.begin() + (piv - rbase + 1) * pc,
                         factors.begin() + (r - rbase) * pc);
      }
      const std::uint32_t pvinv = inv_mod(a[r * nc + c], p);
      const std::uint32_t* src = a + r * nc;
      for (std::size_t i = r + 1; i < nr; ++i) {
        std::uint32_t* dst = a + i * nc;
        const std::uint32_t f = dst[c];
        if (f == 0) continue;
        const std::uint32_t nf = p - mul_mod(f, pvinv, p);
        factors[(i - rbase) * pc + nb] = nf;
        dst[c] = 0;
        for (std::size_t j = c + 1; j < c0 + pc; ++j) dst[j] = red.mod(dst[j] + nf * src[j]);
      }
      ++nb;
      ++r;
    }

    const std::size_t tcol = c0 + pc;
    if (nb == 0 || tcol >= nc) continue;
    const std::size_t tw = nc - tcol;

    // Pivot rows first, in order: row t sees pivots s < t.
    for (std::size_t t = 1; t < nb; ++t) {
      std::uint32_t* dst = a + (rbase + t) * nc + tcol;
      const std::uint32_t* frow = factors.data() + t * pc;
      for (std::size_t j = 0; j < tw; ++j) {
        std::uint64_t acc = dst[j];
        for (std::size_t s = 0; s < t; ++s)
          acc += (std::uint64_t)frow[s] * a[(rbase + s) * nc + tcol + j];
        dst[j] = static_cast<std::uint32_t>(acc % p);
      }
    }

    // Remaining rows in bulk; rows are independent, so the partition over
    // workers cannot change the result.
    parallel_for_ranges(nr - r, [&](std::size_t lo, std::size_t hi) {
      std::vector<std::uint64_t> acc(tw);
      for (std::size_t k = lo; k < hi; ++k) {
        const std::size_t i = r + k;
        std::uint32_t* dst = a + i * nc + tcol;
        const std::uint32_t* frow = factors.data() + (i - rbase) * pc;
        for (std::size_t j = 0; j < tw; ++j) acc[j] = dst[j];
        for (std::size_t s = 0; s < nb; ++s) {
          const std::uint64_t f = frow[s];
          if (f == 0) continue;
          const std::uint32_t* src = a + (rbase + s) * nc + tcol;
          for (std::size_t j = 0; j < tw; ++j) acc[j] += f * src[j];
        }
        for (std::size_t j = 0; j < tw; ++j) dst[j] = static_cast<std::uint32_t>(acc[j] % p);
      }
    });
  }
  return r;
}

std::size_t row_echelon(MatrixFp& m, const ElimConfig& cfg) {
  if (m.rows() >= cfg.blocked_row_threshold) return row_echelon_blocked(m, cfg.panel_cols);
  return row_echelon_naive(m);
}

std::size_t rank(const MatrixFp& m, const ElimConfig& cfg) {
  MatrixFp copy = m;
  return row_echelon(copy, cfg);
}

std::size_t rank(MatrixFp&& m, const ElimConfig& cfg) {
  MatrixFp local = std::move(m);
  return row_echelon(local, cfg);
}

Echelon rref(MatrixFp m) {
  const std::size_t nc = m.cols();
  const std::uint32_t p = m.modulus();
  const std::size_t r = row_echelon_naive(m);
  Echelon out;
  out.pivots.reserve(r);
  // Locate pivots, normalize, then clear above.
  for (std::size_t t = 0; t < r; ++t) {
    std::size_t c = 0;
    while (c < nc && m.at(t, c) == 0) ++c;
    assert(c < nc);
    const std::uint32_t s = inv_mod(m.at(t, c), p);
    if (s != 1)
      for (std::size_t j = c; j < nc; ++j) m.at(t, j) = mul_mod(m.at(t, j), s, p);
    out.pivots.push_back(c);
  }
  for (std::size_t t = r; t-- > 0;) {
    const std::size_t c = out.pivots[t];
    for (std::size_t i = 0; i < t; ++i) {
      const std::uint32_t f = m.at(i, c);
      if (f == 0) continue;
      const std::uint32_t nf = p - f;
      for (std::size_t j = c; j < nc; ++j)
        m.at(i, j) = add_mod(m.at(i, j), mul_mod(nf, m.at(t, j), p), p);
    }
  }
  out.mat = std::move(m);
  return out;
}

MatrixFp kernel_basis(const MatrixFp& m, const ElimConfig&) {
  const std::size_t nc = m.cols();
  const std::uint32_t p = m.modulus();
  Echelon e = rref(m);
  const std::size_t r = e.rank();
  std::vector<std::size_t> free_cols;
  {
    std::size_t t = 0;
    for (std::size_t c = 0; c < nc; ++c) {
      if (t < r && e.pivots[t] == c)
        ++t;
      else
        free_cols.push_back(c);
    }
  }
  MatrixFp k(nc, free_cols.size(), p);
  for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
    const std::size_t fc = free_cols[idx];
    k.at(fc, idx) = 1;
    for (std::size_t t = 0; t < r; ++t) k.at(e.pivots[t], idx) = neg_mod(e.mat.at(t, fc), p);
    // Canonical scaling: first nonzero coordinate equal to 1.
    for (std::size_t i = 0; i < nc; ++i) {
      const std::uint32_t v = k.at(i, idx);
      if (v == 0) continue;
      if (v != 1) {
        const std::uint32_t s = inv_mod(v, p);
        for (std::size_t j = i; j < nc; ++j) k.at(j, idx) = mul_mod(k.at(j, idx), s, p);
      }
      break;
    }
  }
  return k;
}

MatrixFp transpose(const MatrixFp& m) {
  MatrixFp t(m.cols(), m.rows(), m.modulus());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

MatrixFp matmul(const MatrixFp& a, const MatrixFp& b) {
  if (a.cols() != b.rows() || a.modulus() != b.modulus())
    throw std::invalid_argument("matmul: shape or modulus mismatch");
  const std::uint32_t p = a.modulus();
  MatrixFp c(a.rows(), b.cols(), p);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t f = a.at(i, k);
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const std::uint64_t v = c.at(i, j) + f * b.at(k, j);
        c.at(i, j) = static_cast<std::uint32_t>(v % p);
      }
    }
  }
  return c;
}

QuotientMap::QuotientMap(const MatrixFp& span_columns)
    : ambient_(span_columns.rows()), p_(span_columns.modulus()), reduced_(rref(transpose(span_columns))) {
  std::size_t t = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (t < reduced_.rank() && reduced_.pivots[t] == c)
      ++t;
    else
      nonpivots_.push_back(c);
  }
}

std::vector<std::uint32_t> QuotientMap::reduce(std::span<const std::uint32_t> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("QuotientMap: wrong vector length");
  std::vector<std::uint32_t> w(v.begin(), v.end());
  for (std::size_t t = 0; t < reduced_.rank(); ++t) {
    const std::uint32_t f = w[reduced_.pivots[t]];
    if (f == 0) continue;
    const std::uint32_t nf = p_ - f;
    for (std::size_t j = reduced_.pivots[t]; j < ambient_; ++j)
      w[j] = add_mod(w[j], mul_mod(nf, reduced_.mat.at(t, j), p_), p_);
  }
  return w;
}

std::vector<std::uint32_t> QuotientMap::apply(std::span<const std::uint32_t> v) const {
  const std::vector<std::uint32_t> w = reduce(v);
  std::vector<std::uint32_t> out(nonpivots_.size());
  for (std::size_t i = 0; i < nonpivots_.size(); ++i) out[i] = w[nonpivots_[i]];
  return out;
}

SubspaceQuotient::SubspaceQuotient(const MatrixFp& w_rows, const MatrixFp& h_rows)
    : kill_w_(transpose(w_rows)) {
  // Reduce the h-basis against the span of w, then keep an RREF basis of what
  // remains; coordinates of a reduced vector are its values at the pivots.
  MatrixFp reduced_h(h_rows.rows(), h_rows.cols(), h_rows.modulus());
  for (std::size_t i = 0; i < h_rows.rows(); ++i) {
    const std::vector<std::uint32_t> w = kill_w_.reduce(h_rows.row(i));
    std::copy(w.begin(), w.end(), reduced_h.row(i).begin());
  }
  basis_ = rref(std::move(reduced_h));
}

std::vector<std::uint32_t> SubspaceQuotient::apply(std::span<const std::uint32_t> v) const {
  const std::vector<std::uint32_t> w = kill_w_.reduce(v);
  std::vector<std::uint32_t> out(basis_.rank());
  for (std::size_t t = 0; t < basis_.rank(); ++t) out[t] = w[basis_.pivots[t]];
  return out;
}

MatrixFp random_matrix(std::size_t rows, std::size_t cols, std::uint32_t p, SplitMix64& rng) {
  MatrixFp m(rows, cols, p);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.below(p);
  return m;
}

MatrixFp random_invertible(std::size_t n, std::uint32_t p, SplitMix64& rng) {
  for (;;) {
    MatrixFp m = random_matrix(n, n, p, rng);
    if (rank(m) == n) return m;
  }
}

}  // namespace syzlab
