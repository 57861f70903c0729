#ifndef SYZLAB_LINALG_HPP
#define SYZLAB_LINALG_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "syzlab/ff.hpp"
#include "syzlab/rng.hpp"

// Exact dense linear algebra over F_p: rank, kernel bases, echelon forms and
// quotient coordinates.  Entries are reduced residues in one 32-bit word; the
// modulus must satisfy p < 2^16 so that a*b + c stays below 2^32 for reduced
// a, b, c (the elimination kernels rely on this).
//
// Elimination is deterministic: pivots are taken column by column, each pivot
// being the first not-yet-used row with a nonzero entry.  Above a row-count
// threshold a blocked path defers trailing updates and replays them with
// 64-bit accumulation; its output is bit-identical to the naive path, and
// independent of the worker count.

namespace syzlab {

class MatrixFp {
 public:
  MatrixFp() = default;
  MatrixFp(std::size_t rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  std::uint32_t& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  std::uint32_t* data() { return e_.data(); }
  const std::uint32_t* data() const { return e_.data(); }
  std::span<std::uint32_t> row(std::size_t i) { return {e_.data() + i * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t i) const { return {e_.data() + i * cols_, cols_}; }

  bool operator==(const MatrixFp& o) const = default;

  static MatrixFp identity(std::size_t n, std::uint32_t p);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::uint32_t p_ = 0;
  std::vector<std::uint32_t> e_;
};

struct ElimConfig {
  std::size_t blocked_row_threshold = 4096;  // naive path below, blocked at or above
  std::size_t panel_cols = 64;
};

// In-place row echelon form (not reduced); returns the rank.
std::size_t row_echelon_naive(MatrixFp& m);
std::size_t row_echelon_blocked(MatrixFp& m, std::size_t panel_cols = 64);
std::size_t row_echelon(MatrixFp& m, const ElimConfig& cfg = {});

std::size_t rank(const MatrixFp& m, const ElimConfig& cfg = {});
std::size_t rank(MatrixFp&& m, const ElimConfig& cfg = {});

// Reduced row echelon form with its pivot columns (ascending).
struct Echelon {
  MatrixFp mat;                     // rank many nonzero rows, then zero rows
  std::vector<std::size_t> pivots;  // pivot column of row t
  std::size_t rank() const { return pivots.size(); }
};
Echelon rref(MatrixFp m);

// Columns span the right kernel of m; column count = cols - rank.  Each
// column is scaled so that its first nonzero coordinate is 1, which makes the
// basis canonical.
MatrixFp kernel_basis(const MatrixFp& m, const ElimConfig& cfg = {});

MatrixFp transpose(const MatrixFp& m);
MatrixFp matmul(const MatrixFp& a, const MatrixFp& b);

// The linear map F_p^n -> F_p^{n - dim span(cols of s)} that kills exactly
// span(s): reduce against the RREF of the span, then read off the non-pivot
// coordinates.  Restricted to the unit vectors at non-pivot coordinates it is
// the identity.
class QuotientMap {
 public:
  explicit QuotientMap(const MatrixFp& span_columns);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t subspace_dim() const { return reduced_.rank(); }
  std::size_t image_dim() const { return ambient_ - subspace_dim(); }

  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> v) const;

  // Reduction against the RREF rows only (stays in F_p^n, zero on the span).
  std::vector<std::uint32_t> reduce(std::span<const std::uint32_t> v) const;

 private:
  std::size_t ambient_ = 0;
  std::uint32_t p_ = 0;
  Echelon reduced_;                      // RREF of the span, as rows
  std::vector<std::size_t> nonpivots_;
};

// Coordinates on the quotient span(h) / span(w) for w contained in span(h),
// both given as row spans.  apply() of a vector of span(h) yields its
// coordinate vector of length dim h - dim w; vectors of span(w) map to zero.
class SubspaceQuotient {
 public:
  SubspaceQuotient(const MatrixFp& w_rows, const MatrixFp& h_rows);

  std::size_t dim() const { return basis_.rank(); }
  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> v) const;

 private:
  QuotientMap kill_w_;
  Echelon basis_;  // RREF of the reduced h-rows; coordinates read at its pivots
};

// Test helpers (seeded, deterministic).
MatrixFp random_matrix(std::size_t rows, std::size_t cols, std::uint32_t p, SplitMix64& rng);
MatrixFp random_invertible(std::size_t n, std::uint32_t p, SplitMix64& rng);

}  // namespace syzlab

#endif
