#ifndef SYZLAB_KOSZUL_HPP
#define SYZLAB_KOSZUL_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "syzlab/curve.hpp"
#include "syzlab/linalg.hpp"

// Exterior-algebra indexing, Koszul differentials on section spaces, and the
// direct computation of K_{p,q} dimensions.
//
// Conventions, fixed once so every matrix is reproducible bit for bit:
//   * wedge basis = k-subsets of {0..n-1} in lexicographic order;
//   * d(S (x) w) = sum_t (-1)^t (S \ {i_t}) (x) f_{i_t} w, t = 0-based
//     position of the removed index;
//   * targets of differentials are raw polynomial coefficient spaces, never
//     H^0 coordinate spaces, so kernels are preserved without a second solve.

namespace syzlab {

struct WedgeBasis {
  unsigned n = 0, k = 0;
  std::vector<std::vector<unsigned>> subsets;  // lexicographic

  static WedgeBasis make(unsigned n, unsigned k);
  std::size_t size() const { return subsets.size(); }
  // Lexicographic rank of a strictly increasing k-subset.
  std::size_t index_of(const std::vector<unsigned>& subset) const;
};

struct KoszulLimits {
  std::size_t max_entries = 50'000'000;  // refuse direct assembly above this
};

struct FeasibilityError : std::runtime_error {
  std::size_t rows, cols;
  FeasibilityError(std::size_t r, std::size_t c);
};

// Matrix of wedge^p V (x) W -> wedge^{p-1} V (x) coefficient space of degree
// deg V + deg W.  Columns are (S, w) with column index S_idx * dim W + w, rows
// (T, c) with row index T_idx * (deg V + deg W + 1) + c.
MatrixFp koszul_differential_on_sections(const SectionSpace& v, const SectionSpace& w, unsigned p,
                                         const KoszulLimits& limits = {});

// dim K_{p,1}(C; F, L) for h^0(F) = 0: the plain kernel of the differential
// on wedge^p H^0(L) (x) H^0(F (x) L).  Throws std::invalid_argument if F has
// sections.
std::size_t koszul_dim_twisted(const NodalRationalCurve& curve, const LineBundleData& f,
                               const LineBundleData& l, unsigned p, const KoszulLimits& limits = {});

// dim K_{p,1}(C; F, L) and dim K_{p-1,2}(C; F, L) from one strand assembly
// (the rank of the q=1 differential is shared).
struct TwistedStrandDims {
  std::size_t k_p1 = 0;   // dim K_{p,1}
  std::size_t k_pm1_2 = 0;  // dim K_{p-1,2}
};
TwistedStrandDims koszul_dims_twisted_pair(const NodalRationalCurve& curve, const LineBundleData& f,
                                           const LineBundleData& l, unsigned p,
                                           const KoszulLimits& limits = {});

// Graded Betti number b_{p,q} of the homogeneous coordinate ring of the
// embedding by L, q in {1, 2}.  For q = 1 the image of the pure Koszul
// differential (rank C(h^0(L)-1... C(dim V, p+1)) is subtracted; for q = 2
// the rank of the preceding differential is computed directly.
std::size_t koszul_dim_ring(const NodalRationalCurve& curve, const LineBundleData& l, unsigned p,
                            unsigned q, const KoszulLimits& limits = {});

// dim I_d and a basis of I_d = ker(Sym^d H^0(L) -> coefficients), d in {2,3}.
// Columns of `basis` are kernel vectors in the degree-d monomial basis
// (multisets of {0..dimV-1}, lexicographic).
struct IdealPiece {
  std::size_t dim = 0;
  MatrixFp basis;
  bool multiplication_surjective = false;  // rank == h^0(L^d)
};
IdealPiece ideal_graded_dim(const NodalRationalCurve& curve, const LineBundleData& l, unsigned d);

// Kernel of the formal multiplication I_2 (x) V -> I_3 (inside Sym^3 V); each
// kernel element is returned reshaped as a dim(V) x dim(I_2) matrix.
struct SyzygySpace {
  std::size_t dim = 0;
  std::vector<MatrixFp> tensors;
};
SyzygySpace linear_syzygy_space(const NodalRationalCurve& curve, const LineBundleData& l);

// Rank of a kernel tensor (the span of its linear forms); gamma must be nonzero.
std::size_t syzygy_rank(const MatrixFp& gamma);

// Assembles the pairing psi : wedge^{m+1} V (x) wedge^{m+1} V -> V of the
// middle Koszul matrix over 2m+1 abstract variables and reports its symmetry.
struct MiddleKoszulCheck {
  unsigned m = 0;
  std::size_t size = 0;         // C(2m+1, m+1)
  bool symmetric = false;       // psi(I,J) == psi(J,I) for all pairs
  bool skew_symmetric = false;  // psi(I,J) == -psi(J,I) for all pairs
  bool diagonal_zero = false;
  bool verdict_matches_parity() const { return symmetric == (m % 2 == 0) && skew_symmetric == (m % 2 == 1); }
};
MiddleKoszulCheck middle_koszul_symmetry_check(unsigned m);

// Degree-d monomial basis (multisets as sorted index vectors, lexicographic).
struct MonomialBasis {
  unsigned n = 0, d = 0;
  std::vector<std::vector<unsigned>> monomials;

  static MonomialBasis make(unsigned n, unsigned d);
  std::size_t size() const { return monomials.size(); }
  std::size_t index_of(const std::vector<unsigned>& mono) const;
};

}  // namespace syzlab

#endif
