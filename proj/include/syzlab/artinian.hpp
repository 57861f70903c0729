#ifndef SYZLAB_ARTINIAN_HPP
#define SYZLAB_ARTINIAN_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "syzlab/curve.hpp"
#include "syzlab/koszul.hpp"
#include "syzlab/linalg.hpp"

// The two reduced pipelines: artinian reductions of the canonical module
// omega_R and of the torsion module Gamma(eta^k, K (x) eta) by the regular
// pair (s_{g-3}, s_{g-2}), from which the target graded Betti number is read
// off as the corank of one small exact matrix over F_p.
//
// Quotient representatives are the non-pivot coordinates of the reduction
// ideal's column space under the fixed coefficient order, so every matrix is
// reproducible from (curve, bundle, seed) alone.

namespace syzlab {

struct RegularPairError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Paracanonical basis arranged so that its last two rows form a regular pair:
// constant gcd and at least one member of full degree (no common zero on P^1,
// the point at infinity included).  Starts from the echelonized basis and
// retries with seeded random recombinations, at most 32 attempts.
struct RegularPairChoice {
  SectionSpace sections;   // possibly recombined basis of H^0(K (x) eta)
  unsigned attempts = 0;   // 0 = the echelon basis itself worked
};
RegularPairChoice choose_regular_pair(const SectionSpace& v, std::uint64_t seed);

// Pair test alone (exposed for tests): constant gcd and full top degree.
bool regular_pair_ok(const Poly& a, const Poly& b, long full_degree);

// Artinian reduction A = omega_R / (s_{g-3}, s_{g-2}) omega_R with graded
// pieces A_0 = H^0(K) (dim g), A_1 (dim g-3), A_2 (dim 1).
struct OmegaReduction {
  SectionSpace paracanonical;          // the arranged basis; V' = rows 0..g-4
  SectionSpace canonical;              // A_0 basis, dim g
  SubspaceQuotient a1;                 // H^0(K*L) / (pair) H^0(K)
  std::array<std::size_t, 3> hilbert;  // (g, g-3, 1), asserted
  unsigned pair_attempts = 0;
};
OmegaReduction artinian_reduce_omega(const NodalRationalCurve& curve, const LineBundleData& eta,
                                     std::uint64_t seed);

// dim K_{g/2-2,1}(C, K (x) eta) as the corank of the assembled map
// wedge^{g/2} V' (x) A_0 -> wedge^{g/2-1} V' (x) A_1, of size
// (g-3) C(g-3, g/2-1)  x  g C(g-3, g/2).
std::size_t prym_green_kernel_dim(const NodalRationalCurve& curve, const LineBundleData& eta,
                                  std::uint64_t seed, const KoszulLimits& limits = {});

// dim K_{g/2-1,1}(C; eta^k, K (x) eta) as the corank of the square map
// wedge^{g/2-1} V' (x) B_1 -> wedge^{g/2-2} V' (x) B_2 of size
// (g-1) C(g-3, g/2-1), where B is the artinian reduction of the torsion
// module (Hilbert values (g-1, g-1) in degrees 1, 2).
std::size_t torsion_module_kernel_dim(const NodalRationalCurve& curve, const LineBundleData& eta,
                                      unsigned k, std::uint64_t seed, const KoszulLimits& limits = {});

}  // namespace syzlab

#endif
