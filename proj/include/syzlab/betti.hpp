#ifndef SYZLAB_BETTI_HPP
#define SYZLAB_BETTI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Expected natural/pure Betti tables, the exceptional-case predicate for the
// torsion-bundle statement, exact Euler-characteristic diagonals, and the
// text rendering used by the CLI.
//
// Table layout follows the printed displays: entry rows[j][i] sits in column
// i (homological step) and display row j; naturality means at most one
// nonzero entry per display diagonal i + j.

namespace syzlab {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(unsigned n, unsigned k);

struct BettiTable {
  std::vector<std::vector<long long>> rows;  // rows[j][i], all rows same width
  std::string kind;

  std::size_t width() const { return rows.empty() ? 0 : rows[0].size(); }
  std::vector<long long> totals() const;
  bool is_natural() const;  // at most one nonzero per diagonal i + j
  bool operator==(const BettiTable& o) const { return rows == o.rows; }
};

// (g-1) * C(g-2, i) * (1 - 2i/(g-2)), evaluated exactly; the Euler
// characteristic dim K_{i,1} - dim K_{i-1,2} of the twisted modules with
// L = K (x) eta.
long long chi_diagonal(unsigned g, unsigned i);

// Same Euler characteristic for L = K_C (the eta = O case):
// (g-1) * (C(g-2, i) - C(g-2, i-1)).
long long chi_diagonal_canonical(unsigned g, unsigned i);

// Hilbert-numerator coefficients of the paracanonical coordinate ring:
// e_d = b_{d-1,1} - b_{d-2,2} for d >= 2, from h(0) = 1, h(q) = q(2g-2)-g+1.
long long ring_strand_value(unsigned g, unsigned d);

enum class TableKind { paracanonical_ring, torsion_module, canonical_twist };

// true iff ell | 2k+1, g = 2 (mod 4) and C(g-3, g/2-1) is odd.
bool is_exceptional(unsigned g, unsigned ell, unsigned k);

// The natural table predicted for the given module; for exceptional torsion
// parameters the single extra syzygy is added at the crossing.
BettiTable expected_table(unsigned g, TableKind kind, unsigned ell, unsigned k = 1);

// Column-aligned text: header row of column indices, a "total:" row of column
// sums, then degree-labelled rows with "." for zero entries.
std::string render_table(const BettiTable& t);

}  // namespace syzlab

#endif
