#ifndef SYZLAB_CURVE_HPP
#define SYZLAB_CURVE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "syzlab/ff.hpp"
#include "syzlab/linalg.hpp"
#include "syzlab/poly.hpp"
#include "syzlab/rng.hpp"

// Rational g-nodal curves over F_p.  A curve is 2g marked affine points
// (p_j, q_j) on the line, pairwise distinct; a line bundle is a degree d
// together with one nonzero multiplier per node, and its sections are the
// polynomials f of degree <= d with a_j f(p_j) = f(q_j) at every node.

namespace syzlab {

struct NodalRationalCurve {
  unsigned g = 0;
  FieldParams field;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> nodes;  // (p_j, q_j)
};

struct LineBundleData {
  long degree = 0;
  std::vector<std::uint32_t> multipliers;  // a_1 .. a_g, all nonzero

  bool operator==(const LineBundleData&) const = default;
};

struct SectionSpace {
  LineBundleData bundle;
  MatrixFp basis;  // rows = coefficient vectors of length degree + 1
  std::size_t dim() const { return basis.rows(); }
  Poly section(std::size_t i) const;
};

// 2g pairwise-distinct affine points drawn by rejection from SplitMix64(seed).
// Throws std::invalid_argument unless field.p > 2g.
NodalRationalCurve random_curve(unsigned g, const FieldParams& field, std::uint64_t seed);

// a_j = prod_{i != j} (q_j - p_i)(q_j - q_i) / ((p_j - p_i)(p_j - q_i));
// degree 2g-2, the multipliers of the dualizing sheaf.
LineBundleData canonical_multipliers(const NodalRationalCurve& curve);

LineBundleData trivial_bundle(const NodalRationalCurve& curve);
LineBundleData tensor(const LineBundleData& a, const LineBundleData& b, std::uint32_t p);
LineBundleData dual(const LineBundleData& a, std::uint32_t p);
// k-th tensor power; negative k through the dual.
LineBundleData bundle_power(const LineBundleData& a, long k, std::uint32_t p);

// Degree-0 bundle with multiplier field.r on the support nodes and 1 elsewhere.
// The default support (empty list) is all nodes; support indices are 1-based.
// Throws if the resulting bundle is trivial.
LineBundleData torsion_bundle(const NodalRationalCurve& curve, const std::vector<unsigned>& support = {});

// True iff degree 0 and every multiplier is an ell-th root of unity.
bool is_torsion(const LineBundleData& a, std::uint32_t ell, std::uint32_t p);

// Multiplicative order of the bundle in Pic^0 (lcm of multiplier orders);
// only sensible for degree 0.
std::uint64_t bundle_order(const LineBundleData& a, std::uint32_t p);

// Degree-d bundle with seeded random nonzero multipliers.
LineBundleData random_bundle(const NodalRationalCurve& curve, long degree, std::uint64_t seed);

// Basis of H^0: kernel of the g x (d+1) constraint matrix with row j given by
// a_j p_j^k - q_j^k, returned as canonical reduced rows.  Negative degree
// yields the zero space.
SectionSpace section_space(const NodalRationalCurve& curve, const LineBundleData& bundle);

// Matrix of V (x) W -> coefficient space of degree deg V + deg W; column
// i*dim(W)+j holds the coefficients of f_i * h_j.
MatrixFp multiplication_matrix(const SectionSpace& v, const SectionSpace& w);

// Replace the basis by m * basis (m invertible); used for basis-invariance
// checks and for regular-pair retries.
SectionSpace recombine(const SectionSpace& s, const MatrixFp& m);

}  // namespace syzlab

#endif
