#ifndef SYZLAB_DIVCLASS_HPP
#define SYZLAB_DIVCLASS_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Exact-rational divisor classes on the level-l moduli space over irreducible
// stable curves, in the basis (lambda, delta_0', delta_0'', delta_0^(a) for
// a = 1..floor(l/2)).  kappa_1 is eliminated at construction time through
// kappa_1 = 12 lambda - (delta_0' + delta_0'' + l * sum_a delta_0^(a)).

namespace syzlab {

using Rational = boost::multiprecision::cpp_rational;

struct DivisorClass {
  Rational lam, d0p, d0pp;
  std::vector<Rational> d0a;  // index a-1 holds the delta_0^(a) coefficient
  unsigned ell = 2;

  bool operator==(const DivisorClass& o) const;
  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator*=(const Rational& s);
  std::string str() const;  // human-readable "q*lambda + ... " form
};

DivisorClass operator+(DivisorClass a, const DivisorClass& b);
DivisorClass operator*(const Rational& s, DivisorClass a);

enum class ClassKind { U, Zvirt, Dvirt, Kcanonical, PullbackDelta0 };

// The printed closed forms:
//   U          (g = 2i+1):  C(2i,i)/(2i-1) [ (3i+1)L - i/2 (d'+d'')
//                    - sum_a (i l^2 + 2a^2 i - 2ali - a^2 + al)/(2l) d^(a) ]
//   Zvirt      (g = 2i+6):  C(2i+2,i) [ 3(2i+7)/(i+3) L - (d'+d'')
//                    - sum_a (a^2 - al + l^2)/2 d^(a) ]
//   Dvirt      (g = 2i+2, l >= 3, i >= 2, i odd or C(2i-1,i) even):
//               C(2i-2,i)/(i-1) [ (6i+1) L - i (d'+d'')
//                    - sum_a (i l^2 + 5a^2 i - 5ail - 2a^2 + 2al)/l d^(a) ]
//   Kcanonical: 13 L - 2(d'+d'') - (l+1) sum_a d^(a)   (restriction to the
//               partial compactification; the delta_i terms are dropped)
//   PullbackDelta0: d' + d'' + l sum_a d^(a)
// Parity violations raise std::invalid_argument.
DivisorClass class_formula(ClassKind kind, unsigned g, unsigned ell);

// The same classes evaluated through the proofs' alternating sums over Chern
// classes of the tautological bundles (exact binomials, the splitting
// identities c1(wedge^a E) = C(n-1,a-1) c1(E) and
// c1(Sym^b E) = b/n * rank(Sym^b E) * c1(E), and Mumford's relation).
// Supported kinds: U, Zvirt, Dvirt.
DivisorClass derive_class_by_sums(ClassKind kind, unsigned g, unsigned ell);

// Solves  alpha * U_paren + beta * (s L - pullback(delta_0))  =
//         6(2i+3)/(i+1) L - 2(d'+d'') - 4 d^(1)   at level 3,
// matching the d' and d^(1) coefficients;  U_paren is the bracketed class of
// the U formula and s = 6(i+2)/(i+1) the Hurwitz slope.  Asserts the lambda
// identity and reports bigness (lambda coefficient < 13 iff i > 5).
struct OddGenusCombination {
  unsigned i = 0;
  Rational alpha, beta;        // expected (6/(2i-1), (i-2)/(2i-1))
  Rational lambda_coefficient; // 6(2i+3)/(i+1)
  DivisorClass combined;
  enum class Verdict { big, boundary, not_big } verdict;
};
OddGenusCombination odd_genus_combination(unsigned i);

// Evaluates 31/36 [Z_{12,3}] + 1/(36*7) [D_{12,3}] under the two candidate
// normalizations of the Prym-Green class (the theorem's class scaled to
// lambda-coefficient 13, and the introduction's printed class with the 14/3
// coefficient) and reports which reproduces the printed target
// (13 - 1/12) L - 2(d'+d'') - 4 d^(1).  Asserts nothing beyond evaluation.
struct G12Report {
  DivisorClass z_theorem;            // full virtual class from the formula
  DivisorClass z_theorem_normalized; // scaled so (lambda, d0') = (13, -2)
  DivisorClass z_intro;              // 13 L - 2(d'+d'') - 14/3 d^(1) as printed
  DivisorClass d_theorem;            // full virtual class from the formula
  DivisorClass target;               // 155/12 L - 2(d'+d'') - 4 d^(1)
  DivisorClass combo_with_intro;     // 31/36 z_intro + 1/252 d_theorem
  DivisorClass combo_with_theorem;   // 31/36 z_theorem_normalized + 1/252 d_theorem
  bool intro_matches_target = false;
  bool theorem_matches_target = false;
  bool scalar_match_exists = false;  // is z_intro a scalar multiple of z_theorem?
  std::string text() const;
};
G12Report g12_combination_report();

}  // namespace syzlab

#endif
