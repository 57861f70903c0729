#include "syzlab/divclass.hpp"

#include <sstream>
#include <stdexcept>

#include "syzlab/betti.hpp"  // binomial

namespace syzlab {

namespace {

DivisorClass zero_class(unsigned ell) {
  DivisorClass c;
  c.ell = ell;
  c.d0a.assign(ell / 2, Rational(0));
  return c;
}

void check_same_basis(const DivisorClass& a, const DivisorClass& b) {
  if (a.ell != b.ell || a.d0a.size() != b.d0a.size())
    throw std::invalid_argument("DivisorClass: level mismatch");
}

Rational rat(const BigInt& num, const BigInt& den = 1) { return Rational(num, den); }

// kappa_1 restricted to the partial compactification.
DivisorClass kappa1(unsigned ell) {
  DivisorClass c = zero_class(ell);
  c.lam = 12;
  c.d0p = -1;
  c.d0pp = -1;
  for (auto& v : c.d0a) v = -Rational(ell);
  return c;
}

// c1(E') = c1 of the Prym-Hodge bundle: lambda - 1/(2l) sum a(l-a) d^(a).
DivisorClass c1_prym_hodge(unsigned ell) {
  DivisorClass c = zero_class(ell);
  c.lam = 1;
  for (unsigned a = 1; a <= ell / 2; ++a) c.d0a[a - 1] = -rat(BigInt(a) * (ell - a), BigInt(2) * ell);
  return c;
}

// c1(E_{0,b}) = lambda + C(b,2) kappa_1 - 1/(2l) sum a(l-a) d^(a).
DivisorClass c1_e0b(unsigned b, unsigned ell) {
  DivisorClass c = rat(binomial(b, 2)) * kappa1(ell);
  c.lam += 1;
  for (unsigned a = 1; a <= ell / 2; ++a) c.d0a[a - 1] -= rat(BigInt(a) * (ell - a), BigInt(2) * ell);
  return c;
}

// c1(F_{0,b}) = lambda + C(b,2) kappa_1 - (b-2)^2/(2l) sum a(l-a) d^(a).
DivisorClass c1_f0b(unsigned b, unsigned ell) {
  DivisorClass c = rat(binomial(b, 2)) * kappa1(ell);
  c.lam += 1;
  const BigInt sq = (BigInt(b) - 2) * (BigInt(b) - 2);
  for (unsigned a = 1; a <= ell / 2; ++a)
    c.d0a[a - 1] -= rat(sq * a * (ell - a), BigInt(2) * ell);
  return c;
}

// c1(G_{0,b}) = lambda + C(b,2) kappa_1 - b^2/2 sum a(l-a)/l d^(a).
DivisorClass c1_g0b(unsigned b, unsigned ell) {
  DivisorClass c = rat(binomial(b, 2)) * kappa1(ell);
  c.lam += 1;
  for (unsigned a = 1; a <= ell / 2; ++a)
    c.d0a[a - 1] -= rat(BigInt(b) * b * a * (ell - a), BigInt(2) * ell);
  return c;
}

// The bracketed class of the U formula (no binomial prefactor).
DivisorClass u_paren(unsigned i, unsigned ell) {
  DivisorClass c = zero_class(ell);
  c.lam = 3 * i + 1;
  c.d0p = c.d0pp = -Rational(i) / 2;
  for (unsigned a = 1; a <= ell / 2; ++a) {
    const BigInt num = BigInt(i) * ell * ell + BigInt(2) * a * a * i - BigInt(2) * a * ell * i -
                       BigInt(a) * a + BigInt(a) * ell;
    c.d0a[a - 1] = -rat(num, BigInt(2) * ell);
  }
  return c;
}

}  // namespace

bool DivisorClass::operator==(const DivisorClass& o) const {
  return ell == o.ell && lam == o.lam && d0p == o.d0p && d0pp == o.d0pp && d0a == o.d0a;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  check_same_basis(*this, o);
  lam += o.lam;
  d0p += o.d0p;
  d0pp += o.d0pp;
  for (std::size_t a = 0; a < d0a.size(); ++a) d0a[a] += o.d0a[a];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s) {
  lam *= s;
  d0p *= s;
  d0pp *= s;
  for (auto& v : d0a) v *= s;
  return *this;
}

DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }

std::string DivisorClass::str() const {
  std::ostringstream out;
  out << lam << "*lambda + " << d0p << "*d0' + " << d0pp << "*d0''";
  for (std::size_t a = 0; a < d0a.size(); ++a) out << " + " << d0a[a] << "*d0^(" << a + 1 << ")";
  return out.str();
}

DivisorClass class_formula(ClassKind kind, unsigned g, unsigned ell) {
  if (ell < 2) throw std::invalid_argument("class_formula: ell >= 2");
  switch (kind) {
    case ClassKind::U: {
      if (g < 3 || g % 2 == 0) throw std::invalid_argument("class_formula(U): g = 2i+1 odd required");
      const unsigned i = (g - 1) / 2;
      return rat(binomial(2 * i, i), BigInt(2 * i - 1)) * u_paren(i, ell);
    }
    case ClassKind::Zvirt: {
      if (g < 6 || g % 2 != 0) throw std::invalid_argument("class_formula(Zvirt): g = 2i+6 even required");
      const unsigned i = (g - 6) / 2;
      DivisorClass c = zero_class(ell);
      c.lam = Rational(3 * (2 * i + 7), i + 3);
      c.d0p = c.d0pp = -1;
      for (unsigned a = 1; a <= ell / 2; ++a)
        c.d0a[a - 1] = -rat(BigInt(a) * a - BigInt(a) * ell + BigInt(ell) * ell, 2);
      return rat(binomial(2 * i + 2, i)) * c;
    }
    case ClassKind::Dvirt: {
      if (g < 6 || g % 2 != 0) throw std::invalid_argument("class_formula(Dvirt): g = 2i+2 even, g >= 6");
      if (ell < 3) throw std::invalid_argument("class_formula(Dvirt): ell >= 3 required");
      const unsigned i = (g - 2) / 2;
      if (i % 2 == 0 && binomial(2 * i - 1, i) % 2 != 0)
        throw std::invalid_argument("class_formula(Dvirt): parity hypothesis fails (i even, C(2i-1,i) odd)");
      DivisorClass c = zero_class(ell);
      c.lam = 6 * i + 1;
      c.d0p = c.d0pp = -Rational(i);
      for (unsigned a = 1; a <= ell / 2; ++a) {
        const BigInt num = BigInt(i) * ell * ell + BigInt(5) * a * a * i - BigInt(5) * a * i * ell -
                           BigInt(2) * a * a + BigInt(2) * a * ell;
        c.d0a[a - 1] = -rat(num, BigInt(ell));
      }
      return rat(binomial(2 * i - 2, i), BigInt(i - 1)) * c;
    }
    case ClassKind::Kcanonical: {
      DivisorClass c = zero_class(ell);
      c.lam = 13;
      c.d0p = c.d0pp = -2;
      for (auto& v : c.d0a) v = -Rational(ell + 1);
      return c;
    }
    case ClassKind::PullbackDelta0: {
      DivisorClass c = zero_class(ell);
      c.d0p = c.d0pp = 1;
      for (auto& v : c.d0a) v = ell;
      return c;
    }
  }
  throw std::invalid_argument("class_formula: unknown kind");
}

DivisorClass derive_class_by_sums(ClassKind kind, unsigned g, unsigned ell) {
  const unsigned n = g - 1;  // rank of the (Prym-)Hodge-type bundles involved
  switch (kind) {
    case ClassKind::U: {
      if (g < 3 || g % 2 == 0) throw std::invalid_argument("derive(U): odd genus required");
      const unsigned i = (g - 1) / 2;
      DivisorClass sum = zero_class(ell);
      for (unsigned b = 0; b <= i; ++b) {
        DivisorClass term = rat(binomial(g, i - b)) * c1_e0b(b + 1, ell);
        if (i >= b + 1) term.lam += rat(BigInt(2 * b + 1) * (g - 1) * binomial(g - 1, i - b - 1));
        sum += (b % 2 == 0 ? Rational(-1) : Rational(1)) * term;
      }
      return sum;
    }
    case ClassKind::Dvirt: {
      if (g < 6 || g % 2 != 0 || ell < 3) throw std::invalid_argument("derive(Dvirt): bad parameters");
      const unsigned i = (g - 2) / 2;
      DivisorClass sum = zero_class(ell);
      const DivisorClass eprime = c1_prym_hodge(ell);
      for (unsigned j = 0; j <= i; ++j) {
        DivisorClass term = rat(binomial(g - 1, i - j)) * c1_f0b(j + 1, ell);
        if (i >= j + 1)
          term += rat(BigInt(g - 1) * (2 * j + 1) * binomial(g - 2, i - j - 1)) * eprime;
        sum += (j % 2 == 0 ? Rational(-1) : Rational(1)) * term;
      }
      return sum;
    }
    case ClassKind::Zvirt: {
      if (g < 6 || g % 2 != 0) throw std::invalid_argument("derive(Zvirt): even genus >= 6 required");
      const unsigned i = (g - 6) / 2;
      const DivisorClass eprime = c1_prym_hodge(ell);

      // c1(H_{i,2}) = sum_j (-1)^j c1(wedge^{i-j} E' (x) Sym^{j+2} E').
      DivisorClass h = zero_class(ell);
      for (unsigned j = 0; j <= i; ++j) {
        const unsigned a = i - j, b = j + 2;
        const BigInt rank_sym = binomial(n + b - 1, b);
        // c1(wedge^a E) = C(n-1, a-1) c1(E); c1(Sym^b E) = b/n rank(Sym^b E) c1(E).
        Rational coeff = rat(rank_sym * (a == 0 ? BigInt(0) : binomial(n - 1, a - 1))) +
                         rat(binomial(n, a) * rank_sym * b, BigInt(n));
        if (j % 2 == 1) coeff = -coeff;
        h += coeff * eprime;
      }

      // c1(G_{i,2}) = sum_j (-1)^j [ C(n, i-j) c1(G_{0,j+2})
      //                              + n (2j+3) C(n-1, i-j-1) c1(E') ].
      DivisorClass gg = zero_class(ell);
      for (unsigned j = 0; j <= i; ++j) {
        DivisorClass term = rat(binomial(n, i - j)) * c1_g0b(j + 2, ell);
        if (i >= j + 1) term += rat(BigInt(n) * (2 * j + 3) * binomial(n - 1, i - j - 1)) * eprime;
        gg += (j % 2 == 0 ? Rational(1) : Rational(-1)) * term;
      }
      return gg + Rational(-1) * h;
    }
    default:
      throw std::invalid_argument("derive_class_by_sums: kind must be U, Zvirt or Dvirt");
  }
}

OddGenusCombination odd_genus_combination(unsigned i) {
  if (i < 1) throw std::invalid_argument("odd_genus_combination: i >= 1");
  const unsigned ell = 3;
  const DivisorClass u = u_paren(i, ell);
  // Hurwitz pullback: s lambda - delta_0' - delta_0'' - 3 delta_0^(1).
  DivisorClass hur = Rational(-1) * class_formula(ClassKind::PullbackDelta0, 2 * i + 1, ell);
  hur.lam = Rational(6 * (i + 2), i + 1);

  // Match the d0' and d0^(1) coefficients of the target.
  const Rational t_d0p = -2, t_d0a = -4;
  // alpha * u.d0p + beta * hur.d0p = t_d0p ; alpha * u.d0a + beta * hur.d0a = t_d0a.
  const Rational det = u.d0p * hur.d0a[0] - u.d0a[0] * hur.d0p;
  if (det == 0) throw std::runtime_error("odd_genus_combination: singular system");
  OddGenusCombination out;
  out.i = i;
  out.alpha = (t_d0p * hur.d0a[0] - t_d0a * hur.d0p) / det;
  out.beta = (u.d0p * t_d0a - u.d0a[0] * t_d0p) / det;
  out.combined = out.alpha * u + out.beta * hur;
  out.lambda_coefficient = out.combined.lam;
  const Rational expected_lambda = Rational(6 * (2 * i + 3), i + 1);
  if (out.lambda_coefficient != expected_lambda)
    throw std::runtime_error("odd_genus_combination: lambda identity fails");
  if (out.lambda_coefficient < 13)
    out.verdict = OddGenusCombination::Verdict::big;
  else if (out.lambda_coefficient == 13)
    out.verdict = OddGenusCombination::Verdict::boundary;
  else
    out.verdict = OddGenusCombination::Verdict::not_big;
  return out;
}

G12Report g12_combination_report() {
  const unsigned ell = 3;
  G12Report r;
  r.z_theorem = class_formula(ClassKind::Zvirt, 12, ell);
  r.z_theorem_normalized = (Rational(-2) / r.z_theorem.d0p) * r.z_theorem;
  r.z_intro = zero_class(ell);
  r.z_intro.lam = 13;
  r.z_intro.d0p = r.z_intro.d0pp = -2;
  r.z_intro.d0a[0] = Rational(-14, 3);
  r.d_theorem = class_formula(ClassKind::Dvirt, 12, ell);

  r.target = zero_class(ell);
  r.target.lam = Rational(155, 12);
  r.target.d0p = r.target.d0pp = -2;
  r.target.d0a[0] = -4;

  const Rational w_z(31, 36), w_d(1, 36 * 7);
  r.combo_with_intro = w_z * r.z_intro + w_d * r.d_theorem;
  r.combo_with_theorem = w_z * r.z_theorem_normalized + w_d * r.d_theorem;
  r.intro_matches_target = r.combo_with_intro == r.target;
  r.theorem_matches_target = r.combo_with_theorem == r.target;

  // Is the printed class any scalar multiple of the theorem's class?
  const Rational s = r.z_intro.lam / r.z_theorem.lam;
  r.scalar_match_exists = (s * r.z_theorem) == r.z_intro;
  return r;
}

std::string G12Report::text() const {
  std::ostringstream out;
  out << "Z_{12,3} virtual class (theorem):      " << z_theorem.str() << "\n";
  out << "  normalized to (13, -2, -2, .):       " << z_theorem_normalized.str() << "\n";
  out << "Z_{12,3} as printed in the overview:   " << z_intro.str() << "\n";
  out << "D_{12,3} virtual class (theorem):      " << d_theorem.str() << "\n";
  out << "target 31/36 Z + 1/252 D:              " << target.str() << "\n";
  out << "combination using printed Z:           " << combo_with_intro.str()
      << (intro_matches_target ? "   [matches target]" : "   [does NOT match target]") << "\n";
  out << "combination using theorem Z:           " << combo_with_theorem.str()
      << (theorem_matches_target ? "   [matches target]" : "   [does NOT match target]") << "\n";
  out << "printed Z is a scalar multiple of theorem Z: " << (scalar_match_exists ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace syzlab
