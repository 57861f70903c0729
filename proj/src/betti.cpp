#include "syzlab/betti.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace syzlab {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::vector<long long> BettiTable::totals() const {
  std::vector<long long> t(width(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) t[i] += row[i];
  return t;
}

bool BettiTable::is_natural() const {
  if (rows.empty()) return true;
  std::vector<int> per_diagonal(width() + rows.size(), 0);
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t i = 0; i < rows[j].size(); ++i)
      if (rows[j][i] != 0) ++per_diagonal[i + j];
  return std::all_of(per_diagonal.begin(), per_diagonal.end(), [](int c) { return c <= 1; });
}

namespace {

long long to_ll(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error("Betti entry exceeds 64 bits");
  return static_cast<long long>(v);
}

}  // namespace

long long chi_diagonal(unsigned g, unsigned i) {
  if (g < 4 || i > g - 2) throw std::invalid_argument("chi_diagonal: need g >= 4, 0 <= i <= g-2");
  // (g-1) C(g-2, i) (1 - 2i/(g-2)) = (g-1) [C(g-2,i) - 2 C(g-3,i-1)], exact.
  const BigInt v = BigInt(g - 1) * (binomial(g - 2, i) - 2 * (i == 0 ? BigInt(0) : binomial(g - 3, i - 1)));
  return to_ll(v);
}

long long chi_diagonal_canonical(unsigned g, unsigned i) {
  if (g < 3 || i > g - 1) throw std::invalid_argument("chi_diagonal_canonical: bad arguments");
  const BigInt v = BigInt(g - 1) * (binomial(g - 2, i) - (i == 0 ? BigInt(0) : binomial(g - 2, i - 1)));
  return to_ll(v);
}

long long ring_strand_value(unsigned g, unsigned d) {
  if (d < 2) throw std::invalid_argument("ring_strand_value: d >= 2 required");
  // e_d = (-1)^{d-1} * coefficient of t^d in H(t) (1-t)^{g-1}.
  BigInt c = 0;
  for (unsigned q = 0; q <= d; ++q) {
    const BigInt h = q == 0 ? BigInt(1) : BigInt(q) * (2 * g - 2) - g + 1;
    const BigInt term = h * binomial(g - 1, d - q);
    if ((d - q) % 2 == 0)
      c += term;
    else
      c -= term;
  }
  if (d % 2 == 0) c = -c;
  return to_ll(c);
}

bool is_exceptional(unsigned g, unsigned ell, unsigned k) {
  if (g % 2 != 0 || g < 4) return false;
  if ((2 * k + 1) % ell != 0) return false;
  if (g % 4 != 2) return false;
  return binomial(g - 3, g / 2 - 1) % 2 == 1;
}

BettiTable expected_table(unsigned g, TableKind kind, unsigned ell, unsigned k) {
  BettiTable t;
  switch (kind) {
    case TableKind::paracanonical_ring: {
      // Columns 0..g-3; rows 0 (b_{i,0}), 1 (b_{i,1}), 2 (b_{i,2}).
      const std::size_t w = g - 2;
      t.rows.assign(3, std::vector<long long>(w, 0));
      t.rows[0][0] = 1;
      for (unsigned d = 2; d <= g - 1; ++d) {
        const long long e = ring_strand_value(g, d);
        if (e > 0) t.rows[1][d - 1] = e;
        if (e < 0) t.rows[2][d - 2] = -e;
      }
      t.kind = "paracanonical_ring";
      break;
    }
    case TableKind::torsion_module: {
      // Columns 0..g-3; row 0 = K_{i,1}, row 1 = K_{i,2}.
      const std::size_t w = g - 2;
      t.rows.assign(2, std::vector<long long>(w, 0));
      for (unsigned i = 0; i + 2 <= g && i < w; ++i) {
        const long long c = chi_diagonal(g, i);
        if (c > 0) t.rows[0][i] = c;
      }
      for (unsigned i = 0; i < w; ++i) {
        const long long c = chi_diagonal(g, i + 1);
        if (c < 0) t.rows[1][i] = -c;
      }
      if (is_exceptional(g, ell, k)) {
        t.rows[0][g / 2 - 1] += 1;
        t.rows[1][g / 2 - 2] += 1;
      }
      t.kind = "torsion_module";
      break;
    }
    case TableKind::canonical_twist: {
      // Columns 0..g-2; row 0 = K_{i,1}, row 1 = K_{i,2}.
      const std::size_t w = g - 1;
      t.rows.assign(2, std::vector<long long>(w, 0));
      for (unsigned i = 0; i < w; ++i) {
        const long long c = chi_diagonal_canonical(g, i);
        if (c > 0) t.rows[0][i] = c;
        const long long c2 = chi_diagonal_canonical(g, i + 1);
        if (c2 < 0) t.rows[1][i] = -c2;
      }
      t.kind = "canonical_twist";
      break;
    }
  }
  return t;
}

std::string render_table(const BettiTable& t) {
  const std::size_t w = t.width();
  const std::vector<long long> tot = t.totals();

  auto cell = [](long long v, bool total_row) -> std::string {
    if (v == 0 && !total_row) return ".";
    return std::to_string(v);
  };

  std::vector<std::size_t> colw(w, 0);
  for (std::size_t i = 0; i < w; ++i) {
    colw[i] = std::to_string(i).size();
    colw[i] = std::max(colw[i], cell(tot[i], true).size());
    for (std::size_t j = 0; j < t.rows.size(); ++j)
      colw[i] = std::max(colw[i], cell(t.rows[j][i], false).size());
  }

  constexpr std::size_t label_width = 7;  // fits " total:" and "     0:"
  auto pad_left = [](const std::string& s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
  };

  std::ostringstream out;
  out << std::string(label_width, ' ');
  for (std::size_t i = 0; i < w; ++i) out << ' ' << pad_left(std::to_string(i), colw[i]);
  out << '\n';
  out << pad_left("total:", label_width);
  for (std::size_t i = 0; i < w; ++i) out << ' ' << pad_left(cell(tot[i], true), colw[i]);
  out << '\n';
  for (std::size_t j = 0; j < t.rows.size(); ++j) {
    out << pad_left(std::to_string(j) + ":", label_width);
    for (std::size_t i = 0; i < w; ++i) out << ' ' << pad_left(cell(t.rows[j][i], false), colw[i]);
    out << '\n';
  }
  return out.str();
}

}  // namespace syzlab
