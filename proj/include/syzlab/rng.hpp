#ifndef SYZLAB_RNG_HPP
#define SYZLAB_RNG_HPP

#include <cstdint>

// Seeded randomness: the SplitMix64 recurrence, fixed here so that any run is
// reproducible from its 64-bit seed alone.
//
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)
//
// Residues mod p are taken as next() % p (the bias at p ~ 3*10^4 is
// irrelevant here; determinism is what matters).

namespace syzlab {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-ish residue in [0, m).
  std::uint32_t below(std::uint32_t m) { return static_cast<std::uint32_t>(next() % m); }

  // Nonzero residue in [1, m).
  std::uint32_t nonzero_below(std::uint32_t m) { return 1 + static_cast<std::uint32_t>(next() % (m - 1)); }

 private:
  std::uint64_t state_;
};

// Independent stream for (seed, index) pairs: one SplitMix64 step applied to
// the seed, with the index folded in first.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0xA0761D6478BD642Full * (index + 1)));
  return g.next();
}

}  // namespace syzlab

#endif
