#ifndef SYZLAB_REPORT_HPP
#define SYZLAB_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "syzlab/artinian.hpp"
#include "syzlab/betti.hpp"
#include "syzlab/curve.hpp"
#include "syzlab/serialize.hpp"

// Verification runs: trial orchestration, verdicts, and the JSON/text reports
// emitted by the CLI.  Reports are byte-identical for identical seeds and
// flags; wall-clock timings live in one "timings" object that comparisons
// strip.
//
// Verdict policy: a vanishing prediction is confirmed by ONE clean trial
// (Betti numbers are semicontinuous, so a single clean random curve certifies
// the generic value); a non-vanishing outcome is reported only when ALL
// trials agree on it.  Exit codes: 0 = clean verification, 2 = extra syzygy
// observed (informational), 1 = usage or internal error.

namespace syzlab {

enum class Path { direct, artinian, both };

struct VerifyOptions {
  unsigned genus = 10;
  unsigned level = 3;
  unsigned k = 1;  // torsion-bundle command only
  std::optional<std::uint32_t> prime;
  std::uint64_t seed = 42;
  unsigned trials = 3;
  std::optional<Path> path;                // default chosen per command
  std::size_t max_entries = 400'000'000;   // CLI-level feasibility guard
  bool chi_check = false;                  // also compute K_{p-1,2} and test the Euler identity
};

struct TrialOutcome {
  std::uint64_t seed = 0;
  std::optional<std::size_t> direct_dim;    // crossing dimension, direct path
  std::optional<std::size_t> artinian_dim;  // crossing dimension, artinian path
  std::optional<std::size_t> dim_q2;        // K_{p-1,2} when chi_check is on
  std::optional<long long> chi;             // expected Euler value when chi_check is on
  std::optional<BettiTable> table;          // full table, direct ring path
  std::vector<std::size_t> syzygy_ranks;    // genus-8 extra syzygies
  bool clean = false;
};

struct RunReport {
  std::string command;
  std::string verdict;  // verified | extra_syzygy | inconclusive | error
  int exit_code = 1;
  bool consistent_with_paper = false;
  std::vector<TrialOutcome> trials;
  std::optional<BettiTable> expected;
  Json doc;         // full report, including a trailing "timings" object
  double wall_ms = 0;

  Json doc_without_timings() const;
  std::string text(bool quiet) const;
};

FieldParams field_for(unsigned level, std::optional<std::uint32_t> prime);

RunReport verify_prym_green(const VerifyOptions& opts);
RunReport verify_torsion_bundle(const VerifyOptions& opts);
RunReport verify_canonical(const VerifyOptions& opts);

// Full paracanonical ring table by the direct Koszul path (rows 0..2).
BettiTable computed_ring_table(const NodalRationalCurve& curve, const LineBundleData& l,
                               const KoszulLimits& limits);

struct ExperimentOptions {
  std::size_t samples = 20000;
  std::uint32_t prime = 10007;
  bool two_torsion = false;
  std::uint64_t seed = 42;
};

struct HitRecord {
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  std::size_t dim = 0;
  std::size_t rank = 0;
};

struct ExperimentReport {
  std::size_t samples = 0;
  std::size_t hits = 0;
  std::size_t rank6 = 0;
  std::size_t rank7 = 0;
  std::size_t anomalies = 0;  // samples where h^0 was not the generic 7
  std::vector<HitRecord> records;
  Json doc;
  double wall_ms = 0;

  Json doc_without_timings() const;
  std::string text() const;
};

// The genus-8 sampling experiment over the universal Jacobian: random degree
// 14 bundles (or the 2-torsion paracanonical bundle when two_torsion is set),
// hit = nonzero linear-syzygy space; ranks recorded per hit.  Samples run in
// parallel and are merged in index order.
ExperimentReport experiment_g8(const ExperimentOptions& opts);

}  // namespace syzlab

#endif
