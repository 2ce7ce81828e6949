#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmix/random.hpp"
#include "qmix/theorems.hpp"

namespace qmix {

/// Result of one randomized verification batch. Per-trial seeds are recorded
/// so any failure replays deterministically: trial t runs on seed base + t.
struct FuzzOutcome {
  std::string theorem;
  std::uint64_t base_seed = 0;
  int trials = 0;
  int passed = 0;
  std::vector<std::uint64_t> failing_seeds;

  bool all_passed() const { return passed == trials; }
};

/// M < d mixtures of random orthogonal maximally-mixed-marginal components
/// (rotated by random local unitaries) must all be detected.
inline FuzzOutcome fuzz_theorem1(int trials, std::uint64_t base_seed) {
  FuzzOutcome out;
  out.theorem = "1";
  out.base_seed = base_seed;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(t);
    Rng rng(seed);
    const int d = rng.uniform_int(3, 5);
    const int m = rng.uniform_int(2, d - 1);
    const int n = rng.uniform_int(2, 3);
    const MixtureSpec spec = MixtureSpec::make(
        random_weights(rng, m), random_orthogonal_family(rng, n, d, m, /*rotate=*/true));
    const TheoremVerdict v = check_theorem1(spec);
    if (v.hypotheses_hold && v.conclusion_observed) {
      ++out.passed;
    } else {
      out.failing_seeds.push_back(seed);
    }
  }
  return out;
}

/// M = d: the uniform orthogonal point must sit at purity 1/d (to 1e-12) with
/// no detection, and a 1e-3 weight perturbation must trigger detection with
/// at least 1e-6 of headroom.
inline FuzzOutcome fuzz_theorem2(int trials, std::uint64_t base_seed) {
  FuzzOutcome out;
  out.theorem = "2";
  out.base_seed = base_seed;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(t);
    Rng rng(seed);
    const int d = rng.uniform_int(2, 3);
    const int n = rng.uniform_int(2, 3);
    const std::vector<PureState> family = random_orthogonal_family(rng, n, d, d, /*rotate=*/true);

    const std::vector<double> uniform(static_cast<std::size_t>(d), 1.0 / d);
    const MixtureSpec at_floor = MixtureSpec::make(uniform, family);
    const TheoremVerdict flat = check_theorem2(at_floor);
    const double flat_purity = purity(build_mixture(at_floor));

    std::vector<double> perturbed = uniform;
    perturbed[0] += 1e-3;
    perturbed[1] -= 1e-3;
    const MixtureSpec off_floor = MixtureSpec::make(perturbed, family);
    const TheoremVerdict tilted = check_theorem2(off_floor);
    const double tilted_purity = purity(build_mixture(off_floor));

    const bool ok = !flat.hypotheses_hold && !flat.conclusion_observed &&
                    std::abs(flat_purity - 1.0 / d) <= 1e-12 && tilted.hypotheses_hold &&
                    tilted.conclusion_observed && tilted_purity > 1.0 / d + 1e-6;
    if (ok) {
      ++out.passed;
    } else {
      out.failing_seeds.push_back(seed);
    }
  }
  return out;
}

/// Soundness of the genuineness certification: whenever the hypotheses hold,
/// every bipartition must be detected. Components are drawn unrotated from
/// the phase-and-shift family so the (incomplete) separability certifier can
/// certify their one-drop reductions.
inline FuzzOutcome fuzz_theorem3(int trials, std::uint64_t base_seed) {
  FuzzOutcome out;
  out.theorem = "3";
  out.base_seed = base_seed;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(t);
    Rng rng(seed);
    const int d = rng.uniform_int(2, 3);
    const int n = rng.uniform_int(3, 4);
    const int m = rng.uniform_int(2, d * d > 4 ? 4 : d * d);
    MixtureSpec spec = MixtureSpec::make(random_weights(rng, m),
                                         random_orthogonal_family(rng, n, d, m, /*rotate=*/false));
    const TheoremVerdict v = check_theorem3(spec);
    // pairing contract: hypotheses_hold => conclusion_observed
    const bool ok = !v.hypotheses_hold || v.conclusion_observed;
    if (ok) {
      ++out.passed;
    } else {
      out.failing_seeds.push_back(seed);
    }
  }
  return out;
}

inline FuzzOutcome fuzz_theorem(int which, int trials, std::uint64_t base_seed) {
  switch (which) {
    case 1: return fuzz_theorem1(trials, base_seed);
    case 2: return fuzz_theorem2(trials, base_seed);
    case 3: return fuzz_theorem3(trials, base_seed);
    default: throw contract_error("fuzz_theorem: no theorem " + std::to_string(which));
  }
}

} // namespace qmix
