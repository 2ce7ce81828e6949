// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned in the check itself.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <qmix/qmix.hpp>

using namespace qmix;

namespace {

int failures = 0;

void criterion(int id, const std::string& what, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s - %s\n", ok ? "PASS" : "FAIL", id, what.c_str(),
              detail.c_str());
  if (!ok) ++failures;
}

void note(const std::string& text) { std::printf("       note: %s\n", text.c_str()); }

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

DensityMatrix bell_mix(const std::vector<double>& w) {
  const BellKind kinds[4] = {BellKind::PsiPlus, BellKind::PsiMinus, BellKind::PhiPlus,
                             BellKind::PhiMinus};
  Matrix m = Matrix::Zero(4, 4);
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Vector a = bell_state(kinds[k]).amplitudes();
    m += w[k] * (a * a.adjoint());
  }
  return DensityMatrix::make(CompositeShape::make(2, 2), std::move(m));
}

void c1_stormer_detection_boundary() {
  const auto start = std::chrono::steady_clock::now();
  const auto [left, right] = stormer_detection_boundaries();
  const double elapsed = ms_since(start);
  const bool ok = std::abs(left - (-1.0)) <= 1e-9 && std::abs(right - 6.0) <= 1e-9 &&
                  elapsed < 1000.0;
  criterion(1, "stormer purity-detection boundary",
            ok, fmt("roots %.12f and %.12f (tol 1e-9), %.1f ms (< 1 s)", left, right, elapsed));
}

void c2_stormer_ppt_regimes() {
  const double crossing = stormer_ppt_crossing(1e-8);
  const bool holds_below = ppt_test(stormer_state(3.999), SubsystemSet::single(2)).holds;
  const bool fails_above = !ppt_test(stormer_state(4.001), SubsystemSet::single(2)).holds;
  const bool ok = std::abs(crossing - 4.0) <= 1e-6 && holds_below && fails_above;
  criterion(2, "stormer ppt sign change",
            ok, fmt("crossing at %.9f (tol 1e-6), ppt@3.999=%s, ppt@4.001=%s", crossing,
                    holds_below ? "holds" : "fails", fails_above ? "fails" : "holds"));
  const bool inconclusive =
      separability_certifier(stormer_state(2.5)).value == SeparabilityStatus::Inconclusive;
  criterion(2, "separability on [2,3] honestly left open", inconclusive,
            inconclusive ? "certifier reports inconclusive (known limitation, not a failure)"
                         : "certifier overclaimed");
}

void c3_worked_mixtures() {
  const MixtureSpec spec_a = MixtureSpec::make(
      {0.75, 0.25}, {ghz_state(4, 2, GhzSign::Plus), ghz_state(4, 2, GhzSign::Minus)});
  const PurityReport pa = purity_criterion(build_mixture(spec_a));
  bool ok_a = std::abs(pa.whole_purity - 0.625) <= 1e-12;
  for (double p : pa.marginal_purities) ok_a = ok_a && std::abs(p - 0.5) <= 1e-12;
  const TheoremVerdict va = check_theorem3(spec_a);
  ok_a = ok_a && va.affirmed();
  criterion(3, "3:1 ghz mixture is genuinely entangled",
            ok_a, fmt("purity %.15f, marginals 0.5 (tol 1e-12), genuineness %s", pa.whole_purity,
                      va.affirmed() ? "certified" : "NOT certified"));

  const MixtureSpec spec_b =
      MixtureSpec::make({0.75, 0.25}, {ghz_state(4, 2, GhzSign::Plus), dicke_state(4, 2)});
  const PurityReport pb = purity_criterion(build_mixture(spec_b));
  bool ok_b = std::abs(pb.whole_purity - 0.625) <= 1e-12;
  for (double p : pb.marginal_purities) ok_b = ok_b && std::abs(p - 0.5) <= 1e-12;
  const bool membership_no = one_drop_separability(dicke_state(4, 2)) == Membership::No;
  const TheoremVerdict vb = check_theorem3(spec_b);
  const bool withheld = !(vb.hypotheses_decidable && vb.hypotheses_hold);
  ok_b = ok_b && membership_no && withheld;
  criterion(3, "ghz/dicke mixture matches purities but genuineness is withheld",
            ok_b, fmt("purity %.15f, dicke one-drop separable: %s, claim withheld: %s",
                      pb.whole_purity, membership_no ? "no" : "unexpected",
                      withheld ? "yes" : "NO"));
}

void c4_two_bell_concurrence() {
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double lambda = 0.05 * i;
    const double c = wootters_concurrence(bell_mix({lambda, 1.0 - lambda}));
    worst = std::max(worst, std::abs(c - std::abs(2.0 * lambda - 1.0)));
  }
  criterion(4, "two-bell mixture concurrence equals |2 lambda - 1|",
            worst <= 1e-10, fmt("max deviation %.3e over lambda = 0, 0.05, ..., 1 (tol 1e-10)", worst));
}

void c5_four_bell_concurrence() {
  const double uniform = wootters_concurrence(bell_mix({0.25, 0.25, 0.25, 0.25}));
  bool ok = uniform <= 1e-12;
  double worst = 0.0;
  Rng rng(2024);
  bool saw_nonunit = false;
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<double> w = random_weights(rng, 4);
    double wmax = 0.0;
    for (double x : w) wmax = std::max(wmax, x);
    const double c = wootters_concurrence(bell_mix(w));
    worst = std::max(worst, std::abs(c - std::max(0.0, 2.0 * wmax - 1.0)));
    if (std::abs(c - 1.0) > 1e-6) saw_nonunit = true;
  }
  ok = ok && worst <= 1e-9 && saw_nonunit;
  criterion(5, "four-bell mixture concurrence",
            ok, fmt("uniform C = %.3e (tol 1e-12), max deviation from max(0, 2 max w - 1): %.3e",
                    uniform, worst));
  note("generic unequal-weight four-bell mixtures do NOT have concurrence 1; the "
       "closed form max(0, 2 max(weights) - 1) is what the spin-flip spectrum gives, "
       "and that is the value reported everywhere here (expected discrepancy with a "
       "sometimes-quoted claim of 1; documented, not encoded)");
}

void c6_theorem1_fuzz() {
  const auto start = std::chrono::steady_clock::now();
  const FuzzOutcome out = fuzz_theorem1(200, 90210);
  const double elapsed = ms_since(start);
  const bool ok = out.trials == 200 && out.all_passed() && elapsed < 30000.0;
  criterion(6, "theorem 1 fuzz: 200 random specs with M < d <= 5, N <= 3",
            ok, fmt("%d/%d detected, %.0f ms (< 30 s)", out.passed, out.trials, elapsed));
}

void c7_theorem2_sharpness() {
  const FuzzOutcome out = fuzz_theorem2(60, 1618);
  criterion(7, "theorem 2 boundary sharpness",
            out.all_passed(),
            fmt("%d/%d trials: uniform orthogonal purity = 1/d (tol 1e-12) undetected, "
                "1e-3 weight shift detected with > 1e-6 headroom",
                out.passed, out.trials));
}

void c8_dicke_checks() {
  double c4 = 0.0, c6 = 0.0;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      c4 = std::max(c4, std::abs(pairwise_concurrence(dicke_state(4, 2).projector(), i, j) -
                                 1.0 / 3.0));
    }
  }
  c6 = std::abs(pairwise_concurrence(dicke_state(6, 3).projector(), 1, 2) - 0.2);
  const bool conc_ok = c4 <= 1e-9 && c6 <= 1e-9;
  criterion(8, "half-filled dicke pairwise concurrence 1/(N-1)",
            conc_ok, fmt("N=4 deviation %.3e, N=6 deviation %.3e (tol 1e-9)", c4, c6));

  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (int m = 1; m < n; ++m) {
      const DensityMatrix closed = dicke_marginal(n, m);
      const DensityMatrix traced =
          partial_trace(dicke_state(n, m).projector(), SubsystemSet::single(1));
      worst = std::max(worst, (closed.entries() - traced.entries()).cwiseAbs().maxCoeff());
    }
  }
  criterion(8, "dicke marginal closed form matches the partial trace",
            worst <= 1e-12, fmt("max entrywise deviation %.3e over all 1 <= m < N <= 8 (tol 1e-12)", worst));
}

void c9_biseparable_control() {
  const DensityMatrix rho =
      tensor_product(bell_state(BellKind::PsiPlus), bell_state(BellKind::PsiPlus)).projector();
  const PurityReport pr = purity_criterion(rho);
  const BipartitionReport scan = bipartition_scan(rho);
  bool product_cut_found = false;
  for (const BipartitionEntry& e : scan.partitions) {
    if (e.subset == std::vector<int>{1, 2} && !e.entangled) product_cut_found = true;
  }
  const bool withheld = !detect(rho).genuine_indicated;
  const bool ok = pr.detected && pr.witnesses.size() == 4 && product_cut_found &&
                  !scan.all_entangled && withheld;
  criterion(9, "two bell pairs: detected everywhere, genuineness withheld",
            ok, fmt("witnesses %zu/4, product cut found: %s, genuineness withheld: %s",
                    pr.witnesses.size(), product_cut_found ? "yes" : "NO",
                    withheld ? "yes" : "NO"));
}

void c10_oracle_cross_validation() {
  Rng rng(4096);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = rng.uniform_int(1, 3);
    const int d = rng.uniform_int(2, 4);
    const CompositeShape shape = CompositeShape::make(n, d);
    const int m = rng.uniform_int(2, 4);
    std::vector<PureState> states;
    for (int k = 0; k < m; ++k) {
      states.push_back(PureState::make(shape, random_ket(rng, shape.dim())));
    }
    const MixtureSpec spec = MixtureSpec::make(random_weights(rng, m), std::move(states));
    worst = std::max(worst, std::abs(mixture_purity(spec) - purity(build_mixture(spec))));
  }
  criterion(10, "gram-route and state-route purities agree on 1000 random specs",
            worst <= 1e-10, fmt("max deviation %.3e (tol 1e-10)", worst));

  double chain_worst = 0.0;
  for (int n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 3; ++d) {
      const DensityMatrix rho = random_density(rng, CompositeShape::make(n, d), 3);
      for (unsigned smask = 1; smask < (1u << n); ++smask) {
        std::vector<int> s;
        for (int k = 1; k <= n; ++k) {
          if (smask & (1u << (k - 1))) s.push_back(k);
        }
        const DensityMatrix rho_s = partial_trace(rho, SubsystemSet::of(s));
        for (unsigned tmask = 1; tmask < (1u << s.size()); ++tmask) {
          std::vector<int> t, relabeled;
          for (std::size_t k = 0; k < s.size(); ++k) {
            if (tmask & (1u << k)) {
              t.push_back(static_cast<int>(k + 1));
              relabeled.push_back(s[k]);
            }
          }
          const DensityMatrix nested = partial_trace(rho_s, SubsystemSet::of(t));
          const DensityMatrix direct = partial_trace(rho, SubsystemSet::of(relabeled));
          chain_worst = std::max(
              chain_worst, (nested.entries() - direct.entries()).cwiseAbs().maxCoeff());
        }
      }
    }
  }
  criterion(10, "partial-trace chain rule on all nested subsets, N <= 4, d <= 3",
            chain_worst <= 1e-12, fmt("max entrywise deviation %.3e (tol 1e-12)", chain_worst));
}

} // namespace

int main() {
  c1_stormer_detection_boundary();
  c2_stormer_ppt_regimes();
  c3_worked_mixtures();
  c4_two_bell_concurrence();
  c5_four_bell_concurrence();
  c6_theorem1_fuzz();
  c7_theorem2_sharpness();
  c8_dicke_checks();
  c9_biseparable_control();
  c10_oracle_cross_validation();

  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion check(s) FAILED\n", failures);
  return 1;
}
