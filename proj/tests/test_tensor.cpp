#include <catch2/catch_amalgamated.hpp>

#include <qmix/qmix.hpp>

#include "oracles.hpp"

using namespace qmix;

namespace {

PureState basis_state(const CompositeShape& shape, long long index) {
  Vector v = Vector::Zero(shape.dim());
  v(index) = 1.0;
  return PureState::make(shape, std::move(v));
}

} // namespace

TEST_CASE("shapes validate and index", "[tensor]") {
  const CompositeShape s = CompositeShape::make(3, 2);
  CHECK(s.dim() == 8);
  CHECK(s.stride(1) == 4);
  CHECK(s.stride(3) == 1);
  CHECK(s.digit(0b110, 1) == 1);
  CHECK(s.digit(0b110, 3) == 0);
  CHECK_THROWS_AS(CompositeShape::make(0, 2), contract_error);
  CHECK_THROWS_AS(CompositeShape::make(2, 1), contract_error);
  CHECK_THROWS_AS(CompositeShape::make(13, 2), capacity_error);
  CHECK_THROWS_AS(SubsystemSet::of({1, 1}), shape_error);
  CHECK_THROWS_AS(SubsystemSet::of({0}), shape_error);
  CHECK(SubsystemSet::of({3, 1}).labels() == std::vector<int>{1, 3});
  CHECK(SubsystemSet::of({2}).complement(s).labels() == std::vector<int>{1, 3});
}

TEST_CASE("state invariants are enforced", "[tensor]") {
  const CompositeShape two_qubits = CompositeShape::make(2, 2);
  Vector bad = Vector::Ones(4);
  CHECK_THROWS_AS(PureState::make(two_qubits, bad), contract_error);
  CHECK_THROWS_AS(PureState::make(two_qubits, Vector::Zero(3)), shape_error);

  Matrix not_herm = Matrix::Zero(4, 4);
  not_herm(0, 1) = 1.0;
  not_herm.diagonal().setConstant(0.25);
  CHECK_THROWS_AS(DensityMatrix::make(two_qubits, not_herm), contract_error);

  Matrix bad_trace = Matrix::Identity(4, 4);
  CHECK_THROWS_AS(DensityMatrix::make(two_qubits, bad_trace), contract_error);

  Matrix indefinite = Matrix::Zero(4, 4);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix::make(two_qubits, indefinite), positivity_error);
  CHECK_NOTHROW(DensityMatrix::make_indefinite(two_qubits, indefinite));
}

TEST_CASE("tensor product bookkeeping", "[tensor]") {
  const CompositeShape one_qubit = CompositeShape::make(1, 2);
  const DensityMatrix half = DensityMatrix::maximally_mixed(one_qubit);
  const DensityMatrix quarter = tensor_product(half, half);
  CHECK(quarter.shape().subsystems() == 2);
  CHECK((quarter.entries() - Matrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() == 0.0);

  const PureState zero = basis_state(one_qubit, 0);
  const PureState one = basis_state(one_qubit, 1);
  const PureState zero_one = tensor_product(zero, one);
  CHECK(std::abs(zero_one.amplitudes()(1) - 1.0) < 1e-15);
  CHECK(zero_one.amplitudes().cwiseAbs().sum() == 1.0);

  const PureState qutrit = basis_state(CompositeShape::make(1, 3), 0);
  CHECK_THROWS_AS(tensor_product(zero, qutrit), shape_error);
}

TEST_CASE("two bell pairs look maximally mixed locally", "[tensor]") {
  const PureState bb = tensor_product(bell_state(BellKind::PsiPlus), bell_state(BellKind::PsiPlus));
  const DensityMatrix rho = bb.projector();
  CHECK(purity(rho) == Catch::Approx(1.0).margin(1e-12));
  for (int i = 1; i <= 4; ++i) {
    const DensityMatrix marginal = partial_trace(rho, SubsystemSet::single(i));
    CHECK((marginal.entries() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("partial trace basics", "[tensor]") {
  const DensityMatrix bell = bell_state(BellKind::PsiPlus).projector();
  const DensityMatrix marginal = partial_trace(bell, SubsystemSet::single(1));
  CHECK((marginal.entries() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(partial_trace(bell, SubsystemSet::of({})), contract_error);
  CHECK_THROWS_AS(partial_trace(bell, SubsystemSet::of({3})), shape_error);

  // product factorization: tracing away B recovers A
  Rng rng(11);
  const CompositeShape qutrit_pair = CompositeShape::make(2, 3);
  const DensityMatrix a = random_density(rng, qutrit_pair, 2);
  const DensityMatrix b = random_density(rng, qutrit_pair, 3);
  const DensityMatrix ab = tensor_product(a, b);
  const DensityMatrix recovered = partial_trace(ab, SubsystemSet::of({1, 2}));
  CHECK((recovered.entries() - a.entries()).cwiseAbs().maxCoeff() < tol::herm);

  // half-filled dicke state's one-qubit marginal
  const DensityMatrix dm = partial_trace(dicke_state(4, 2).projector(), SubsystemSet::single(1));
  CHECK((dm.entries() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace agrees with the digit-decoding oracle", "[tensor]") {
  Rng rng(23);
  for (int n = 2; n <= 4; ++n) {
    const CompositeShape shape = CompositeShape::make(n, 3);
    const DensityMatrix rho = random_density(rng, shape, 3);
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<int> keep;
      for (int k = 1; k <= n; ++k) {
        if (mask & (1u << (k - 1))) keep.push_back(k);
      }
      const DensityMatrix ours = partial_trace(rho, SubsystemSet::of(keep));
      const Matrix expected =
          oracle::partial_trace(rho.entries(), n, 3, keep);
      CHECK((ours.entries() - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("partial trace chain rule on nested subsets", "[tensor]") {
  Rng rng(37);
  for (int n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 3; ++d) {
      const CompositeShape shape = CompositeShape::make(n, d);
      const DensityMatrix rho = random_density(rng, shape, 2);
      for (unsigned smask = 1; smask < (1u << n); ++smask) {
        std::vector<int> s;
        for (int k = 1; k <= n; ++k) {
          if (smask & (1u << (k - 1))) s.push_back(k);
        }
        const DensityMatrix rho_s = partial_trace(rho, SubsystemSet::of(s));
        CHECK(std::abs(rho_s.entries().trace().real() - 1.0) < tol::norm);
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
          CHECK((nested.entries() - direct.entries()).cwiseAbs().maxCoeff() < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("separable states never get purer under partial trace", "[tensor]") {
  Rng rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.uniform_int(2, 3);
    const int d = rng.uniform_int(2, 3);
    const DensityMatrix rho =
        random_separable_density(rng, CompositeShape::make(n, d), rng.uniform_int(2, 4));
    const double whole = purity(rho);
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<int> keep;
      for (int k = 1; k <= n; ++k) {
        if (mask & (1u << (k - 1))) keep.push_back(k);
      }
      CHECK(purity(partial_trace(rho, SubsystemSet::of(keep))) >= whole - 1e-10);
    }
  }
}

TEST_CASE("partial transpose is an entry permutation", "[tensor]") {
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(CompositeShape::make(2, 3));
  const DensityMatrix pt = partial_transpose(mixed, SubsystemSet::single(2));
  CHECK((pt.entries() - mixed.entries()).cwiseAbs().maxCoeff() == 0.0);

  Rng rng(5);
  const DensityMatrix rho = random_density(rng, CompositeShape::make(3, 2), 3);
  for (int part_label = 1; part_label <= 3; ++part_label) {
    const SubsystemSet part = SubsystemSet::single(part_label);
    const DensityMatrix twice = partial_transpose(partial_transpose(rho, part), part);
    CHECK((twice.entries() - rho.entries()).cwiseAbs().maxCoeff() == 0.0);
  }
  // transposing everything is the global transpose
  const DensityMatrix all = partial_transpose(rho, SubsystemSet::range(1, 3));
  CHECK((all.entries() - rho.entries().transpose()).cwiseAbs().maxCoeff() == 0.0);

  // site-by-site composition equals the multi-site transpose
  const DensityMatrix two_step =
      partial_transpose(partial_transpose(rho, SubsystemSet::single(1)), SubsystemSet::single(3));
  const DensityMatrix one_step = partial_transpose(rho, SubsystemSet::of({1, 3}));
  CHECK((two_step.entries() - one_step.entries()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("bell partial transpose has eigenvalue -1/2", "[tensor]") {
  const DensityMatrix pt =
      partial_transpose(bell_state(BellKind::PsiPlus).projector(), SubsystemSet::single(2));
  const Eigen::VectorXd eigs = hermitian_spectrum(pt);
  CHECK(eigs(eigs.size() - 1) == Catch::Approx(-0.5).margin(1e-12));
  // the reported eigenvalue really is a root of the characteristic polynomial
  CHECK(std::abs(oracle::char_poly_at(pt.entries(), eigs(eigs.size() - 1))) < 1e-12);
}

TEST_CASE("stormer family is PPT exactly up to alpha = 4", "[tensor]") {
  for (double alpha = 2.0; alpha <= 5.0 + 1e-9; alpha += 0.25) {
    const DensityMatrix sigma = stormer_state(alpha);
    const Eigen::VectorXd eigs =
        hermitian_spectrum(partial_transpose(sigma, SubsystemSet::single(2)));
    const bool ppt = eigs(eigs.size() - 1) >= -tol::psd;
    CHECK(ppt == (alpha <= 4.0 + 1e-9));
  }
}

TEST_CASE("purity endpoints and the worked mixture", "[tensor]") {
  const DensityMatrix mm = DensityMatrix::maximally_mixed(CompositeShape::make(2, 2));
  CHECK(purity(mm) == Catch::Approx(0.25).margin(1e-15));
  CHECK(purity(ghz_state(3, 2).projector()) == Catch::Approx(1.0).margin(1e-12));

  const MixtureSpec spec = MixtureSpec::make(
      {0.75, 0.25}, {ghz_state(4, 2, GhzSign::Plus), ghz_state(4, 2, GhzSign::Minus)});
  CHECK(purity(build_mixture(spec)) == Catch::Approx(0.625).margin(1e-12));
}

TEST_CASE("hermitian spectra", "[tensor]") {
  const Eigen::VectorXd half = hermitian_spectrum(DensityMatrix::maximally_mixed(CompositeShape::make(1, 2)));
  CHECK(half(0) == Catch::Approx(0.5).margin(1e-15));
  CHECK(half(1) == Catch::Approx(0.5).margin(1e-15));

  const Eigen::VectorXd pure = hermitian_spectrum(basis_state(CompositeShape::make(1, 2), 0).projector());
  CHECK(pure(0) == Catch::Approx(1.0).margin(1e-15));
  CHECK(pure(1) == Catch::Approx(0.0).margin(1e-15));

  // descending order and trace recovery on a random state
  Rng rng(7);
  const DensityMatrix rho = random_density(rng, CompositeShape::make(2, 3), 4);
  const Eigen::VectorXd eigs = hermitian_spectrum(rho);
  for (Eigen::Index i = 1; i < eigs.size(); ++i) CHECK(eigs(i - 1) >= eigs(i));
  CHECK(eigs.sum() == Catch::Approx(1.0).margin(tol::norm));
}

TEST_CASE("stormer spectrum at alpha = 5 against the characteristic polynomial", "[tensor]") {
  const DensityMatrix sigma = stormer_state(5.0);
  const Eigen::VectorXd eigs = hermitian_spectrum(sigma);
  // diagonal-block structure gives 2/7, then 5/21 three times, then zeros
  std::vector<double> expected{2.0 / 7.0, 5.0 / 21.0, 5.0 / 21.0, 5.0 / 21.0, 0, 0, 0, 0, 0};
  REQUIRE(eigs.size() == 9);
  for (Eigen::Index i = 0; i < 9; ++i) {
    CHECK(eigs(i) == Catch::Approx(expected[static_cast<std::size_t>(i)]).margin(1e-12));
    CHECK(std::abs(oracle::char_poly_at(sigma.entries(), eigs(i))) < 1e-12);
  }
}

TEST_CASE("entropies", "[tensor]") {
  CHECK(von_neumann_entropy(ghz_state(2, 2).projector()) == Catch::Approx(0.0).margin(1e-10));
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(CompositeShape::make(1, 2))) ==
        Catch::Approx(1.0).margin(1e-12));

  // orthogonal two-term mixture has the two-point spectrum (3/4, 1/4)
  const MixtureSpec spec = MixtureSpec::make(
      {0.75, 0.25}, {ghz_state(4, 2, GhzSign::Plus), ghz_state(4, 2, GhzSign::Minus)});
  const double expected = -(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25));
  CHECK(von_neumann_entropy(build_mixture(spec)) == Catch::Approx(expected).margin(1e-10));

  CHECK(renyi2_entropy(ghz_state(2, 2).projector()) == Catch::Approx(0.0).margin(1e-10));
  CHECK(renyi2_entropy(DensityMatrix::maximally_mixed(CompositeShape::make(1, 2))) ==
        Catch::Approx(0.5).margin(1e-12));

  // strictly monotone decreasing in purity
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const CompositeShape shape = CompositeShape::make(rng.uniform_int(1, 3), rng.uniform_int(2, 3));
    const DensityMatrix a = random_density(rng, shape, rng.uniform_int(1, 4));
    const DensityMatrix b = random_density(rng, shape, rng.uniform_int(1, 4));
    if (purity(a) > purity(b) + 1e-12) {
      CHECK(renyi2_entropy(a) < renyi2_entropy(b));
    } else if (purity(b) > purity(a) + 1e-12) {
      CHECK(renyi2_entropy(b) < renyi2_entropy(a));
    }
  }
}

TEST_CASE("overlaps", "[tensor]") {
  const PureState psi = bell_state(BellKind::PsiPlus);
  CHECK(std::abs(overlap(psi, psi) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(overlap(psi, bell_state(BellKind::PhiPlus))) < 1e-15);
  CHECK(std::abs(overlap(ghz_state(4, 2, GhzSign::Plus), ghz_state(4, 2, GhzSign::Minus))) < 1e-15);
  CHECK_THROWS_AS(overlap(psi, ghz_state(3, 2)), shape_error);
}
