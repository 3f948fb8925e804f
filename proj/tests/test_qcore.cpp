#include <doctest.h>

#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

#include "helpers.hpp"
#include "ssq/qcore.hpp"

using namespace ssq;

TEST_SUITE_BEGIN("qcore");

TEST_CASE("permutation sign via cycle decomposition") {
  CHECK(permutation_sign({0, 1, 2}) == 1);
  CHECK(permutation_sign({0, 2, 1}) == -1);
  CHECK(permutation_sign({2, 1, 3, 0}) == 1);
  CHECK(permutation_sign({1, 0}) == -1);
  // Sign is multiplicative under one extra transposition.
  Permutation p{3, 1, 4, 0, 2};
  int s = permutation_sign(p);
  std::swap(p[0], p[4]);
  CHECK(permutation_sign(p) == -s);

  CHECK_THROWS_AS(permutation_sign({0, 0, 1}), invalid_input_error);
  CHECK_THROWS_AS(permutation_sign({0, 3}), invalid_input_error);
}

TEST_CASE("pair singlets match their explicit expansions") {
  CHECK(ssqtest::max_amplitude_diff(make_pair_singlet(2),
                                    ssqtest::expected_pair2()) < 1e-12);
  CHECK(ssqtest::max_amplitude_diff(make_pair_singlet(3),
                                    ssqtest::expected_pair3()) < 1e-12);
  CHECK(ssqtest::max_amplitude_diff(make_pair_singlet(4),
                                    ssqtest::expected_pair4()) < 1e-12);
  CHECK_THROWS_AS(make_pair_singlet(1), invalid_input_error);
}

TEST_CASE("N-particle N-level singlets match their explicit expansions") {
  CHECK(ssqtest::max_amplitude_diff(make_nn_supersinglet(3),
                                    ssqtest::expected_nn3()) < 1e-12);
  CHECK(ssqtest::max_amplitude_diff(make_nn_supersinglet(4),
                                    ssqtest::expected_nn4()) < 1e-12);
  // N! nonzero amplitudes, all of magnitude 1/sqrt(N!).
  StateVector s5 = make_nn_supersinglet(5);
  int nonzero = 0;
  for (std::int64_t i = 0; i < s5.dim(); ++i) {
    double a = std::abs(s5.amplitudes[i]);
    if (a > 0) {
      ++nonzero;
      CHECK(a == doctest::Approx(1.0 / std::sqrt(120.0)).epsilon(1e-12));
    }
  }
  CHECK(nonzero == 120);
  CHECK_THROWS_AS(make_nn_supersinglet(1), invalid_input_error);
  CHECK_THROWS_AS(make_nn_supersinglet(8), resource_limit_error);
  CHECK_NOTHROW(make_nn_supersinglet(8, 8));  // cap is configurable
}

TEST_CASE("qubit supersinglets match their explicit expansions") {
  CHECK(ssqtest::max_amplitude_diff(make_qubit_supersinglet(4),
                                    ssqtest::expected_qubit4()) < 1e-12);
  CHECK(ssqtest::max_amplitude_diff(make_qubit_supersinglet(6),
                                    ssqtest::expected_qubit6()) < 1e-12);
  CHECK_THROWS_AS(make_qubit_supersinglet(3), invalid_input_error);
  CHECK_THROWS_AS(make_qubit_supersinglet(18), resource_limit_error);
}

TEST_CASE("constructor norms are 1 within 1e-12") {
  for (int d = 2; d <= 6; ++d) {
    CHECK(std::abs(make_pair_singlet(d).norm() - 1.0) < 1e-12);
  }
  for (int n = 2; n <= 6; ++n) {
    CHECK(std::abs(make_nn_supersinglet(n, 7).norm() - 1.0) < 1e-12);
  }
  for (int n = 2; n <= 12; n += 2) {
    CHECK(std::abs(make_qubit_supersinglet(n).norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("the three families coincide at N=2") {
  StateVector a = make_pair_singlet(2);
  StateVector b = make_nn_supersinglet(2);
  StateVector c = make_qubit_supersinglet(2);
  CHECK(ssqtest::max_amplitude_diff(a, b) == 0.0);
  CHECK(ssqtest::max_amplitude_diff(a, c) == 0.0);
}

TEST_CASE("site swaps negate the N-level singlet exactly") {
  for (int n : {3, 4}) {
    StateVector psi = make_nn_supersinglet(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Permutation perm(n);
        for (int k = 0; k < n; ++k) perm[k] = k;
        std::swap(perm[i], perm[j]);
        StateVector swapped = permute_sites(psi, perm);
        CHECK((swapped.amplitudes + psi.amplitudes).cwiseAbs().maxCoeff() ==
              0.0);
      }
    }
  }
}

TEST_CASE("spin matrices: conventions and algebra") {
  SpinMatrices s2 = spin_matrices(2);
  CHECK((s2.sz - (Mat(2, 2) << 0.5, 0, 0, -0.5).finished())
            .cwiseAbs()
            .maxCoeff() < 1e-15);
  CHECK((s2.sx - (Mat(2, 2) << 0, 0.5, 0.5, 0).finished())
            .cwiseAbs()
            .maxCoeff() < 1e-15);
  Mat sy_expect(2, 2);
  sy_expect << 0, cplx(0, -0.5), cplx(0, 0.5), 0;
  CHECK((s2.sy - sy_expect).cwiseAbs().maxCoeff() < 1e-15);

  SpinMatrices s3 = spin_matrices(3);
  CHECK(s3.sz(0, 0).real() == doctest::Approx(1.0));
  CHECK(s3.sz(1, 1).real() == doctest::Approx(0.0));
  CHECK(s3.sz(2, 2).real() == doctest::Approx(-1.0));

  for (int d = 2; d <= 6; ++d) {
    SpinMatrices s = spin_matrices(d);
    CHECK(is_hermitian(s.sx));
    CHECK(is_hermitian(s.sy));
    CHECK(is_hermitian(s.sz));
    Mat comm = s.sx * s.sy - s.sy * s.sx - cplx(0, 1) * s.sz;
    CHECK(comm.cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("total spin annihilates all three families") {
  auto total_spin_norms = [](const StateVector& psi) {
    SpinMatrices s = spin_matrices(psi.local_dim);
    const Mat* comps[3] = {&s.sx, &s.sy, &s.sz};
    // || sum_k Sz_k psi ||, and || S_total^2 psi || summed over axes.
    StateVector sz_sum(psi.num_sites, psi.local_dim);
    double s2_norm2 = 0.0;
    StateVector s2_acc(psi.num_sites, psi.local_dim);
    for (int axis = 0; axis < 3; ++axis) {
      StateVector first(psi.num_sites, psi.local_dim);
      for (int k = 0; k < psi.num_sites; ++k) {
        first.amplitudes += apply_site(psi, *comps[axis], k).amplitudes;
      }
      if (axis == 2) sz_sum = first;
      StateVector second(psi.num_sites, psi.local_dim);
      for (int k = 0; k < psi.num_sites; ++k) {
        second.amplitudes += apply_site(first, *comps[axis], k).amplitudes;
      }
      s2_acc.amplitudes += second.amplitudes;
    }
    s2_norm2 = s2_acc.norm();
    return std::pair<double, double>(sz_sum.norm(), s2_norm2);
  };

  for (const StateVector& psi :
       {make_pair_singlet(2), make_pair_singlet(3), make_pair_singlet(4),
        make_nn_supersinglet(3), make_nn_supersinglet(4),
        make_qubit_supersinglet(4), make_qubit_supersinglet(6)}) {
    auto [sz_norm, s2_norm] = total_spin_norms(psi);
    CHECK(sz_norm < 1e-10);
    CHECK(s2_norm < 1e-9);
  }
}

TEST_CASE("rotation operators") {
  CHECK((rotation_operator(3, Eigen::Vector3d::UnitX(), 0.0) -
         Mat::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() < 1e-14);

  Mat rz = rotation_operator(2, Eigen::Vector3d::UnitZ(), M_PI);
  CHECK(std::abs(rz(0, 0) - cplx(0, -1)) < 1e-12);
  CHECK(std::abs(rz(1, 1) - cplx(0, 1)) < 1e-12);
  CHECK(std::abs(rz(0, 1)) < 1e-12);

  // Integer spin: a 2 pi rotation is the identity.
  Eigen::Vector3d axis(1.0, -2.0, 0.5);
  axis.normalize();
  Mat full_turn = rotation_operator(3, axis, 2.0 * M_PI);
  CHECK((full_turn - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-9);

  SeededRng rng(11);
  for (int d = 2; d <= 5; ++d) {
    Mat u = random_rotation(d, rng);
    CHECK(is_unitary(u, 1e-10));
    CHECK(std::abs(std::abs(u.determinant()) - 1.0) < 1e-10);
  }
  CHECK_THROWS_AS(rotation_operator(2, Eigen::Vector3d(1, 1, 0), 0.3),
                  invalid_input_error);
}

TEST_CASE("apply_collective agrees with the materialized Kronecker product") {
  SeededRng rng(5);
  StateVector psi = make_nn_supersinglet(3);
  Mat u = haar_unitary(3, rng);
  Mat full = Eigen::kroneckerProduct(u, Eigen::kroneckerProduct(u, u)).eval();
  Vec direct = full * psi.amplitudes;
  StateVector site_by_site = apply_collective(psi, u);
  CHECK((direct - site_by_site.amplitudes).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("collective rotations leave the N-level singlet strictly fixed") {
  // Rotations have determinant 1, so not even a phase appears.
  SeededRng rng(7);
  StateVector psi = make_nn_supersinglet(3);
  for (int t = 0; t < 10; ++t) {
    StateVector rotated = apply_collective(psi, random_rotation(3, rng));
    CHECK((rotated.amplitudes - psi.amplitudes).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("collective unitaries contribute a determinant phase") {
  SeededRng rng(13);
  // N-level family: U^(x)N |S> = det(U) |S>.
  StateVector nn = make_nn_supersinglet(3);
  for (int t = 0; t < 5; ++t) {
    Mat u = haar_unitary(3, rng);
    StateVector moved = apply_collective(nn, u);
    Vec expected = u.determinant() * nn.amplitudes;
    CHECK((moved.amplitudes - expected).cwiseAbs().maxCoeff() < 1e-10);
  }
  // Qubit family: the phase is det(U)^(N/2).
  StateVector q4 = make_qubit_supersinglet(4);
  for (int t = 0; t < 5; ++t) {
    Mat u = haar_unitary(2, rng);
    StateVector moved = apply_collective(q4, u);
    cplx det = u.determinant();
    Vec expected = det * det * q4.amplitudes;
    CHECK((moved.amplitudes - expected).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("invariance deviation: positives and negative controls") {
  SeededRng rng(2026);
  StateVector singlet = make_pair_singlet(2);
  for (int t = 0; t < 20; ++t) {
    CHECK(invariance_deviation(singlet, haar_unitary(2, rng)) < 1e-9);
  }
  for (int n = 2; n <= 5; ++n) {
    StateVector psi = make_nn_supersinglet(n);
    for (int t = 0; t < 20; ++t) {
      CHECK(invariance_deviation(psi, haar_unitary(n, rng)) < 1e-9);
    }
  }
  // Pair singlets with d >= 3 are rotation-invariant but not invariant
  // under generic SU(d).
  StateVector pair3 = make_pair_singlet(3);
  for (int t = 0; t < 10; ++t) {
    CHECK(invariance_deviation(pair3, random_rotation(3, rng)) < 1e-9);
  }
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    worst = std::max(worst, invariance_deviation(pair3, haar_unitary(3, rng)));
  }
  CHECK(worst > 0.1);

  StateVector product(2, 2);
  product.amplitudes[0] = 1.0;  // |00>
  Mat rx = rotation_operator(2, Eigen::Vector3d::UnitX(), M_PI / 2.0);
  CHECK(invariance_deviation(product, rx) > 0.1);
}

TEST_CASE("invariance deviation equals the overlap formula where it is stable") {
  SeededRng rng(31);
  // Perturb so the overlap sits well below 1 and both routes are accurate.
  StateVector psi = make_nn_supersinglet(3);
  for (std::int64_t i = 0; i < psi.dim(); ++i) {
    psi.amplitudes[i] += 0.02 * cplx(rng.gaussian(), rng.gaussian());
  }
  psi.normalize();
  Mat u = haar_unitary(3, rng);
  double direct = invariance_deviation(psi, u);
  double via_overlap =
      std::sqrt(std::max(0.0, 2.0 - 2.0 * std::abs(collective_overlap(psi, u))));
  CHECK(direct == doctest::Approx(via_overlap).epsilon(1e-7));
}

TEST_CASE("state vector plumbing") {
  StateVector psi = make_nn_supersinglet(3);
  std::vector<int> ket{0, 1, 2};
  CHECK(psi.at(ket).real() == doctest::Approx(1.0 / std::sqrt(6.0)));
  CHECK(digits_to_index(std::vector<int>{2, 1, 0}, 3) == 21);
  CHECK(index_to_digits(21, 3, 3) == std::vector<int>{2, 1, 0});
  CHECK(fidelity(psi, psi) == doctest::Approx(1.0));
  CHECK(approx_equal(psi, psi));
  // Strict mode sees a global phase, fidelity mode does not.
  StateVector phased = psi;
  phased.amplitudes *= std::polar(1.0, 0.7);
  CHECK(approx_equal(psi, phased));
  CHECK_FALSE(approx_equal(psi, phased, 1e-9, false));
  CHECK_THROWS_AS((void)psi.at(std::vector<int>{0, 1}), invalid_input_error);
  CHECK_THROWS_AS(apply_site(psi, Mat::Identity(2, 2), 0), invalid_input_error);
  CHECK_THROWS_AS(apply_site(psi, Mat::Identity(3, 3), 5), invalid_input_error);
}

TEST_SUITE_END();
