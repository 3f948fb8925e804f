#pragma once

#include <array>
#include <vector>

#include "ssq/measurement.hpp"
#include "ssq/qcore.hpp"

namespace ssq {

// Dichotomic spin observable along a direction: spin outcomes m = s, s-1, ...
// map alternately to +1/-1, i.e. R diag((-1)^i) R^dagger in the local basis.
struct PeresObservable {
  Direction direction;
  int local_dim = 2;
};

Mat peres_operator(int d, const Direction& dir);
Mat peres_matrix(const PeresObservable& obs);

// Observable assignment for one correlation: N per-site observables, the
// last split_m of which are the "B side" settings.
struct CorrelationSpec {
  std::vector<PeresObservable> observables;
  int split_m = 0;
};

// Planar spec: first N-m sites at polar angle theta_a_side, last m at
// theta_b_side, all azimuths zero, local dimension d (defaults to N).
CorrelationSpec planar_spec(int N, int m, double theta_a_side,
                            double theta_b_side, int d = -1);

// <psi| O_1 (x) ... (x) O_N |psi> by sequential per-site application.
// Throws internal_consistency_error if the expectation is not real.
double correlation_bruteforce(const StateVector& psi,
                              const CorrelationSpec& spec);

// Closed form for the all-but-one split (m=1):
//   E = (-1)^floor(N/2) (1/N) sin(N theta)/sin(theta),
// with the removable singularities at theta = k pi taken by their limits.
double corr_closed_m1(int N, double theta);

// Closed form for the m=2 split, N >= 4:
//   E = (-1)^floor(N/2) * 2/(N(N-1)) * sum_{k=k0, step 4}^{2N-4} sin((k+1)theta)/sin(theta),
// k0 = 0 for even N, 2 for odd N; at theta = k pi the sum's limit is
// N(N-1)/2. Matches the Born-rule expectation to rounding for all N tested.
double corr_closed_m2(int N, double theta);

// |E(A-B) + E(A-b) + E(a-B) - E(a-b)| with the closed form for the given m.
// Angles are planar setting angles; only differences enter.
double chsh_value(int N, int m, double angle_A, double angle_a, double angle_B,
                  double angle_b);

struct ViolationResult {
  int N = 0;
  int m = 0;
  double value = 0.0;
  std::array<double, 4> angles{};  // A, a, B, b with A fixed at 0
};

// Deterministic maximization of chsh_value over the three free planar
// angles: coarse grid, period-scaled grids around multiples of pi (the
// optimum narrows as O(1/N)), then cyclic coordinate descent to step 1e-8.
ViolationResult maximize_violation(int N, int m);

}  // namespace ssq
