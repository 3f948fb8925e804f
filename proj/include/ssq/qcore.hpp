#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "ssq/errors.hpp"
#include "ssq/rng.hpp"

namespace ssq {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// A local operator is a dense d x d complex matrix (rotation, spin component,
// dichotomic observable). Hermiticity/unitarity are properties of the value,
// checkable with the predicates below, not separate types.
using LocalOperator = Mat;

bool is_hermitian(const Mat& m, double tol = 1e-12);
bool is_unitary(const Mat& u, double tol = 1e-12);

// ---------------------------------------------------------------------------
// StateVector: dense amplitudes over N sites of local dimension d.
//
// Index convention: the composite index is row-major with site 0 as the most
// significant digit, so |i j ... n> sits at index i*d^(N-1) + j*d^(N-2) + ...
// Local basis index i carries spin eigenvalue m = s - i with s = (d-1)/2
// (basis ket |i> = spin ket |s-i>).
// ---------------------------------------------------------------------------
struct StateVector {
  int num_sites = 0;
  int local_dim = 0;
  Vec amplitudes;

  StateVector() = default;
  StateVector(int sites, int dim);  // zero vector of the right shape

  std::int64_t dim() const { return amplitudes.size(); }
  double norm() const { return amplitudes.norm(); }
  void normalize();

  cplx& at(std::span<const int> digits);
  cplx at(std::span<const int> digits) const;
};

// Exact d^N with overflow/size guard; throws resource_limit_error above
// max_dim entries.
std::int64_t checked_power(int base, int exp, std::int64_t max_dim);

// digit <-> flat index helpers for the row-major convention.
std::int64_t digits_to_index(std::span<const int> digits, int local_dim);
std::vector<int> index_to_digits(std::int64_t index, int num_sites,
                                 int local_dim);

// |<a|b>| — the default, global-phase-insensitive notion of state overlap.
double fidelity(const StateVector& a, const StateVector& b);
bool approx_equal(const StateVector& a, const StateVector& b,
                  double tol = 1e-9, bool phase_insensitive = true);

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------
using Permutation = std::vector<int>;

// Throws invalid_input_error unless p is a bijection on {0,...,N-1}.
void validate_permutation(const Permutation& p);

// (-1)^t with t the transposition count, via cycle decomposition.
int permutation_sign(const Permutation& p);

// Reorder the sites of a state: site k of the result is site perm[k] of the
// input. Used by the antisymmetry checks.
StateVector permute_sites(const StateVector& psi, const Permutation& perm);

// ---------------------------------------------------------------------------
// State families
// ---------------------------------------------------------------------------

// (1/sqrt(d)) sum_i (-1)^i |i> (x) |d-1-i>, two sites of dimension d.
StateVector make_pair_singlet(int d, int cap = 2000);

// (1/sqrt(N!)) sum over permutations of 0..N-1 with sign; N sites, d = N.
StateVector make_nn_supersinglet(int N, int cap = 7);

// N-qubit singlet (N even): superposition of balanced bitstrings with
// coefficient z!(N/2-z)!(-1)^(N/2-z) / ((N/2)! sqrt(N/2+1)), z = number of
// zeros among the first N/2 sites.
StateVector make_qubit_supersinglet(int N, int cap = 16);

// ---------------------------------------------------------------------------
// Spin operators and rotations
// ---------------------------------------------------------------------------
struct SpinMatrices {
  Mat sx, sy, sz;
};

// Spin-s matrices in the local basis order (index i -> m = s-i), s = (d-1)/2.
SpinMatrices spin_matrices(int d);

// exp(-i*angle*(axis . S)) via spectral decomposition; axis must be unit
// within 1e-9.
Mat rotation_operator(int d, const Eigen::Vector3d& axis, double angle);

// ---------------------------------------------------------------------------
// Applying local operators
// ---------------------------------------------------------------------------

// Apply op on one site; never materializes the d^N x d^N matrix.
StateVector apply_site(const StateVector& psi, const Mat& op, int site);

// op (x) op (x) ... (x) op |psi>.
StateVector apply_collective(const StateVector& psi, const Mat& op);

// <psi| op^(x)N |psi>.
cplx collective_overlap(const StateVector& psi, const Mat& op);

// min over phases of || e^{i phi} op^(x)N |psi> - |psi> ||, equal to
// sqrt(2 - 2|<psi|op^(x)N|psi>|) for normalized input. Evaluated as the
// phase-aligned vector difference, which is numerically exact where the
// textbook square-root form loses half the significant digits.
double invariance_deviation(const StateVector& psi, const Mat& op);

// ---------------------------------------------------------------------------
// Random unitaries for invariance sweeps
// ---------------------------------------------------------------------------

// Haar-distributed d x d unitary (Ginibre + QR with phase correction).
Mat haar_unitary(int d, SeededRng& rng);

// Spin-s representation of a random rotation: uniform axis on the sphere,
// uniform angle in [0, 2pi).
Mat random_rotation(int d, SeededRng& rng);

}  // namespace ssq
