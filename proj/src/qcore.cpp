#include "ssq/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ssq {

bool is_hermitian(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Mat& u, double tol) {
  if (u.rows() != u.cols()) return false;
  Mat id = Mat::Identity(u.rows(), u.cols());
  return (u * u.adjoint() - id).cwiseAbs().maxCoeff() <= tol;
}

std::int64_t checked_power(int base, int exp, std::int64_t max_dim) {
  std::int64_t v = 1;
  for (int k = 0; k < exp; ++k) {
    if (v > max_dim / base) {
      throw resource_limit_error(
          "state dimension " + std::to_string(base) + "^" +
          std::to_string(exp) + " exceeds the configured memory bound of " +
          std::to_string(max_dim) + " amplitudes");
    }
    v *= base;
  }
  if (v > max_dim) {
    throw resource_limit_error(
        "state dimension " + std::to_string(base) + "^" + std::to_string(exp) +
        " exceeds the configured memory bound of " + std::to_string(max_dim) +
        " amplitudes");
  }
  return v;
}

StateVector::StateVector(int sites, int dim) : num_sites(sites), local_dim(dim) {
  if (sites < 1 || dim < 2) {
    throw invalid_input_error("StateVector needs num_sites >= 1, local_dim >= 2");
  }
  amplitudes = Vec::Zero(checked_power(dim, sites, (std::int64_t)1 << 26));
}

void StateVector::normalize() {
  double n = norm();
  if (n == 0.0) throw invalid_input_error("cannot normalize the zero vector");
  amplitudes /= n;
}

std::int64_t digits_to_index(std::span<const int> digits, int local_dim) {
  std::int64_t idx = 0;
  for (int dgt : digits) {
    if (dgt < 0 || dgt >= local_dim) {
      throw invalid_input_error("basis digit out of range");
    }
    idx = idx * local_dim + dgt;
  }
  return idx;
}

std::vector<int> index_to_digits(std::int64_t index, int num_sites,
                                 int local_dim) {
  std::vector<int> digits(num_sites);
  for (int k = num_sites - 1; k >= 0; --k) {
    digits[k] = static_cast<int>(index % local_dim);
    index /= local_dim;
  }
  return digits;
}

cplx& StateVector::at(std::span<const int> digits) {
  if ((int)digits.size() != num_sites) {
    throw invalid_input_error("digit count does not match num_sites");
  }
  return amplitudes[digits_to_index(digits, local_dim)];
}

cplx StateVector::at(std::span<const int> digits) const {
  if ((int)digits.size() != num_sites) {
    throw invalid_input_error("digit count does not match num_sites");
  }
  return amplitudes[digits_to_index(digits, local_dim)];
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.num_sites != b.num_sites || a.local_dim != b.local_dim) {
    throw invalid_input_error("fidelity: shape mismatch");
  }
  return std::abs(a.amplitudes.dot(b.amplitudes));
}

bool approx_equal(const StateVector& a, const StateVector& b, double tol,
                  bool phase_insensitive) {
  if (a.num_sites != b.num_sites || a.local_dim != b.local_dim) return false;
  if (phase_insensitive) return fidelity(a, b) >= 1.0 - tol;
  return (a.amplitudes - b.amplitudes).cwiseAbs().maxCoeff() <= tol;
}

void validate_permutation(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) {
      throw invalid_input_error("malformed permutation: repeated or out-of-range entry");
    }
    seen[v] = 1;
  }
}

int permutation_sign(const Permutation& p) {
  validate_permutation(p);
  const int n = static_cast<int>(p.size());
  std::vector<char> visited(n, 0);
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    if (visited[i]) continue;
    int len = 0;
    for (int j = i; !visited[j]; j = p[j]) {
      visited[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;  // even cycle = odd number of swaps
  }
  return sign;
}

StateVector permute_sites(const StateVector& psi, const Permutation& perm) {
  validate_permutation(perm);
  if ((int)perm.size() != psi.num_sites) {
    throw invalid_input_error("permutation length does not match num_sites");
  }
  StateVector out(psi.num_sites, psi.local_dim);
  std::vector<int> src(psi.num_sites);
  for (std::int64_t idx = 0; idx < psi.dim(); ++idx) {
    auto digits = index_to_digits(idx, psi.num_sites, psi.local_dim);
    for (int k = 0; k < psi.num_sites; ++k) src[k] = digits[perm[k]];
    out.amplitudes[idx] = psi.amplitudes[digits_to_index(src, psi.local_dim)];
  }
  return out;
}

StateVector make_pair_singlet(int d, int cap) {
  if (d < 2) throw invalid_input_error("pair singlet needs d >= 2");
  if (d > cap) {
    throw resource_limit_error("pair singlet local dimension " +
                               std::to_string(d) + " above cap " +
                               std::to_string(cap) + " (d^2 amplitudes)");
  }
  StateVector psi(2, d);
  const double c = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) {
    psi.amplitudes[(std::int64_t)i * d + (d - 1 - i)] = (i % 2 == 0) ? c : -c;
  }
  return psi;
}

StateVector make_nn_supersinglet(int N, int cap) {
  if (N < 2) throw invalid_input_error("N-level singlet needs N >= 2");
  if (N > cap) {
    throw resource_limit_error(
        "N=" + std::to_string(N) + " exceeds cap " + std::to_string(cap) +
        " for the N-particle N-level family (d^N = N^N amplitudes)");
  }
  StateVector psi(N, N);
  Permutation p(N);
  std::iota(p.begin(), p.end(), 0);
  double fact = 1.0;
  for (int k = 2; k <= N; ++k) fact *= k;
  const double c = 1.0 / std::sqrt(fact);
  do {
    psi.amplitudes[digits_to_index(p, N)] = permutation_sign(p) * c;
  } while (std::next_permutation(p.begin(), p.end()));
  return psi;
}

StateVector make_qubit_supersinglet(int N, int cap) {
  if (N < 2 || N % 2 != 0) {
    throw invalid_input_error("qubit supersinglet needs even N >= 2");
  }
  if (N > cap) {
    throw resource_limit_error("N=" + std::to_string(N) + " exceeds cap " +
                               std::to_string(cap) +
                               " for the qubit family (2^N amplitudes)");
  }
  const int half = N / 2;
  double half_fact = 1.0;
  for (int k = 2; k <= half; ++k) half_fact *= k;
  const double denom = half_fact * std::sqrt(half + 1.0);

  std::vector<double> factorial(half + 1, 1.0);
  for (int k = 1; k <= half; ++k) factorial[k] = factorial[k - 1] * k;

  StateVector psi(N, 2);
  for (std::int64_t idx = 0; idx < psi.dim(); ++idx) {
    int ones = 0;
    for (std::int64_t v = idx; v; v >>= 1) ones += static_cast<int>(v & 1);
    if (ones != half) continue;
    // z = zeros among the first N/2 sites (the high bits of idx).
    int z = 0;
    for (int k = 0; k < half; ++k) {
      if (((idx >> (N - 1 - k)) & 1) == 0) ++z;
    }
    double coeff = factorial[z] * factorial[half - z] / denom;
    if ((half - z) % 2 != 0) coeff = -coeff;
    psi.amplitudes[idx] = coeff;
  }
  return psi;
}

SpinMatrices spin_matrices(int d) {
  if (d < 2) throw invalid_input_error("spin matrices need d >= 2");
  const double s = (d - 1) / 2.0;
  Mat sz = Mat::Zero(d, d);
  Mat sp = Mat::Zero(d, d);  // raising operator
  for (int i = 0; i < d; ++i) {
    const double m = s - i;
    sz(i, i) = m;
    if (i > 0) sp(i - 1, i) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  Mat sm = sp.adjoint();
  SpinMatrices out;
  out.sx = (sp + sm) / 2.0;
  out.sy = (sp - sm) / cplx(0.0, 2.0);
  out.sz = sz;
  return out;
}

Mat rotation_operator(int d, const Eigen::Vector3d& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > 1e-9) {
    throw invalid_input_error("rotation axis must be a unit vector");
  }
  SpinMatrices S = spin_matrices(d);
  Mat h = axis.x() * S.sx + axis.y() * S.sy + axis.z() * S.sz;
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  if (es.info() != Eigen::Success) {
    throw internal_consistency_error("eigendecomposition of axis.S failed");
  }
  Vec phases(d);
  for (int i = 0; i < d; ++i) {
    phases[i] = std::exp(cplx(0.0, -angle * es.eigenvalues()[i]));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

StateVector apply_site(const StateVector& psi, const Mat& op, int site) {
  const int d = psi.local_dim;
  if (op.rows() != d || op.cols() != d) {
    throw invalid_input_error("operator dimension does not match local_dim");
  }
  if (site < 0 || site >= psi.num_sites) {
    throw invalid_input_error("site index out of range");
  }
  std::int64_t right = 1;
  for (int k = site + 1; k < psi.num_sites; ++k) right *= d;
  const std::int64_t left = psi.dim() / (right * d);

  StateVector out(psi.num_sites, psi.local_dim);
  Vec col(d), res(d);
  for (std::int64_t a = 0; a < left; ++a) {
    const std::int64_t block = a * right * d;
    for (std::int64_t b = 0; b < right; ++b) {
      for (int i = 0; i < d; ++i) col[i] = psi.amplitudes[block + i * right + b];
      res.noalias() = op * col;
      for (int i = 0; i < d; ++i) out.amplitudes[block + i * right + b] = res[i];
    }
  }
  return out;
}

StateVector apply_collective(const StateVector& psi, const Mat& op) {
  StateVector out = psi;
  for (int k = 0; k < psi.num_sites; ++k) out = apply_site(out, op, k);
  return out;
}

cplx collective_overlap(const StateVector& psi, const Mat& op) {
  StateVector rotated = apply_collective(psi, op);
  return psi.amplitudes.dot(rotated.amplitudes);
}

double invariance_deviation(const StateVector& psi, const Mat& op) {
  StateVector rotated = apply_collective(psi, op);
  cplx ov = psi.amplitudes.dot(rotated.amplitudes);
  const double mag = std::abs(ov);
  if (mag < 1e-15) return std::sqrt(2.0);  // orthogonal: no phase helps
  const cplx phase = std::conj(ov) / mag;
  return (phase * rotated.amplitudes - psi.amplitudes).norm();
}

Mat haar_unitary(int d, SeededRng& rng) {
  Mat g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = cplx(rng.gaussian(), rng.gaussian());
  }
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution is Haar, not just unitary.
  for (int j = 0; j < d; ++j) {
    cplx rj = r(j, j);
    cplx ph = (std::abs(rj) > 0) ? rj / std::abs(rj) : cplx(1, 0);
    q.col(j) *= ph;
  }
  return q;
}

Mat random_rotation(int d, SeededRng& rng) {
  Eigen::Vector3d axis;
  do {
    axis = Eigen::Vector3d(rng.gaussian(), rng.gaussian(), rng.gaussian());
  } while (axis.norm() < 1e-6);
  axis.normalize();
  const double angle = 2.0 * M_PI * rng.uniform();
  return rotation_operator(d, axis, angle);
}

}  // namespace ssq
