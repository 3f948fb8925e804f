#include "ssq/measurement.hpp"

#include <algorithm>
#include <cmath>

namespace ssq {

Mat basis_rotation(int d, const Direction& dir) {
  Mat ry = rotation_operator(d, Eigen::Vector3d::UnitY(), dir.polar);
  Mat rz = rotation_operator(d, Eigen::Vector3d::UnitZ(), dir.azimuth);
  return rz * ry;
}

Eigen::VectorXd outcome_distribution(const StateVector& psi,
                                     const Direction& dir) {
  // Outcome i along n corresponds to the eigenvector R|i>; the Born
  // probability is |(R^dagger^(x)N psi)_i...|^2.
  Mat r = basis_rotation(psi.local_dim, dir);
  StateVector rotated = apply_collective(psi, Mat(r.adjoint()));
  Eigen::VectorXd probs = rotated.amplitudes.cwiseAbs2();
  const double total = probs.sum();
  if (std::abs(total - 1.0) > 1e-10) {
    throw internal_consistency_error("outcome probabilities do not sum to 1");
  }
  return probs / total;
}

OutcomeRecord measure_joint(const StateVector& psi, const Direction& dir,
                            SeededRng& rng) {
  JointSampler sampler(psi, dir);
  return sampler.sample(rng);
}

JointSampler::JointSampler(const StateVector& psi, const Direction& dir)
    : dir_(dir), num_sites_(psi.num_sites), local_dim_(psi.local_dim) {
  Eigen::VectorXd probs = outcome_distribution(psi, dir);
  cdf_.resize(probs.size());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf_[i] = acc;
  }
  cdf_.back() = 1.0;
}

OutcomeRecord JointSampler::sample(SeededRng& rng) const {
  const double u = rng.uniform();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  std::int64_t idx = it - cdf_.begin();
  if (idx >= (std::int64_t)cdf_.size()) idx = cdf_.size() - 1;
  return OutcomeRecord{dir_, index_to_digits(idx, num_sites_, local_dim_)};
}

}  // namespace ssq
