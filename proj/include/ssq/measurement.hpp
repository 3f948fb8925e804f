#pragma once

#include <vector>

#include "ssq/qcore.hpp"
#include "ssq/rng.hpp"

namespace ssq {

// Measurement direction on the sphere.
struct Direction {
  double polar = 0.0;    // theta, radians from +z
  double azimuth = 0.0;  // phi, radians from +x
};

// Unitary taking the z eigenbasis to the eigenbasis along `dir`:
// Rz(azimuth) * Ry(polar) in the spin-s representation.
Mat basis_rotation(int d, const Direction& dir);

// One joint outcome of a collective spin measurement: outcomes[k] is the
// local basis index observed at site k.
struct OutcomeRecord {
  Direction direction;
  std::vector<int> outcomes;
};

// Born probabilities for all d^N joint outcomes when every site measures
// spin along `dir`. Entry order is the row-major composite index.
Eigen::VectorXd outcome_distribution(const StateVector& psi,
                                     const Direction& dir);

// Sample one joint outcome by inverse-CDF over the full table.
OutcomeRecord measure_joint(const StateVector& psi, const Direction& dir,
                            SeededRng& rng);

// Cached sampler for repeated draws from the same state and direction
// (computes the CDF once; generate_table uses this).
class JointSampler {
 public:
  JointSampler(const StateVector& psi, const Direction& dir);
  OutcomeRecord sample(SeededRng& rng) const;

 private:
  Direction dir_;
  int num_sites_;
  int local_dim_;
  std::vector<double> cdf_;
};

}  // namespace ssq
