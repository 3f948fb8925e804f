#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ssq/qcore.hpp"

namespace ssq {

// d(N) = N!/((N/2)!(N/2+1)!) = Catalan(N/2), exact integer arithmetic.
// Throws resource_limit_error once the value leaves the 64-bit range
// (N > 72); use encoding_efficiency for large-N logarithmic reports.
std::uint64_t df_dimension(int N);

using Matching = std::vector<std::pair<int, int>>;

// All noncrossing perfect matchings of 0..N-1 on a line; the count is
// Catalan(N/2).
std::vector<Matching> noncrossing_pairings(int N);

// Product of pair singlets over one matching, as an N-qubit state.
StateVector matching_product_state(int N, const Matching& matching);

struct DfBasis {
  int N = 0;
  std::vector<StateVector> vectors;
  Mat gram;
  int rank = 0;
};

// Spanning family for the decoherence-free subspace: one product vector per
// noncrossing matching. Rank of the Gram matrix (singular values above
// 1e-8 x largest) equals df_dimension(N).
DfBasis df_basis(int N, int cap = 12);

// Least-squares distance from psi to the span of the basis vectors.
double projection_residual(const DfBasis& basis, const StateVector& psi);

struct EfficiencyReport {
  int N = 0;
  std::uint64_t dimension = 0;  // 0 when beyond exact integer range
  bool dimension_exact = false;
  double log2_dimension = 0.0;        // exact, via log-gamma
  double efficiency = 0.0;            // log2 d(N) / N
  double asymptotic_estimate = 0.0;   // N - 1.5 log2 N
};

EfficiencyReport encoding_efficiency(int N);

}  // namespace ssq
