#include "ssq/dfsub.hpp"

#include <cmath>
#include <string>

namespace ssq {

std::uint64_t df_dimension(int N) {
  if (N < 2 || N % 2 != 0) {
    throw invalid_input_error("df_dimension needs even N >= 2");
  }
  const int half = N / 2;
  // Catalan recurrence C_{k+1} = C_k * 2(2k+1)/(k+2); the division is exact.
  unsigned __int128 c = 1;
  for (int k = 0; k < half; ++k) {
    c = c * 2 * (2 * (unsigned __int128)k + 1) / ((unsigned __int128)k + 2);
    if (c > UINT64_MAX) {
      throw resource_limit_error("d(N) exceeds 64-bit range at N=" +
                                 std::to_string(N) +
                                 "; use encoding_efficiency for log-scale values");
    }
  }
  return (std::uint64_t)c;
}

namespace {

void enumerate(const std::vector<int>& points, Matching& current,
               std::vector<Matching>& out) {
  if (points.empty()) {
    out.push_back(current);
    return;
  }
  // Pair the first point with any partner leaving even-sized gaps on both
  // sides; this never creates a crossing and reaches every noncrossing
  // matching exactly once.
  const int first = points[0];
  for (size_t j = 1; j < points.size(); j += 2) {
    current.emplace_back(first, points[j]);
    std::vector<int> inside(points.begin() + 1, points.begin() + j);
    std::vector<int> outside(points.begin() + j + 1, points.end());
    Matching saved_current = current;
    // Recurse on the inside segment, then for each completion on the outside.
    std::vector<Matching> inner;
    Matching tmp;
    enumerate(inside, tmp, inner);
    for (const Matching& in : inner) {
      current = saved_current;
      current.insert(current.end(), in.begin(), in.end());
      enumerate(outside, current, out);
    }
    current.resize(saved_current.size() - 1);
  }
}

}  // namespace

std::vector<Matching> noncrossing_pairings(int N) {
  if (N < 2 || N % 2 != 0) {
    throw invalid_input_error("noncrossing_pairings needs even N >= 2");
  }
  std::vector<int> points(N);
  for (int i = 0; i < N; ++i) points[i] = i;
  std::vector<Matching> out;
  Matching current;
  enumerate(points, current, out);
  return out;
}

StateVector matching_product_state(int N, const Matching& matching) {
  if ((int)matching.size() * 2 != N) {
    throw invalid_input_error("matching does not cover all sites");
  }
  StateVector psi(N, 2);
  const double c = std::pow(2.0, -N / 4.0);  // (1/sqrt 2) per pair
  for (std::int64_t idx = 0; idx < psi.dim(); ++idx) {
    double amp = c;
    for (const auto& [i, j] : matching) {
      const int bi = (int)((idx >> (N - 1 - i)) & 1);
      const int bj = (int)((idx >> (N - 1 - j)) & 1);
      if (bi == bj) {
        amp = 0.0;
        break;
      }
      if (bi == 1) amp = -amp;  // |10> enters the pair singlet with -
    }
    psi.amplitudes[idx] = amp;
  }
  return psi;
}

DfBasis df_basis(int N, int cap) {
  if (N < 2 || N % 2 != 0) throw invalid_input_error("df_basis needs even N >= 2");
  if (N > cap) {
    throw resource_limit_error("N=" + std::to_string(N) + " exceeds cap " +
                               std::to_string(cap) + " for df_basis");
  }
  DfBasis basis;
  basis.N = N;
  const std::vector<Matching> matchings = noncrossing_pairings(N);
  basis.vectors.reserve(matchings.size());
  for (const Matching& m : matchings) {
    basis.vectors.push_back(matching_product_state(N, m));
  }
  const int K = (int)basis.vectors.size();
  basis.gram = Mat(K, K);
  for (int a = 0; a < K; ++a) {
    for (int b = 0; b < K; ++b) {
      basis.gram(a, b) =
          basis.vectors[a].amplitudes.dot(basis.vectors[b].amplitudes);
    }
  }
  Eigen::JacobiSVD<Mat> svd(basis.gram);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-8 * sv[0];
  basis.rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > cutoff) ++basis.rank;
  }
  return basis;
}

double projection_residual(const DfBasis& basis, const StateVector& psi) {
  if (basis.vectors.empty()) throw invalid_input_error("empty basis");
  if (psi.num_sites != basis.N || psi.local_dim != 2) {
    throw invalid_input_error("projection target must be an N-qubit state");
  }
  const std::int64_t dim = psi.dim();
  const int K = (int)basis.vectors.size();
  Mat m(dim, K);
  for (int k = 0; k < K; ++k) m.col(k) = basis.vectors[k].amplitudes;
  Vec coeffs = m.colPivHouseholderQr().solve(psi.amplitudes);
  return (m * coeffs - psi.amplitudes).norm();
}

EfficiencyReport encoding_efficiency(int N) {
  if (N < 2 || N % 2 != 0) {
    throw invalid_input_error("encoding_efficiency needs even N >= 2");
  }
  EfficiencyReport rep;
  rep.N = N;
  const double ln2 = std::log(2.0);
  rep.log2_dimension = (std::lgamma(N + 1.0) - std::lgamma(N / 2 + 1.0) -
                        std::lgamma(N / 2 + 2.0)) /
                       ln2;
  rep.efficiency = rep.log2_dimension / N;
  rep.asymptotic_estimate = N - 1.5 * std::log2((double)N);
  if (N <= 72) {
    rep.dimension = df_dimension(N);
    rep.dimension_exact = true;
  }
  return rep;
}

}  // namespace ssq
