#include "ssq/bell.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ssq {

Mat peres_operator(int d, const Direction& dir) {
  if (d < 2) throw invalid_input_error("Peres observable needs d >= 2");
  Mat r = basis_rotation(d, dir);
  Vec signs(d);
  for (int i = 0; i < d; ++i) signs[i] = (i % 2 == 0) ? 1.0 : -1.0;
  return r * signs.asDiagonal() * r.adjoint();
}

Mat peres_matrix(const PeresObservable& obs) {
  return peres_operator(obs.local_dim, obs.direction);
}

CorrelationSpec planar_spec(int N, int m, double theta_a_side,
                            double theta_b_side, int d) {
  if (d < 0) d = N;
  if (m < 0 || m > N) throw invalid_input_error("split index m out of range");
  CorrelationSpec spec;
  spec.split_m = m;
  spec.observables.reserve(N);
  for (int k = 0; k < N; ++k) {
    double theta = (k < N - m) ? theta_a_side : theta_b_side;
    spec.observables.push_back({Direction{theta, 0.0}, d});
  }
  return spec;
}

double correlation_bruteforce(const StateVector& psi,
                              const CorrelationSpec& spec) {
  if ((int)spec.observables.size() != psi.num_sites) {
    throw invalid_input_error("observable count does not match num_sites");
  }
  StateVector applied = psi;
  for (int k = 0; k < psi.num_sites; ++k) {
    const PeresObservable& obs = spec.observables[k];
    if (obs.local_dim != psi.local_dim) {
      throw invalid_input_error("observable local_dim mismatch");
    }
    applied = apply_site(applied, peres_matrix(obs), k);
  }
  cplx val = psi.amplitudes.dot(applied.amplitudes);
  if (std::abs(val.imag()) > 1e-10) {
    throw internal_consistency_error("correlation has non-negligible imaginary part");
  }
  return val.real();
}

double corr_closed_m1(int N, double theta) {
  if (N < 2) throw invalid_input_error("m=1 closed form needs N >= 2");
  const double sign = (N / 2) % 2 == 0 ? 1.0 : -1.0;
  const double st = std::sin(theta);
  double ratio;
  if (std::abs(st) < 1e-8) {
    // theta -> p*pi limit: sin(N theta)/sin(theta) -> N*(-1)^(p(N-1)).
    const long p = std::lround(theta / M_PI);
    ratio = N * (((p * (std::int64_t)(N - 1)) % 2 == 0) ? 1.0 : -1.0);
  } else {
    ratio = std::sin(N * theta) / st;
  }
  return sign * ratio / N;
}

double corr_closed_m2(int N, double theta) {
  if (N < 4) throw invalid_input_error("the m=2 split is unsupported below N=4");
  const double sign = (N / 2) % 2 == 0 ? 1.0 : -1.0;
  const int k0 = (N % 2 == 0) ? 0 : 2;
  const int terms = (2 * N - 4 - k0) / 4 + 1;
  const double st = std::sin(theta);
  double sum;
  if (std::abs(st) < 1e-8) {
    // All k in the sum are even, so every term's limit at theta = p*pi is
    // k+1; the total is N(N-1)/2 independent of p.
    sum = N * (N - 1) / 2.0;
  } else if (terms <= 8 || std::abs(std::sin(2.0 * theta)) < 1e-6) {
    sum = 0.0;
    for (int j = 0; j < terms; ++j) {
      sum += std::sin((k0 + 1 + 4 * j) * theta);
    }
    sum /= st;
  } else {
    // Geometric form of sum_j sin((k0+1+4j) theta), step 4 in the frequency.
    const cplx w = std::polar(1.0, 4.0 * theta);
    const cplx wm = std::polar(1.0, 4.0 * theta * terms);
    const cplx head = std::polar(1.0, (k0 + 1) * theta);
    const cplx series = head * (wm - 1.0) / (w - 1.0);
    sum = series.imag() / st;
  }
  return sign * 2.0 / (N * (double)(N - 1)) * sum;
}

namespace {

double closed_corr(int N, int m, double theta) {
  return m == 1 ? corr_closed_m1(N, theta) : corr_closed_m2(N, theta);
}

// Objective in the reduced coordinates (u,v,w) = (th_AB, th_Ab, th_aB);
// the fourth difference is then th_ab = v + w - u.
double objective(int N, int m, double u, double v, double w) {
  return std::abs(closed_corr(N, m, u) + closed_corr(N, m, v) +
                  closed_corr(N, m, w) - closed_corr(N, m, v + w - u));
}

struct Candidate {
  double u = 0, v = 0, w = 0;
  double value = -1.0;
  double step = 0;  // refinement start step (grid spacing it came from)
};

void consider(std::vector<Candidate>& top, const Candidate& c, size_t keep) {
  // Keep the best `keep` candidates; strict > keeps the first (lowest scan
  // index) winner on ties.
  auto pos = std::find_if(top.begin(), top.end(), [&](const Candidate& t) {
    return c.value > t.value;
  });
  if (pos == top.end() && top.size() >= keep) return;
  top.insert(pos, c);
  if (top.size() > keep) top.pop_back();
}

Candidate refine(int N, int m, Candidate c, double tol) {
  double h = c.step;
  int guard = 0;
  while (h > tol && guard++ < 500) {
    bool improved = false;
    for (int dim = 0; dim < 3; ++dim) {
      double* coord = dim == 0 ? &c.u : dim == 1 ? &c.v : &c.w;
      for (double dir : {+1.0, -1.0}) {
        for (;;) {
          const double trial = *coord + dir * h;
          const double old = *coord;
          *coord = trial;
          const double val = objective(N, m, c.u, c.v, c.w);
          if (val > c.value) {
            c.value = val;
            improved = true;
          } else {
            *coord = old;
            break;
          }
        }
      }
    }
    if (!improved) h *= 0.5;
  }
  return c;
}

}  // namespace

double chsh_value(int N, int m, double angle_A, double angle_a, double angle_B,
                  double angle_b) {
  if (m != 1 && m != 2) {
    throw invalid_input_error("chsh_value supports m in {1,2}");
  }
  if (m == 2 && N < 4) {
    throw invalid_input_error("the m=2 split is unsupported below N=4");
  }
  const double e1 = closed_corr(N, m, angle_A - angle_B);
  const double e2 = closed_corr(N, m, angle_A - angle_b);
  const double e3 = closed_corr(N, m, angle_a - angle_B);
  const double e4 = closed_corr(N, m, angle_a - angle_b);
  return std::abs(e1 + e2 + e3 - e4);
}

ViolationResult maximize_violation(int N, int m) {
  if (m != 1 && m != 2) {
    throw invalid_input_error("maximize_violation supports m in {1,2}");
  }
  if ((m == 1 && N < 2) || (m == 2 && N < 4)) {
    throw invalid_input_error("N too small for the requested split");
  }

  constexpr size_t kKeep = 10;
  std::vector<Candidate> top;
  top.reserve(kKeep + 1);

  // Coarse scan of the full period.
  {
    const int n = 61;
    const double step = 2.0 * M_PI / n;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          Candidate cand{a * step, b * step, c * step, 0.0, step};
          cand.value = objective(N, m, cand.u, cand.v, cand.w);
          consider(top, cand, kKeep);
        }
      }
    }
  }

  // The optimum sits in O(1/N)-wide lobes near multiples of pi, which the
  // coarse grid undersamples once N is large; rescan those windows.
  {
    const int n = 41;
    const double halfwidth = 3.0 * M_PI / N;
    const double step = 2.0 * halfwidth / (n - 1);
    for (int ku = 0; ku <= 1; ++ku) {
      for (int kv = 0; kv <= 1; ++kv) {
        for (int kw = 0; kw <= 1; ++kw) {
          for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
              for (int c = 0; c < n; ++c) {
                Candidate cand{ku * M_PI - halfwidth + a * step,
                               kv * M_PI - halfwidth + b * step,
                               kw * M_PI - halfwidth + c * step, 0.0, step};
                cand.value = objective(N, m, cand.u, cand.v, cand.w);
                consider(top, cand, kKeep);
              }
            }
          }
        }
      }
    }
  }

  Candidate best;
  for (const Candidate& seed : top) {
    Candidate r = refine(N, m, seed, 1e-8);
    if (r.value > best.value) best = r;
  }

  ViolationResult out;
  out.N = N;
  out.m = m;
  out.value = best.value;
  // Recover planar settings with A fixed at 0: B = -u, b = -v, a = w - u.
  out.angles = {0.0, best.w - best.u, -best.u, -best.v};
  return out;
}

}  // namespace ssq
