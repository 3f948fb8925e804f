#pragma once

// Shared fixtures for the test suites: hand-transcribed state expansions
// frozen as (ket string, numerator) tables, plus small utilities.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ssq/qcore.hpp"

namespace ssqtest {

using Term = std::pair<const char*, double>;

// Build the dense vector for sum(numerator/denominator * |ket>) with ket
// digits given as characters.
inline ssq::StateVector expansion(int num_sites, int local_dim,
                                  const std::vector<Term>& terms,
                                  double denominator) {
  ssq::StateVector psi(num_sites, local_dim);
  for (const auto& [ket, numerator] : terms) {
    std::vector<int> digits;
    for (const char* c = ket; *c; ++c) digits.push_back(*c - '0');
    psi.at(digits) = numerator / denominator;
  }
  return psi;
}

inline double max_amplitude_diff(const ssq::StateVector& a,
                                 const ssq::StateVector& b) {
  return (a.amplitudes - b.amplitudes).cwiseAbs().maxCoeff();
}

// --- frozen expansions -----------------------------------------------------

inline ssq::StateVector expected_pair2() {
  return expansion(2, 2, {{"01", 1}, {"10", -1}}, std::sqrt(2.0));
}

inline ssq::StateVector expected_pair3() {
  return expansion(2, 3, {{"02", 1}, {"11", -1}, {"20", 1}}, std::sqrt(3.0));
}

inline ssq::StateVector expected_pair4() {
  return expansion(2, 4, {{"03", 1}, {"12", -1}, {"21", 1}, {"30", -1}}, 2.0);
}

inline ssq::StateVector expected_nn3() {
  return expansion(3, 3,
                   {{"012", 1},
                    {"021", -1},
                    {"102", -1},
                    {"120", 1},
                    {"201", 1},
                    {"210", -1}},
                   std::sqrt(6.0));
}

inline ssq::StateVector expected_nn4() {
  return expansion(4, 4,
                   {{"0123", 1},  {"0132", -1}, {"0213", -1}, {"0231", 1},
                    {"0312", 1},  {"0321", -1}, {"1023", -1}, {"1032", 1},
                    {"1203", 1},  {"1230", -1}, {"1302", -1}, {"1320", 1},
                    {"2013", 1},  {"2031", -1}, {"2103", -1}, {"2130", 1},
                    {"2301", 1},  {"2310", -1}, {"3012", -1}, {"3021", 1},
                    {"3102", 1},  {"3120", -1}, {"3201", -1}, {"3210", 1}},
                   std::sqrt(24.0));
}

inline ssq::StateVector expected_qubit4() {
  return expansion(4, 2,
                   {{"0011", 2},
                    {"0101", -1},
                    {"0110", -1},
                    {"1001", -1},
                    {"1010", -1},
                    {"1100", 2}},
                   2.0 * std::sqrt(3.0));
}

inline ssq::StateVector expected_qubit6() {
  return expansion(6, 2,
                   {{"000111", 3},  {"001011", -1}, {"001101", -1},
                    {"001110", -1}, {"010011", -1}, {"010101", -1},
                    {"010110", -1}, {"011001", 1},  {"011010", 1},
                    {"011100", 1},  {"100011", -1}, {"100101", -1},
                    {"100110", -1}, {"101001", 1},  {"101010", 1},
                    {"101100", 1},  {"110001", 1},  {"110010", 1},
                    {"110100", 1},  {"111000", -3}},
                   6.0);
}

}  // namespace ssqtest
