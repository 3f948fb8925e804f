#pragma once

// JSON serialization for the public value types (nlohmann::json ADL hooks).
// Amplitudes serialize as [re, im] pairs in row-major index order.

#include <json.hpp>

#include "ssq/bell.hpp"
#include "ssq/dfsub.hpp"
#include "ssq/measurement.hpp"
#include "ssq/protocols.hpp"
#include "ssq/qcore.hpp"

namespace ssq {

using nlohmann::json;

inline void to_json(json& j, const StateVector& psi) {
  json amps = json::array();
  for (std::int64_t i = 0; i < psi.dim(); ++i) {
    amps.push_back({psi.amplitudes[i].real(), psi.amplitudes[i].imag()});
  }
  j = json{{"num_sites", psi.num_sites},
           {"local_dim", psi.local_dim},
           {"amplitudes", std::move(amps)}};
}

inline void from_json(const json& j, StateVector& psi) {
  psi.num_sites = j.at("num_sites").get<int>();
  psi.local_dim = j.at("local_dim").get<int>();
  const auto& amps = j.at("amplitudes");
  psi.amplitudes = Vec(amps.size());
  for (size_t i = 0; i < amps.size(); ++i) {
    psi.amplitudes[(std::int64_t)i] =
        cplx(amps[i][0].get<double>(), amps[i][1].get<double>());
  }
}

inline void to_json(json& j, const Direction& d) {
  j = json::array({d.polar, d.azimuth});
}

inline void from_json(const json& j, Direction& d) {
  d.polar = j.at(0).get<double>();
  d.azimuth = j.at(1).get<double>();
}

inline void to_json(json& j, const OutcomeRecord& rec) {
  j = json{{"direction", rec.direction}, {"outcomes", rec.outcomes}};
}

inline void to_json(json& j, const ViolationResult& v) {
  j = json{{"N", v.N},
           {"m", v.m},
           {"value", v.value},
           {"angles", v.angles}};
}

inline void to_json(json& j, const SequenceTable& t) {
  j = json{{"num_parties", t.num_parties},
           {"length", t.length},
           {"rows", t.rows}};
}

inline void from_json(const json& j, SequenceTable& t) {
  t.num_parties = j.at("num_parties").get<int>();
  t.length = j.at("length").get<int>();
  t.rows = j.at("rows").get<std::vector<std::vector<int>>>();
}

inline void to_json(json& j, const NspAssignment& a) {
  j = json{{"round", a.round},
           {"victims", a.victims},
           {"self_assigned", a.self_assigned}};
}

inline void to_json(json& j, const SspRound& r) {
  const char* kind = r.kind == SspRound::Kind::clean       ? "clean"
                     : r.kind == SspRound::Kind::aborted   ? "aborted"
                                                           : "corrupted";
  j = json{{"round", r.round},
           {"kind", kind},
           {"reconstructed", r.reconstructed},
           {"dealer_symbol", r.dealer_symbol},
           {"liar", r.liar},
           {"honest_undeclared_at_lie", r.honest_undeclared_at_lie},
           {"secret_holders_at_lie", r.secret_holders_at_lie}};
}

inline void to_json(json& j, const SspReport& r) {
  j = json{{"schema_version", r.schema_version},
           {"num_parties", r.num_parties},
           {"rounds_total", r.rounds_total},
           {"rounds_clean", r.rounds_clean},
           {"rounds_aborted", r.rounds_aborted},
           {"rounds_corrupted", r.rounds_corrupted},
           {"rounds", r.rounds},
           {"recovered_key", r.recovered_key}};
}

inline void to_json(json& j, const LdpTranscript& t) {
  j = json{{"schema_version", t.schema_version},
           {"m_ab", t.m_ab},
           {"m_ac", t.m_ac},
           {"m_bc", t.m_bc},
           {"l_ab", t.l_ab},
           {"l_ac", t.l_ac},
           {"l_bc", t.l_bc},
           {"l_bc_forward", t.l_bc_forward},
           {"verdict", to_string(t.verdict)},
           {"reject_hop", t.reject_hop},
           {"union_size", t.union_size}};
}

inline void to_json(json& j, const DtestResult& r) {
  j = json{{"schema_version", r.schema_version},
           {"accepted", r.accepted},
           {"rounds", r.rounds},
           {"tested_rounds", r.tested_rounds},
           {"tampered_columns", r.tampered_columns},
           {"first_bad_round",
            r.first_bad_round ? json(*r.first_bad_round) : json(nullptr)},
           {"remaining_length", r.remaining.length}};
}

inline void to_json(json& j, const EfficiencyReport& r) {
  j = json{{"N", r.N},
           {"dimension", r.dimension_exact ? json(r.dimension) : json(nullptr)},
           {"log2_dimension", r.log2_dimension},
           {"efficiency", r.efficiency},
           {"asymptotic_estimate", r.asymptotic_estimate}};
}

}  // namespace ssq
