// ssq: command-line front end for the supersinglet toolkit.
//
// One binary, subcommand style. Data goes to stdout (JSON by default, CSV
// where the output is a table), a one-line human summary goes to stderr.
// All randomness flows from --seed; identical invocations produce identical
// bytes. Exit codes: 0 ok, 1 invalid input, 2 resource limit, 3 internal
// consistency failure.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "ssq/bell.hpp"
#include "ssq/dfsub.hpp"
#include "ssq/json_io.hpp"
#include "ssq/measurement.hpp"
#include "ssq/protocols.hpp"
#include "ssq/qcore.hpp"
#include "ssq/rng.hpp"

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = ssq::kTranscriptSchemaVersion;

struct Common {
  std::uint64_t seed = 1;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "seed for all randomness in this command")
      ->capture_default_str();
  cmd->add_option("--format", c.format, "output format on stdout")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit_json(const json& j) {
  std::cout << j.dump(2) << "\n";
  std::cout.flush();
}

void emit_csv(const std::string& header, const std::vector<std::string>& rows) {
  std::cout << header << "\n";
  for (const std::string& r : rows) std::cout << r << "\n";
  std::cout.flush();
}

// --------------------------------------------------------------------------
// Family plumbing shared by state / invariance / sample
// --------------------------------------------------------------------------
struct FamilyOpts {
  std::string family = "NN";
  int N = 3;
  int d = 2;     // pair family only
  int cap = -1;  // -1: library default
};

void add_family(CLI::App* cmd, FamilyOpts& f) {
  cmd->add_option("--family", f.family,
                  "supersinglet family: pair (two particles of d levels), "
                  "NN (N particles of N levels), qubit (N two-level particles)")
      ->check(CLI::IsMember({"pair", "NN", "qubit"}))
      ->capture_default_str();
  cmd->add_option("--N", f.N, "number of particles (NN and qubit families)")
      ->capture_default_str();
  cmd->add_option("--d", f.d, "levels per particle (pair family)")
      ->capture_default_str();
  cmd->add_option("--cap", f.cap, "size-cap override (-1: library default)")
      ->capture_default_str();
}

ssq::StateVector build_family(const FamilyOpts& f) {
  if (f.family == "pair") {
    return f.cap >= 0 ? ssq::make_pair_singlet(f.d, f.cap)
                      : ssq::make_pair_singlet(f.d);
  }
  if (f.family == "NN") {
    return f.cap >= 0 ? ssq::make_nn_supersinglet(f.N, f.cap)
                      : ssq::make_nn_supersinglet(f.N);
  }
  return f.cap >= 0 ? ssq::make_qubit_supersinglet(f.N, f.cap)
                    : ssq::make_qubit_supersinglet(f.N);
}

// --------------------------------------------------------------------------
// Subcommand handlers
// --------------------------------------------------------------------------
void run_state(const Common& c, const FamilyOpts& f) {
  ssq::StateVector psi = build_family(f);
  if (c.format == "csv") {
    std::vector<std::string> rows;
    rows.reserve(psi.dim());
    for (std::int64_t i = 0; i < psi.dim(); ++i) {
      rows.push_back(std::to_string(i) + "," + fmt(psi.amplitudes[i].real()) +
                     "," + fmt(psi.amplitudes[i].imag()));
    }
    emit_csv("index,re,im", rows);
  } else {
    emit_json(json{{"schema_version", kSchemaVersion},
                   {"family", f.family},
                   {"num_sites", psi.num_sites},
                   {"local_dim", psi.local_dim},
                   {"state", psi}});
  }
  std::cerr << "state: family=" << f.family << " sites=" << psi.num_sites
            << " local_dim=" << psi.local_dim << " dim=" << psi.dim() << "\n";
}

void run_invariance(const Common& c, const FamilyOpts& f, int trials,
                    std::string kind) {
  ssq::StateVector psi = build_family(f);
  if (kind == "auto") {
    // The pair family with d >= 3 is invariant under rotations but not under
    // all of U(d); every other family survives Haar unitaries up to phase.
    kind = (f.family == "pair" && f.d >= 3) ? "rotation" : "haar";
  }
  ssq::SeededRng rng(c.seed);
  double max_dev = 0.0, sum_dev = 0.0;
  for (int t = 0; t < trials; ++t) {
    ssq::Mat u = (kind == "rotation")
                     ? ssq::random_rotation(psi.local_dim, rng)
                     : ssq::haar_unitary(psi.local_dim, rng);
    const double dev = ssq::invariance_deviation(psi, u);
    max_dev = std::max(max_dev, dev);
    sum_dev += dev;
  }
  const double mean_dev = sum_dev / trials;
  const bool invariant = max_dev < 1e-9;
  if (c.format == "csv") {
    emit_csv(
        "family,num_sites,local_dim,trials,unitary_kind,max_deviation,"
        "mean_deviation,invariant",
        {f.family + "," + std::to_string(psi.num_sites) + "," +
         std::to_string(psi.local_dim) + "," + std::to_string(trials) + "," +
         kind + "," + fmt(max_dev) + "," + fmt(mean_dev) + "," +
         (invariant ? "true" : "false")});
  } else {
    emit_json(json{{"schema_version", kSchemaVersion},
                   {"family", f.family},
                   {"num_sites", psi.num_sites},
                   {"local_dim", psi.local_dim},
                   {"trials", trials},
                   {"unitary_kind", kind},
                   {"max_deviation", max_dev},
                   {"mean_deviation", mean_dev},
                   {"invariant", invariant}});
  }
  std::cerr << "invariance: family=" << f.family << " trials=" << trials
            << " kind=" << kind << " max_deviation=" << max_dev << "\n";
}

void run_bell_max(const Common& c, int N, int m, bool table) {
  std::vector<ssq::ViolationResult> results;
  if (table) {
    for (int n = 2; n <= 10; ++n) results.push_back(ssq::maximize_violation(n, 1));
    for (int n = 4; n <= 10; ++n) results.push_back(ssq::maximize_violation(n, 2));
  } else {
    results.push_back(ssq::maximize_violation(N, m));
  }
  if (c.format == "csv") {
    std::vector<std::string> rows;
    for (const auto& r : results) {
      rows.push_back(std::to_string(r.N) + "," + std::to_string(r.m) + "," +
                     fmt(r.value) + "," + fmt(r.angles[0]) + "," +
                     fmt(r.angles[1]) + "," + fmt(r.angles[2]) + "," +
                     fmt(r.angles[3]));
    }
    emit_csv("N,m,value,angle_A,angle_a,angle_B,angle_b", rows);
  } else {
    emit_json(json{{"schema_version", kSchemaVersion}, {"results", results}});
  }
  std::cerr << "bell-max: " << results.size() << " result(s), first value="
            << results.front().value << "\n";
}

void run_corr_check(const Common& c, int N, int m, int trials, int cap) {
  if (N > cap) {
    throw ssq::resource_limit_error(
        "brute-force check capped at N=" + std::to_string(cap) +
        " (dimension N^N); raise --cap only with patience");
  }
  ssq::StateVector psi = ssq::make_nn_supersinglet(N, std::max(N, 7));
  ssq::SeededRng rng(c.seed);
  json rows = json::array();
  std::vector<std::string> csv_rows;
  double max_err = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double theta = 2.0 * M_PI * rng.uniform();
    const double closed = (m == 1) ? ssq::corr_closed_m1(N, theta)
                                   : ssq::corr_closed_m2(N, theta);
    const double brute =
        ssq::correlation_bruteforce(psi, ssq::planar_spec(N, m, theta, 0.0));
    const double err = std::abs(closed - brute);
    max_err = std::max(max_err, err);
    if (c.format == "csv") {
      csv_rows.push_back(fmt(theta) + "," + fmt(closed) + "," + fmt(brute) +
                         "," + fmt(err));
    } else {
      rows.push_back(json{{"theta", theta},
                          {"closed", closed},
                          {"brute", brute},
                          {"abs_error", err}});
    }
  }
  if (c.format == "csv") {
    emit_csv("theta,closed,brute,abs_error", csv_rows);
  } else {
    emit_json(json{{"schema_version", kSchemaVersion},
                   {"N", N},
                   {"m", m},
                   {"trials", trials},
                   {"max_abs_error", max_err},
                   {"rows", rows}});
  }
  std::cerr << "corr-check: N=" << N << " m=" << m << " trials=" << trials
            << " max_abs_error=" << max_err << "\n";
}

void run_sample(const Common& c, const FamilyOpts& f, int trials, double polar,
                double azimuth) {
  ssq::StateVector psi = build_family(f);
  const ssq::Direction dir{polar, azimuth};
  ssq::JointSampler sampler(psi, dir);
  ssq::SeededRng rng(c.seed);
  std::vector<std::vector<int>> outcomes;
  outcomes.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    outcomes.push_back(sampler.sample(rng).outcomes);
  }
  if (c.format == "csv") {
    std::string header = "round";
    for (int k = 0; k < psi.num_sites; ++k) header += ",site" + std::to_string(k);
    std::vector<std::string> rows;
    for (int t = 0; t < trials; ++t) {
      std::string row = std::to_string(t);
      for (int v : outcomes[t]) row += "," + std::to_string(v);
      rows.push_back(row);
    }
    emit_csv(header, rows);
  } else {
    emit_json(json{{"schema_version", kSchemaVersion},
                   {"family", f.family},
                   {"num_sites", psi.num_sites},
                   {"local_dim", psi.local_dim},
                   {"trials", trials},
                   {"direction", dir},
                   {"outcomes", outcomes}});
  }
  std::cerr << "sample: family=" << f.family << " trials=" << trials
            << " direction=(" << polar << "," << azimuth << ")\n";
}

ssq::TableSource parse_source(const std::string& s) {
  return s == "quantum" ? ssq::TableSource::quantum : ssq::TableSource::direct;
}

void run_table(const Common& c, int N, int L, const std::string& source,
               int cap) {
  ssq::SeededRng rng(c.seed);
  ssq::SequenceTable t =
      cap >= 0 ? ssq::generate_table(N, L, parse_source(source), rng, cap)
               : ssq::generate_table(N, L, parse_source(source), rng);
  if (c.format == "csv") {
    std::string header = "position";
    for (int i = 0; i < N; ++i) header += ",party" + std::to_string(i);
    std::vector<std::string> rows;
    for (int j = 0; j < L; ++j) {
      std::string row = std::to_string(j);
      for (int i = 0; i < N; ++i) row += "," + std::to_string(t.rows[i][j]);
      rows.push_back(row);
    }
    emit_csv(header, rows);
  } else {
    emit_json(json{{"schema_version", kSchemaVersion},
                   {"source", source},
                   {"table", t}});
  }
  std::cerr << "table: N=" << N << " L=" << L << " source=" << source << "\n";
}

void run_nsp(const Common& c, int N, int L, const std::string& source) {
  ssq::SeededRng rng(c.seed);
  ssq::SequenceTable t = ssq::generate_table(N, L, parse_source(source), rng);
  std::vector<ssq::NspAssignment> assignments;
  assignments.reserve(L);
  std::vector<int> self_counts(N, 0);
  int total_self = 0;
  for (int j = 0; j < L; ++j) {
    assignments.push_back(ssq::nsp_assign(t, j));
    for (int i : assignments.back().self_assigned) {
      ++self_counts[i];
      ++total_self;
    }
  }
  const double self_rate = (double)total_self / ((double)N * L);
  if (c.format == "csv") {
    std::string header = "round";
    for (int i = 0; i < N; ++i) header += ",victim" + std::to_string(i);
    header += ",num_self_assigned";
    std::vector<std::string> rows;
    for (const auto& a : assignments) {
      std::string row = std::to_string(a.round);
      for (int v : a.victims) row += "," + std::to_string(v);
      row += "," + std::to_string(a.self_assigned.size());
      rows.push_back(row);
    }
    emit_csv(header, rows);
  } else {
    emit_json(json{{"schema_version", kSchemaVersion},
                   {"num_parties", N},
                   {"rounds", L},
                   {"source", source},
                   {"self_counts", self_counts},
                   {"self_rate", self_rate},
                   {"assignments", assignments}});
  }
  std::cerr << "nsp: N=" << N << " rounds=" << L << " self_rate=" << self_rate
            << " (expected " << 1.0 / N << ")\n";
}

void run_ssp(const Common& c, int N, int L, const std::string& source,
             const std::vector<int>& dishonest) {
  ssq::SeededRng rng(c.seed);
  ssq::SequenceTable t = ssq::generate_table(N, L, parse_source(source), rng);
  std::vector<ssq::PartyBehavior> behaviors(N);
  for (int p : dishonest) {
    if (p < 0 || p >= N) {
      throw ssq::invalid_input_error("dishonest party index out of range");
    }
    behaviors[p].strategy = ssq::Strategy::declare_false_share;
  }
  ssq::SspReport report =
      ssq::ssp_run(t, behaviors, ssq::rotating_orders(N, L), rng);
  if (c.format == "csv") {
    std::vector<std::string> rows;
    for (const auto& r : report.rounds) {
      const char* kind = r.kind == ssq::SspRound::Kind::clean ? "clean"
                         : r.kind == ssq::SspRound::Kind::aborted ? "aborted"
                                                                  : "corrupted";
      rows.push_back(std::to_string(r.round) + "," + kind + "," +
                     std::to_string(r.reconstructed) + "," +
                     std::to_string(r.dealer_symbol) + "," +
                     std::to_string(r.liar) + "," +
                     std::to_string(r.honest_undeclared_at_lie) + "," +
                     std::to_string(r.secret_holders_at_lie));
    }
    emit_csv(
        "round,kind,reconstructed,dealer_symbol,liar,honest_undeclared_at_lie,"
        "secret_holders_at_lie",
        rows);
  } else {
    emit_json(json{{"schema_version", kSchemaVersion},
                   {"source", source},
                   {"dishonest", dishonest},
                   {"report", report}});
  }
  std::cerr << "ssp: N=" << N << " rounds=" << L
            << " clean=" << report.rounds_clean
            << " aborted=" << report.rounds_aborted
            << " corrupted=" << report.rounds_corrupted << "\n";
}

void run_ldp(const Common& c, int L, int trials, const std::string& liar,
             int fakes, const std::string& source) {
  if (fakes > 0 && !liar.empty()) {
    throw ssq::invalid_input_error(
        "--fakes and --liar are alternative adversaries; pick one");
  }
  if (fakes < 0) throw ssq::invalid_input_error("--fakes must be >= 0");
  std::array<ssq::PartyBehavior, 3> behaviors{};
  ssq::LdpMessages messages{0, 0, 0};
  std::string label = "none";
  if (liar == "A") {
    behaviors[0].strategy = ssq::Strategy::send_different_messages;
    messages = {0, 2, 0};
    label = "A";
  } else if (liar == "B") {
    behaviors[1].strategy = ssq::Strategy::forward_altered_message;
    messages = {0, 0, 1};
    label = "B";
  } else if (fakes > 0) {
    behaviors[0].strategy = ssq::Strategy::inject_fake_positions;
    behaviors[0].fake_count = fakes;
    label = "A";
  }

  ssq::SeededRng root(c.seed);
  std::map<std::string, int> verdicts{{"consistent", 0},
                                      {"A-lies", 0},
                                      {"B-lies", 0},
                                      {"reject-message", 0}};
  std::map<std::string, int> hops{{"AB", 0}, {"AC", 0}, {"BC", 0}};
  json transcript = nullptr;
  for (int trial = 0; trial < trials; ++trial) {
    ssq::SeededRng rng = root.split(trial);
    ssq::SequenceTable t =
        ssq::generate_table(3, L, parse_source(source), rng);
    ssq::LdpTranscript tr = ssq::ldp_run(t, behaviors, messages, rng);
    ++verdicts[ssq::to_string(tr.verdict)];
    if (tr.verdict == ssq::LdpVerdict::reject_message) ++hops[tr.reject_hop];
    if (trials == 1) transcript = tr;
  }
  if (c.format == "csv") {
    std::vector<std::string> rows;
    for (const auto& [verdict, count] : verdicts) {
      rows.push_back(verdict + "," + std::to_string(count));
    }
    emit_csv("verdict,count", rows);
  } else {
    emit_json(json{{"schema_version", kSchemaVersion},
                   {"L", L},
                   {"trials", trials},
                   {"liar", label},
                   {"fake_count", fakes},
                   {"source", source},
                   {"verdicts",
                    json{{"consistent", verdicts["consistent"]},
                         {"a_lies", verdicts["A-lies"]},
                         {"b_lies", verdicts["B-lies"]},
                         {"reject_message", verdicts["reject-message"]}}},
                   {"reject_hops",
                    json{{"AB", hops["AB"]}, {"AC", hops["AC"]},
                         {"BC", hops["BC"]}}},
                   {"transcript", transcript}});
  }
  std::cerr << "ldp: trials=" << trials << " liar=" << label
            << " consistent=" << verdicts["consistent"]
            << " A-lies=" << verdicts["A-lies"]
            << " B-lies=" << verdicts["B-lies"]
            << " reject=" << verdicts["reject-message"] << "\n";
}

void run_dtest(const Common& c, int N, int rounds, double test_fraction,
               double tamper) {
  ssq::SeededRng rng(c.seed);
  ssq::DtestResult res = ssq::distribute_and_test(
      N, rounds, test_fraction, ssq::TamperModel{tamper}, rng);
  if (c.format == "csv") {
    emit_csv(
        "accepted,rounds,tested_rounds,tampered_columns,first_bad_round,"
        "remaining_length",
        {std::string(res.accepted ? "true" : "false") + "," +
         std::to_string(res.rounds) + "," + std::to_string(res.tested_rounds) +
         "," + std::to_string(res.tampered_columns) + "," +
         (res.first_bad_round ? std::to_string(*res.first_bad_round)
                              : std::string()) +
         "," + std::to_string(res.remaining.length)});
  } else {
    emit_json(json{{"schema_version", kSchemaVersion},
                   {"test_fraction", test_fraction},
                   {"tamper_fraction", tamper},
                   {"result", res}});
  }
  std::cerr << "dtest: N=" << N << " rounds=" << rounds
            << (res.accepted ? " accepted" : " aborted")
            << " tested=" << res.tested_rounds
            << " remaining=" << res.remaining.length << "\n";
}

void run_df(const Common& c, int max_n) {
  if (max_n < 2) throw ssq::invalid_input_error("df needs --N >= 2");
  std::vector<ssq::EfficiencyReport> reports;
  for (int n = 2; n <= max_n; n += 2) {
    reports.push_back(ssq::encoding_efficiency(n));
  }
  if (c.format == "csv") {
    std::vector<std::string> rows;
    for (const auto& r : reports) {
      rows.push_back(std::to_string(r.N) + "," +
                     (r.dimension_exact ? std::to_string(r.dimension)
                                        : std::string()) +
                     "," + fmt(r.log2_dimension) + "," + fmt(r.efficiency) +
                     "," + fmt(r.asymptotic_estimate));
    }
    emit_csv("N,dimension,log2_dimension,efficiency,asymptotic_estimate", rows);
  } else {
    emit_json(json{{"schema_version", kSchemaVersion}, {"rows", reports}});
  }
  std::cerr << "df: " << reports.size() << " rows up to N=" << max_n
            << ", efficiency(" << reports.back().N
            << ")=" << reports.back().efficiency << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supersinglet states, Bell tests, and communication protocols"};
  app.require_subcommand(1);

  // state
  auto* state = app.add_subcommand("state", "build and serialize a supersinglet");
  Common state_c;
  FamilyOpts state_f;
  add_common(state, state_c);
  add_family(state, state_f);
  state->callback([&] { run_state(state_c, state_f); });

  // invariance
  auto* inv = app.add_subcommand(
      "invariance", "deviation under random collective unitaries");
  Common inv_c;
  FamilyOpts inv_f;
  int inv_trials = 100;
  std::string inv_kind = "auto";
  add_common(inv, inv_c);
  add_family(inv, inv_f);
  inv->add_option("--trials", inv_trials, "number of random unitaries")
      ->capture_default_str();
  inv->add_option("--kind", inv_kind, "unitary ensemble")
      ->check(CLI::IsMember({"auto", "rotation", "haar"}))
      ->capture_default_str();
  inv->callback([&] { run_invariance(inv_c, inv_f, inv_trials, inv_kind); });

  // bell-max
  auto* bell = app.add_subcommand(
      "bell-max", "maximize the generalized CHSH violation");
  Common bell_c;
  int bell_n = 3, bell_m = 1;
  bool bell_table = false;
  add_common(bell, bell_c);
  bell->add_option("--N", bell_n, "number of particles")->capture_default_str();
  bell->add_option("--m", bell_m, "particles on the second observer's side")
      ->capture_default_str();
  bell->add_flag("--table", bell_table,
                 "emit the whole table (m=1: N=2..10, m=2: N=4..10)");
  bell->callback([&] { run_bell_max(bell_c, bell_n, bell_m, bell_table); });

  // corr-check
  auto* corr = app.add_subcommand(
      "corr-check", "closed-form correlations vs the brute-force oracle");
  Common corr_c;
  int corr_n = 4, corr_m = 1, corr_trials = 50, corr_cap = 6;
  add_common(corr, corr_c);
  corr->add_option("--N", corr_n, "number of particles")->capture_default_str();
  corr->add_option("--m", corr_m, "split (1 or 2)")->capture_default_str();
  corr->add_option("--trials", corr_trials, "random angles to test")
      ->capture_default_str();
  corr->add_option("--cap", corr_cap, "largest N accepted for brute force")
      ->capture_default_str();
  corr->callback(
      [&] { run_corr_check(corr_c, corr_n, corr_m, corr_trials, corr_cap); });

  // sample
  auto* sample = app.add_subcommand(
      "sample", "joint measurement outcomes along one direction");
  Common sample_c;
  FamilyOpts sample_f;
  int sample_trials = 10;
  double sample_polar = 0.0, sample_azimuth = 0.0;
  add_common(sample, sample_c);
  add_family(sample, sample_f);
  sample->add_option("--trials", sample_trials, "number of joint measurements")
      ->capture_default_str();
  sample->add_option("--polar", sample_polar, "direction polar angle")
      ->capture_default_str();
  sample->add_option("--azimuth", sample_azimuth, "direction azimuth")
      ->capture_default_str();
  sample->callback([&] {
    run_sample(sample_c, sample_f, sample_trials, sample_polar, sample_azimuth);
  });

  // table
  auto* table = app.add_subcommand(
      "table", "generate a shared sequence table (columns are permutations)");
  Common table_c;
  int table_n = 3, table_l = 10, table_cap = -1;
  std::string table_source = "quantum";
  add_common(table, table_c);
  table->add_option("--N", table_n, "parties")->capture_default_str();
  table->add_option("--L", table_l, "table length")->capture_default_str();
  table->add_option("--source", table_source, "quantum: sampled from the state")
      ->check(CLI::IsMember({"quantum", "direct"}))
      ->capture_default_str();
  table->add_option("--cap", table_cap, "quantum-source N cap override")
      ->capture_default_str();
  table->callback(
      [&] { run_table(table_c, table_n, table_l, table_source, table_cap); });

  // nsp
  auto* nsp = app.add_subcommand("nsp", "N-strangers assignment rounds");
  Common nsp_c;
  int nsp_n = 4, nsp_l = 10;
  std::string nsp_source = "quantum";
  add_common(nsp, nsp_c);
  nsp->add_option("--N", nsp_n, "parties")->capture_default_str();
  nsp->add_option("--L", nsp_l, "rounds")->capture_default_str();
  nsp->add_option("--source", nsp_source, "table source")
      ->check(CLI::IsMember({"quantum", "direct"}))
      ->capture_default_str();
  nsp->callback([&] { run_nsp(nsp_c, nsp_n, nsp_l, nsp_source); });

  // ssp
  auto* ssp = app.add_subcommand(
      "ssp", "secret-sharing rounds (party 0 deals, agents declare)");
  Common ssp_c;
  int ssp_n = 5, ssp_l = 100;
  std::string ssp_source = "quantum";
  std::vector<int> ssp_dishonest;
  add_common(ssp, ssp_c);
  ssp->add_option("--N", ssp_n, "parties")->capture_default_str();
  ssp->add_option("--L", ssp_l, "rounds")->capture_default_str();
  ssp->add_option("--source", ssp_source, "table source")
      ->check(CLI::IsMember({"quantum", "direct"}))
      ->capture_default_str();
  ssp->add_option("--dishonest", ssp_dishonest,
                  "agents that declare falsely (comma separated)")
      ->delimiter(',');
  ssp->callback(
      [&] { run_ssp(ssp_c, ssp_n, ssp_l, ssp_source, ssp_dishonest); });

  // ldp
  auto* ldp = app.add_subcommand(
      "ldp", "liar detection: A tells B, B forwards to C, C judges");
  Common ldp_c;
  int ldp_l = 3000, ldp_trials = 100, ldp_fakes = 0;
  std::string ldp_liar, ldp_source = "quantum";
  add_common(ldp, ldp_c);
  ldp->add_option("--L", ldp_l, "sequence length")->capture_default_str();
  ldp->add_option("--trials", ldp_trials, "independent runs")
      ->capture_default_str();
  ldp->add_option("--liar", ldp_liar, "who lies about the message")
      ->check(CLI::IsMember({"A", "B"}));
  ldp->add_option("--fakes", ldp_fakes,
                  "A injects this many fake positions instead of lying")
      ->capture_default_str();
  ldp->add_option("--source", ldp_source, "table source")
      ->check(CLI::IsMember({"quantum", "direct"}))
      ->capture_default_str();
  ldp->callback([&] {
    run_ldp(ldp_c, ldp_l, ldp_trials, ldp_liar, ldp_fakes, ldp_source);
  });

  // dtest
  auto* dtest = app.add_subcommand(
      "dtest", "distribute a table and publicly test a random subset");
  Common dtest_c;
  int dtest_n = 3, dtest_l = 1000;
  double dtest_fraction = 0.5, dtest_tamper = 0.0;
  add_common(dtest, dtest_c);
  dtest->add_option("--N", dtest_n, "parties")->capture_default_str();
  dtest->add_option("--L", dtest_l, "rounds distributed")->capture_default_str();
  dtest->add_option("--test-fraction", dtest_fraction,
                    "fraction of rounds sacrificed to the test")
      ->capture_default_str();
  dtest->add_option("--tamper", dtest_tamper,
                    "per-column corruption probability (adversary model)")
      ->capture_default_str();
  dtest->callback([&] {
    run_dtest(dtest_c, dtest_n, dtest_l, dtest_fraction, dtest_tamper);
  });

  // df
  auto* df = app.add_subcommand(
      "df", "decoherence-free subspace dimension and encoding efficiency");
  Common df_c;
  int df_n = 20;
  add_common(df, df_c);
  df->add_option("--N", df_n, "largest qubit count in the table")
      ->capture_default_str();
  df->callback([&] { run_df(df_c, df_n); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ssq: " << e.what() << "\n";
    std::cerr << "run 'ssq --help' (or 'ssq SUBCOMMAND --help') for usage\n";
    return 1;
  } catch (const ssq::invalid_input_error& e) {
    std::cerr << "ssq: invalid input: " << e.what() << "\n";
    return 1;
  } catch (const ssq::resource_limit_error& e) {
    std::cerr << "ssq: resource limit: " << e.what() << "\n";
    return 2;
  } catch (const ssq::internal_consistency_error& e) {
    std::cerr << "ssq: internal consistency: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "ssq: internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
