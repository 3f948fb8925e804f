#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ssq/qcore.hpp"
#include "ssq/rng.hpp"

namespace ssq {

// Schema version stamped into every protocol transcript/report.
inline constexpr int kTranscriptSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Sequence tables: the classical resource all three protocols consume.
// Every column is a permutation of {0,...,N-1}; columns are independent and
// uniform over the N! permutations.
// ---------------------------------------------------------------------------
struct SequenceTable {
  int num_parties = 0;
  int length = 0;
  std::vector<std::vector<int>> rows;  // rows[party][position]

  std::vector<int> column(int j) const;
  bool column_is_permutation(int j) const;
};

enum class TableSource { quantum, direct };

// source=quantum: L joint measurements of the N-particle N-level singlet
// along one randomly drawn public direction (the outcome law is direction
// independent). source=direct: L uniform permutations. Identical
// distributions either way.
SequenceTable generate_table(int N, int L, TableSource source, SeededRng& rng,
                             int quantum_cap = 7);

// ---------------------------------------------------------------------------
// Adversary descriptors
// ---------------------------------------------------------------------------
enum class Strategy {
  honest,
  send_different_messages,  // LDP role A: m_AB != m_AC
  forward_altered_message,  // LDP role B: m_BC != m_AB, lists forged from own row
  declare_false_share,      // SSP agent: declares a symbol it does not hold
  inject_fake_positions,    // LDP role A: n wrong entries in l_AB
};

struct PartyBehavior {
  Strategy strategy = Strategy::honest;
  int fake_count = 0;  // only read by inject_fake_positions
};

// ---------------------------------------------------------------------------
// N strangers
// ---------------------------------------------------------------------------
struct NspAssignment {
  int round = 0;
  std::vector<int> victims;        // victims[i] = target of party i
  std::vector<int> self_assigned;  // parties with victims[i] == i, flagged for a re-round
};

NspAssignment nsp_assign(const SequenceTable& table, int round);

// ---------------------------------------------------------------------------
// Secret sharing. Party 0 is the dealer; agents 1..N-1 declare their symbols
// round by round in the given order. The key digit is the one symbol missing
// from the declarations. An honest undeclared agent who hears its own symbol
// declared stops the round (abort). A false declaration that instead lands
// on the dealer's symbol survives the round but corrupts the reconstructed
// digit; the dealer observes the collision but stays silent (reacting would
// leak the key digit).
// ---------------------------------------------------------------------------
struct SspRound {
  enum class Kind { clean, aborted, corrupted };
  int round = 0;
  Kind kind = Kind::clean;
  int reconstructed = -1;           // missing symbol; -1 when aborted
  int dealer_symbol = -1;           // ground truth for this round
  int liar = -1;                    // lying party, or -1
  int honest_undeclared_at_lie = -1;  // h at the moment the lie was declared
  int secret_holders_at_lie = -1;     // r = h + 2 (dealer, liar, h honest)
};

struct SspReport {
  int schema_version = kTranscriptSchemaVersion;
  int num_parties = 0;
  int rounds_total = 0;
  int rounds_clean = 0;
  int rounds_aborted = 0;
  int rounds_corrupted = 0;
  std::vector<SspRound> rounds;
  std::vector<int> recovered_key;  // -1 at aborted rounds
};

// behaviors[party]: only Strategy::declare_false_share is meaningful here
// (and never for party 0). declaration_orders[j] must be a permutation of
// {1,...,N-1}.
SspReport ssp_run(const SequenceTable& table,
                  const std::vector<PartyBehavior>& behaviors,
                  const std::vector<std::vector<int>>& declaration_orders,
                  SeededRng& rng);

// Default declaration schedule: order (1,...,N-1) rotated by one each round,
// so the last declarer cycles.
std::vector<std::vector<int>> rotating_orders(int N, int rounds);

// ---------------------------------------------------------------------------
// Liar detection (3 parties, trit messages)
// ---------------------------------------------------------------------------

// Positions where `sequence` holds `symbol`.
std::vector<int> ldp_list(const std::vector<int>& sequence, int symbol);

struct LdpValidation {
  bool accepted = false;
  bool malformed = false;  // out-of-range position in the list
  std::string reason;      // empty when accepted
};

// Rule II: reject when the received list intersects the receiver's own
// positions for the symbol, or is shorter than the minimum plausible length.
LdpValidation ldp_validate(const std::vector<int>& received_list,
                           const std::vector<int>& receiver_sequence,
                           int symbol, int L);

// Minimum accepted list length: L/3 minus six binomial standard deviations
// (the honest false-reject rate must not erode verdict statistics).
double ldp_min_list_length(int L);

// A-vs-B discrimination threshold on |l_BC(m_BC) u l_BC(m_AB)|: an honest B
// holds two disjoint lists totaling about 2L/3, a lying B can only produce
// about L/3 distinct defensible positions.
double ldp_union_threshold(int L);

enum class LdpVerdict { consistent, a_lies, b_lies, reject_message };

struct LdpTranscript {
  int schema_version = kTranscriptSchemaVersion;
  int m_ab = -1, m_ac = -1, m_bc = -1;
  std::vector<int> l_ab;          // A -> B
  std::vector<int> l_ac;          // A -> C
  std::vector<int> l_bc;          // B -> C, B's own positions for m_bc
  std::vector<int> l_bc_forward;  // B -> C, the list B claims A sent
  LdpVerdict verdict = LdpVerdict::consistent;
  std::string reject_hop;  // "AB" | "AC" | "BC" when verdict is reject_message
  int union_size = -1;     // |l_bc u l_bc_forward| when the length test ran
};

struct LdpMessages {
  int m_ab = 0;
  int m_ac = 0;  // only read when A sends different messages
  int m_bc = 1;  // only read when B alters the forwarded message
};

// behaviors indexed {A, B, C}; C is always honest (she issues the verdict).
LdpTranscript ldp_run(const SequenceTable& table,
                      const std::array<PartyBehavior, 3>& behaviors,
                      const LdpMessages& messages, SeededRng& rng);

// ---------------------------------------------------------------------------
// Distribute-and-test
// ---------------------------------------------------------------------------
struct TamperModel {
  double column_fraction = 0.0;  // each column corrupted with this probability
};

struct DtestResult {
  int schema_version = kTranscriptSchemaVersion;
  bool accepted = false;
  int rounds = 0;
  int tested_rounds = 0;
  int tampered_columns = 0;            // ground truth, for reporting
  std::optional<int> first_bad_round;  // evidence when aborted
  SequenceTable remaining;             // untested rounds (usable table)
};

DtestResult distribute_and_test(int N, int rounds, double test_fraction,
                                const TamperModel& tamper, SeededRng& rng);

const char* to_string(LdpVerdict v);

}  // namespace ssq
