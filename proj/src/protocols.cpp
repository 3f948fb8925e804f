#include "ssq/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_set>

#include "ssq/measurement.hpp"

namespace ssq {

std::vector<int> SequenceTable::column(int j) const {
  if (j < 0 || j >= length) throw invalid_input_error("column index out of range");
  std::vector<int> col(num_parties);
  for (int i = 0; i < num_parties; ++i) col[i] = rows[i][j];
  return col;
}

bool SequenceTable::column_is_permutation(int j) const {
  std::vector<char> seen(num_parties, 0);
  for (int i = 0; i < num_parties; ++i) {
    int v = rows[i][j];
    if (v < 0 || v >= num_parties || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

SequenceTable generate_table(int N, int L, TableSource source, SeededRng& rng,
                             int quantum_cap) {
  if (N < 2 || L < 1) throw invalid_input_error("generate_table needs N >= 2, L >= 1");
  SequenceTable table;
  table.num_parties = N;
  table.length = L;
  table.rows.assign(N, std::vector<int>(L));

  if (source == TableSource::quantum) {
    if (N > quantum_cap) {
      throw resource_limit_error(
          "N=" + std::to_string(N) + " exceeds the quantum-source cap " +
          std::to_string(quantum_cap) + "; use the direct source instead");
    }
    StateVector psi = make_nn_supersinglet(N, quantum_cap);
    // One public random direction; the outcome law is the same for all of
    // them, so a single rotated table serves every round.
    Direction dir{std::acos(std::clamp(2.0 * rng.uniform() - 1.0, -1.0, 1.0)),
                  2.0 * M_PI * rng.uniform()};
    JointSampler sampler(psi, dir);
    for (int j = 0; j < L; ++j) {
      OutcomeRecord rec = sampler.sample(rng);
      for (int i = 0; i < N; ++i) table.rows[i][j] = rec.outcomes[i];
    }
  } else {
    std::vector<int> perm(N);
    for (int j = 0; j < L; ++j) {
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = N - 1; i > 0; --i) {
        std::swap(perm[i], perm[rng.uniform_int(i + 1)]);
      }
      for (int i = 0; i < N; ++i) table.rows[i][j] = perm[i];
    }
  }
  return table;
}

NspAssignment nsp_assign(const SequenceTable& table, int round) {
  if (round < 0 || round >= table.length) {
    throw invalid_input_error("round index out of range");
  }
  NspAssignment out;
  out.round = round;
  out.victims = table.column(round);
  for (int i = 0; i < table.num_parties; ++i) {
    if (out.victims[i] == i) out.self_assigned.push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> rotating_orders(int N, int rounds) {
  std::vector<std::vector<int>> orders(rounds);
  const int agents = N - 1;
  for (int j = 0; j < rounds; ++j) {
    orders[j].resize(agents);
    for (int k = 0; k < agents; ++k) {
      orders[j][k] = 1 + (k + j) % agents;
    }
  }
  return orders;
}

SspReport ssp_run(const SequenceTable& table,
                  const std::vector<PartyBehavior>& behaviors,
                  const std::vector<std::vector<int>>& declaration_orders,
                  SeededRng& rng) {
  const int N = table.num_parties;
  if ((int)behaviors.size() != N) {
    throw invalid_input_error("ssp_run needs one behavior per party");
  }
  if (behaviors[0].strategy != Strategy::honest) {
    throw invalid_input_error("party 0 is the dealer and cannot declare falsely");
  }
  if ((int)declaration_orders.size() != table.length) {
    throw invalid_input_error("ssp_run needs one declaration order per round");
  }

  SspReport report;
  report.num_parties = N;
  report.rounds_total = table.length;
  report.rounds.reserve(table.length);
  report.recovered_key.reserve(table.length);

  for (int j = 0; j < table.length; ++j) {
    const std::vector<int>& order = declaration_orders[j];
    {
      // Orders are permutations of the agents 1..N-1.
      if ((int)order.size() != N - 1) {
        throw invalid_input_error("declaration order must list every agent once");
      }
      std::vector<char> seen(N, 0);
      for (int p : order) {
        if (p < 1 || p >= N || seen[p]) {
          throw invalid_input_error("declaration order must list every agent once");
        }
        seen[p] = 1;
      }
    }

    const std::vector<int> col = table.column(j);
    SspRound round;
    round.round = j;
    round.dealer_symbol = col[0];

    std::vector<char> declared(N, 0);  // by symbol
    bool aborted = false;
    bool corrupted = false;

    for (int pos = 0; pos < (int)order.size() && !aborted; ++pos) {
      const int party = order[pos];
      int symbol;
      if (behaviors[party].strategy == Strategy::declare_false_share) {
        // Plausible lies: symbols nobody has declared yet, minus the liar's
        // own. Those are exactly the symbols the other secret holders
        // (dealer + undeclared honest agents) still hold.
        std::vector<int> candidates;
        for (int s = 0; s < N; ++s) {
          if (!declared[s] && s != col[party]) candidates.push_back(s);
        }
        symbol = candidates[rng.uniform_int((int)candidates.size())];
        int honest_undeclared = 0;
        for (int q = pos + 1; q < (int)order.size(); ++q) {
          if (behaviors[order[q]].strategy == Strategy::honest) ++honest_undeclared;
        }
        round.liar = party;
        round.honest_undeclared_at_lie = honest_undeclared;
        round.secret_holders_at_lie = honest_undeclared + 2;
      } else {
        symbol = col[party];
      }

      if (declared[symbol]) {
        aborted = true;  // public contradiction
        break;
      }
      // An honest agent still to declare hears its own symbol: it stops the
      // round. The dealer never reacts (see header).
      for (int q = pos + 1; q < (int)order.size(); ++q) {
        const int other = order[q];
        if (behaviors[other].strategy == Strategy::honest && col[other] == symbol) {
          aborted = true;
          break;
        }
      }
      if (aborted) break;
      if (symbol != col[party]) corrupted = true;
      declared[symbol] = 1;
    }

    if (aborted) {
      round.kind = SspRound::Kind::aborted;
      round.reconstructed = -1;
      ++report.rounds_aborted;
    } else {
      int missing = -1;
      for (int s = 0; s < N; ++s) {
        if (!declared[s]) {
          missing = s;
          break;
        }
      }
      round.reconstructed = missing;
      if (corrupted) {
        round.kind = SspRound::Kind::corrupted;
        ++report.rounds_corrupted;
      } else {
        round.kind = SspRound::Kind::clean;
        ++report.rounds_clean;
      }
    }
    report.recovered_key.push_back(round.reconstructed);
    report.rounds.push_back(round);
  }
  return report;
}

std::vector<int> ldp_list(const std::vector<int>& sequence, int symbol) {
  std::vector<int> positions;
  for (int p = 0; p < (int)sequence.size(); ++p) {
    if (sequence[p] == symbol) positions.push_back(p);
  }
  return positions;
}

double ldp_min_list_length(int L) {
  return L / 3.0 - 6.0 * std::sqrt(2.0 * L / 9.0);
}

double ldp_union_threshold(int L) {
  return 2.0 * L / 3.0 - 3.0 * std::sqrt(4.0 * L / 9.0);
}

LdpValidation ldp_validate(const std::vector<int>& received_list,
                           const std::vector<int>& receiver_sequence,
                           int symbol, int L) {
  LdpValidation v;
  for (int p : received_list) {
    if (p < 0 || p >= L) {
      v.malformed = true;
      v.reason = "position out of range";
      return v;
    }
    if (receiver_sequence[p] == symbol) {
      v.reason = "list intersects the receiver's own positions for the symbol";
      return v;
    }
  }
  if ((double)received_list.size() < ldp_min_list_length(L)) {
    v.reason = "list shorter than the minimum plausible length";
    return v;
  }
  v.accepted = true;
  return v;
}

const char* to_string(LdpVerdict v) {
  switch (v) {
    case LdpVerdict::consistent: return "consistent";
    case LdpVerdict::a_lies: return "A-lies";
    case LdpVerdict::b_lies: return "B-lies";
    case LdpVerdict::reject_message: return "reject-message";
  }
  return "?";
}

namespace {

// Replace n entries of an honest list with positions where the sender does
// not hold the symbol (rule-breaking "erroneous data").
std::vector<int> inject_fakes(std::vector<int> list,
                              const std::vector<int>& sender_sequence,
                              int symbol, int n, SeededRng& rng) {
  std::vector<int> wrong;
  for (int p = 0; p < (int)sender_sequence.size(); ++p) {
    if (sender_sequence[p] != symbol) wrong.push_back(p);
  }
  const int count = std::min({n, (int)list.size(), (int)wrong.size()});
  // Distinct wrong positions into distinct slots, so the list really carries
  // `count` erroneous entries.
  std::vector<int> slots((int)list.size());
  std::iota(slots.begin(), slots.end(), 0);
  for (int k = 0; k < count; ++k) {
    std::swap(slots[k], slots[k + rng.uniform_int((int)slots.size() - k)]);
  }
  std::unordered_set<int> used;
  for (int k = 0; k < count; ++k) {
    int fake;
    do {
      fake = wrong[rng.uniform_int((int)wrong.size())];
    } while (used.count(fake));
    used.insert(fake);
    list[slots[k]] = fake;
  }
  return list;
}

}  // namespace

LdpTranscript ldp_run(const SequenceTable& table,
                      const std::array<PartyBehavior, 3>& behaviors,
                      const LdpMessages& messages, SeededRng& rng) {
  if (table.num_parties != 3) {
    throw invalid_input_error("the liar-detection protocol is three-party");
  }
  for (int m : {messages.m_ab, messages.m_ac, messages.m_bc}) {
    if (m < 0 || m > 2) throw invalid_input_error("messages must be trits");
  }
  if (behaviors[2].strategy != Strategy::honest) {
    throw invalid_input_error("C issues the verdict and is honest by definition");
  }

  const std::vector<int>& seq_a = table.rows[0];
  const std::vector<int>& seq_b = table.rows[1];
  const std::vector<int>& seq_c = table.rows[2];
  const int L = table.length;

  LdpTranscript t;

  // A's messages. Honest A sends the same trit both ways.
  const Strategy sa = behaviors[0].strategy;
  t.m_ab = messages.m_ab;
  t.m_ac = (sa == Strategy::send_different_messages) ? messages.m_ac : messages.m_ab;
  t.l_ab = ldp_list(seq_a, t.m_ab);
  t.l_ac = ldp_list(seq_a, t.m_ac);
  if (sa == Strategy::inject_fake_positions) {
    t.l_ab = inject_fakes(std::move(t.l_ab), seq_a, t.m_ab,
                          behaviors[0].fake_count, rng);
  }

  // Hop A -> B.
  if (!ldp_validate(t.l_ab, seq_b, t.m_ab, L).accepted) {
    t.verdict = LdpVerdict::reject_message;
    t.reject_hop = "AB";
    t.m_bc = -1;
    return t;
  }

  // B's forwarding. A lying B claims a different message and can only back
  // it with positions from its own row (it does not know A's row for the
  // claimed trit), so both of its lists are drawn from the same ~L/3 pool.
  const Strategy sb = behaviors[1].strategy;
  if (sb == Strategy::forward_altered_message) {
    t.m_bc = messages.m_bc;
    t.l_bc = ldp_list(seq_b, t.m_bc);
    t.l_bc_forward = t.l_bc;
  } else {
    t.m_bc = t.m_ab;
    t.l_bc = ldp_list(seq_b, t.m_bc);
    t.l_bc_forward = t.l_ab;
  }

  // Hop A -> C.
  if (!ldp_validate(t.l_ac, seq_c, t.m_ac, L).accepted) {
    t.verdict = LdpVerdict::reject_message;
    t.reject_hop = "AC";
    return t;
  }
  // Hop B -> C: both lists claim positions free of the trit m_bc.
  if (!ldp_validate(t.l_bc, seq_c, t.m_bc, L).accepted ||
      !ldp_validate(t.l_bc_forward, seq_c, t.m_bc, L).accepted) {
    t.verdict = LdpVerdict::reject_message;
    t.reject_hop = "BC";
    return t;
  }

  if (t.m_ac == t.m_bc) {
    t.verdict = LdpVerdict::consistent;
    return t;
  }

  // Disagreement: C counts B's distinct evidence. Honest B holds two
  // disjoint lists (his own positions and A's) totaling about 2L/3; a lying
  // B cannot exceed about L/3 distinct positions however it pads them.
  std::set<int> join(t.l_bc.begin(), t.l_bc.end());
  join.insert(t.l_bc_forward.begin(), t.l_bc_forward.end());
  t.union_size = (int)join.size();
  t.verdict = ((double)t.union_size >= ldp_union_threshold(L))
                  ? LdpVerdict::a_lies
                  : LdpVerdict::b_lies;
  return t;
}

DtestResult distribute_and_test(int N, int rounds, double test_fraction,
                                const TamperModel& tamper, SeededRng& rng) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw invalid_input_error("test_fraction must lie strictly between 0 and 1");
  }
  if (rounds < 2) throw invalid_input_error("need at least 2 rounds");
  if (tamper.column_fraction < 0.0 || tamper.column_fraction > 1.0) {
    throw invalid_input_error("tamper fraction must lie in [0,1]");
  }

  SequenceTable table = generate_table(N, rounds, TableSource::direct, rng);

  DtestResult result;
  result.rounds = rounds;

  // Corrupt a fraction of columns: copy another party's symbol over one
  // row's entry, which breaks the permutation property with certainty.
  for (int j = 0; j < rounds; ++j) {
    if (rng.uniform() < tamper.column_fraction) {
      int victim = rng.uniform_int(N);
      int donor = (victim + 1 + rng.uniform_int(N - 1)) % N;
      table.rows[victim][j] = table.rows[donor][j];
      ++result.tampered_columns;
    }
  }

  // Random test subset of fixed size (partial Fisher-Yates).
  const int tested = std::max(1, (int)std::floor(test_fraction * rounds));
  std::vector<int> indices(rounds);
  std::iota(indices.begin(), indices.end(), 0);
  for (int k = 0; k < tested; ++k) {
    std::swap(indices[k], indices[k + rng.uniform_int(rounds - k)]);
  }
  std::vector<int> test_set(indices.begin(), indices.begin() + tested);
  std::sort(test_set.begin(), test_set.end());

  result.tested_rounds = tested;
  result.accepted = true;
  for (int j : test_set) {
    if (!table.column_is_permutation(j)) {
      result.accepted = false;
      result.first_bad_round = j;
      break;
    }
  }

  // Tested rounds are revealed and therefore sacrificed either way.
  std::vector<char> is_tested(rounds, 0);
  for (int j : test_set) is_tested[j] = 1;
  result.remaining.num_parties = N;
  result.remaining.length = rounds - tested;
  result.remaining.rows.assign(N, {});
  for (int i = 0; i < N; ++i) {
    result.remaining.rows[i].reserve(rounds - tested);
    for (int j = 0; j < rounds; ++j) {
      if (!is_tested[j]) result.remaining.rows[i].push_back(table.rows[i][j]);
    }
  }
  return result;
}

}  // namespace ssq
