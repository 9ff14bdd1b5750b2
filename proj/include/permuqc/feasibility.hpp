#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "permuqc/permutation.hpp"
#include "permuqc/state.hpp"

namespace permuqc {

// A candidate pair of qubit permutations that might act on some weight-k
// doublet {u, v} as the phase gate and the Hadamard gate:
//   P u = z1 u            P v = i z1 v
//   H u = z2 (u + v)/sqrt(2)
//   H v = z2 (u - v)/sqrt(2)
// with unit scalars z1, z2. The pair is feasible when such a doublet exists.
struct PermPair {
  int num_qubits = 0;   // M
  int weight = 0;       // k
  QubitPermutation phase_perm;
  QubitPermutation hadamard_perm;
};

// Unit scalars attached to one doublet candidate.
struct PhasePair {
  TurnFraction z1;
  TurnFraction z2;

  auto operator<=>(const PhasePair&) const = default;
};

// Distinct eigenvalues of the action induced on weight-k strings, as exact
// turn fractions collected from the cycle lengths.
std::vector<TurnFraction> induced_eigenvalue_fractions(const QubitPermutation& p, int k);

// All (z1, z2) worth checking: z1 and i z1 must both be eigenvalues of the
// induced phase_perm, and z2^2 an eigenvalue of the induced hadamard_perm
// squared. Sorted and deduplicated.
std::vector<PhasePair> phase_candidates(const PermPair& pair);

// Necessary condition for feasibility: the induced phase_perm has an orbit
// of length divisible by 4, and the induced hadamard_perm*phase_perm
// composite has an orbit of length divisible by 3. Cheap to evaluate, so
// searches use it to skip hopeless pairs.
bool orbit_filter(const PermPair& pair);

struct DoubletWitness {
  PhasePair phases;
  SparseState u;
  SparseState v;
  double max_residual = 0.0;   // worst defining-equation violation, plus |<u,v>|
};

struct KernelProbe {
  PhasePair phases;
  int eigdim_z1 = 0;     // dim of the z1 eigenspace of the induced phase perm
  int eigdim_iz1 = 0;
  int kernel_dim = 0;    // solution space dimension for this (z1, z2)
};

struct FeasibilityReport {
  PermPair pair;
  int space_dim = 0;     // number of weight-k strings
  bool filter_passed = false;
  std::vector<KernelProbe> probes;
  std::vector<DoubletWitness> witnesses;   // one per feasible phase pair
  bool feasible = false;
};

// Eigenspace route: for each candidate (z1, z2), parameterizes u and v by
// the two phase_perm eigenspaces and solves the remaining Hadamard
// constraints by SVD. Witnesses are normalized so |u| = |v| = 1.
FeasibilityReport check_feasibility(const PermPair& pair, bool want_witnesses = true);

struct RankProbe {
  PhasePair phases;
  int rank = 0;
  int rank_deficiency = 0;   // 2 * space_dim - rank; positive means feasible
};

struct RankReport {
  PermPair pair;
  int space_dim = 0;
  std::vector<RankProbe> probes;
  bool feasible = false;
};

// Independent route: stacks all four constraint blocks into one matrix per
// candidate and measures rank deficiency by dense Gaussian elimination.
// No shared numerics with check_feasibility. Limited to 12 qubits.
RankReport check_feasibility_by_rank(const PermPair& pair, bool alternate_v_block = false);

enum class SearchStrategy { kExhaustive, kStructured, kRandom };

SearchStrategy search_strategy_from_name(const std::string& name);
std::string search_strategy_name(SearchStrategy s);

struct SearchConfig {
  int num_qubits = 4;
  int weight = 1;
  SearchStrategy strategy = SearchStrategy::kExhaustive;
  std::uint64_t budget = 0;         // pairs to examine this run; 0 means to the end
  std::uint64_t start_cursor = 0;   // resume point in the enumeration
  std::uint64_t seed = 0;           // random strategy only
  bool apply_orbit_filter = true;
  int workers = 1;
};

// One examined pair. Emitted in cursor order regardless of worker count.
struct PairOutcome {
  std::uint64_t cursor = 0;
  QubitPermutation phase_perm;
  QubitPermutation hadamard_perm;
  bool filter_passed = false;
  bool checked = false;    // full feasibility check ran
  bool feasible = false;
  std::vector<PhasePair> feasible_phases;
};

struct SearchOutcome {
  std::uint64_t examined = 0;
  std::uint64_t filter_passed = 0;
  std::uint64_t feasible_count = 0;
  std::uint64_t next_cursor = 0;
  bool exhausted = false;   // the enumeration ran out at next_cursor
};

// Total enumeration length for the deterministic strategies; 0 for the
// random strategy, which is an unbounded stream addressed by cursor.
std::uint64_t search_space_size(const SearchConfig& config);

// Pair at a given cursor, per strategy. Random pairs depend only on
// (seed, cursor), so any cursor range can be replayed independently.
PermPair pair_at_cursor(const SearchConfig& config, std::uint64_t cursor);

SearchOutcome run_search(const SearchConfig& config,
                         const std::function<void(const PairOutcome&)>& sink);

void to_json(nlohmann::ordered_json& j, const PhasePair& p);
void to_json(nlohmann::ordered_json& j, const FeasibilityReport& r);
void to_json(nlohmann::ordered_json& j, const RankReport& r);
void to_json(nlohmann::ordered_json& j, const PairOutcome& o);
void to_json(nlohmann::ordered_json& j, const SearchOutcome& o);

}  // namespace permuqc
