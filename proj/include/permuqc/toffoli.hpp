#pragma once

#include <nlohmann/json_fwd.hpp>

#include "permuqc/dualrail.hpp"

namespace permuqc {

// Toffoli over three logical registers (controls 1, 2; target 3) from the
// standard 6-CNOT decomposition: two Hadamard blocks, six controlled flips,
// and eight free phase-rotation permutations (seven eighth-turn slots, one
// quarter-turn slot). Requires n divisible by 4.
//
// phase_scale records the angle unit actually used: 1 means each slot is the
// intended eighth turn (needs n divisible by 8); 2 means every slot was
// doubled to the quarter turn available when n = 4 mod 8, which makes the
// whole circuit collapse to the identity and serves as an exact end-to-end
// pipeline check at desk scale.
struct ToffoliSchedule {
  int n = 0;
  int phase_scale = 1;
  Schedule schedule;
};

ToffoliSchedule toffoli_schedule(int n);

// Expected logical action of toffoli_schedule(n) on a computational basis
// string "abc": the Toffoli truth table at phase_scale 1, identity at 2.
std::string toffoli_expected_bits(const ToffoliSchedule& ts, const std::string& bits);

struct GateCounts {
  int single_qubit = 0;
  int cnot = 0;
};

// Timesteps in the reference exchange-interaction model at the given
// per-gate costs (single-qubit gates cost 1).
int baseline_timesteps(const GateCounts& counts, int cnot_cost);

struct CompareReport {
  int n = 0;
  int extended_timesteps = 0;     // this scheme: 10n + 2
  int baseline_13 = 0;            // 7 + 6*13
  int baseline_11 = 0;            // 7 + 6*11, the other published CNOT figure
  int delta_13 = 0;
  int cnot_blocks = 0;
  int hadamard_blocks = 0;
  int phase_perm_gates = 0;
};

CompareReport compare_report(int n);

void to_json(nlohmann::ordered_json& j, const CompareReport& r);

}  // namespace permuqc
