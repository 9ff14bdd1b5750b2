#include "permuqc/toffoli.hpp"

#include <nlohmann/json.hpp>

namespace permuqc {

namespace {

// Phase slot units in eighth turns: T = 1, Tdag = 7, S = 2.
constexpr int kT = 1;
constexpr int kTdag = 7;
constexpr int kS = 2;

void push_phase(Schedule& sched, const LogicalRegister& reg, int q, int units,
                int scale, int block_id) {
  // gamma^e with e = units * scale * n/8 eighth-turn steps of the row cycle.
  int n = reg.n;
  long e = static_cast<long>(units) * scale * n / 8;
  QubitPermutation local = gamma_power_perm(n, e);
  Schedule one;
  one.num_qubits = 4 * n;
  Layer layer;
  layer.origin = "phase#" + std::to_string(block_id) + "@q" + std::to_string(q);
  layer.ops.push_back(PermGate{local});
  one.push(std::move(layer));
  sched.append(embed_schedule(one, reg.block_base(q), reg.total_qubits()));
}

void push_hadamard(Schedule& sched, const LogicalRegister& reg, int q,
                   const HadamardCalibration& cal, int block_id) {
  Schedule embedded = embed_schedule(cal.schedule, reg.block_base(q), reg.total_qubits());
  for (auto& layer : embedded.layers)
    layer.origin = "hadamard#" + std::to_string(block_id) + ":" + layer.origin;
  sched.append(embedded);
}

void push_cnot(Schedule& sched, const LogicalRegister& reg, int control, int target,
               int block_id) {
  Schedule block = cnot_schedule(reg.n, reg.count, control, target);
  for (auto& layer : block.layers)
    layer.origin = "cnot#" + std::to_string(block_id) + ":" + layer.origin;
  sched.append(block);
}

}  // namespace

ToffoliSchedule toffoli_schedule(int n) {
  if (n < 4 || n % 4 != 0)
    throw std::invalid_argument("toffoli_schedule: n must be a positive multiple of 4");
  ToffoliSchedule ts;
  ts.n = n;
  ts.phase_scale = (n % 8 == 0) ? 1 : 2;

  LogicalRegister reg{n, 3};
  HadamardCalibration cal = calibrate_hadamard(n);
  if (!cal.ok) throw std::runtime_error("toffoli_schedule: hadamard calibration failed");

  Schedule& s = ts.schedule;
  s.num_qubits = reg.total_qubits();
  int block = 0;
  int scale = ts.phase_scale;

  push_hadamard(s, reg, 3, cal, ++block);
  push_cnot(s, reg, 2, 3, ++block);
  push_phase(s, reg, 3, kTdag, scale, ++block);
  push_cnot(s, reg, 1, 3, ++block);
  push_phase(s, reg, 3, kT, scale, ++block);
  push_cnot(s, reg, 2, 3, ++block);
  push_phase(s, reg, 3, kTdag, scale, ++block);
  push_cnot(s, reg, 1, 3, ++block);
  push_phase(s, reg, 2, kT, scale, ++block);
  push_phase(s, reg, 3, kT, scale, ++block);
  push_hadamard(s, reg, 3, cal, ++block);
  push_cnot(s, reg, 1, 2, ++block);
  push_phase(s, reg, 2, kTdag, scale, ++block);
  push_cnot(s, reg, 1, 2, ++block);
  push_phase(s, reg, 1, kS, scale, ++block);
  push_phase(s, reg, 1, kTdag, scale, ++block);
  return ts;
}

std::string toffoli_expected_bits(const ToffoliSchedule& ts, const std::string& bits) {
  if (bits.size() != 3) throw std::invalid_argument("toffoli_expected_bits: want 3 bits");
  if (ts.phase_scale != 1) return bits;  // doubled angles cancel: identity
  std::string out = bits;
  if (bits[0] == '1' && bits[1] == '1') out[2] = (bits[2] == '1') ? '0' : '1';
  return out;
}

int baseline_timesteps(const GateCounts& counts, int cnot_cost) {
  return counts.single_qubit + counts.cnot * cnot_cost;
}

CompareReport compare_report(int n) {
  CompareReport r;
  r.n = n;
  r.extended_timesteps = 10 * n + 2;
  GateCounts toffoli{7, 6};
  r.baseline_13 = baseline_timesteps(toffoli, 13);
  r.baseline_11 = baseline_timesteps(toffoli, 11);
  r.delta_13 = r.baseline_13 - r.extended_timesteps;
  r.cnot_blocks = 6;
  r.hadamard_blocks = 2;
  r.phase_perm_gates = 8;
  return r;
}

void to_json(nlohmann::ordered_json& j, const CompareReport& r) {
  j = nlohmann::ordered_json::object();
  j["n"] = r.n;
  j["extendedTimesteps"] = r.extended_timesteps;
  j["baselineCnot13"] = r.baseline_13;
  j["baselineCnot11"] = r.baseline_11;
  j["delta"] = r.delta_13;
  j["breakdown"] = {{"cnotBlocks", r.cnot_blocks},
                    {"cnotTimestepsEach", r.n},
                    {"hadamardBlocks", r.hadamard_blocks},
                    {"hadamardTimestepsEach", 2 * r.n + 1},
                    {"phasePermGates", r.phase_perm_gates},
                    {"phaseTimestepsEach", 0}};
}

}  // namespace permuqc
