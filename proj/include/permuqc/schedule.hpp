#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "permuqc/gates.hpp"

namespace permuqc {

// Ordered list of parallel layers. Timestep cost counts only layers that
// contain at least one resonant op (Exchange or Fredkin); permutations and
// bookkeeping phases are free.
struct Schedule {
  int num_qubits = 0;
  std::vector<Layer> layers;

  void push(Layer layer) { layers.push_back(std::move(layer)); }
  void append(const Schedule& other);
};

void validate_schedule(const Schedule& schedule);
SparseState apply_schedule(const SparseState& s, const Schedule& schedule);
int timesteps(const Schedule& schedule);

struct GateTally {
  int perms = 0;
  int exchanges = 0;
  int fredkins = 0;
  int phases = 0;
};
GateTally tally_gates(const Schedule& schedule);

// Shift every qubit reference by `offset` into a wider register file.
Schedule embed_schedule(const Schedule& schedule, int offset, int total_qubits);

// After compilation, physical qubit j of the compiled run holds the content
// the original run leaves at perm.image_of(j); applying `perm` to the
// compiled output reproduces the original output.
struct RelabelMap {
  QubitPermutation perm;
};

struct CompiledSchedule {
  Schedule schedule;
  RelabelMap map;
};

// Removes every PermGate by folding it into a running relabeling and
// rewriting the qubit indices of all later ops. Ops inside a layer are
// processed in listed order. Layers left empty are dropped.
CompiledSchedule compile_relabeling(const Schedule& schedule);

void to_json(nlohmann::ordered_json& j, const Schedule& schedule);

}  // namespace permuqc
