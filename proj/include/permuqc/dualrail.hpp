#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "permuqc/logical_frame.hpp"
#include "permuqc/schedule.hpp"

namespace permuqc {

// A file of `count` logical qubits, each encoded in a 4n-qubit block laid out
// as four rows of n. Register q occupies physical qubits
// [4n(q-1)+1 .. 4nq]; row r within a block starts at offset (r-1)n.
struct LogicalRegister {
  int n = 2;
  int count = 1;

  int total_qubits() const { return 4 * n * count; }
  int block_base(int q) const;  // physical offset of register q (1-based)
};

// Single-excitation cyclic states over 2n qubits: the excitation lives in the
// first row for psi0 and the second row for psi1, with amplitudes
// x^{j-1}/sqrt(n), x = e^{2*pi*i/n}.
SparseState psi0(int n);
SparseState psi1(int n);

// |0_L> = psi0 (x) psi1, |1_L> = psi1 (x) psi0 on 4n qubits.
std::pair<SparseState, SparseState> logical_basis(int n);

// Bit flip: swaps rows 1<->2 and 3<->4.
QubitPermutation alpha_perm(int n);
// Phase: cycles row 3 one step downward; fixes |0_L>, multiplies |1_L> by x.
QubitPermutation gamma_perm(int n);
QubitPermutation gamma_power_perm(int n, long e);

// n layers of n Fredkins: row-2 qubit n+j controls the swap of row-3/row-4
// qubits (2n+t, 3n+t), scheduled into layer (j+t) mod n so each layer's
// supports stay disjoint. Maps |psi_i>|psi_j> to |psi_i>|psi_{i+j mod 2}>.
Schedule c_beta_schedule(int n);

// Searches gamma exponents k_pre, k_post so that
// gamma^{k_post} . C_beta U_beta C_beta . gamma^{k_pre} acts as the Hadamard
// with one shared global phase on both logical basis states. The resonant
// part costs 2n+1 timesteps; the gamma corrections are free.
struct HadamardCalibration {
  bool ok = false;
  int n = 0;
  int pre_exponent = 0;
  int post_exponent = 0;
  double residual = 0.0;   // deviation of the calibrated logical matrix from H
  Schedule schedule;       // empty when !ok
  std::string note;
};
HadamardCalibration calibrate_hadamard(int n);

// Controlled bit flip between two registers of a `num_registers`-wide file:
// row-2 controls drive the target's row-1/2 swap and row-3 controls drive the
// target's row-3/4 swap, packed into n layers of 2n Fredkins.
Schedule cnot_schedule(int n, int num_registers, int control, int target);

// Amplitude of every logical product basis state plus the norm left outside
// the code space.
struct DecodeTable {
  int n = 0;
  int count = 0;
  std::vector<std::pair<std::string, Cx>> amps;  // key: logical bit string
  double residual = 0.0;
};
DecodeTable decode(const SparseState& s, const LogicalRegister& reg);

// Tensor product of logical basis states for the given logical bit string.
SparseState logical_product_state(const LogicalRegister& reg, const std::string& bits);

void to_json(nlohmann::ordered_json& j, const DecodeTable& table);

}  // namespace permuqc
