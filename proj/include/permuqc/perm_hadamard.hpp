#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "permuqc/clifford.hpp"
#include "permuqc/logical_frame.hpp"
#include "permuqc/permutation.hpp"
#include "permuqc/state.hpp"

namespace permuqc {

// Encoded qubit on 16 physical qubits split into two 8-qubit registers.
// The frame vectors are Fourier rows of the length-8 cycle, superposed
// across the registers so that bare qubit permutations act as H, X, Y, Z
// on the encoded qubit.
struct EncodedQubitFrame {
  SparseState row_x0, row_x1;   // first register, 8 qubits, weight 1
  SparseState row_y0, row_y1;   // second register, 8 qubits, weight 1
  SparseState basis0, basis1;   // encoded frame, 16 qubits, weight 2
};

EncodedQubitFrame encoded_qubit_frame();

// w^{offset} / sqrt(8) * sum_j w^{step (j-1)} |j>, with w = exp(i pi / 4)
// and |j> the single excitation at qubit j of 8.
SparseState fourier_row(int step, int offset);

// Building blocks, each an involution on one 8-qubit register.
QubitPermutation row_swap_perm();     // (1,6)(2,5)(3,4)(7,8); maps x0 to x1
QubitPermutation reflection_perm();   // (1,7)(2,6)(3,5); maps x0 to w x1
QubitPermutation pair_swap_perm();    // (2,6)(4,8); maps y0 to x0

// 16-qubit encoded gates, assembled from the blocks above acting on the
// first register (qubits 1..8) and the second (qubits 9..16).
QubitPermutation encoded_h_perm();
QubitPermutation encoded_z_perm();
QubitPermutation encoded_x_perm();
QubitPermutation encoded_y_perm();

struct EncodedGateCheck {
  std::string name;       // "H", "X", "Y" or "Z"
  Mat2 matrix;            // action of the permutation in the encoded frame
  Mat2 target;
  Cx phase;               // best-fit global phase, matrix ~ phase * target
  double leak_residual;   // norm left outside the encoded span
  double deviation;       // max entry difference after phase alignment
  bool pass = false;
};

EncodedGateCheck check_encoded_gate(const std::string& name, double tol = kMatchTol);
std::vector<EncodedGateCheck> check_all_encoded_gates(double tol = kMatchTol);

// Closure of the encoded H and Z actions inside the single-qubit gate
// catalog. Expected: the eight-element subgroup generated by H and Z.
std::vector<CliffordElement> encoded_gate_group();

void to_json(nlohmann::ordered_json& j, const EncodedGateCheck& c);

}  // namespace permuqc
