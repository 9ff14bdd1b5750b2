#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "permuqc/state.hpp"

namespace permuqc {

// Bijection on qubit labels {1..num_qubits}. The convention throughout is
// "move-to": the induced operator moves the content of qubit j to qubit
// image_of(j). Cycle notation (a,b,c) therefore means a's content goes to b,
// b's to c, c's to a.
struct QubitPermutation {
  int num_qubits = 0;
  std::vector<int> image;                 // image[j-1] = destination of qubit j
  std::vector<std::vector<int>> cycles;   // nontrivial cycles, smallest label first

  int image_of(int j) const { return image[static_cast<std::size_t>(j - 1)]; }
  int preimage_of(int j) const;
  bool is_identity() const { return cycles.empty(); }
  bool is_involution() const;

  bool operator==(const QubitPermutation&) const = default;
};

QubitPermutation identity_perm(int num_qubits);
QubitPermutation perm_from_image(int num_qubits, std::vector<int> image);
QubitPermutation perm_from_cycles(int num_qubits,
                                  const std::vector<std::vector<int>>& cycles);
// Parses cycle notation such as "(1,2,3)(5,6)" or "id".
QubitPermutation perm_from_cycle_string(int num_qubits, const std::string& text);
// compose(p, q) applies q first, then p.
QubitPermutation compose(const QubitPermutation& p, const QubitPermutation& q);
QubitPermutation inverse(const QubitPermutation& p);
QubitPermutation perm_power(const QubitPermutation& p, long e);
long perm_order(const QubitPermutation& p);

SparseState apply_perm(const QubitPermutation& p, const SparseState& s);

// All weight-k occupancy patterns of num_qubits qubits, lexicographic by bit string.
std::vector<BasisState> weight_strings(int num_qubits, int k);

// The permutation a qubit permutation induces on the weight-k strings,
// together with its cycle decomposition (fixed points included as 1-cycles).
struct InducedAction {
  int num_qubits = 0;
  int k = 0;
  std::vector<BasisState> strings;        // lexicographic
  std::vector<int> image;                 // image[i] = index of the moved string
  std::vector<std::vector<int>> cycles;   // every index appears exactly once
};

InducedAction induced_weight_action(const QubitPermutation& p, int k);

// Orthonormal eigenvectors of the induced weight-k action for eigenvalue
// lambda: one DFT vector per cycle whose length c satisfies lambda^c = 1.
std::vector<SparseState> eigenspace_basis(const QubitPermutation& p, int k, Cx lambda);

void to_json(nlohmann::ordered_json& j, const QubitPermutation& p);

}  // namespace permuqc
