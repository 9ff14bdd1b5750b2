#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "permuqc/common.hpp"

namespace permuqc {

inline constexpr int kMaxQubits = 256;

// Occupancy pattern of a fixed-size qubit row. Qubit labels are 1-based.
// Bits are packed MSB-first (qubit 1 at bit 63 of words[0]) so that the
// default ordering of `words` coincides with lexicographic order of the
// printed bit string.
struct BasisState {
  int num_qubits = 0;
  std::array<std::uint64_t, 4> words{};

  BasisState() = default;
  explicit BasisState(int n);
  static BasisState from_positions(int n, const std::vector<int>& excited);

  bool bit(int qubit) const;
  void set_bit(int qubit, bool value);
  int weight() const;
  std::vector<int> excited_positions() const;
  std::string bits() const;
  static BasisState parse(const std::string& bits);

  auto operator<=>(const BasisState&) const = default;
};

// Sparse complex amplitude vector over basis states of one qubit count.
// `weight` is set when every stored key shares one Hamming weight.
struct SparseState {
  int num_qubits = 0;
  std::optional<int> weight;
  std::map<BasisState, Cx> terms;

  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
};

// Prunes tiny amplitudes and derives the fixed-weight flag.
SparseState finalize_state(int num_qubits, std::map<BasisState, Cx>&& terms);

SparseState make_excited(int num_qubits, const std::vector<int>& excited);
SparseState superpose(const std::vector<std::pair<Cx, SparseState>>& parts);
SparseState scale(const SparseState& s, Cx factor);

// Conjugate-linear in the first argument.
Cx inner_product(const SparseState& a, const SparseState& b);
double norm(const SparseState& s);
// |<a|b>| for normalized a, b; throws on unnormalized input.
double fidelity_mod_phase(const SparseState& a, const SparseState& b);
// Concatenates qubit rows: b's qubit j becomes qubit a.num_qubits + j.
SparseState tensor(const SparseState& a, const SparseState& b);

double distance(const SparseState& a, const SparseState& b);

void to_json(nlohmann::ordered_json& j, const SparseState& s);
SparseState state_from_json(const nlohmann::ordered_json& j);

}  // namespace permuqc
