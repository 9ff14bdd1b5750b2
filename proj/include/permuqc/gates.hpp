#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "permuqc/permutation.hpp"

namespace permuqc {

// Relabeling move, free of charge in the timestep accounting.
struct PermGate {
  QubitPermutation perm;
};

// e^{i*theta*pi_ij}: cos(theta)*I + i*sin(theta)*(swap of qubits i, j).
struct Exchange {
  int i = 0;
  int j = 0;
  double theta = 0.0;
};

// Swap qubits a and b when qubit `control` is occupied.
struct Fredkin {
  int control = 0;
  int a = 0;
  int b = 0;
};

struct GlobalPhase {
  double phi = 0.0;
};

using GateOp = std::variant<PermGate, Exchange, Fredkin, GlobalPhase>;

// One parallel step. Exchanges and Fredkins in a layer must have pairwise
// disjoint supports (controls included); permutations and phases are exempt.
struct Layer {
  std::vector<GateOp> ops;
  std::string origin;
};

void validate_layer(const Layer& layer, int num_qubits);

SparseState apply_exchange(const SparseState& s, int i, int j, double theta);
// Requires an involution; equals cos(theta)*I + i*sin(theta)*perm.
SparseState apply_involution_exponential(const SparseState& s,
                                         const QubitPermutation& perm, double theta);
SparseState apply_fredkin(const SparseState& s, int control, int a, int b);
SparseState apply_gate(const SparseState& s, const GateOp& op);
SparseState apply_layer(const SparseState& s, const Layer& layer);

// One layer of n simultaneous exchanges (j, n+j) at theta = pi/4 plus the
// phase -(n-1)*pi/4 that makes the composite equal e^{i*(pi/4)*B} exactly on
// single-excitation data in the first 2n qubits, where B swaps the two rows.
struct UBeta {
  Layer layer;
  GlobalPhase phase;
};
UBeta u_beta(int n);

// Compares the sequential product of e^{i*theta*pi_(2k-1,2k)} against
// e^{i(n-1)theta} * e^{i*theta*P} with P the product of all n transpositions,
// on random single-excitation states of 2n qubits.
struct ExchangeProductReport {
  int n = 0;
  int trials = 0;
  double max_deviation = 0.0;
};
ExchangeProductReport verify_theorem1(int n, int trials, std::uint64_t seed,
                                      std::optional<double> theta = std::nullopt);

// Small dense real matrices for the row-swap identity check.
using DenseMat = std::vector<std::vector<double>>;
DenseMat identity_mat(int dim);
DenseMat swap_matrix(int dim, int r1, int r2);
DenseMat mat_mul(const DenseMat& a, const DenseMat& b);
DenseMat mat_add(const DenseMat& a, const DenseMat& b);
double mat_max_abs_diff(const DenseMat& a, const DenseMat& b);

// Checks P12*P34*...*P(2n-3,2n-2) + P(2n-1,2n) == P12*...*P(2n-1,2n) + I
// entrywise on 2n x 2n row-swap matrices.
struct RowSwapLemmaReport {
  int n = 0;
  bool holds = false;
  double max_deviation = 0.0;
};
RowSwapLemmaReport verify_lemma_identity(int n);

void to_json(nlohmann::ordered_json& j, const GateOp& op);
void to_json(nlohmann::ordered_json& j, const Layer& layer);

}  // namespace permuqc
