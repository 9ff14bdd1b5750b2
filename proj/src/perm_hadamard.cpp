#include "permuqc/perm_hadamard.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace permuqc {

namespace {

constexpr int kRegQubits = 8;
constexpr int kTotalQubits = 16;

// Combines a permutation of the first register with one of the second into
// a single permutation of all 16 qubits.
QubitPermutation across_registers(const QubitPermutation& first, const QubitPermutation& second) {
  std::vector<int> image(kTotalQubits);
  for (int j = 1; j <= kRegQubits; ++j) image[j - 1] = first.image_of(j);
  for (int j = 1; j <= kRegQubits; ++j) image[kRegQubits + j - 1] = kRegQubits + second.image_of(j);
  return perm_from_image(kTotalQubits, std::move(image));
}

}  // namespace

SparseState fourier_row(int step, int offset) {
  const double amp = 1.0 / std::sqrt(static_cast<double>(kRegQubits));
  std::map<BasisState, Cx> terms;
  for (int j = 1; j <= kRegQubits; ++j) {
    Cx coeff = amp * root_of_unity(offset + step * (j - 1), kRegQubits);
    terms.emplace(BasisState::from_positions(kRegQubits, {j}), coeff);
  }
  return finalize_state(kRegQubits, std::move(terms));
}

EncodedQubitFrame encoded_qubit_frame() {
  EncodedQubitFrame f;
  f.row_x0 = fourier_row(1, 0);
  f.row_x1 = fourier_row(-1, 5);
  f.row_y0 = fourier_row(5, 0);
  f.row_y1 = fourier_row(1, 1);
  SparseState pair0 = tensor(f.row_x0, f.row_y0);
  SparseState pair1 = tensor(f.row_x1, f.row_y1);
  const double r = 1.0 / std::sqrt(2.0);
  f.basis0 = superpose({{r, pair0}, {r, pair1}});
  f.basis1 = superpose({{Cx(0, r), pair0}, {Cx(0, -r), pair1}});
  return f;
}

QubitPermutation row_swap_perm() {
  return perm_from_cycles(kRegQubits, {{1, 6}, {2, 5}, {3, 4}, {7, 8}});
}

QubitPermutation reflection_perm() {
  return perm_from_cycles(kRegQubits, {{1, 7}, {2, 6}, {3, 5}});
}

QubitPermutation pair_swap_perm() {
  return perm_from_cycles(kRegQubits, {{2, 6}, {4, 8}});
}

QubitPermutation encoded_h_perm() {
  return across_registers(row_swap_perm(), pair_swap_perm());
}

QubitPermutation encoded_z_perm() {
  return across_registers(reflection_perm(), pair_swap_perm());
}

QubitPermutation encoded_x_perm() {
  QubitPermutation u = row_swap_perm();
  QubitPermutation word = compose(u, compose(reflection_perm(), u));
  return across_registers(word, pair_swap_perm());
}

QubitPermutation encoded_y_perm() {
  QubitPermutation u = row_swap_perm();
  QubitPermutation r = reflection_perm();
  QubitPermutation word = compose(u, compose(r, compose(u, r)));
  return across_registers(word, identity_perm(kRegQubits));
}

namespace {

struct NamedGate {
  QubitPermutation perm;
  Mat2 target;
};

NamedGate named_gate(const std::string& name) {
  if (name == "H") return {encoded_h_perm(), a_matrix(3, 1)};
  if (name == "Z") return {encoded_z_perm(), a_matrix(1, 2)};
  if (name == "X") return {encoded_x_perm(), a_matrix(2, 4)};
  if (name == "Y") {
    Mat2 y;
    y.at(0, 1) = Cx(0, -1);
    y.at(1, 0) = Cx(0, 1);
    return {encoded_y_perm(), y};
  }
  throw std::invalid_argument("check_encoded_gate: unknown gate name");
}

}  // namespace

EncodedGateCheck check_encoded_gate(const std::string& name, double tol) {
  NamedGate g = named_gate(name);
  EncodedQubitFrame f = encoded_qubit_frame();
  SparseState img0 = apply_perm(g.perm, f.basis0);
  SparseState img1 = apply_perm(g.perm, f.basis1);
  LogicalAction act = logical_action(img0, img1, f.basis0, f.basis1);

  EncodedGateCheck check;
  check.name = name;
  check.matrix = act.matrix;
  check.target = g.target;
  check.leak_residual = act.residual;

  Mat2 overlap = mul(adjoint(g.target), act.matrix);
  Cx tr = overlap.at(0, 0) + overlap.at(1, 1);
  if (std::abs(tr) < tol) {
    check.phase = 0.0;
    check.deviation = max_abs_diff(act.matrix, g.target);
    check.pass = false;
    return check;
  }
  check.phase = tr / std::abs(tr);
  check.deviation = max_abs_diff(act.matrix, scale(g.target, check.phase));
  check.pass = check.deviation <= tol && check.leak_residual <= tol;
  return check;
}

std::vector<EncodedGateCheck> check_all_encoded_gates(double tol) {
  std::vector<EncodedGateCheck> out;
  for (const char* name : {"H", "X", "Y", "Z"}) out.push_back(check_encoded_gate(name, tol));
  return out;
}

std::vector<CliffordElement> encoded_gate_group() {
  CliffordElement h = canonicalize(check_encoded_gate("H").matrix);
  CliffordElement z = canonicalize(check_encoded_gate("Z").matrix);
  return generate({h, z});
}

void to_json(nlohmann::ordered_json& j, const EncodedGateCheck& c) {
  j = nlohmann::ordered_json::object();
  j["name"] = c.name;
  auto mat = [](const Mat2& m) {
    auto rows = nlohmann::ordered_json::array();
    for (int r = 0; r < 2; ++r) {
      auto row = nlohmann::ordered_json::array();
      for (int col = 0; col < 2; ++col)
        row.push_back({{"re", m.at(r, col).real()}, {"im", m.at(r, col).imag()}});
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["matrix"] = mat(c.matrix);
  j["target"] = mat(c.target);
  j["phase"] = {{"re", c.phase.real()}, {"im", c.phase.imag()}};
  j["leakResidual"] = c.leak_residual;
  j["deviation"] = c.deviation;
  j["pass"] = c.pass;
}

}  // namespace permuqc
