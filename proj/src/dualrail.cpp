#include "permuqc/dualrail.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace permuqc {

namespace {

void check_n(int n, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": n must be at least 2");
}

SparseState cyclic_row(int n, int offset, int total) {
  std::vector<std::pair<Cx, SparseState>> parts;
  double inv = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 1; j <= n; ++j) {
    Cx amp = root_of_unity(j - 1, n) * inv;
    parts.push_back({amp, make_excited(total, {offset + j})});
  }
  return superpose(parts);
}

}  // namespace

int LogicalRegister::block_base(int q) const {
  if (q < 1 || q > count) throw std::invalid_argument("LogicalRegister: register out of range");
  return 4 * n * (q - 1);
}

SparseState psi0(int n) {
  check_n(n, "psi0");
  return cyclic_row(n, 0, 2 * n);
}

SparseState psi1(int n) {
  check_n(n, "psi1");
  return cyclic_row(n, n, 2 * n);
}

std::pair<SparseState, SparseState> logical_basis(int n) {
  SparseState p0 = psi0(n);
  SparseState p1 = psi1(n);
  return {tensor(p0, p1), tensor(p1, p0)};
}

QubitPermutation alpha_perm(int n) {
  check_n(n, "alpha_perm");
  std::vector<std::vector<int>> cycles;
  for (int j = 1; j <= n; ++j) {
    cycles.push_back({j, n + j});
    cycles.push_back({2 * n + j, 3 * n + j});
  }
  return perm_from_cycles(4 * n, cycles);
}

QubitPermutation gamma_perm(int n) {
  check_n(n, "gamma_perm");
  std::vector<int> cycle;
  for (int j = 3 * n; j >= 2 * n + 1; --j) cycle.push_back(j);
  return perm_from_cycles(4 * n, {cycle});
}

QubitPermutation gamma_power_perm(int n, long e) {
  return perm_power(gamma_perm(n), e);
}

Schedule c_beta_schedule(int n) {
  check_n(n, "c_beta_schedule");
  Schedule sched;
  sched.num_qubits = 4 * n;
  for (int layer_idx = 0; layer_idx < n; ++layer_idx) {
    Layer layer;
    layer.origin = "cbeta";
    for (int j = 1; j <= n; ++j) {
      int t = ((layer_idx - j) % n + n) % n + 1;
      layer.ops.push_back(Fredkin{n + j, 2 * n + t, 3 * n + t});
    }
    sched.push(std::move(layer));
  }
  return sched;
}

HadamardCalibration calibrate_hadamard(int n) {
  check_n(n, "calibrate_hadamard");
  HadamardCalibration cal;
  cal.n = n;

  Schedule core;
  core.num_qubits = 4 * n;
  core.append(c_beta_schedule(n));
  // The exchanges of u_beta touch only the first 2n qubits, so the layer
  // embeds into the 4n-qubit block as is.
  UBeta ub = u_beta(n);
  Layer mix;
  mix.origin = ub.layer.origin;
  mix.ops = ub.layer.ops;
  mix.ops.push_back(ub.phase);
  core.push(std::move(mix));
  core.append(c_beta_schedule(n));

  auto [b0, b1] = logical_basis(n);
  SparseState img0 = apply_schedule(b0, core);
  SparseState img1 = apply_schedule(b1, core);
  LogicalAction act = logical_action(img0, img1, b0, b1);
  if (act.residual > kMatchTol) {
    cal.residual = act.residual;
    cal.note = "core schedule leaks outside the logical span";
    return cal;
  }

  const double r = 1.0 / std::sqrt(2.0);
  Mat2 target;
  target.at(0, 0) = r;
  target.at(0, 1) = r;
  target.at(1, 0) = r;
  target.at(1, 1) = -r;

  // gamma^k acts as diag(1, x^k); search both sides for an exact match with
  // one shared global phase.
  bool found = false;
  double best = 1e9;
  for (int k_pre = 0; k_pre < n && !found; ++k_pre) {
    for (int k_post = 0; k_post < n && !found; ++k_post) {
      Mat2 m = mul(Mat2::diag(1.0, root_of_unity(k_post, n)),
                   mul(act.matrix, Mat2::diag(1.0, root_of_unity(k_pre, n))));
      Cx lead = m.at(0, 0) / r;
      if (std::abs(std::abs(lead) - 1.0) > kMatchTol) continue;
      double dev = max_abs_diff(m, scale(target, lead));
      best = std::min(best, dev);
      if (dev <= kMatchTol) {
        found = true;
        cal.pre_exponent = k_pre;
        cal.post_exponent = k_post;
        cal.residual = dev;
      }
    }
  }
  if (!found) {
    cal.residual = best;
    cal.note = "no gamma exponents calibrate this n";
    return cal;
  }

  cal.ok = true;
  cal.schedule.num_qubits = 4 * n;
  if (cal.pre_exponent != 0) {
    Layer pre;
    pre.origin = "phase-pre";
    pre.ops.push_back(PermGate{gamma_power_perm(n, cal.pre_exponent)});
    cal.schedule.push(std::move(pre));
  }
  cal.schedule.append(core);
  if (cal.post_exponent != 0) {
    Layer post;
    post.origin = "phase-post";
    post.ops.push_back(PermGate{gamma_power_perm(n, cal.post_exponent)});
    cal.schedule.push(std::move(post));
  }
  return cal;
}

Schedule cnot_schedule(int n, int num_registers, int control, int target) {
  check_n(n, "cnot_schedule");
  LogicalRegister reg{n, num_registers};
  if (control == target)
    throw std::invalid_argument("cnot_schedule: register overlap");
  int cb = reg.block_base(control);
  int tb = reg.block_base(target);
  Schedule sched;
  sched.num_qubits = reg.total_qubits();
  for (int layer_idx = 0; layer_idx < n; ++layer_idx) {
    Layer layer;
    layer.origin = "cnot";
    for (int i = 1; i <= n; ++i) {
      int j = ((layer_idx - i) % n + n) % n + 1;
      layer.ops.push_back(Fredkin{cb + n + i, tb + j, tb + n + j});
      layer.ops.push_back(Fredkin{cb + 2 * n + i, tb + 2 * n + j, tb + 3 * n + j});
    }
    sched.push(std::move(layer));
  }
  return sched;
}

SparseState logical_product_state(const LogicalRegister& reg, const std::string& bits) {
  if (static_cast<int>(bits.size()) != reg.count)
    throw std::invalid_argument("logical_product_state: bit count mismatch");
  auto [b0, b1] = logical_basis(reg.n);
  SparseState out;
  bool first = true;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("logical_product_state: bad bit char");
    const SparseState& block = (c == '1') ? b1 : b0;
    out = first ? block : tensor(out, block);
    first = false;
  }
  return out;
}

DecodeTable decode(const SparseState& s, const LogicalRegister& reg) {
  if (s.num_qubits != reg.total_qubits())
    throw std::invalid_argument("decode: register layout does not match state width");
  DecodeTable table;
  table.n = reg.n;
  table.count = reg.count;
  std::vector<std::pair<Cx, SparseState>> remainder;
  remainder.push_back({Cx(1.0, 0.0), s});
  for (int v = 0; v < (1 << reg.count); ++v) {
    std::string bits(static_cast<std::size_t>(reg.count), '0');
    for (int q = 0; q < reg.count; ++q)
      if ((v >> q) & 1) bits[static_cast<std::size_t>(reg.count - 1 - q)] = '1';
    SparseState basis = logical_product_state(reg, bits);
    Cx amp = inner_product(basis, s);
    remainder.push_back({-amp, std::move(basis)});
    table.amps.push_back({bits, amp});
  }
  std::sort(table.amps.begin(), table.amps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  table.residual = norm(superpose(remainder));
  return table;
}

void to_json(nlohmann::ordered_json& j, const DecodeTable& table) {
  j = nlohmann::ordered_json::object();
  j["n"] = table.n;
  j["count"] = table.count;
  auto amps = nlohmann::ordered_json::object();
  for (const auto& [bits, amp] : table.amps)
    amps[bits] = {{"re", amp.real()}, {"im", amp.imag()}};
  j["amps"] = std::move(amps);
  j["residual"] = table.residual;
}

}  // namespace permuqc
