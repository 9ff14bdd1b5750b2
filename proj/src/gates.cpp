#include "permuqc/gates.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

namespace permuqc {

namespace {

void check_label(int q, int num_qubits, const char* who) {
  if (q < 1 || q > num_qubits)
    throw std::invalid_argument(std::string(who) + ": label out of range");
}

std::vector<int> resonant_support(const GateOp& op) {
  if (const auto* ex = std::get_if<Exchange>(&op)) return {ex->i, ex->j};
  if (const auto* fr = std::get_if<Fredkin>(&op)) return {fr->control, fr->a, fr->b};
  return {};
}

}  // namespace

void validate_layer(const Layer& layer, int num_qubits) {
  std::set<int> used;
  for (const auto& op : layer.ops) {
    for (int q : resonant_support(op)) {
      check_label(q, num_qubits, "validate_layer");
      if (!used.insert(q).second)
        throw std::invalid_argument("validate_layer: overlapping supports in one layer");
    }
    if (const auto* pg = std::get_if<PermGate>(&op)) {
      if (pg->perm.num_qubits != num_qubits)
        throw std::invalid_argument("validate_layer: permutation width mismatch");
    }
  }
}

SparseState apply_exchange(const SparseState& s, int i, int j, double theta) {
  check_label(i, s.num_qubits, "apply_exchange");
  check_label(j, s.num_qubits, "apply_exchange");
  if (i == j) throw std::invalid_argument("apply_exchange: index clash");
  Cx c(std::cos(theta), 0.0);
  Cx is(0.0, std::sin(theta));
  std::map<BasisState, Cx> terms;
  for (const auto& [key, amp] : s.terms) {
    terms[key] += c * amp;
    BasisState swapped = key;
    bool bi = key.bit(i);
    bool bj = key.bit(j);
    swapped.set_bit(i, bj);
    swapped.set_bit(j, bi);
    terms[swapped] += is * amp;
  }
  return finalize_state(s.num_qubits, std::move(terms));
}

SparseState apply_involution_exponential(const SparseState& s,
                                         const QubitPermutation& perm, double theta) {
  if (perm.num_qubits != s.num_qubits)
    throw std::invalid_argument("apply_involution_exponential: qubit count mismatch");
  if (!perm.is_involution())
    throw std::invalid_argument("apply_involution_exponential: permutation is not an involution");
  Cx c(std::cos(theta), 0.0);
  Cx is(0.0, std::sin(theta));
  std::map<BasisState, Cx> terms;
  for (const auto& [key, amp] : s.terms) {
    terms[key] += c * amp;
    BasisState moved(s.num_qubits);
    for (int q : key.excited_positions()) moved.set_bit(perm.image_of(q), true);
    terms[moved] += is * amp;
  }
  return finalize_state(s.num_qubits, std::move(terms));
}

SparseState apply_fredkin(const SparseState& s, int control, int a, int b) {
  check_label(control, s.num_qubits, "apply_fredkin");
  check_label(a, s.num_qubits, "apply_fredkin");
  check_label(b, s.num_qubits, "apply_fredkin");
  if (control == a || control == b || a == b)
    throw std::invalid_argument("apply_fredkin: index clash");
  std::map<BasisState, Cx> terms;
  for (const auto& [key, amp] : s.terms) {
    if (key.bit(control)) {
      BasisState swapped = key;
      bool ba = key.bit(a);
      bool bb = key.bit(b);
      swapped.set_bit(a, bb);
      swapped.set_bit(b, ba);
      terms[swapped] += amp;
    } else {
      terms[key] += amp;
    }
  }
  return finalize_state(s.num_qubits, std::move(terms));
}

SparseState apply_gate(const SparseState& s, const GateOp& op) {
  if (const auto* pg = std::get_if<PermGate>(&op)) return apply_perm(pg->perm, s);
  if (const auto* ex = std::get_if<Exchange>(&op))
    return apply_exchange(s, ex->i, ex->j, ex->theta);
  if (const auto* fr = std::get_if<Fredkin>(&op))
    return apply_fredkin(s, fr->control, fr->a, fr->b);
  const auto& gp = std::get<GlobalPhase>(op);
  return scale(s, std::polar(1.0, gp.phi));
}

SparseState apply_layer(const SparseState& s, const Layer& layer) {
  validate_layer(layer, s.num_qubits);
  SparseState cur = s;
  for (const auto& op : layer.ops) cur = apply_gate(cur, op);
  return cur;
}

UBeta u_beta(int n) {
  if (n < 1) throw std::invalid_argument("u_beta: n must be positive");
  UBeta u;
  u.layer.origin = "row-exchange";
  for (int j = 1; j <= n; ++j)
    u.layer.ops.push_back(Exchange{j, n + j, kPi / 4.0});
  u.phase = GlobalPhase{-(n - 1) * kPi / 4.0};
  return u;
}

ExchangeProductReport verify_theorem1(int n, int trials, std::uint64_t seed,
                                      std::optional<double> theta) {
  if (n < 1) throw std::invalid_argument("verify_theorem1: n must be positive");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> pairs;
  for (int k = 1; k <= n; ++k) pairs.push_back({2 * k - 1, 2 * k});
  QubitPermutation full = perm_from_cycles(2 * n, pairs);

  ExchangeProductReport report;
  report.n = n;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    std::vector<std::pair<Cx, SparseState>> parts;
    for (int q = 1; q <= 2 * n; ++q)
      parts.push_back({gaussian_complex(rng), make_excited(2 * n, {q})});
    SparseState psi = superpose(parts);
    psi = scale(psi, Cx(1.0 / norm(psi), 0.0));
    double th = theta ? *theta : 2.0 * kPi * uniform01(rng);

    SparseState lhs = psi;
    for (const auto& pr : pairs) lhs = apply_exchange(lhs, pr[0], pr[1], th);
    SparseState rhs = apply_involution_exponential(psi, full, th);
    rhs = scale(rhs, std::polar(1.0, (n - 1) * th));

    report.max_deviation = std::max(report.max_deviation, distance(lhs, rhs));
  }
  return report;
}

DenseMat identity_mat(int dim) {
  DenseMat m(static_cast<std::size_t>(dim),
             std::vector<double>(static_cast<std::size_t>(dim), 0.0));
  for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
  return m;
}

DenseMat swap_matrix(int dim, int r1, int r2) {
  if (r1 < 1 || r1 > dim || r2 < 1 || r2 > dim || r1 == r2)
    throw std::invalid_argument("swap_matrix: bad rows");
  DenseMat m = identity_mat(dim);
  std::swap(m[static_cast<std::size_t>(r1 - 1)], m[static_cast<std::size_t>(r2 - 1)]);
  return m;
}

DenseMat mat_mul(const DenseMat& a, const DenseMat& b) {
  std::size_t dim = a.size();
  DenseMat out(dim, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      double v = a[i][k];
      if (v == 0.0) continue;
      for (std::size_t j = 0; j < dim; ++j) out[i][j] += v * b[k][j];
    }
  return out;
}

DenseMat mat_add(const DenseMat& a, const DenseMat& b) {
  DenseMat out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[i][j] += b[i][j];
  return out;
}

double mat_max_abs_diff(const DenseMat& a, const DenseMat& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
  return worst;
}

RowSwapLemmaReport verify_lemma_identity(int n) {
  if (n < 1) throw std::invalid_argument("verify_lemma_identity: n must be positive");
  int dim = 2 * n;
  DenseMat head = identity_mat(dim);
  for (int k = 1; k <= n - 1; ++k)
    head = mat_mul(head, swap_matrix(dim, 2 * k - 1, 2 * k));
  DenseMat last = swap_matrix(dim, 2 * n - 1, 2 * n);

  DenseMat lhs = mat_add(head, last);
  DenseMat rhs = mat_add(mat_mul(head, last), identity_mat(dim));

  RowSwapLemmaReport report;
  report.n = n;
  report.max_deviation = mat_max_abs_diff(lhs, rhs);
  report.holds = report.max_deviation == 0.0;
  return report;
}

void to_json(nlohmann::ordered_json& j, const GateOp& op) {
  if (const auto* pg = std::get_if<PermGate>(&op)) {
    to_json(j, pg->perm);
  } else if (const auto* ex = std::get_if<Exchange>(&op)) {
    j = {{"kind", "exchange"}, {"i", ex->i}, {"j", ex->j}, {"theta", ex->theta}};
  } else if (const auto* fr = std::get_if<Fredkin>(&op)) {
    j = {{"kind", "fredkin"}, {"control", fr->control}, {"a", fr->a}, {"b", fr->b}};
  } else {
    j = {{"kind", "phase"}, {"phi", std::get<GlobalPhase>(op).phi}};
  }
}

void to_json(nlohmann::ordered_json& j, const Layer& layer) {
  j = nlohmann::ordered_json::object();
  j["origin"] = layer.origin;
  auto ops = nlohmann::ordered_json::array();
  for (const auto& op : layer.ops) {
    nlohmann::ordered_json o;
    to_json(o, op);
    ops.push_back(std::move(o));
  }
  j["ops"] = std::move(ops);
}

}  // namespace permuqc
