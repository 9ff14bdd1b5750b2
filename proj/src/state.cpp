#include "permuqc/state.hpp"

#include <bit>
#include <cmath>

#include <nlohmann/json.hpp>

namespace permuqc {

BasisState::BasisState(int n) : num_qubits(n) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument("BasisState: qubit count out of range");
}

BasisState BasisState::from_positions(int n, const std::vector<int>& excited) {
  BasisState s(n);
  for (int q : excited) {
    if (q < 1 || q > n) throw std::invalid_argument("BasisState: label out of range");
    if (s.bit(q)) throw std::invalid_argument("BasisState: duplicate label");
    s.set_bit(q, true);
  }
  return s;
}

bool BasisState::bit(int qubit) const {
  int idx = qubit - 1;
  return (words[idx / 64] >> (63 - idx % 64)) & 1u;
}

void BasisState::set_bit(int qubit, bool value) {
  int idx = qubit - 1;
  std::uint64_t mask = std::uint64_t{1} << (63 - idx % 64);
  if (value)
    words[idx / 64] |= mask;
  else
    words[idx / 64] &= ~mask;
}

int BasisState::weight() const {
  int total = 0;
  for (std::uint64_t w : words) total += std::popcount(w);
  return total;
}

std::vector<int> BasisState::excited_positions() const {
  std::vector<int> out;
  for (int w = 0; w < static_cast<int>(words.size()); ++w) {
    std::uint64_t bits = words[w];
    while (bits) {
      int pos = std::countr_zero(bits);
      bits &= bits - 1;
      out.push_back(w * 64 + (63 - pos) + 1);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string BasisState::bits() const {
  std::string s(static_cast<std::size_t>(num_qubits), '0');
  for (int q = 1; q <= num_qubits; ++q)
    if (bit(q)) s[static_cast<std::size_t>(q - 1)] = '1';
  return s;
}

BasisState BasisState::parse(const std::string& bits) {
  BasisState s(static_cast<int>(bits.size()));
  for (int q = 1; q <= s.num_qubits; ++q) {
    char c = bits[static_cast<std::size_t>(q - 1)];
    if (c != '0' && c != '1') throw std::invalid_argument("BasisState: bad bit char");
    s.set_bit(q, c == '1');
  }
  return s;
}

SparseState finalize_state(int num_qubits, std::map<BasisState, Cx>&& terms) {
  SparseState out;
  out.num_qubits = num_qubits;
  for (auto it = terms.begin(); it != terms.end();) {
    if (std::abs(it->second) < kPruneTol)
      it = terms.erase(it);
    else
      ++it;
  }
  out.terms = std::move(terms);
  std::optional<int> w;
  bool uniform = !out.terms.empty();
  for (const auto& [key, amp] : out.terms) {
    (void)amp;
    int kw = key.weight();
    if (!w)
      w = kw;
    else if (*w != kw) {
      uniform = false;
      break;
    }
  }
  if (uniform) out.weight = w;
  return out;
}

SparseState make_excited(int num_qubits, const std::vector<int>& excited) {
  std::map<BasisState, Cx> terms;
  terms.emplace(BasisState::from_positions(num_qubits, excited), Cx(1.0, 0.0));
  return finalize_state(num_qubits, std::move(terms));
}

SparseState superpose(const std::vector<std::pair<Cx, SparseState>>& parts) {
  if (parts.empty()) throw std::invalid_argument("superpose: no parts");
  int n = parts.front().second.num_qubits;
  std::map<BasisState, Cx> terms;
  for (const auto& [coeff, part] : parts) {
    if (part.num_qubits != n)
      throw std::invalid_argument("superpose: qubit count mismatch");
    for (const auto& [key, amp] : part.terms) terms[key] += coeff * amp;
  }
  return finalize_state(n, std::move(terms));
}

SparseState scale(const SparseState& s, Cx factor) {
  std::map<BasisState, Cx> terms = s.terms;
  for (auto& [key, amp] : terms) {
    (void)key;
    amp *= factor;
  }
  return finalize_state(s.num_qubits, std::move(terms));
}

Cx inner_product(const SparseState& a, const SparseState& b) {
  if (a.num_qubits != b.num_qubits)
    throw std::invalid_argument("inner_product: qubit count mismatch");
  const SparseState& small = a.size() <= b.size() ? a : b;
  const SparseState& large = a.size() <= b.size() ? b : a;
  Cx sum(0.0, 0.0);
  for (const auto& [key, amp] : small.terms) {
    auto it = large.terms.find(key);
    if (it == large.terms.end()) continue;
    // <a|b> conjugates a's amplitude regardless of which map is iterated.
    if (&small == &a)
      sum += std::conj(amp) * it->second;
    else
      sum += std::conj(it->second) * amp;
  }
  return sum;
}

double norm(const SparseState& s) {
  double sq = 0.0;
  for (const auto& [key, amp] : s.terms) {
    (void)key;
    sq += std::norm(amp);
  }
  return std::sqrt(sq);
}

double fidelity_mod_phase(const SparseState& a, const SparseState& b) {
  if (!approx(norm(a), 1.0, kNormTol) || !approx(norm(b), 1.0, kNormTol))
    throw std::invalid_argument("fidelity_mod_phase: unnormalized input");
  return std::abs(inner_product(a, b));
}

SparseState tensor(const SparseState& a, const SparseState& b) {
  int n = a.num_qubits + b.num_qubits;
  if (n > kMaxQubits) throw std::invalid_argument("tensor: qubit count overflow");
  std::map<BasisState, Cx> terms;
  for (const auto& [ka, va] : a.terms) {
    for (const auto& [kb, vb] : b.terms) {
      BasisState key(n);
      for (int q : ka.excited_positions()) key.set_bit(q, true);
      for (int q : kb.excited_positions()) key.set_bit(a.num_qubits + q, true);
      terms.emplace(key, va * vb);
    }
  }
  return finalize_state(n, std::move(terms));
}

double distance(const SparseState& a, const SparseState& b) {
  return norm(superpose({{Cx(1.0, 0.0), a}, {Cx(-1.0, 0.0), b}}));
}

void to_json(nlohmann::ordered_json& j, const SparseState& s) {
  j = nlohmann::ordered_json::object();
  j["n"] = s.num_qubits;
  if (s.weight)
    j["weight"] = *s.weight;
  else
    j["weight"] = nullptr;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [key, amp] : s.terms) {
    terms.push_back({{"bits", key.bits()}, {"re", amp.real()}, {"im", amp.imag()}});
  }
  j["terms"] = std::move(terms);
}

SparseState state_from_json(const nlohmann::ordered_json& j) {
  int n = j.at("n").get<int>();
  std::map<BasisState, Cx> terms;
  for (const auto& t : j.at("terms")) {
    BasisState key = BasisState::parse(t.at("bits").get<std::string>());
    if (key.num_qubits != n) throw std::invalid_argument("state_from_json: bit width mismatch");
    terms[key] += Cx(t.at("re").get<double>(), t.at("im").get<double>());
  }
  return finalize_state(n, std::move(terms));
}

}  // namespace permuqc
