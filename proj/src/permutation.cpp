#include "permuqc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

namespace permuqc {

namespace {

std::vector<std::vector<int>> cycle_decomposition(const std::vector<int>& image) {
  int n = static_cast<int>(image.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    int cur = start;
    while (!seen[static_cast<std::size_t>(cur - 1)]) {
      seen[static_cast<std::size_t>(cur - 1)] = true;
      cycle.push_back(cur);
      cur = image[static_cast<std::size_t>(cur - 1)];
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

int QubitPermutation::preimage_of(int j) const {
  for (int i = 1; i <= num_qubits; ++i)
    if (image_of(i) == j) return i;
  throw std::logic_error("preimage_of: not a bijection");
}

bool QubitPermutation::is_involution() const {
  return std::all_of(cycles.begin(), cycles.end(),
                     [](const auto& c) { return c.size() == 2; });
}

QubitPermutation identity_perm(int num_qubits) {
  std::vector<int> image(static_cast<std::size_t>(num_qubits));
  std::iota(image.begin(), image.end(), 1);
  return perm_from_image(num_qubits, std::move(image));
}

QubitPermutation perm_from_image(int num_qubits, std::vector<int> image) {
  if (num_qubits < 1 || num_qubits > kMaxQubits)
    throw std::invalid_argument("perm_from_image: qubit count out of range");
  if (static_cast<int>(image.size()) != num_qubits)
    throw std::invalid_argument("perm_from_image: image size mismatch");
  std::vector<bool> hit(static_cast<std::size_t>(num_qubits), false);
  for (int v : image) {
    if (v < 1 || v > num_qubits)
      throw std::invalid_argument("perm_from_image: label out of range");
    if (hit[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("perm_from_image: not a bijection");
    hit[static_cast<std::size_t>(v - 1)] = true;
  }
  QubitPermutation p;
  p.num_qubits = num_qubits;
  p.image = std::move(image);
  p.cycles = cycle_decomposition(p.image);
  return p;
}

QubitPermutation perm_from_cycles(int num_qubits,
                                  const std::vector<std::vector<int>>& cycles) {
  std::vector<int> image(static_cast<std::size_t>(num_qubits));
  std::iota(image.begin(), image.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(num_qubits), false);
  for (const auto& cycle : cycles) {
    for (int label : cycle) {
      if (label < 1 || label > num_qubits)
        throw std::invalid_argument("perm_from_cycles: label out of range");
      if (used[static_cast<std::size_t>(label - 1)])
        throw std::invalid_argument("perm_from_cycles: cycles overlap");
      used[static_cast<std::size_t>(label - 1)] = true;
    }
    std::size_t len = cycle.size();
    for (std::size_t i = 0; i < len; ++i)
      image[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % len];
  }
  return perm_from_image(num_qubits, std::move(image));
}

QubitPermutation perm_from_cycle_string(int num_qubits, const std::string& text) {
  if (text == "id" || text == "()") return identity_perm(num_qubits);
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("perm_from_cycle_string: expected '('");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start)
        throw std::invalid_argument("perm_from_cycle_string: expected a label");
      cycle.push_back(std::stoi(text.substr(start, pos - start)));
      skip_space();
      if (pos >= text.size())
        throw std::invalid_argument("perm_from_cycle_string: unclosed cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw std::invalid_argument("perm_from_cycle_string: expected ',' or ')'");
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return perm_from_cycles(num_qubits, cycles);
}

QubitPermutation compose(const QubitPermutation& p, const QubitPermutation& q) {
  if (p.num_qubits != q.num_qubits)
    throw std::invalid_argument("compose: qubit count mismatch");
  std::vector<int> image(static_cast<std::size_t>(p.num_qubits));
  for (int j = 1; j <= p.num_qubits; ++j)
    image[static_cast<std::size_t>(j - 1)] = p.image_of(q.image_of(j));
  return perm_from_image(p.num_qubits, std::move(image));
}

QubitPermutation inverse(const QubitPermutation& p) {
  std::vector<int> image(static_cast<std::size_t>(p.num_qubits));
  for (int j = 1; j <= p.num_qubits; ++j)
    image[static_cast<std::size_t>(p.image_of(j) - 1)] = j;
  return perm_from_image(p.num_qubits, std::move(image));
}

QubitPermutation perm_power(const QubitPermutation& p, long e) {
  long ord = perm_order(p);
  e %= ord;
  if (e < 0) e += ord;
  QubitPermutation acc = identity_perm(p.num_qubits);
  for (long i = 0; i < e; ++i) acc = compose(p, acc);
  return acc;
}

long perm_order(const QubitPermutation& p) {
  long ord = 1;
  for (const auto& cycle : p.cycles)
    ord = std::lcm(ord, static_cast<long>(cycle.size()));
  return ord;
}

SparseState apply_perm(const QubitPermutation& p, const SparseState& s) {
  if (p.num_qubits != s.num_qubits)
    throw std::invalid_argument("apply_perm: qubit count mismatch");
  std::map<BasisState, Cx> terms;
  for (const auto& [key, amp] : s.terms) {
    BasisState moved(s.num_qubits);
    for (int q : key.excited_positions()) moved.set_bit(p.image_of(q), true);
    terms[moved] += amp;
  }
  return finalize_state(s.num_qubits, std::move(terms));
}

std::vector<BasisState> weight_strings(int num_qubits, int k) {
  if (k < 0 || k > num_qubits)
    throw std::invalid_argument("weight_strings: weight out of range");
  std::vector<BasisState> out;
  std::vector<int> positions(static_cast<std::size_t>(k));
  std::iota(positions.begin(), positions.end(), 1);
  // Enumerate k-subsets in ascending combination order, then sort by bit string.
  while (true) {
    out.push_back(BasisState::from_positions(num_qubits, positions));
    int i = k - 1;
    while (i >= 0 && positions[static_cast<std::size_t>(i)] == num_qubits - (k - 1 - i)) --i;
    if (i < 0) break;
    ++positions[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      positions[static_cast<std::size_t>(j)] = positions[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

InducedAction induced_weight_action(const QubitPermutation& p, int k) {
  InducedAction act;
  act.num_qubits = p.num_qubits;
  act.k = k;
  act.strings = weight_strings(p.num_qubits, k);
  std::map<BasisState, int> index;
  for (int i = 0; i < static_cast<int>(act.strings.size()); ++i)
    index.emplace(act.strings[static_cast<std::size_t>(i)], i);
  act.image.resize(act.strings.size());
  for (std::size_t i = 0; i < act.strings.size(); ++i) {
    BasisState moved(p.num_qubits);
    for (int q : act.strings[i].excited_positions()) moved.set_bit(p.image_of(q), true);
    act.image[i] = index.at(moved);
  }
  std::vector<bool> seen(act.strings.size(), false);
  for (std::size_t start = 0; start < act.strings.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    std::size_t cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      cycle.push_back(static_cast<int>(cur));
      cur = static_cast<std::size_t>(act.image[cur]);
    }
    act.cycles.push_back(std::move(cycle));
  }
  return act;
}

std::vector<SparseState> eigenspace_basis(const QubitPermutation& p, int k, Cx lambda) {
  if (!approx(std::abs(lambda), 1.0, kMatchTol))
    throw std::invalid_argument("eigenspace_basis: eigenvalue must have unit modulus");
  InducedAction act = induced_weight_action(p, k);
  std::vector<SparseState> basis;
  for (const auto& cycle : act.cycles) {
    std::size_t len = cycle.size();
    Cx pow_len(1.0, 0.0);
    for (std::size_t t = 0; t < len; ++t) pow_len *= lambda;
    if (!approx(pow_len, Cx(1.0, 0.0), kMatchTol)) continue;
    std::map<BasisState, Cx> terms;
    Cx coeff(1.0 / std::sqrt(static_cast<double>(len)), 0.0);
    Cx phase(1.0, 0.0);  // lambda^{-t}, built by conjugate multiplies
    for (std::size_t t = 0; t < len; ++t) {
      terms[act.strings[static_cast<std::size_t>(cycle[t])]] = coeff * phase;
      phase *= std::conj(lambda);
    }
    basis.push_back(finalize_state(p.num_qubits, std::move(terms)));
  }
  return basis;
}

void to_json(nlohmann::ordered_json& j, const QubitPermutation& p) {
  j = nlohmann::ordered_json::object();
  j["kind"] = "perm";
  j["n"] = p.num_qubits;
  j["cycles"] = p.cycles;
}

}  // namespace permuqc
