#include "permuqc/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <nlohmann/json.hpp>

namespace permuqc {

namespace {

// Singular values below this count as kernel directions.
constexpr double kKernelSigmaTol = 1e-9;
// Pivots below this end a Gaussian elimination column.
constexpr double kRankPivotTol = 1e-9;

const TurnFraction kQuarterTurn = TurnFraction::make(1, 4);

void validate_pair(const PermPair& pair) {
  if (pair.phase_perm.num_qubits != pair.num_qubits ||
      pair.hadamard_perm.num_qubits != pair.num_qubits)
    throw std::invalid_argument("perm pair: qubit count mismatch");
  if (pair.weight < 0 || pair.weight > pair.num_qubits)
    throw std::invalid_argument("perm pair: weight out of range");
}

}  // namespace

std::vector<TurnFraction> induced_eigenvalue_fractions(const QubitPermutation& p, int k) {
  std::set<TurnFraction> fractions;
  for (const auto& cycle : induced_weight_action(p, k).cycles) {
    long len = static_cast<long>(cycle.size());
    for (long m = 0; m < len; ++m) fractions.insert(TurnFraction::make(m, len));
  }
  return {fractions.begin(), fractions.end()};
}

std::vector<PhasePair> phase_candidates(const PermPair& pair) {
  validate_pair(pair);
  std::vector<TurnFraction> p_fracs =
      induced_eigenvalue_fractions(pair.phase_perm, pair.weight);
  std::set<TurnFraction> p_set(p_fracs.begin(), p_fracs.end());

  QubitPermutation h_squared = compose(pair.hadamard_perm, pair.hadamard_perm);
  std::set<TurnFraction> z2_set;
  for (const auto& mu : induced_eigenvalue_fractions(h_squared, pair.weight)) {
    z2_set.insert(TurnFraction::make(mu.num, 2 * mu.den));
    z2_set.insert(TurnFraction::make(mu.num + mu.den, 2 * mu.den));
  }

  std::set<PhasePair> candidates;
  for (const auto& z1 : p_fracs) {
    if (!p_set.count(z1.plus(kQuarterTurn))) continue;
    for (const auto& z2 : z2_set) candidates.insert({z1, z2});
  }
  return {candidates.begin(), candidates.end()};
}

bool orbit_filter(const PermPair& pair) {
  validate_pair(pair);
  bool phase_side = false;
  for (const auto& cycle : induced_weight_action(pair.phase_perm, pair.weight).cycles)
    phase_side = phase_side || cycle.size() % 4 == 0;
  if (!phase_side) return false;
  QubitPermutation hp = compose(pair.hadamard_perm, pair.phase_perm);
  for (const auto& cycle : induced_weight_action(hp, pair.weight).cycles)
    if (cycle.size() % 3 == 0) return true;
  return false;
}

namespace {

// Coordinates of a weight-k state in the lexicographic string basis.
void fill_column(Eigen::MatrixXcd& mat, const std::map<BasisState, int>& index,
                 const SparseState& s, int row_offset, int col, Cx factor) {
  for (const auto& [key, amp] : s.terms)
    mat(row_offset + index.at(key), col) += factor * amp;
}

}  // namespace

FeasibilityReport check_feasibility(const PermPair& pair, bool want_witnesses) {
  validate_pair(pair);
  FeasibilityReport report;
  report.pair = pair;

  std::vector<BasisState> strings = weight_strings(pair.num_qubits, pair.weight);
  const int dim = static_cast<int>(strings.size());
  report.space_dim = dim;
  report.filter_passed = orbit_filter(pair);
  std::map<BasisState, int> index;
  for (int i = 0; i < dim; ++i) index.emplace(strings[static_cast<std::size_t>(i)], i);

  const double sqrt2 = std::sqrt(2.0);
  for (const PhasePair& cand : phase_candidates(pair)) {
    Cx z1 = cand.z1.value();
    Cx iz1 = cand.z1.plus(kQuarterTurn).value();
    Cx z2 = cand.z2.value();
    std::vector<SparseState> e1 = eigenspace_basis(pair.phase_perm, pair.weight, z1);
    std::vector<SparseState> e2 = eigenspace_basis(pair.phase_perm, pair.weight, iz1);

    KernelProbe probe;
    probe.phases = cand;
    probe.eigdim_z1 = static_cast<int>(e1.size());
    probe.eigdim_iz1 = static_cast<int>(e2.size());

    if (!e1.empty() && !e2.empty()) {
      const int d1 = probe.eigdim_z1;
      const int d2 = probe.eigdim_iz1;
      // Remaining constraints once u, v are parameterized by the two
      // eigenspaces: sqrt(2) H u = z2 (u + v) and sqrt(2) H v = z2 (u - v).
      Eigen::MatrixXcd constraints = Eigen::MatrixXcd::Zero(2 * dim, d1 + d2);
      for (int a = 0; a < d1; ++a) {
        const SparseState& e = e1[static_cast<std::size_t>(a)];
        fill_column(constraints, index, apply_perm(pair.hadamard_perm, e), 0, a, sqrt2);
        fill_column(constraints, index, e, 0, a, -z2);
        fill_column(constraints, index, e, dim, a, -z2);
      }
      for (int b = 0; b < d2; ++b) {
        const SparseState& e = e2[static_cast<std::size_t>(b)];
        fill_column(constraints, index, e, 0, d1 + b, -z2);
        fill_column(constraints, index, apply_perm(pair.hadamard_perm, e), dim, d1 + b, sqrt2);
        fill_column(constraints, index, e, dim, d1 + b, z2);
      }

      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(constraints, Eigen::ComputeFullV);
      const auto& sigma = svd.singularValues();
      std::vector<int> kernel_cols;
      for (int c = 0; c < d1 + d2; ++c)
        if (c >= sigma.size() || sigma(c) < kKernelSigmaTol) kernel_cols.push_back(c);
      probe.kernel_dim = static_cast<int>(kernel_cols.size());

      if (probe.kernel_dim > 0 && want_witnesses) {
        Eigen::VectorXcd coeffs = svd.matrixV().col(kernel_cols.front());
        std::vector<std::pair<Cx, SparseState>> u_parts, v_parts;
        for (int a = 0; a < d1; ++a)
          u_parts.push_back({coeffs(a), e1[static_cast<std::size_t>(a)]});
        for (int b = 0; b < d2; ++b)
          v_parts.push_back({coeffs(d1 + b), e2[static_cast<std::size_t>(b)]});
        SparseState u = superpose(u_parts);
        SparseState v = superpose(v_parts);
        double nu = norm(u);
        if (nu > 1e-6) {
          u = permuqc::scale(u, Cx(1.0 / nu, 0.0));
          v = permuqc::scale(v, Cx(1.0 / nu, 0.0));
          DoubletWitness w;
          w.phases = cand;
          double r = 0.0;
          r = std::max(r, distance(apply_perm(pair.phase_perm, u), permuqc::scale(u, z1)));
          r = std::max(r, distance(apply_perm(pair.phase_perm, v), permuqc::scale(v, iz1)));
          const Cx half = z2 / sqrt2;
          r = std::max(r, distance(apply_perm(pair.hadamard_perm, u),
                                   superpose({{half, u}, {half, v}})));
          r = std::max(r, distance(apply_perm(pair.hadamard_perm, v),
                                   superpose({{half, u}, {-half, v}})));
          r = std::max(r, std::abs(inner_product(u, v)));
          r = std::max(r, std::abs(norm(v) - 1.0));
          w.max_residual = r;
          w.u = std::move(u);
          w.v = std::move(v);
          report.witnesses.push_back(std::move(w));
        }
      }
    }

    if (probe.kernel_dim > 0) report.feasible = true;
    report.probes.push_back(probe);
  }
  return report;
}

namespace {

int complex_rank(std::vector<std::vector<Cx>>& m, double tol) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m.front().size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    double best = tol;
    for (int r = rank; r < rows; ++r) {
      double a = std::abs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]);
      if (a > best) {
        best = a;
        pivot = r;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
    const auto& lead_row = m[static_cast<std::size_t>(rank)];
    Cx lead = lead_row[static_cast<std::size_t>(col)];
    for (int r = rank + 1; r < rows; ++r) {
      auto& row = m[static_cast<std::size_t>(r)];
      Cx f = row[static_cast<std::size_t>(col)] / lead;
      if (std::abs(f) == 0.0) continue;
      for (int c = col; c < cols; ++c)
        row[static_cast<std::size_t>(c)] -= f * lead_row[static_cast<std::size_t>(c)];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

RankReport check_feasibility_by_rank(const PermPair& pair, bool alternate_v_block) {
  validate_pair(pair);
  if (pair.num_qubits > 12)
    throw std::invalid_argument("rank route is limited to 12 qubits");
  RankReport report;
  report.pair = pair;

  InducedAction p_act = induced_weight_action(pair.phase_perm, pair.weight);
  InducedAction h_act = induced_weight_action(pair.hadamard_perm, pair.weight);
  const int dim = static_cast<int>(p_act.strings.size());
  report.space_dim = dim;

  const double sqrt2 = std::sqrt(2.0);
  const Cx minus_i(0.0, -1.0);
  for (const PhasePair& cand : phase_candidates(pair)) {
    Cx z1 = cand.z1.value();
    Cx z2 = cand.z2.value();
    // Rows: (P - z1) u; (-i P - z1) v; sqrt(2) H u - z2 u - z2 v;
    // -z2 u + sqrt(2) H v + z2 v. Columns: u then v coordinates.
    std::vector<std::vector<Cx>> m(static_cast<std::size_t>(4 * dim),
                                   std::vector<Cx>(static_cast<std::size_t>(2 * dim)));
    auto at = [&](int r, int c) -> Cx& {
      return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    };
    for (int c = 0; c < dim; ++c) {
      int pc = p_act.image[static_cast<std::size_t>(c)];
      int hc = h_act.image[static_cast<std::size_t>(c)];
      at(pc, c) += 1.0;
      at(c, c) -= z1;
      if (alternate_v_block) {
        // (P - i z1) v differs from (-i P - z1) v by a unit factor; ranks match.
        at(dim + pc, dim + c) += 1.0;
        at(dim + c, dim + c) -= Cx(0.0, 1.0) * z1;
      } else {
        at(dim + pc, dim + c) += minus_i;
        at(dim + c, dim + c) -= z1;
      }
      at(2 * dim + hc, c) += sqrt2;
      at(2 * dim + c, c) -= z2;
      at(2 * dim + c, dim + c) -= z2;
      at(3 * dim + c, c) -= z2;
      at(3 * dim + hc, dim + c) += sqrt2;
      at(3 * dim + c, dim + c) += z2;
    }
    RankProbe probe;
    probe.phases = cand;
    probe.rank = complex_rank(m, kRankPivotTol);
    probe.rank_deficiency = 2 * dim - probe.rank;
    if (probe.rank_deficiency > 0) report.feasible = true;
    report.probes.push_back(probe);
  }
  return report;
}

SearchStrategy search_strategy_from_name(const std::string& name) {
  if (name == "exhaustive") return SearchStrategy::kExhaustive;
  if (name == "structured") return SearchStrategy::kStructured;
  if (name == "random") return SearchStrategy::kRandom;
  throw std::invalid_argument("unknown search strategy: " + name);
}

std::string search_strategy_name(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::kExhaustive: return "exhaustive";
    case SearchStrategy::kStructured: return "structured";
    case SearchStrategy::kRandom: return "random";
  }
  throw std::logic_error("search_strategy_name: bad enum");
}

namespace {

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

QubitPermutation perm_from_lehmer(int n, std::uint64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> image;
  image.reserve(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    std::uint64_t f = factorial_u64(i);
    std::size_t idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    image.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return perm_from_image(n, std::move(image));
}

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

// Rebuilt per call; cheap at these sizes and keeps worker threads free of
// shared state.
std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

// Cycles of the given lengths on consecutive labels starting at 1.
QubitPermutation canonical_cycle_type(int n, const std::vector<int>& parts) {
  std::vector<std::vector<int>> cycles;
  int label = 1;
  for (int part : parts) {
    if (part >= 2) {
      std::vector<int> cycle(static_cast<std::size_t>(part));
      std::iota(cycle.begin(), cycle.end(), label);
      cycles.push_back(std::move(cycle));
    }
    label += part;
  }
  return perm_from_cycles(n, cycles);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

QubitPermutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(image[static_cast<std::size_t>(i)], image[j]);
  }
  return perm_from_image(n, std::move(image));
}

void validate_config(const SearchConfig& config) {
  if (config.num_qubits < 2 || config.num_qubits > kMaxQubits)
    throw std::invalid_argument("search: qubit count out of range");
  if (config.weight < 0 || config.weight > config.num_qubits)
    throw std::invalid_argument("search: weight out of range");
  if (config.workers < 1) throw std::invalid_argument("search: workers must be positive");
  if (config.strategy == SearchStrategy::kExhaustive && config.num_qubits > 8)
    throw std::invalid_argument("exhaustive search is limited to 8 qubits");
}

PairOutcome examine_pair(const SearchConfig& config, std::uint64_t cursor) {
  PermPair pair = pair_at_cursor(config, cursor);
  PairOutcome out;
  out.cursor = cursor;
  out.phase_perm = pair.phase_perm;
  out.hadamard_perm = pair.hadamard_perm;
  out.filter_passed = orbit_filter(pair);
  if (config.apply_orbit_filter && !out.filter_passed) return out;
  out.checked = true;
  FeasibilityReport report = check_feasibility(pair, false);
  out.feasible = report.feasible;
  for (const auto& probe : report.probes)
    if (probe.kernel_dim > 0) out.feasible_phases.push_back(probe.phases);
  return out;
}

}  // namespace

std::uint64_t search_space_size(const SearchConfig& config) {
  validate_config(config);
  switch (config.strategy) {
    case SearchStrategy::kExhaustive: {
      std::uint64_t f = factorial_u64(config.num_qubits);
      return f * f;
    }
    case SearchStrategy::kStructured: {
      std::uint64_t p = partitions_of(config.num_qubits).size();
      return p * p;
    }
    case SearchStrategy::kRandom: return 0;
  }
  throw std::logic_error("search_space_size: bad enum");
}

PermPair pair_at_cursor(const SearchConfig& config, std::uint64_t cursor) {
  validate_config(config);
  PermPair pair;
  pair.num_qubits = config.num_qubits;
  pair.weight = config.weight;
  switch (config.strategy) {
    case SearchStrategy::kExhaustive: {
      std::uint64_t f = factorial_u64(config.num_qubits);
      if (cursor >= f * f) throw std::out_of_range("pair_at_cursor: cursor past the end");
      pair.phase_perm = perm_from_lehmer(config.num_qubits, cursor / f);
      pair.hadamard_perm = perm_from_lehmer(config.num_qubits, cursor % f);
      return pair;
    }
    case SearchStrategy::kStructured: {
      const auto parts = partitions_of(config.num_qubits);
      std::uint64_t p = parts.size();
      if (cursor >= p * p) throw std::out_of_range("pair_at_cursor: cursor past the end");
      pair.phase_perm =
          canonical_cycle_type(config.num_qubits, parts[static_cast<std::size_t>(cursor / p)]);
      pair.hadamard_perm =
          canonical_cycle_type(config.num_qubits, parts[static_cast<std::size_t>(cursor % p)]);
      return pair;
    }
    case SearchStrategy::kRandom: {
      // Each cursor owns its engine, so ranges replay independently.
      std::mt19937_64 rng(splitmix64(config.seed ^ splitmix64(cursor)));
      pair.phase_perm = random_perm(config.num_qubits, rng);
      pair.hadamard_perm = random_perm(config.num_qubits, rng);
      return pair;
    }
  }
  throw std::logic_error("pair_at_cursor: bad enum");
}

SearchOutcome run_search(const SearchConfig& config,
                         const std::function<void(const PairOutcome&)>& sink) {
  validate_config(config);
  std::uint64_t total = search_space_size(config);
  std::uint64_t start = config.start_cursor;
  std::uint64_t end = 0;
  if (config.strategy == SearchStrategy::kRandom) {
    if (config.budget == 0)
      throw std::invalid_argument("random search requires a budget");
    end = start + config.budget;
  } else {
    start = std::min(start, total);
    end = config.budget == 0 ? total : std::min(total, start + config.budget);
  }

  SearchOutcome outcome;
  constexpr std::uint64_t kBlock = 256;
  for (std::uint64_t block_lo = start; block_lo < end; block_lo += kBlock) {
    std::uint64_t block_hi = std::min(end, block_lo + kBlock);
    std::size_t count = static_cast<std::size_t>(block_hi - block_lo);
    std::vector<PairOutcome> results(count);

    int workers = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(config.workers), count));
    if (workers <= 1) {
      for (std::size_t i = 0; i < count; ++i)
        results[i] = examine_pair(config, block_lo + i);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
      std::size_t per = (count + static_cast<std::size_t>(workers) - 1) /
                        static_cast<std::size_t>(workers);
      for (int w = 0; w < workers; ++w) {
        std::size_t lo = static_cast<std::size_t>(w) * per;
        std::size_t hi = std::min(count, lo + per);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi, w] {
          try {
            for (std::size_t i = lo; i < hi; ++i)
              results[i] = examine_pair(config, block_lo + i);
          } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }

    for (const auto& r : results) {
      if (sink) sink(r);
      ++outcome.examined;
      if (r.filter_passed) ++outcome.filter_passed;
      if (r.feasible) ++outcome.feasible_count;
    }
  }
  outcome.next_cursor = end;
  outcome.exhausted = config.strategy != SearchStrategy::kRandom && end == total;
  return outcome;
}

namespace {

nlohmann::ordered_json fraction_json(const TurnFraction& f) {
  return {{"num", f.num}, {"den", f.den}};
}

nlohmann::ordered_json pair_json(const PermPair& pair) {
  nlohmann::ordered_json j;
  j["n"] = pair.num_qubits;
  j["k"] = pair.weight;
  j["phasePerm"] = pair.phase_perm.cycles;
  j["hadamardPerm"] = pair.hadamard_perm.cycles;
  return j;
}

}  // namespace

void to_json(nlohmann::ordered_json& j, const PhasePair& p) {
  j = nlohmann::ordered_json::object();
  j["z1"] = fraction_json(p.z1);
  j["z2"] = fraction_json(p.z2);
}

void to_json(nlohmann::ordered_json& j, const FeasibilityReport& r) {
  j = nlohmann::ordered_json::object();
  j["pair"] = pair_json(r.pair);
  j["spaceDim"] = r.space_dim;
  j["filterPassed"] = r.filter_passed;
  auto probes = nlohmann::ordered_json::array();
  for (const auto& p : r.probes) {
    nlohmann::ordered_json pj;
    pj["z1"] = fraction_json(p.phases.z1);
    pj["z2"] = fraction_json(p.phases.z2);
    pj["eigdimZ1"] = p.eigdim_z1;
    pj["eigdimIz1"] = p.eigdim_iz1;
    pj["kernelDim"] = p.kernel_dim;
    probes.push_back(std::move(pj));
  }
  j["probes"] = std::move(probes);
  auto witnesses = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::ordered_json wj;
    wj["z1"] = fraction_json(w.phases.z1);
    wj["z2"] = fraction_json(w.phases.z2);
    wj["u"] = w.u;
    wj["v"] = w.v;
    wj["maxResidual"] = w.max_residual;
    witnesses.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(witnesses);
  j["feasible"] = r.feasible;
}

void to_json(nlohmann::ordered_json& j, const RankReport& r) {
  j = nlohmann::ordered_json::object();
  j["pair"] = pair_json(r.pair);
  j["spaceDim"] = r.space_dim;
  auto probes = nlohmann::ordered_json::array();
  for (const auto& p : r.probes) {
    nlohmann::ordered_json pj;
    pj["z1"] = fraction_json(p.phases.z1);
    pj["z2"] = fraction_json(p.phases.z2);
    pj["rank"] = p.rank;
    pj["rankDeficiency"] = p.rank_deficiency;
    probes.push_back(std::move(pj));
  }
  j["probes"] = std::move(probes);
  j["feasible"] = r.feasible;
}

void to_json(nlohmann::ordered_json& j, const PairOutcome& o) {
  j = nlohmann::ordered_json::object();
  j["cursor"] = o.cursor;
  j["phasePerm"] = o.phase_perm.cycles;
  j["hadamardPerm"] = o.hadamard_perm.cycles;
  j["filterPassed"] = o.filter_passed;
  j["checked"] = o.checked;
  j["feasible"] = o.feasible;
  auto phases = nlohmann::ordered_json::array();
  for (const auto& p : o.feasible_phases) {
    nlohmann::ordered_json pj;
    to_json(pj, p);
    phases.push_back(std::move(pj));
  }
  j["feasiblePhases"] = std::move(phases);
}

void to_json(nlohmann::ordered_json& j, const SearchOutcome& o) {
  j = nlohmann::ordered_json::object();
  j["examined"] = o.examined;
  j["filterPassed"] = o.filter_passed;
  j["feasibleCount"] = o.feasible_count;
  j["nextCursor"] = o.next_cursor;
  j["exhausted"] = o.exhausted;
}

}  // namespace permuqc
