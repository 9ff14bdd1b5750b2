#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "permuqc/feasibility.hpp"
#include "permuqc/perm_hadamard.hpp"
#include "permuqc/permutation.hpp"

using namespace permuqc;

namespace {

long binom(int m, int k) {
  long b = 1;
  for (int i = 0; i < k; ++i) b = b * (m - i) / (i + 1);
  return b;
}

QubitPermutation random_perm(int m, std::mt19937_64& rng) {
  std::vector<int> image(static_cast<std::size_t>(m));
  std::iota(image.begin(), image.end(), 1);
  std::shuffle(image.begin(), image.end(), rng);
  return perm_from_image(m, std::move(image));
}

}  // namespace

TEST_CASE("cycle notation parser") {
  QubitPermutation p = perm_from_cycle_string(5, "(1,2,3)(4,5)");
  CHECK(p.image_of(1) == 2);
  CHECK(p.image_of(3) == 1);
  CHECK(p.image_of(4) == 5);
  CHECK(perm_from_cycle_string(4, "id").is_identity());
  CHECK(perm_from_cycle_string(4, " ( 1 , 2 ) ").cycles ==
        std::vector<std::vector<int>>{{1, 2}});
  CHECK_THROWS(perm_from_cycle_string(3, "(1,4)"));
  CHECK_THROWS(perm_from_cycle_string(3, "(1,2)(2,3)"));
  CHECK_THROWS(perm_from_cycle_string(3, "(1,2"));
}

TEST_CASE("identity pair has no candidate phases") {
  PermPair pair{2, 1, identity_perm(2), identity_perm(2)};
  FeasibilityReport rep = check_feasibility(pair);
  CHECK(rep.probes.empty());
  CHECK(!rep.feasible);
  CHECK(rep.witnesses.empty());
}

TEST_CASE("candidate phases come from induced cycle roots") {
  PermPair pair{4, 1, perm_from_cycle_string(4, "(1,2,3,4)"), perm_from_cycle_string(4, "(1,4)")};
  std::vector<PhasePair> cands = phase_candidates(pair);
  // Four z1 choices (quarter-turn shifted spectrum is the full spectrum) and
  // two square roots for each of the involution's eigenvalue fractions.
  CHECK(cands.size() == 8);
  for (const PhasePair& c : cands) {
    CHECK(c.z1.den <= 4);
    CHECK(c.z2.den <= 4);
  }
}

TEST_CASE("eigenspace dimensions tile the weight space") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    int m = 3 + static_cast<int>(rng() % 3);
    int k = 1 + static_cast<int>(rng() % 2);
    QubitPermutation p = random_perm(m, rng);
    long total = 0;
    for (const TurnFraction& f : induced_eigenvalue_fractions(p, k))
      total += static_cast<long>(eigenspace_basis(p, k, root_of_unity(f.num, f.den)).size());
    CHECK(total == binom(m, k));
  }
}

TEST_CASE("kernel and rank routes agree on random instances") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    int m = 3 + static_cast<int>(rng() % 3);
    int k = 1 + static_cast<int>(rng() % 2);
    PermPair pair{m, k, random_perm(m, rng), random_perm(m, rng)};
    FeasibilityReport kernel = check_feasibility(pair, false);
    RankReport rank = check_feasibility_by_rank(pair);
    RankReport alt = check_feasibility_by_rank(pair, true);
    CHECK(kernel.feasible == rank.feasible);
    CHECK(rank.feasible == alt.feasible);
    REQUIRE(rank.probes.size() == alt.probes.size());
    for (std::size_t i = 0; i < rank.probes.size(); ++i)
      CHECK(rank.probes[i].rank == alt.probes[i].rank);
  }
}

TEST_CASE("rank route is guarded against wide registers") {
  PermPair pair{16, 2, encoded_y_perm(), encoded_h_perm()};
  CHECK_THROWS(check_feasibility_by_rank(pair));
}

TEST_CASE("verdicts are invariant under simultaneous relabeling") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    int m = 4 + static_cast<int>(rng() % 2);
    PermPair pair{m, 1, random_perm(m, rng), random_perm(m, rng)};
    QubitPermutation sigma = random_perm(m, rng);
    auto conj = [&](const QubitPermutation& p) {
      return compose(sigma, compose(p, inverse(sigma)));
    };
    PermPair moved{m, 1, conj(pair.phase_perm), conj(pair.hadamard_perm)};
    FeasibilityReport a = check_feasibility(pair, false);
    FeasibilityReport b = check_feasibility(moved, false);
    CHECK(a.feasible == b.feasible);
    REQUIRE(a.probes.size() == b.probes.size());
    for (std::size_t i = 0; i < a.probes.size(); ++i) {
      CHECK(a.probes[i].phases == b.probes[i].phases);
      CHECK(a.probes[i].kernel_dim == b.probes[i].kernel_dim);
    }
  }
}

TEST_CASE("orbit filter is necessary but not sufficient") {
  PermPair pair{4, 1, perm_from_cycle_string(4, "(1,2,3,4)"), perm_from_cycle_string(4, "(1,4)")};
  CHECK(orbit_filter(pair));
  CHECK(!check_feasibility(pair, false).feasible);
  // No quarter-turn orbit, so no candidate can put i in the spectrum.
  PermPair no4{4, 1, perm_from_cycle_string(4, "(1,2)(3,4)"), perm_from_cycle_string(4, "(1,3)")};
  CHECK(!orbit_filter(no4));
  CHECK(!check_feasibility(no4, false).feasible);
}

TEST_CASE("filtered out pairs are indeed infeasible at three qubits") {
  SearchConfig cfg;
  cfg.num_qubits = 3;
  cfg.weight = 1;
  cfg.strategy = SearchStrategy::kExhaustive;
  cfg.apply_orbit_filter = false;
  SearchOutcome out = run_search(cfg, nullptr);
  CHECK(out.examined == 36);
  CHECK(out.feasible_count == 0);
  CHECK(out.exhausted);
}

TEST_CASE("exhaustive verdicts at desk scale are pinned") {
  struct Row {
    int m, k;
    std::uint64_t examined, filter_passed;
  };
  for (const Row& row : {Row{3, 1, 36, 0}, Row{4, 1, 576, 48}, Row{4, 2, 576, 48},
                         Row{5, 1, 14400, 1200}, Row{5, 2, 14400, 1200}}) {
    SearchConfig cfg;
    cfg.num_qubits = row.m;
    cfg.weight = row.k;
    cfg.strategy = SearchStrategy::kExhaustive;
    SearchOutcome out = run_search(cfg, nullptr);
    CHECK(out.examined == row.examined);
    CHECK(out.filter_passed == row.filter_passed);
    CHECK(out.feasible_count == 0);
    CHECK(out.exhausted);
  }
}

TEST_CASE("search reports are byte identical across runs") {
  SearchConfig cfg;
  cfg.num_qubits = 4;
  cfg.weight = 1;
  cfg.strategy = SearchStrategy::kExhaustive;
  std::string first, second;
  for (std::string* out : {&first, &second}) {
    std::vector<std::string> lines;
    SearchOutcome o = run_search(cfg, [&](const PairOutcome& r) {
      nlohmann::ordered_json j;
      to_json(j, r);
      lines.push_back(j.dump());
    });
    nlohmann::ordered_json js;
    to_json(js, o);
    lines.push_back(js.dump());
    for (const std::string& l : lines) *out += l + "\n";
  }
  CHECK(first == second);
}

TEST_CASE("random strategy is seeded and budgeted") {
  SearchConfig cfg;
  cfg.num_qubits = 6;
  cfg.weight = 1;
  cfg.strategy = SearchStrategy::kRandom;
  cfg.budget = 40;
  cfg.seed = 2024;
  std::vector<std::vector<int>> seen_a, seen_b;
  SearchOutcome a = run_search(cfg, [&](const PairOutcome& r) {
    seen_a.push_back(r.phase_perm.image);
  });
  SearchOutcome b = run_search(cfg, [&](const PairOutcome& r) {
    seen_b.push_back(r.phase_perm.image);
  });
  CHECK(a.examined == 40);
  CHECK(b.examined == 40);
  CHECK(!a.exhausted);
  CHECK(seen_a == seen_b);
  SearchConfig no_budget = cfg;
  no_budget.budget = 0;
  CHECK_THROWS(run_search(no_budget, nullptr));
}

TEST_CASE("split runs resume to the same totals") {
  SearchConfig cfg;
  cfg.num_qubits = 4;
  cfg.weight = 1;
  cfg.strategy = SearchStrategy::kExhaustive;
  SearchOutcome full = run_search(cfg, nullptr);

  SearchConfig head = cfg;
  head.budget = 200;
  SearchOutcome h = run_search(head, nullptr);
  CHECK(!h.exhausted);
  SearchConfig tail = cfg;
  tail.start_cursor = h.next_cursor;
  SearchOutcome t = run_search(tail, nullptr);
  CHECK(t.exhausted);
  CHECK(h.examined + t.examined == full.examined);
  CHECK(h.filter_passed + t.filter_passed == full.filter_passed);
  CHECK(h.feasible_count + t.feasible_count == full.feasible_count);
}

TEST_CASE("worker count does not change the outcome") {
  SearchConfig cfg;
  cfg.num_qubits = 4;
  cfg.weight = 2;
  cfg.strategy = SearchStrategy::kExhaustive;
  SearchOutcome serial = run_search(cfg, nullptr);
  cfg.workers = 4;
  std::uint64_t last_cursor = 0;
  bool ordered = true;
  SearchOutcome parallel = run_search(cfg, [&](const PairOutcome& r) {
    if (r.cursor < last_cursor) ordered = false;
    last_cursor = r.cursor;
  });
  CHECK(parallel.examined == serial.examined);
  CHECK(parallel.filter_passed == serial.filter_passed);
  CHECK(parallel.feasible_count == serial.feasible_count);
  CHECK(ordered);
}

TEST_CASE("structured strategy walks pairs of cycle types") {
  SearchConfig cfg;
  cfg.num_qubits = 4;
  cfg.weight = 1;
  cfg.strategy = SearchStrategy::kStructured;
  // Five partitions of four on each side, one canonical representative each.
  CHECK(search_space_size(cfg) == 5 * 5);
  cfg.budget = 10;
  SearchOutcome out = run_search(cfg, nullptr);
  CHECK(out.examined == 10);
}

TEST_CASE("sixteen qubit frame pair verdict is pinned") {
  PermPair pair{16, 2, encoded_y_perm(), encoded_h_perm()};
  FeasibilityReport rep = check_feasibility(pair, true);
  CHECK(rep.space_dim == 120);
  // The orbit screen already rules this pair out; the probes confirm it.
  CHECK(!rep.filter_passed);
  REQUIRE(rep.probes.size() == 8);
  CHECK(!rep.feasible);
  CHECK(rep.witnesses.empty());
  // Eigenspace dimensions per z1 fraction: 0 -> 52, 1/4 -> 22, 1/2 -> 24, 3/4 -> 22.
  for (const KernelProbe& p : rep.probes) {
    CHECK(p.kernel_dim == 0);
    long num = p.phases.z1.num, den = p.phases.z1.den;
    int want = den == 1 ? 52 : (num * 4 == den ? 22 : (num * 2 == den ? 24 : 22));
    CHECK(p.eigdim_z1 == want);
  }
}

TEST_CASE("witness extraction can be skipped") {
  PermPair pair{4, 1, perm_from_cycle_string(4, "(1,2,3,4)"), perm_from_cycle_string(4, "(1,4)")};
  FeasibilityReport rep = check_feasibility(pair, false);
  CHECK(rep.witnesses.empty());
  CHECK(rep.probes.size() == 8);
}
