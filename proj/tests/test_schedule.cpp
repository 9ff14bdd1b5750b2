#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "permuqc/gates.hpp"
#include "permuqc/schedule.hpp"
#include "permuqc/state.hpp"

using namespace permuqc;

namespace {

Layer perm_layer(const QubitPermutation& p) {
  Layer l;
  l.ops.push_back(PermGate{p});
  return l;
}

Layer exchange_layer(int i, int j, double theta) {
  Layer l;
  l.ops.push_back(Exchange{i, j, theta});
  return l;
}

}  // namespace

TEST_CASE("only resonant layers cost timesteps") {
  Schedule s;
  s.num_qubits = 4;
  s.push(perm_layer(perm_from_cycles(4, {{1, 2}})));
  s.push(exchange_layer(1, 2, 0.3));
  Layer phase;
  phase.ops.push_back(GlobalPhase{0.5});
  s.push(phase);
  Layer fred;
  fred.ops.push_back(Fredkin{1, 2, 3});
  s.push(fred);
  CHECK(timesteps(s) == 2);
  GateTally t = tally_gates(s);
  CHECK(t.perms == 1);
  CHECK(t.exchanges == 1);
  CHECK(t.fredkins == 1);
  CHECK(t.phases == 1);
}

TEST_CASE("pure permutation schedules are free") {
  Schedule s;
  s.num_qubits = 3;
  s.push(perm_layer(perm_from_cycles(3, {{1, 2, 3}})));
  s.push(perm_layer(perm_from_cycles(3, {{2, 3}})));
  CHECK(timesteps(s) == 0);
}

TEST_CASE("embedding shifts qubit references") {
  Schedule s;
  s.num_qubits = 3;
  Layer l;
  l.ops.push_back(Fredkin{1, 2, 3});
  s.push(l);
  Schedule wide = embed_schedule(s, 4, 8);
  const auto* f = std::get_if<Fredkin>(&wide.layers.front().ops.front());
  REQUIRE(f != nullptr);
  CHECK(f->control == 5);
  CHECK(f->a == 6);
  CHECK(f->b == 7);
  CHECK(wide.num_qubits == 8);
  CHECK_NOTHROW(validate_schedule(wide));
}

TEST_CASE("relabeling compilation removes permutation gates") {
  std::mt19937_64 rng(99);
  Schedule s;
  s.num_qubits = 6;
  std::vector<int> image{1, 2, 3, 4, 5, 6};
  for (int round = 0; round < 8; ++round) {
    std::shuffle(image.begin(), image.end(), rng);
    s.push(perm_layer(perm_from_image(6, image)));
    int a = 1 + static_cast<int>(rng() % 6);
    int b = 1 + static_cast<int>(rng() % 6);
    if (a == b) b = a == 6 ? 1 : a + 1;
    s.push(exchange_layer(a, b, 0.2 + 0.1 * round));
  }
  CompiledSchedule comp = compile_relabeling(s);
  CHECK(tally_gates(comp.schedule).perms == 0);
  CHECK(timesteps(comp.schedule) == timesteps(s));

  std::vector<std::pair<Cx, SparseState>> parts;
  for (int q = 1; q <= 6; ++q)
    parts.push_back({gaussian_complex(rng), make_excited(6, {q})});
  SparseState psi = superpose(parts);
  psi = scale(psi, Cx(1.0 / norm(psi), 0.0));
  SparseState direct = apply_schedule(psi, s);
  SparseState compiled = apply_perm(comp.map.perm, apply_schedule(psi, comp.schedule));
  CHECK(distance(direct, compiled) < 1e-12);
}

TEST_CASE("compilation drops emptied layers") {
  Schedule s;
  s.num_qubits = 2;
  s.push(perm_layer(perm_from_cycles(2, {{1, 2}})));
  s.push(exchange_layer(1, 2, 0.4));
  CompiledSchedule comp = compile_relabeling(s);
  CHECK(comp.schedule.layers.size() == 1);
}

TEST_CASE("schedule validation rejects out of range references") {
  Schedule s;
  s.num_qubits = 2;
  Layer l;
  l.ops.push_back(Exchange{1, 5, 0.1});
  s.push(l);
  CHECK_THROWS(validate_schedule(s));
}
