#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "permuqc/clifford.hpp"
#include "permuqc/dualrail.hpp"
#include "permuqc/gates.hpp"
#include "permuqc/logical_frame.hpp"
#include "permuqc/mat2.hpp"
#include "permuqc/schedule.hpp"
#include "permuqc/state.hpp"

using namespace permuqc;

namespace {

SparseState half_sum(const SparseState& a, const SparseState& b, double sign) {
  double r = 1.0 / std::sqrt(2.0);
  return superpose({{Cx(r, 0), a}, {Cx(sign * r, 0), b}});
}

}  // namespace

TEST_CASE("singlet row states have the fourier amplitudes") {
  SparseState p2 = psi0(2);
  REQUIRE(p2.num_qubits == 4);
  CHECK(std::abs(p2.terms.at(BasisState::parse("1000")) - Cx(1 / std::sqrt(2.0), 0)) < 1e-15);
  CHECK(std::abs(p2.terms.at(BasisState::parse("0100")) + Cx(1 / std::sqrt(2.0), 0)) < 1e-15);

  SparseState p4 = psi0(4);
  REQUIRE(p4.num_qubits == 8);
  const Cx expected[] = {Cx(0.5, 0), Cx(0, 0.5), Cx(-0.5, 0), Cx(0, -0.5)};
  for (int j = 1; j <= 4; ++j) {
    BasisState b = BasisState::from_positions(8, {j});
    CHECK(std::abs(p4.terms.at(b) - expected[j - 1]) < 1e-15);
  }
  CHECK(std::abs(norm(p4) - 1.0) < 1e-15);
}

TEST_CASE("swap generator toggles the logical bit and squares to identity") {
  for (int n : {2, 3, 4, 8}) {
    auto [b0, b1] = logical_basis(n);
    QubitPermutation a = alpha_perm(n);
    CHECK(distance(apply_perm(a, b0), b1) < 1e-14);
    CHECK(distance(apply_perm(a, b1), b0) < 1e-14);
    CHECK(compose(a, a).is_identity());
  }
}

TEST_CASE("cycle generator fixes zero and phases one") {
  for (int n : {2, 4, 8}) {
    auto [b0, b1] = logical_basis(n);
    QubitPermutation g = gamma_perm(n);
    CHECK(distance(apply_perm(g, b0), b0) < 1e-14);
    CHECK(distance(apply_perm(g, b1), scale(b1, root_of_unity(1, n))) < 1e-14);
    CHECK(perm_order(g) == n);
  }
}

TEST_CASE("generator commutator is diagonal on the logical basis") {
  for (int n : {2, 4}) {
    auto [b0, b1] = logical_basis(n);
    QubitPermutation g = gamma_perm(n);
    QubitPermutation a = alpha_perm(n);
    QubitPermutation comm =
        compose(g, compose(a, compose(inverse(g), inverse(a))));
    for (const SparseState* b : {&b0, &b1}) {
      SparseState out = apply_perm(comm, *b);
      CHECK(std::abs(std::abs(inner_product(*b, out)) - 1.0) < 1e-14);
    }
  }
}

TEST_CASE("controlled copy branches on the logical bit") {
  for (int n : {2, 3, 4}) {
    auto [b0, b1] = logical_basis(n);
    Schedule cb = c_beta_schedule(n);
    CHECK(timesteps(cb) == n);
    CHECK(tally_gates(cb).fredkins == n * n);
    CHECK(distance(apply_schedule(b0, cb), b0) < 1e-14);
    CHECK(distance(apply_schedule(b1, cb), tensor(psi1(n), psi1(n))) < 1e-14);
  }
}

TEST_CASE("hadamard calibration meets the timestep budget") {
  for (int n : {4, 8}) {
    HadamardCalibration cal = calibrate_hadamard(n);
    REQUIRE(cal.ok);
    CHECK(timesteps(cal.schedule) == 2 * n + 1);
    // First exponent pair found by the scan.
    CHECK(cal.pre_exponent == 3 * n / 4);
    CHECK(cal.post_exponent == 3 * n / 4);
    CHECK(cal.residual < 1e-12);

    auto [b0, b1] = logical_basis(n);
    SparseState out0 = apply_schedule(b0, cal.schedule);
    SparseState out1 = apply_schedule(b1, cal.schedule);
    SparseState plus = half_sum(b0, b1, 1.0);
    SparseState minus = half_sum(b0, b1, -1.0);
    CHECK(fidelity_mod_phase(out0, plus) >= 1.0 - 1e-10);
    CHECK(fidelity_mod_phase(out1, minus) >= 1.0 - 1e-10);
    // Shared global phase across both columns.
    CHECK(std::abs(inner_product(plus, out0) - inner_product(minus, out1)) < 1e-10);
  }
}

TEST_CASE("hadamard schedule squares to identity mod phase") {
  for (int n : {4, 8}) {
    HadamardCalibration cal = calibrate_hadamard(n);
    REQUIRE(cal.ok);
    auto [b0, b1] = logical_basis(n);
    SparseState twice0 = apply_schedule(apply_schedule(b0, cal.schedule), cal.schedule);
    SparseState twice1 = apply_schedule(apply_schedule(b1, cal.schedule), cal.schedule);
    LogicalAction act = logical_action(twice0, twice1, b0, b1);
    CHECK(act.residual < 1e-10);
    CHECK(eq_mod_phase(act.matrix, Mat2::ident()));
  }
}

TEST_CASE("conjugating the bit flip by hadamard gives the phase flip") {
  for (int n : {4, 8}) {
    HadamardCalibration cal = calibrate_hadamard(n);
    REQUIRE(cal.ok);
    auto [b0, b1] = logical_basis(n);
    QubitPermutation a = alpha_perm(n);
    auto hxh = [&](const SparseState& b) {
      return apply_schedule(apply_perm(a, apply_schedule(b, cal.schedule)), cal.schedule);
    };
    LogicalAction act = logical_action(hxh(b0), hxh(b1), b0, b1);
    CHECK(act.residual < 1e-10);
    Mat2 z = Mat2::diag(Cx(1, 0), Cx(-1, 0));
    CHECK(eq_mod_phase(act.matrix, z, 1e-9));
  }
}

TEST_CASE("rail lengths not divisible by four report no calibration") {
  CHECK(!calibrate_hadamard(2).ok);
  CHECK(!calibrate_hadamard(6).ok);
  CHECK_FALSE(calibrate_hadamard(6).note.empty());
}

TEST_CASE("cnot truth table and costs") {
  for (int n : {2, 3}) {
    LogicalRegister reg{n, 2};
    Schedule cx = cnot_schedule(n, 2, 1, 2);
    CHECK(timesteps(cx) == n);
    CHECK(tally_gates(cx).fredkins == 2 * n * n);
    const char* truth[4][2] = {{"00", "00"}, {"01", "01"}, {"10", "11"}, {"11", "10"}};
    for (auto& row : truth) {
      SparseState out = apply_schedule(logical_product_state(reg, row[0]), cx);
      DecodeTable dec = decode(out, reg);
      CHECK(dec.residual < 1e-12);
      for (const auto& [bits, amp] : dec.amps) {
        if (bits == row[1])
          CHECK(std::abs(amp - Cx(1, 0)) < 1e-12);
        else
          CHECK(std::abs(amp) < 1e-12);
      }
    }
  }
}

TEST_CASE("cnot is linear on superposed control") {
  int n = 2;
  LogicalRegister reg{n, 2};
  Schedule cx = cnot_schedule(n, 2, 1, 2);
  SparseState in = half_sum(logical_product_state(reg, "00"),
                            logical_product_state(reg, "10"), 1.0);
  DecodeTable dec = decode(apply_schedule(in, cx), reg);
  double r = 1.0 / std::sqrt(2.0);
  CHECK(dec.residual < 1e-12);
  for (const auto& [bits, amp] : dec.amps) {
    if (bits == "00" || bits == "11")
      CHECK(std::abs(amp - Cx(r, 0)) < 1e-12);
    else
      CHECK(std::abs(amp) < 1e-12);
  }
}

TEST_CASE("cnot targets the addressed registers only") {
  int n = 2;
  LogicalRegister reg{n, 3};
  Schedule cx = cnot_schedule(n, 3, 2, 3);
  CHECK(cx.num_qubits == 3 * 4 * n);
  SparseState in = logical_product_state(reg, "110");
  DecodeTable dec = decode(apply_schedule(in, cx), reg);
  CHECK(dec.residual < 1e-12);
  for (const auto& [bits, amp] : dec.amps) {
    if (bits == "111")
      CHECK(std::abs(std::abs(amp) - 1.0) < 1e-12);
    else
      CHECK(std::abs(amp) < 1e-12);
  }
}

TEST_CASE("decode flags amplitude outside the logical span") {
  int n = 2;
  LogicalRegister reg{n, 1};
  SparseState b0 = logical_product_state(reg, "0");
  CHECK(decode(b0, reg).residual == 0.0);
  // One stray conditional swap moves weight off the code space.
  Layer stray;
  stray.ops.push_back(Fredkin{1, 2 * n + 1, 3 * n + 1});
  SparseState leaked = apply_layer(b0, stray);
  CHECK(decode(leaked, reg).residual > 0.1);
}

TEST_CASE("schedules preserve weight and norm") {
  int n = 4;
  LogicalRegister reg{n, 1};
  HadamardCalibration cal = calibrate_hadamard(n);
  SparseState in = half_sum(logical_product_state(reg, "0"),
                            logical_product_state(reg, "1"), -1.0);
  SparseState out = apply_schedule(in, cal.schedule);
  REQUIRE(out.weight.has_value());
  CHECK(*out.weight == 2);
  CHECK(std::abs(norm(out) - 1.0) < 1e-10);
}

TEST_CASE("quarter cycle and swap generate the eight element table group") {
  for (int n : {4, 8}) {
    auto [b0, b1] = logical_basis(n);
    QubitPermutation p = gamma_power_perm(n, n / 4);
    QubitPermutation x = alpha_perm(n);
    LogicalAction pa = logical_action(apply_perm(p, b0), apply_perm(p, b1), b0, b1);
    LogicalAction xa = logical_action(apply_perm(x, b0), apply_perm(x, b1), b0, b1);
    REQUIRE(pa.residual < 1e-12);
    REQUIRE(xa.residual < 1e-12);
    CHECK(eq_mod_phase(pa.matrix, a_matrix(1, 1)));
    CHECK(eq_mod_phase(xa.matrix, a_matrix(2, 4)));

    std::vector<CliffordElement> group = generate({canonicalize(pa.matrix), canonicalize(xa.matrix)});
    TableReport px = verify_table("PX");
    std::set<std::pair<int, int>> got, want;
    for (const CliffordElement& e : group) got.insert(e.index());
    for (const TableCellResult& cell : px.cells) want.insert({cell.i, cell.j});
    CHECK(group.size() == 8);
    CHECK(got == want);
  }
}

TEST_CASE("product state assembly matches explicit tensors") {
  int n = 2;
  LogicalRegister reg{n, 2};
  auto [b0, b1] = logical_basis(n);
  CHECK(distance(logical_product_state(reg, "01"), tensor(b0, b1)) == 0.0);
  CHECK(distance(logical_product_state(reg, "10"), tensor(b1, b0)) == 0.0);
  CHECK_THROWS(logical_product_state(reg, "012"));
}
