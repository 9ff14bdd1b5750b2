#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "permuqc/gates.hpp"
#include "permuqc/permutation.hpp"
#include "permuqc/state.hpp"

using namespace permuqc;

TEST_CASE("permutation moves excitations by image") {
  QubitPermutation p = perm_from_cycles(4, {{1, 2, 3}});
  SparseState s = make_excited(4, {1, 4});
  SparseState out = apply_perm(p, s);
  CHECK(out.terms.begin()->first == BasisState::from_positions(4, {2, 4}));
}

TEST_CASE("exchange acts as the two-level rotation") {
  // exp(i theta pi) on span{|10>, |01>}: diagonal cos + i sin swap.
  double theta = 0.7;
  SparseState s = make_excited(2, {1});
  Layer layer;
  layer.ops.push_back(Exchange{1, 2, theta});
  SparseState out = apply_layer(s, layer);
  SparseState want = superpose({{Cx(std::cos(theta), 0), make_excited(2, {1})},
                                {Cx(0, std::sin(theta)), make_excited(2, {2})}});
  CHECK(distance(out, want) < 1e-15);
}

TEST_CASE("exchange phases the symmetric occupation states") {
  // The swap fixes |00> and |11>, so the exponential multiplies by e^{i theta}.
  double theta = 1.1;
  Cx phase = std::polar(1.0, theta);
  Layer layer;
  layer.ops.push_back(Exchange{1, 2, theta});
  SparseState both = make_excited(2, {1, 2});
  CHECK(distance(apply_layer(both, layer), scale(both, phase)) < 1e-15);
  SparseState none = finalize_state(2, {{BasisState(2), Cx(1, 0)}});
  CHECK(distance(apply_layer(none, layer), scale(none, phase)) < 1e-15);
}

TEST_CASE("fredkin swaps targets only when the control is excited") {
  Layer layer;
  layer.ops.push_back(Fredkin{1, 2, 3});
  SparseState on = make_excited(3, {1, 2});
  CHECK(apply_layer(on, layer).terms.begin()->first == BasisState::from_positions(3, {1, 3}));
  SparseState off = make_excited(3, {2});
  CHECK(apply_layer(off, layer).terms.begin()->first == BasisState::from_positions(3, {2}));
}

TEST_CASE("layers reject overlapping supports") {
  Layer bad;
  bad.ops.push_back(Exchange{1, 2, 0.5});
  bad.ops.push_back(Exchange{2, 3, 0.5});
  CHECK_THROWS(validate_layer(bad, 3));

  Layer fred;
  fred.ops.push_back(Fredkin{1, 2, 3});
  fred.ops.push_back(Exchange{3, 4, 0.5});
  CHECK_THROWS(validate_layer(fred, 4));

  Layer ok;
  ok.ops.push_back(Exchange{1, 2, 0.5});
  ok.ops.push_back(Exchange{3, 4, 0.5});
  CHECK_NOTHROW(validate_layer(ok, 4));
}

TEST_CASE("row exchange layer structure") {
  UBeta ub = u_beta(4);
  CHECK(ub.layer.ops.size() == 4);
  for (const GateOp& op : ub.layer.ops) {
    const auto* ex = std::get_if<Exchange>(&op);
    REQUIRE(ex != nullptr);
    CHECK(ex->j == ex->i + 4);
    CHECK(ex->theta == doctest::Approx(kPi / 4));
  }
  CHECK(ub.phase.phi == doctest::Approx(-3.0 * kPi / 4));
}

TEST_CASE("sequential and parallel exchange products agree") {
  for (int n : {2, 3, 4, 5, 6, 7, 8}) {
    ExchangeProductReport rep = verify_theorem1(n, 100, 777);
    CHECK(rep.max_deviation < 1e-12);
  }
}

TEST_CASE("prefactor is required in the product identity") {
  int n = 3;
  double theta = 0.9;
  ExchangeProductReport rep = verify_theorem1(n, 20, 5, theta);
  CHECK(rep.max_deviation < 1e-12);

  SparseState s = make_excited(2 * n, {1});
  SparseState product = s;
  for (int k = 1; k <= n; ++k) product = apply_exchange(product, 2 * k - 1, 2 * k, theta);
  QubitPermutation full = perm_from_cycles(2 * n, {{1, 2}, {3, 4}, {5, 6}});
  SparseState bare = apply_involution_exponential(s, full, theta);
  CHECK(distance(product, bare) > 0.1);
  SparseState fixed = scale(bare, std::polar(1.0, (n - 1) * theta));
  CHECK(distance(product, fixed) < 1e-12);
}

TEST_CASE("row swap identity holds entrywise") {
  for (int n = 1; n <= 6; ++n) {
    RowSwapLemmaReport rep = verify_lemma_identity(n);
    CHECK(rep.holds);
    CHECK(rep.max_deviation < 1e-12);
  }
}

TEST_CASE("row swap identity is nontrivial: perturbed matrices differ") {
  DenseMat a = identity_mat(3);
  DenseMat b = swap_matrix(3, 1, 2);
  CHECK(mat_max_abs_diff(a, b) > 0.9);
}
