#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "permuqc/clifford.hpp"
#include "permuqc/mat2.hpp"

using namespace permuqc;

TEST_CASE("catalog matrices are unitary and distinct mod phase") {
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 4; ++j) {
      Mat2 m = a_matrix(i, j);
      Mat2 prod = mul(adjoint(m), m);
      CHECK(max_abs_diff(prod, Mat2::ident()) < 1e-12);
      for (int i2 = 1; i2 <= 6; ++i2)
        for (int j2 = 1; j2 <= 4; ++j2) {
          if (i2 == i && j2 == j) continue;
          CHECK(!eq_mod_phase(m, a_matrix(i2, j2)));
        }
    }
}

TEST_CASE("named gates sit at their catalog slots") {
  CHECK(clifford_identity().index() == std::pair{1, 4});
  CHECK(clifford_p().index() == std::pair{1, 1});
  CHECK(clifford_z().index() == std::pair{1, 2});
  CHECK(clifford_x().index() == std::pair{2, 4});
  CHECK(clifford_h().index() == std::pair{3, 1});
}

TEST_CASE("canonicalize accepts any phase multiple") {
  Mat2 h = a_matrix(3, 1);
  Mat2 rotated = scale(h, std::polar(1.0, 0.777));
  CHECK(canonicalize(rotated).index() == std::pair{3, 1});
  Mat2 junk = Mat2::diag(Cx(2, 0), Cx(1, 0));
  CHECK_THROWS(canonicalize(junk));
}

TEST_CASE("phase and flip generate the eight element cyclic-extension table") {
  TableReport rep = verify_table("PX");
  CHECK(rep.all_cells_pass);
  CHECK(rep.subgroup_ok);
  CHECK(rep.subgroup_size == 8);
  CHECK(rep.cells.size() == 8);
  for (const TableCellResult& cell : rep.cells) CHECK(cell.pass);
}

TEST_CASE("hadamard and flip table closes on its eight cells") {
  TableReport rep = verify_table("HZ");
  CHECK(rep.all_cells_pass);
  CHECK(rep.subgroup_ok);
  CHECK(rep.subgroup_size == 8);
}

TEST_CASE("unknown table name is rejected") {
  CHECK_THROWS(verify_table("XY"));
}

TEST_CASE("hadamard and phase generate the full group with the s4 profile") {
  S4Report rep = verify_s4_profile();
  CHECK(rep.group_order == 24);
  CHECK(rep.matches_s4);
  CHECK(rep.order_profile.at(1) == 1);
  CHECK(rep.order_profile.at(2) == 9);
  CHECK(rep.order_profile.at(3) == 8);
  CHECK(rep.order_profile.at(4) == 6);
}

TEST_CASE("multiplication stays inside the catalog") {
  CliffordElement hz = mul_mod_phase(clifford_h(), clifford_z());
  CHECK(hz.index() == std::pair{4, 2});
  CliffordElement zh = mul_mod_phase(clifford_z(), clifford_h());
  CHECK(zh.index() == std::pair{3, 2});
  CHECK(element_order_mod_phase(clifford_h()) == 2);
  CHECK(element_order_mod_phase(clifford_p()) == 4);
  CHECK(element_order_mod_phase(mul_mod_phase(clifford_h(), clifford_p())) == 3);
}

TEST_CASE("single generator subgroups have the right sizes") {
  CHECK(generate({clifford_z()}).size() == 2);
  CHECK(generate({clifford_p()}).size() == 4);
  CHECK(generate({clifford_h(), clifford_p()}).size() == 24);
}
