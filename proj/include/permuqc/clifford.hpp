#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "permuqc/mat2.hpp"

namespace permuqc {

// One of the 24 single-qubit Clifford gates mod global phase, indexed as
// A_ij with i in 1..6, j in 1..4. The matrix held is the defining one for
// that cell (not phase-normalized).
struct CliffordElement {
  int i = 0;
  int j = 0;
  Mat2 matrix;

  bool operator==(const CliffordElement& o) const { return i == o.i && j == o.j; }
  auto index() const { return std::pair{i, j}; }
};

// The defining matrix for cell (i, j). Rows 1 and 2 are diagonal and
// antidiagonal quarter-turn families; rows 3..6 are their sum/difference
// combinations scaled by 1/sqrt(2).
Mat2 a_matrix(int i, int j);

// Matches an arbitrary unitary to its catalog cell mod phase; throws if no
// cell is within tolerance.
CliffordElement canonicalize(const Mat2& m, double tol = kMatchTol);

CliffordElement clifford_identity();   // A_14
CliffordElement clifford_h();          // A_31
CliffordElement clifford_p();          // A_11
CliffordElement clifford_x();          // A_24
CliffordElement clifford_z();          // A_12

CliffordElement mul_mod_phase(const CliffordElement& a, const CliffordElement& b);
int element_order_mod_phase(const CliffordElement& a);

// Closure of the given elements under multiplication, sorted by index.
std::vector<CliffordElement> generate(const std::vector<CliffordElement>& gens);

struct TableCellResult {
  int i = 0;
  int j = 0;
  std::string word;
  bool pass = false;
};

struct TableReport {
  std::string table;   // "PX" or "HZ"
  std::vector<TableCellResult> cells;
  bool all_cells_pass = false;
  int subgroup_size = 0;
  bool subgroup_ok = false;
};

// Checks the generator-word table for one of the two 8-element subgroups:
// "PX" (every cell populated, words P^j and P^j X) or "HZ" (populated cells
// only). Also closes the generators and checks the subgroup has 8 elements.
TableReport verify_table(const std::string& table);

struct S4Report {
  int group_order = 0;
  std::map<int, int> order_profile;   // element order -> count
  bool matches_s4 = false;
};

// Order profile of generate({H, P}); S4's profile is {1:1, 2:9, 3:8, 4:6}.
S4Report verify_s4_profile();

void to_json(nlohmann::ordered_json& j, const CliffordElement& e);
void to_json(nlohmann::ordered_json& j, const TableReport& r);
void to_json(nlohmann::ordered_json& j, const S4Report& r);

}  // namespace permuqc
