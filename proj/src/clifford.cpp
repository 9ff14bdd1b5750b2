#include "permuqc/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace permuqc {

namespace {

Cx i_pow(int j) {
  switch (((j % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

Mat2 a_matrix(int i, int j) {
  if (i < 1 || i > 6 || j < 1 || j > 4)
    throw std::invalid_argument("a_matrix: index out of range");
  if (i == 1) return Mat2::diag(1.0, i_pow(j));
  if (i == 2) {
    Mat2 m;
    m.at(0, 1) = 1.0;
    m.at(1, 0) = i_pow(j);
    return m;
  }
  if (i == 5) return scale(add(a_matrix(1, j), scale(a_matrix(2, j), Cx(0, 1))), kInvSqrt2);
  if (i == 6) return scale(sub(a_matrix(1, j), scale(a_matrix(2, j), Cx(0, 1))), kInvSqrt2);
  // Rows 3 and 4 pair a diagonal cell with an antidiagonal one.
  static constexpr int pair_1[4] = {2, 4, 1, 3};  // j -> diagonal index
  static constexpr int pair_2[4] = {4, 2, 3, 1};  // j -> antidiagonal index
  Mat2 d = a_matrix(1, pair_1[j - 1]);
  Mat2 ad = a_matrix(2, pair_2[j - 1]);
  if (i == 3) return scale(add(d, ad), kInvSqrt2);
  return scale(sub(d, ad), kInvSqrt2);
}

namespace {

const std::vector<CliffordElement>& catalog() {
  static const std::vector<CliffordElement> all = [] {
    std::vector<CliffordElement> v;
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 4; ++j) v.push_back({i, j, a_matrix(i, j)});
    return v;
  }();
  return all;
}

}  // namespace

CliffordElement canonicalize(const Mat2& m, double tol) {
  for (const auto& e : catalog())
    if (eq_mod_phase(m, e.matrix, tol)) return e;
  throw std::invalid_argument("canonicalize: matrix is not a catalog element");
}

CliffordElement clifford_identity() { return {1, 4, a_matrix(1, 4)}; }
CliffordElement clifford_h() { return {3, 1, a_matrix(3, 1)}; }
CliffordElement clifford_p() { return {1, 1, a_matrix(1, 1)}; }
CliffordElement clifford_x() { return {2, 4, a_matrix(2, 4)}; }
CliffordElement clifford_z() { return {1, 2, a_matrix(1, 2)}; }

CliffordElement mul_mod_phase(const CliffordElement& a, const CliffordElement& b) {
  return canonicalize(mul(a.matrix, b.matrix));
}

int element_order_mod_phase(const CliffordElement& a) {
  CliffordElement cur = a;
  for (int k = 1; k <= 8; ++k) {
    if (cur.index() == clifford_identity().index()) return k;
    cur = mul_mod_phase(cur, a);
  }
  throw std::logic_error("element_order_mod_phase: no order up to 8");
}

std::vector<CliffordElement> generate(const std::vector<CliffordElement>& gens) {
  std::map<std::pair<int, int>, CliffordElement> known;
  for (const auto& g : gens) known.emplace(g.index(), canonicalize(g.matrix));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<CliffordElement> current;
    current.reserve(known.size());
    for (const auto& [idx, e] : known) current.push_back(e);
    for (const auto& a : current) {
      for (const auto& b : current) {
        CliffordElement p = mul_mod_phase(a, b);
        if (known.emplace(p.index(), p).second) grew = true;
      }
    }
  }
  std::vector<CliffordElement> out;
  for (const auto& [idx, e] : known) out.push_back(e);
  return out;
}

namespace {

Mat2 eval_word(const std::string& word) {
  Mat2 acc = Mat2::ident();
  for (char c : word) {
    Mat2 g;
    switch (c) {
      case 'P': g = a_matrix(1, 1); break;
      case 'X': g = a_matrix(2, 4); break;
      case 'H': g = a_matrix(3, 1); break;
      case 'Z': g = a_matrix(1, 2); break;
      default: throw std::invalid_argument("eval_word: unknown generator");
    }
    acc = mul(acc, g);
  }
  return acc;
}

struct WordCell {
  int i;
  int j;
  const char* word;
};

// Subgroup generated by P and X: all eight diagonal/antidiagonal cells.
constexpr WordCell kPxCells[] = {
    {1, 1, "P"},    {1, 2, "PP"},   {1, 3, "PPP"},  {1, 4, "PPPP"},
    {2, 1, "PX"},   {2, 2, "PPX"},  {2, 3, "PPPX"}, {2, 4, "PPPPX"},
};

// Subgroup generated by H and Z: populated cells of the word table.
constexpr WordCell kHzCells[] = {
    {1, 2, "Z"},    {1, 4, "ZZ"},   {2, 2, "ZHZH"}, {2, 4, "ZZHZH"},
    {3, 1, "H"},    {3, 2, "HHZH"}, {4, 1, "ZHZ"},  {4, 2, "HZ"},
};

}  // namespace

TableReport verify_table(const std::string& table) {
  TableReport report;
  report.table = table;
  const WordCell* cells = nullptr;
  std::size_t count = 0;
  std::vector<CliffordElement> gens;
  if (table == "PX") {
    cells = kPxCells;
    count = std::size(kPxCells);
    gens = {clifford_p(), clifford_x()};
  } else if (table == "HZ") {
    cells = kHzCells;
    count = std::size(kHzCells);
    gens = {clifford_h(), clifford_z()};
  } else {
    throw std::invalid_argument("verify_table: unknown table");
  }

  std::set<std::pair<int, int>> expected;
  bool all = true;
  for (std::size_t c = 0; c < count; ++c) {
    TableCellResult cell;
    cell.i = cells[c].i;
    cell.j = cells[c].j;
    cell.word = cells[c].word;
    bool pass = false;
    try {
      CliffordElement got = canonicalize(eval_word(cell.word));
      pass = got.index() == std::pair{cell.i, cell.j};
    } catch (const std::invalid_argument&) {
      pass = false;
    }
    cell.pass = pass;
    all = all && pass;
    expected.insert({cell.i, cell.j});
    report.cells.push_back(std::move(cell));
  }
  report.all_cells_pass = all;

  std::vector<CliffordElement> closure = generate(gens);
  report.subgroup_size = static_cast<int>(closure.size());
  std::set<std::pair<int, int>> got;
  for (const auto& e : closure) got.insert(e.index());
  report.subgroup_ok = report.subgroup_size == 8 && got == expected;
  return report;
}

S4Report verify_s4_profile() {
  S4Report report;
  std::vector<CliffordElement> group = generate({clifford_h(), clifford_p()});
  report.group_order = static_cast<int>(group.size());
  for (const auto& e : group) ++report.order_profile[element_order_mod_phase(e)];
  std::map<int, int> s4{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  report.matches_s4 = report.group_order == 24 && report.order_profile == s4;
  return report;
}

void to_json(nlohmann::ordered_json& j, const CliffordElement& e) {
  j = nlohmann::ordered_json::object();
  j["i"] = e.i;
  j["j"] = e.j;
  auto rows = nlohmann::ordered_json::array();
  for (int r = 0; r < 2; ++r) {
    auto row = nlohmann::ordered_json::array();
    for (int c = 0; c < 2; ++c)
      row.push_back({{"re", e.matrix.at(r, c).real()}, {"im", e.matrix.at(r, c).imag()}});
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
}

void to_json(nlohmann::ordered_json& j, const TableReport& r) {
  j = nlohmann::ordered_json::object();
  j["table"] = r.table;
  auto cells = nlohmann::ordered_json::array();
  for (const auto& c : r.cells)
    cells.push_back({{"i", c.i}, {"j", c.j}, {"word", c.word}, {"pass", c.pass}});
  j["cells"] = std::move(cells);
  j["allCellsPass"] = r.all_cells_pass;
  j["subgroupSize"] = r.subgroup_size;
  j["subgroupOk"] = r.subgroup_ok;
}

void to_json(nlohmann::ordered_json& j, const S4Report& r) {
  j = nlohmann::ordered_json::object();
  j["groupOrder"] = r.group_order;
  auto prof = nlohmann::ordered_json::object();
  for (const auto& [ord, cnt] : r.order_profile) prof[std::to_string(ord)] = cnt;
  j["orderProfile"] = std::move(prof);
  j["matchesS4"] = r.matches_s4;
}

}  // namespace permuqc
