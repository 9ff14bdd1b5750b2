// permuqc: verification and search commands over the exchange-interaction
// simulator. Every command is self-contained and writes one report artifact;
// identical config (seed included) yields byte-identical JSON.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "permuqc/clifford.hpp"
#include "permuqc/common.hpp"
#include "permuqc/dualrail.hpp"
#include "permuqc/feasibility.hpp"
#include "permuqc/gates.hpp"
#include "permuqc/perm_hadamard.hpp"
#include "permuqc/schedule.hpp"
#include "permuqc/state.hpp"
#include "permuqc/toffoli.hpp"

namespace {

using permuqc::Cx;
using json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 12345;
constexpr int kSchemaVersion = 1;

struct CommonOpts {
  std::string output;
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  double tol = -1.0;
  bool long_tests = false;
  int workers = 1;
};

double tol_or(const CommonOpts& c, double fallback) {
  return c.tol > 0 ? c.tol : fallback;
}

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--output", c.output,
                  "Report path ('-' for stdout; default <out-dir>/<command>.json)");
  cmd->add_option("--format", c.format, "Report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--seed", c.seed, "RNG seed (fixed default for reproducibility)");
  cmd->add_option("--tol", c.tol, "Override the command's default tolerance");
}

std::string default_output_path(const std::string& command) {
  const char* dir = std::getenv("PERMUQC_OUT_DIR");
  std::string base = dir && *dir ? std::string(dir) : std::string(".");
  if (!base.empty() && base.back() != '/') base += '/';
  return base + command + ".json";
}

void render_text(std::ostream& os, const json& j, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        os << pad << key << ":\n";
        render_text(os, value, indent + 2);
      } else {
        os << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object() || value.is_array()) {
        os << pad << "-\n";
        render_text(os, value, indent + 2);
      } else {
        os << pad << "- " << value.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

// Returns the process exit code: 0 all checks passed, 1 otherwise.
int emit(const std::string& command, const CommonOpts& c, json report, bool pass) {
  report["pass"] = pass;
  std::string path = c.output.empty() ? default_output_path(command) : c.output;
  if (path == "-") {
    if (c.format == "json")
      std::cout << report.dump(2) << "\n";
    else
      render_text(std::cout, report, 0);
  } else {
    std::ofstream out(path);
    if (!out) {
      std::cerr << "error: cannot write " << path << "\n";
      return 2;
    }
    if (c.format == "json")
      out << report.dump(2) << "\n";
    else
      render_text(out, report, 0);
    std::cerr << command << ": " << (pass ? "pass" : "FAIL") << ", report at " << path
              << "\n";
  }
  return pass ? 0 : 1;
}

json report_head(const std::string& command, json config) {
  json j;
  j["schemaVersion"] = kSchemaVersion;
  j["command"] = command;
  j["config"] = std::move(config);
  return j;
}

json cx_json(Cx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

// ---------------------------------------------------------------- commands

int run_verify_encoding(const CommonOpts& c, int n_opt) {
  using namespace permuqc;
  double tol = tol_or(c, 1e-12);
  std::vector<int> ns = n_opt > 0 ? std::vector<int>{n_opt} : std::vector<int>{2, 4, 8};
  json results = json::array();
  bool pass = true;
  for (int n : ns) {
    auto [zero, one] = logical_basis(n);
    double alpha_dev = distance(apply_perm(alpha_perm(n), zero), one);
    QubitPermutation gamma = gamma_perm(n);
    Cx w = root_of_unity(1, n);
    double gamma_one_dev = distance(apply_perm(gamma, one), scale(one, w));
    double gamma_zero_dev = distance(apply_perm(gamma, zero), zero);
    bool ok = alpha_dev < tol && gamma_one_dev < tol && gamma_zero_dev < tol;
    json r;
    r["n"] = n;
    r["alphaMapsZeroToOne"] = alpha_dev;
    r["gammaPhaseOnOne"] = gamma_one_dev;
    r["gammaFixesZero"] = gamma_zero_dev;
    r["phase"] = cx_json(w);
    r["pass"] = ok;
    results.push_back(std::move(r));
    pass = pass && ok;
  }
  json report = report_head("verify-encoding", {{"n", n_opt}, {"tol", tol}});
  report["results"] = std::move(results);
  return emit("verify-encoding", c, std::move(report), pass);
}

int run_verify_theorem1(const CommonOpts& c, int n, int trials,
                        std::optional<double> theta) {
  using namespace permuqc;
  double tol = tol_or(c, 1e-12);
  ExchangeProductReport rep = verify_theorem1(n, trials, c.seed, theta);
  bool pass = rep.max_deviation < tol;
  json config = {{"n", n}, {"trials", trials}, {"seed", c.seed}, {"tol", tol}};
  if (theta) config["theta"] = *theta;
  json report = report_head("verify-theorem1", std::move(config));
  report["maxDeviation"] = rep.max_deviation;
  return emit("verify-theorem1", c, std::move(report), pass);
}

int run_verify_lemma(const CommonOpts& c, int n) {
  using namespace permuqc;
  double tol = tol_or(c, 1e-12);
  RowSwapLemmaReport rep = verify_lemma_identity(n);
  bool pass = rep.holds && rep.max_deviation < tol;
  json report = report_head("verify-lemma", {{"n", n}, {"tol", tol}});
  report["holds"] = rep.holds;
  report["maxDeviation"] = rep.max_deviation;
  return emit("verify-lemma", c, std::move(report), pass);
}

json hadamard_check(int n, double tol, double fid_tol, bool& pass) {
  using namespace permuqc;
  json r;
  r["n"] = n;
  if (n % 4 != 0) {
    r["calibrated"] = false;
    r["note"] = "requires n divisible by 4";
    pass = false;
    return r;
  }
  HadamardCalibration cal = calibrate_hadamard(n);
  r["calibrated"] = cal.ok;
  if (!cal.ok) {
    r["note"] = cal.note;
    pass = false;
    return r;
  }
  r["preExponent"] = cal.pre_exponent;
  r["postExponent"] = cal.post_exponent;
  r["calibrationResidual"] = cal.residual;
  int steps = timesteps(cal.schedule);
  r["timesteps"] = steps;
  LogicalRegister reg{n, 1};
  SparseState zero = logical_product_state(reg, "0");
  SparseState one = logical_product_state(reg, "1");
  SparseState out0 = apply_schedule(zero, cal.schedule);
  SparseState out1 = apply_schedule(one, cal.schedule);
  double inv = 1.0 / std::sqrt(2.0);
  SparseState plus = superpose({{Cx(inv, 0), zero}, {Cx(inv, 0), one}});
  SparseState minus = superpose({{Cx(inv, 0), zero}, {Cx(-inv, 0), one}});
  double fid0 = fidelity_mod_phase(out0, plus);
  double fid1 = fidelity_mod_phase(out1, minus);
  // One shared global phase: the two residual phases must agree.
  Cx phase0 = inner_product(plus, out0);
  Cx phase1 = inner_product(minus, out1);
  double shared_dev = std::abs(phase0 - phase1);
  r["fidelityPlus"] = fid0;
  r["fidelityMinus"] = fid1;
  r["globalPhase"] = cx_json(phase0);
  r["sharedPhaseDeviation"] = shared_dev;
  bool ok = fid0 >= 1.0 - fid_tol && fid1 >= 1.0 - fid_tol && shared_dev < tol &&
            steps == 2 * n + 1;
  r["timestepsExpected"] = 2 * n + 1;
  r["pass"] = ok;
  pass = ok;
  return r;
}

int run_verify_hadamard(const CommonOpts& c, int n_opt) {
  double tol = tol_or(c, 1e-9);
  double fid_tol = 1e-10;
  std::vector<int> ns = n_opt > 0 ? std::vector<int>{n_opt} : std::vector<int>{4, 8};
  json results = json::array();
  bool pass = true;
  for (int n : ns) {
    bool ok = true;
    results.push_back(hadamard_check(n, tol, fid_tol, ok));
    pass = pass && ok;
  }
  json report = report_head("verify-hadamard",
                            {{"n", n_opt}, {"tol", tol}, {"fidelityTol", fid_tol}});
  report["results"] = std::move(results);
  return emit("verify-hadamard", c, std::move(report), pass);
}

int run_verify_cnot(const CommonOpts& c, int n) {
  using namespace permuqc;
  double tol = tol_or(c, 1e-12);
  LogicalRegister reg{n, 2};
  Schedule cx = cnot_schedule(n, 2, 1, 2);
  GateTally tally = tally_gates(cx);
  json table = json::array();
  bool pass = timesteps(cx) == n && tally.fredkins == 2 * n * n;
  static const char* kTruth[4][2] = {{"00", "00"}, {"01", "01"}, {"10", "11"}, {"11", "10"}};
  for (auto& row : kTruth) {
    SparseState out = apply_schedule(logical_product_state(reg, row[0]), cx);
    DecodeTable dec = decode(out, reg);
    Cx amp;
    for (const auto& [bits, a] : dec.amps)
      if (bits == row[1]) amp = a;
    bool ok = std::abs(std::abs(amp) - 1.0) < tol && dec.residual < tol;
    json r;
    r["in"] = row[0];
    r["out"] = row[1];
    r["amp"] = cx_json(amp);
    r["residual"] = dec.residual;
    r["pass"] = ok;
    table.push_back(std::move(r));
    pass = pass && ok;
  }
  // Linearity on an entangled-ish input: (|0>+|1>)|0> -> (|00>+|11>)/sqrt(2).
  double inv = 1.0 / std::sqrt(2.0);
  SparseState in = superpose({{Cx(inv, 0), logical_product_state(reg, "00")},
                              {Cx(inv, 0), logical_product_state(reg, "10")}});
  DecodeTable dec = decode(apply_schedule(in, cx), reg);
  double a00 = 0, a11 = 0;
  for (const auto& [bits, a] : dec.amps) {
    if (bits == "00") a00 = std::abs(a);
    if (bits == "11") a11 = std::abs(a);
  }
  bool lin_ok = std::abs(a00 - inv) < tol && std::abs(a11 - inv) < tol &&
                dec.residual < tol;
  pass = pass && lin_ok;
  json report = report_head("verify-cnot", {{"n", n}, {"tol", tol}});
  report["timesteps"] = timesteps(cx);
  report["timestepsExpected"] = n;
  report["fredkins"] = tally.fredkins;
  report["fredkinsExpected"] = 2 * n * n;
  report["truthTable"] = std::move(table);
  report["superpositionInput"] =
      json{{"amp00", a00}, {"amp11", a11}, {"residual", dec.residual}, {"pass", lin_ok}};
  return emit("verify-cnot", c, std::move(report), pass);
}

int run_verify_toffoli(const CommonOpts& c, int n) {
  using namespace permuqc;
  double tol = tol_or(c, 1e-10);
  ToffoliSchedule ts = toffoli_schedule(n);
  CompareReport cmp = compare_report(n);
  json report = report_head("verify-toffoli", {{"n", n}, {"tol", tol}, {"long", c.long_tests}});
  json jcmp;
  to_json(jcmp, cmp);
  report["compare"] = std::move(jcmp);
  bool pass = cmp.extended_timesteps == 10 * n + 2 && cmp.cnot_blocks == 6 &&
              cmp.hadamard_blocks == 2 && cmp.phase_perm_gates == 8;
  if (n == 8) pass = pass && cmp.extended_timesteps == 82 && cmp.baseline_13 == 85;
  bool simulate = n == 4 || (n == 8 && c.long_tests);
  report["simulated"] = simulate;
  if (simulate) {
    LogicalRegister reg{n, 3};
    json table = json::array();
    for (int v = 0; v < 8; ++v) {
      std::string bits = {char('0' + ((v >> 2) & 1)), char('0' + ((v >> 1) & 1)),
                          char('0' + (v & 1))};
      SparseState out = apply_schedule(logical_product_state(reg, bits), ts.schedule);
      DecodeTable dec = decode(out, reg);
      std::string expect = toffoli_expected_bits(ts, bits);
      Cx amp;
      for (const auto& [b, a] : dec.amps)
        if (b == expect) amp = a;
      bool ok = std::abs(std::abs(amp) - 1.0) < tol && dec.residual < tol;
      json r;
      r["in"] = bits;
      r["out"] = expect;
      r["absAmp"] = std::abs(amp);
      r["residual"] = dec.residual;
      r["pass"] = ok;
      table.push_back(std::move(r));
      pass = pass && ok;
    }
    report["truthTable"] = std::move(table);
  }
  return emit("verify-toffoli", c, std::move(report), pass);
}

int run_verify_perm_hadamard(const CommonOpts& c) {
  using namespace permuqc;
  double tol = tol_or(c, 1e-12);
  EncodedQubitFrame frame = encoded_qubit_frame();
  json gates = json::array();
  bool pass = true;
  for (const EncodedGateCheck& chk : check_all_encoded_gates(tol)) {
    json g;
    to_json(g, chk);
    gates.push_back(std::move(g));
    pass = pass && chk.pass;
  }
  // Exact register-level maps: U swaps the two frame rows, Q does so with a
  // phase of w^{-1} on the forward direction.
  Cx w = root_of_unity(1, 8);
  double u_dev = distance(apply_perm(row_swap_perm(), frame.row_x0), frame.row_x1);
  double q_dev = distance(apply_perm(pair_swap_perm(), frame.row_y0),
                          scale(frame.row_y1, Cx(1, 0) / w));
  bool frame_ok = u_dev < tol && q_dev < tol;
  bool h_sq_id = compose(encoded_h_perm(), encoded_h_perm()).is_identity();
  std::vector<CliffordElement> group = encoded_gate_group();
  TableReport hz = verify_table("HZ");
  std::set<std::pair<int, int>> got, want;
  for (const CliffordElement& e : group) got.insert(e.index());
  for (const TableCellResult& cell : hz.cells) want.insert({cell.i, cell.j});
  bool group_ok = group.size() == 8 && got == want;
  pass = pass && frame_ok && h_sq_id && group_ok;
  json report = report_head("verify-perm-hadamard", {{"tol", tol}});
  report["gates"] = std::move(gates);
  report["rowSwapDeviation"] = u_dev;
  report["pairSwapDeviation"] = q_dev;
  report["hSquaredIsIdentity"] = h_sq_id;
  report["groupSize"] = group.size();
  report["groupMatchesTable"] = group_ok;
  return emit("verify-perm-hadamard", c, std::move(report), pass);
}

int run_clifford_tables(const CommonOpts& c, const std::string& which) {
  using namespace permuqc;
  json report = report_head("clifford-tables", {{"table", which}});
  bool pass = true;
  json tables = json::array();
  for (const char* name : {"PX", "HZ"}) {
    if (which != "both" && which != name) continue;
    TableReport rep = verify_table(name);
    json t;
    to_json(t, rep);
    tables.push_back(std::move(t));
    pass = pass && rep.all_cells_pass && rep.subgroup_ok;
  }
  report["tables"] = std::move(tables);
  S4Report s4 = verify_s4_profile();
  json js4;
  to_json(js4, s4);
  report["fullGroup"] = std::move(js4);
  pass = pass && s4.matches_s4 && s4.group_order == 24;
  return emit("clifford-tables", c, std::move(report), pass);
}

int run_feasibility_check(const CommonOpts& c, int m, int k, const std::string& p_str,
                          const std::string& h_str, bool no_witnesses) {
  using namespace permuqc;
  PermPair pair{m, k, perm_from_cycle_string(m, p_str), perm_from_cycle_string(m, h_str)};
  FeasibilityReport kernel = check_feasibility(pair, !no_witnesses);
  json report = report_head("feasibility-check", {{"M", m},
                                                  {"k", k},
                                                  {"phasePerm", p_str},
                                                  {"hadamardPerm", h_str},
                                                  {"witnesses", !no_witnesses}});
  json jk;
  to_json(jk, kernel);
  report["kernelRoute"] = std::move(jk);
  bool pass = true;
  for (const DoubletWitness& w : kernel.witnesses) pass = pass && w.max_residual < 1e-10;
  long binom = 1;
  for (int i = 0; i < k; ++i) binom = binom * (m - i) / (i + 1);
  for (const KernelProbe& p : kernel.probes) {
    // Eigenspace dimensions of distinct eigenvalues never overcount the space.
    if (p.eigdim_z1 + p.eigdim_iz1 > binom) pass = false;
  }
  if (m <= 12) {
    RankReport rank = check_feasibility_by_rank(pair);
    json jr;
    to_json(jr, rank);
    report["rankRoute"] = std::move(jr);
    bool agree = rank.feasible == kernel.feasible;
    report["routesAgree"] = agree;
    pass = pass && agree;
  }
  return emit("feasibility-check", c, std::move(report), pass);
}

struct SearchCli {
  int m = 4;
  int k = 1;
  std::string strategy = "exhaustive";
  std::uint64_t budget = 0;
  std::uint64_t start = 0;
  bool no_filter = false;
  std::string jsonl;
  std::string checkpoint;
  bool resume = false;
};

json checkpoint_config(const permuqc::SearchConfig& cfg) {
  return json{{"M", cfg.num_qubits},
              {"k", cfg.weight},
              {"strategy", permuqc::search_strategy_name(cfg.strategy)},
              {"seed", cfg.seed},
              {"filter", cfg.apply_orbit_filter}};
}

int run_feasibility_search(const CommonOpts& c, const SearchCli& s) {
  using namespace permuqc;
  SearchConfig cfg;
  cfg.num_qubits = s.m;
  cfg.weight = s.k;
  cfg.strategy = search_strategy_from_name(s.strategy);
  cfg.budget = s.budget;
  cfg.start_cursor = s.start;
  cfg.seed = c.seed;
  cfg.apply_orbit_filter = !s.no_filter;
  cfg.workers = c.workers;

  std::uint64_t prior_examined = 0, prior_filter = 0, prior_feasible = 0;
  if (s.resume) {
    if (s.checkpoint.empty()) {
      std::cerr << "error: --resume requires --checkpoint\n";
      return 2;
    }
    std::ifstream in(s.checkpoint);
    if (!in) {
      std::cerr << "error: cannot read checkpoint " << s.checkpoint << "\n";
      return 2;
    }
    json ck = json::parse(in, nullptr, false);
    if (ck.is_discarded() || ck["config"] != checkpoint_config(cfg)) {
      std::cerr << "error: checkpoint does not match this search configuration\n";
      return 2;
    }
    cfg.start_cursor = ck["nextCursor"].get<std::uint64_t>();
    prior_examined = ck["examined"].get<std::uint64_t>();
    prior_filter = ck["filterPassed"].get<std::uint64_t>();
    prior_feasible = ck["feasibleCount"].get<std::uint64_t>();
  }

  std::ofstream jsonl;
  if (!s.jsonl.empty()) {
    jsonl.open(s.jsonl, s.resume ? std::ios::app : std::ios::trunc);
    if (!jsonl) {
      std::cerr << "error: cannot write " << s.jsonl << "\n";
      return 2;
    }
  }

  std::uint64_t streamed = 0;
  std::uint64_t run_filter = 0, run_feasible = 0;
  auto save_checkpoint = [&](std::uint64_t next_cursor) {
    if (s.checkpoint.empty()) return;
    json ck;
    ck["schemaVersion"] = kSchemaVersion;
    ck["config"] = checkpoint_config(cfg);
    ck["nextCursor"] = next_cursor;
    ck["examined"] = prior_examined + streamed;
    ck["filterPassed"] = prior_filter + run_filter;
    ck["feasibleCount"] = prior_feasible + run_feasible;
    std::ofstream out(s.checkpoint);
    out << ck.dump(2) << "\n";
  };

  auto sink = [&](const PairOutcome& r) {
    if (jsonl.is_open()) {
      json line;
      to_json(line, r);
      jsonl << line.dump() << "\n";
    }
    ++streamed;
    if (r.filter_passed) ++run_filter;
    if (r.feasible) ++run_feasible;
    if (streamed % 256 == 0) {
      if (jsonl.is_open()) jsonl.flush();
      save_checkpoint(r.cursor + 1);
    }
  };

  auto t0 = std::chrono::steady_clock::now();
  SearchOutcome out = run_search(cfg, sink);
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  save_checkpoint(out.next_cursor);

  json report = report_head("feasibility-search", {{"M", s.m},
                                                   {"k", s.k},
                                                   {"strategy", s.strategy},
                                                   {"budget", s.budget},
                                                   {"startCursor", cfg.start_cursor},
                                                   {"seed", c.seed},
                                                   {"filter", !s.no_filter},
                                                   {"workers", c.workers}});
  json jout;
  to_json(jout, out);
  if (s.resume) {
    jout["examined"] = prior_examined + out.examined;
    jout["filterPassed"] = prior_filter + out.filter_passed;
    jout["feasibleCount"] = prior_feasible + out.feasible_count;
  }
  report["summary"] = std::move(jout);
  // Timing goes to stderr only; keeping it out of the report preserves
  // byte-identical output for identical config.
  std::cerr << "feasibility-search: " << out.examined << " candidates in " << elapsed
            << "s\n";
  return emit("feasibility-search", c, std::move(report), true);
}

int run_schedule_compare(const CommonOpts& c, int n) {
  using namespace permuqc;
  CompareReport cmp = compare_report(n);
  json report = report_head("schedule-compare", {{"n", n}});
  json jcmp;
  to_json(jcmp, cmp);
  report["compare"] = std::move(jcmp);
  ToffoliSchedule ts = toffoli_schedule(n);
  CompiledSchedule compiled = compile_relabeling(ts.schedule);
  report["permGatesBeforeCompile"] = tally_gates(ts.schedule).perms;
  report["permGatesAfterCompile"] = tally_gates(compiled.schedule).perms;
  report["timestepsAfterCompile"] = timesteps(compiled.schedule);
  bool pass = cmp.extended_timesteps == 10 * n + 2 && cmp.cnot_blocks == 6 &&
              cmp.hadamard_blocks == 2 && cmp.phase_perm_gates == 8 &&
              tally_gates(compiled.schedule).perms == 0 &&
              timesteps(compiled.schedule) == cmp.extended_timesteps;
  return emit("schedule-compare", c, std::move(report), pass);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exchange-interaction simulator: verification and search commands"};
  app.require_subcommand(1);

  CommonOpts c;
  int n_encoding = 0;
  auto* enc = app.add_subcommand("verify-encoding",
                                 "Check the logical encoding maps under the two generators");
  enc->add_option("--n", n_encoding, "Single n to check (default: 2, 4, 8)");
  add_common(enc, c);

  int n_thm = 4, trials = 100;
  double theta_val = 0.0;
  bool theta_set = false;
  auto* thm = app.add_subcommand("verify-theorem1",
                                 "Compare sequential and parallel exchange products");
  thm->add_option("--n", n_thm, "Chain length");
  thm->add_option("--trials", trials, "Random (angle, state) draws");
  auto* theta_opt = thm->add_option("--theta", theta_val, "Fix the exchange angle");
  add_common(thm, c);

  int n_lemma = 4;
  auto* lem = app.add_subcommand("verify-lemma", "Entrywise row-swap product identity");
  lem->add_option("--n", n_lemma, "Matrix size parameter");
  add_common(lem, c);

  int n_had = 0;
  auto* had = app.add_subcommand("verify-hadamard", "Calibrated logical Hadamard schedule");
  had->add_option("--n", n_had, "Single n to check (default: 4 and 8)");
  add_common(had, c);

  int n_cnot = 2;
  auto* cnot = app.add_subcommand("verify-cnot", "Logical controlled-NOT schedule");
  cnot->add_option("--n", n_cnot, "Rail length per logical qubit");
  add_common(cnot, c);

  int n_toff = 8;
  auto* toff = app.add_subcommand("verify-toffoli", "Extended Toffoli schedule and counts");
  toff->add_option("--n", n_toff, "Rail length per logical qubit (multiple of 4)");
  toff->add_flag("--long", c.long_tests, "Also simulate the full truth table at n=8");
  add_common(toff, c);

  auto* ph = app.add_subcommand("verify-perm-hadamard",
                                "Hadamard and Pauli action of the frame permutations");
  add_common(ph, c);

  std::string table = "both";
  auto* cliff = app.add_subcommand("clifford-tables",
                                   "Two-generator composition tables and the full group");
  cliff->add_option("--table", table, "Which table: PX, HZ, or both")
      ->check(CLI::IsMember({"PX", "HZ", "both"}));
  add_common(cliff, c);

  int fc_m = 4, fc_k = 1;
  std::string fc_p = "id", fc_h = "id";
  bool fc_no_wit = false;
  auto* fcheck = app.add_subcommand("feasibility-check",
                                    "Doublet feasibility of one permutation pair");
  fcheck->add_option("--M", fc_m, "Number of physical qubits")->required();
  fcheck->add_option("--k", fc_k, "Excitation weight");
  fcheck->add_option("--phase-perm", fc_p, "Cycle notation, e.g. \"(1,2,3,4)\"")->required();
  fcheck->add_option("--hadamard-perm", fc_h, "Cycle notation")->required();
  fcheck->add_flag("--no-witnesses", fc_no_wit, "Skip witness extraction");
  add_common(fcheck, c);

  SearchCli sc;
  auto* fsearch = app.add_subcommand("feasibility-search",
                                     "Enumerate permutation pairs and test feasibility");
  fsearch->add_option("--M", sc.m, "Number of physical qubits")->required();
  fsearch->add_option("--k", sc.k, "Excitation weight");
  fsearch->add_option("--strategy", sc.strategy, "exhaustive, structured, or random")
      ->check(CLI::IsMember({"exhaustive", "structured", "random"}));
  fsearch->add_option("--budget", sc.budget, "Candidate limit (0 = to the end)");
  fsearch->add_option("--start", sc.start, "First cursor to examine");
  fsearch->add_flag("--no-filter", sc.no_filter, "Disable the orbit prefilter");
  fsearch->add_option("--jsonl", sc.jsonl, "Stream one JSON record per candidate");
  fsearch->add_option("--checkpoint", sc.checkpoint, "Cursor checkpoint file");
  fsearch->add_flag("--resume", sc.resume, "Continue from the checkpoint file");
  fsearch->add_option("--workers", c.workers, "Parallel evaluation threads");
  add_common(fsearch, c);

  int n_cmp = 8;
  auto* scmp = app.add_subcommand("schedule-compare",
                                  "Timestep counts against the reference gate costs");
  scmp->add_option("--n", n_cmp, "Rail length per logical qubit (multiple of 4)");
  add_common(scmp, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  theta_set = theta_opt->count() > 0;
  try {
    if (enc->parsed()) return run_verify_encoding(c, n_encoding);
    if (thm->parsed())
      return run_verify_theorem1(
          c, n_thm, trials,
          theta_set ? std::optional<double>(theta_val) : std::nullopt);
    if (lem->parsed()) return run_verify_lemma(c, n_lemma);
    if (had->parsed()) return run_verify_hadamard(c, n_had);
    if (cnot->parsed()) return run_verify_cnot(c, n_cnot);
    if (toff->parsed()) return run_verify_toffoli(c, n_toff);
    if (ph->parsed()) return run_verify_perm_hadamard(c);
    if (cliff->parsed()) return run_clifford_tables(c, table);
    if (fcheck->parsed())
      return run_feasibility_check(c, fc_m, fc_k, fc_p, fc_h, fc_no_wit);
    if (fsearch->parsed()) return run_feasibility_search(c, sc);
    if (scmp->parsed()) return run_schedule_compare(c, n_cmp);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
