// Runs each acceptance criterion once and prints one PASS/FAIL line per
// criterion. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "cqsym/nonabelian.hpp"
#include "cqsym/rectlemma.hpp"
#include "cqsym/rook.hpp"
#include "cqsym/sweep.hpp"

using namespace cqsym;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Folds a sweep into an outcome, listing the first few failing rows.
void absorb(Outcome& out, const SweepResult& r) {
  if (!out.detail.empty()) out.detail += "; ";
  out.detail += r.summary();
  if (r.ok()) return;
  out.pass = false;
  int shown = 0;
  for (const auto& row : r.rows)
    if (row.status == RowStatus::Fail && shown++ < 3) std::cerr << "  fail: " << row.label << " " << row.detail << "\n";
}

Outcome intro_formula() {
  Outcome out;
  const Partition lambda({2, 2});
  const QPoly expect[] = {qint(2) * qint(1), scale_power(qint(2) * qint(2) * qint(2), 1),
                          scale_power(qint(2), 4)};
  for (int r = 0; r <= 2; ++r) {
    const QPoly got = big_f(lambda, 2, 6, 2, r);
    if (got != expect[r]) {
      out.pass = false;
      out.detail += "F_" + std::to_string(r) + "=" + got.to_array_string() + " ";
    }
  }
  OracleCache oracle;
  const CheckReport rep = rect_decompose_check(lambda, 2, 6, 2, oracle);
  out.pass = out.pass && rep.pass;
  out.detail += "F=([2],q[2]^3,q^4[2]) decomposition " + std::string(rep.pass ? "holds" : "fails");
  return out;
}

Outcome over_n(int lo, int hi, const std::function<SweepResult(int)>& sweep) {
  Outcome out;
  for (int n = lo; n <= hi; ++n) absorb(out, sweep(n));
  return out;
}

Outcome abelian_expansions(OracleCache& oracle) {
  Outcome out;
  for (int n = 2; n <= 7; ++n) {
    absorb(out, sweep_theorem_e(n, oracle));
    absorb(out, sweep_abreu_nigro(n, oracle));
  }
  const Partition spot({3, 2});
  const EExpansion truth = x_lambda_oracle(spot, 8);
  const bool e_ok = e_expansion_abelian(spot, 2, 8) == truth;
  const bool an_ok = abreu_nigro_expansion(spot, 2, 8) == truth;
  out.pass = out.pass && e_ok && an_ok;
  out.detail += std::string("; n=8 lambda=3,2: ") + (e_ok && an_ok ? "both match" : "mismatch");
  return out;
}

Outcome nonabelian_forms(OracleCache& oracle) {
  Outcome out;
  for (int n = 3; n <= 7; ++n) absorb(out, sweep_nonabelian(n, oracle));
  // Constant-b families beyond the tail bound are observations only.
  std::size_t gap = 0;
  for (int n = 3; n <= 7; ++n) gap += sweep_constant_b_gap(n, oracle).count(RowStatus::Finding);
  out.detail += "; constant-b findings outside a <= n-ell-p: " + std::to_string(gap);
  return out;
}

Outcome conjecture(OracleCache& oracle) {
  Outcome out;
  std::size_t match = 0, candidate = 0, skipped = 0;
  for (int n = 4; n <= 7; ++n) {
    const SweepResult r = sweep_conjecture(n, oracle);
    match += r.count(RowStatus::Pass);
    candidate += r.count(RowStatus::Finding);
    skipped += r.count(RowStatus::Skipped);
    for (const auto& row : r.rows)
      if (row.status == RowStatus::Finding) std::cerr << "  finding: " << row.label << " " << row.detail << "\n";
  }
  out.detail = std::to_string(match) + " match, " + std::to_string(candidate) + " counterexample candidates, " +
               std::to_string(skipped) + " not evaluable";
  return out;
}

Outcome regression(OracleCache& oracle) {
  Outcome out;
  std::vector<SweepRow> findings;
  for (int n = 1; n <= 6; ++n) {
    const SweepResult e = sweep_epositivity(n, oracle);
    absorb(out, e);
    absorb(out, sweep_palindromic(n, oracle));
    for (const auto& row : e.rows)
      if (row.status == RowStatus::Finding) findings.push_back(row);
  }
  if (!findings.empty()) {
    out.pass = false;
    std::ofstream art("acceptance_findings.jsonl");
    for (const auto& row : findings) {
      art << Json{{"label", row.label}, {"detail", row.detail}, {"priority", "high"}}.dump() << "\n";
      std::cerr << "  FINDING: " << row.label << " " << row.detail << "\n";
    }
    out.detail += "; findings written to acceptance_findings.jsonl";
  }
  return out;
}

}  // namespace

int main() {
  // The runtime targets are stated for one thread.
  setenv("CQSYM_THREADS", "1", 0);
  OracleCache oracle;

  struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "intro formula at n=6", 1, intro_formula},
      {2, "rectangular decomposition, n<=7", 120,
       [&] { return over_n(2, 7, [&](int n) { return sweep_rect(n, oracle); }); }},
      {3, "F = H, n<=7", 120, [] { return over_n(2, 7, [](int n) { return sweep_f_equals_h(n); }); }},
      {4, "abelian e-expansions, n<=7 plus n=8 spot check", 300, [&] { return abelian_expansions(oracle); }},
      {5, "c inductive = c hook, ell<=8", 10, [] { return over_n(1, 8, [](int l) { return sweep_c_lemma(l); }); }},
      {6, "common centers, n<=7", 120, [] { return over_n(2, 7, [](int n) { return sweep_centers(n); }); }},
      {7, "row and column relations, n<=6", 60,
       [&] { return over_n(2, 6, [&](int n) { return sweep_relations(n, oracle); }); }},
      {8, "e_{n-1,1} and e_{n-2,2} closed forms, n<=7", 180, [&] { return nonabelian_forms(oracle); }},
      {9, "conjectured e_{n-2,2} sweep completes, n<=7", 600, [&] { return conjecture(oracle); }},
      {10, "e-positivity, e-unimodality, palindromicity, n<=6", 600, [&] { return regression(oracle); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_s;
    if (!in_time) out.detail += "; over the " + std::to_string(static_cast<int>(c.limit_s)) + " s budget";
    const bool pass = out.pass && in_time;
    all = all && pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << timing << "] "
              << out.detail << std::endl;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
