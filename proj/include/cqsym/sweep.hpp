#pragma once

// Exhaustive sweeps over every admissible instance of one check at a given
// n, a small worker pool to run them, and an append-only JSON-lines log for
// long-running searches that must survive interruption.

#include <cstddef>
#include <fstream>
#include <functional>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cqsym/oracle.hpp"

namespace cqsym {

using Json = nlohmann::ordered_json;

/// Worker count: CQSYM_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Calls body(i) for i in [0, count) on `workers` threads. The first
/// exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, unsigned workers = worker_count());

enum class RowStatus { Pass, Fail, Skipped, Finding };
std::string to_string(RowStatus s);

struct SweepRow {
  std::string label;
  RowStatus status = RowStatus::Pass;
  std::string detail;
};

struct SweepResult {
  std::string name;
  std::vector<SweepRow> rows;

  std::size_t count(RowStatus s) const;
  bool ok() const { return count(RowStatus::Fail) == 0; }
  std::string summary() const;
};

// Each sweep covers a single n (or a single ell for the c-lemma sweep).
SweepResult sweep_rect(int n, OracleCache& oracle);
SweepResult sweep_centers(int n);
SweepResult sweep_f_equals_h(int n);
SweepResult sweep_hit_decompose(int n, OracleCache& oracle);
SweepResult sweep_theorem_e(int n, OracleCache& oracle);
SweepResult sweep_abreu_nigro(int n, OracleCache& oracle);
SweepResult sweep_relations(int n, OracleCache& oracle);
SweepResult sweep_palindromic(int n, OracleCache& oracle);
/// c_inductive == c_hook and the index identity, every I in [ell].
SweepResult sweep_c_lemma(int ell);
/// Hook, general and constant-b e_{n-1,1} forms plus the hook e_{n-2,2}
/// form, every family in its regime. Displays that cannot be evaluated are
/// reported as skipped.
SweepResult sweep_nonabelian(int n, OracleCache& oracle);
/// Constant-b e_{n-1,1} form with n-ell-p < a <= n-ell; mismatches are findings.
SweepResult sweep_constant_b_gap(int n, OracleCache& oracle);
/// Conjectured e_{n-2,2} form on every constant-b family; mismatches are findings.
SweepResult sweep_conjecture(int n, OracleCache& oracle);
/// e-positivity, e-unimodality and the common palindromic center of every
/// X_lambda in delta_n; violations are findings.
SweepResult sweep_epositivity(int n, OracleCache& oracle);

/// Append-only JSON-lines file of records keyed by their "key" field.
/// Reopening an existing log loads its keys so a restarted sweep can skip
/// work already recorded.
class FindingsLog {
 public:
  explicit FindingsLog(const std::string& path);
  bool has(const std::string& key) const;
  /// Writes one line and flushes; `record` must carry a string "key".
  void append(const Json& record);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::ofstream out_;
  std::set<std::string> keys_;
};

struct LoggedSweep {
  std::size_t recorded = 0;  // new records written
  std::size_t resumed = 0;   // instances skipped because already logged
  std::size_t findings = 0;  // new records flagged as findings
};

/// One record per e-positivity instance for 1 <= n <= max_n.
LoggedSweep log_epositivity(int max_n, FindingsLog& log, OracleCache& oracle);
/// One record per constant-b conjecture instance for 4 <= n <= max_n.
LoggedSweep log_conjecture(int max_n, FindingsLog& log, OracleCache& oracle);

}  // namespace cqsym
