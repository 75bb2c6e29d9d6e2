#pragma once

// Linear relations among X_lambda for partitions differing in one row (or,
// through X_lambda = X_lambda', one column), checked on oracle values.
//
// Row instance (lambda, i, L, k) in delta_n: i >= 2, lambda_i + L <= lambda_{i-1},
// and lambda_{n-lambda_i-t} = lambda_{n-lambda_i} for t = 1..L-1, indices
// outside 1..n-1 reading as 0. With nu^a = lambda plus a cells in row i,
//   [L-k]_q X_{nu^0} + q^{L-k} [k]_q X_{nu^L} = [L]_q X_{nu^k}.

#include <optional>
#include <string>
#include <vector>

#include "cqsym/eexpansion.hpp"
#include "cqsym/oracle.hpp"
#include "cqsym/partition.hpp"
#include "cqsym/qpoly.hpp"

namespace cqsym {

struct RelationInstance {
  enum class Kind { RowBasic, RowGeneral, ColumnBasic, ColumnGeneral };
  Kind kind = Kind::RowBasic;
  Partition base;
  int row = 2;      // i; for column kinds, the row of the conjugate
  int stretch = 2;  // L; fixed at 2 for the basic kinds
  int k = 1;        // fixed at 1 for the basic kinds
  int n = 0;

  bool is_column() const { return kind == Kind::ColumnBasic || kind == Kind::ColumnGeneral; }
  std::string to_string() const;
};

enum class Verdict { Pass, Fail, NotApplicable };
std::string to_string(Verdict v);

struct RelationReport {
  Verdict verdict = Verdict::NotApplicable;
  std::string label;
  std::string reason;  // why it is not applicable, or what failed
  std::optional<EMismatch> mismatch;
};

/// lambda_j for 1 <= j <= n-1, 0 otherwise.
int padded_part(const Partition& lambda, int n, int j);

/// Row conditions on (lambda, i, L) and containment of nu^0..nu^L in delta_n.
bool row_applicable(const Partition& lambda, int row, int stretch, int n);
/// The equal-parts condition reads an index outside 1..n-1.
bool reads_padding(const Partition& lambda, int row, int stretch, int n);
/// nu^0..nu^L; for column kinds the conjugates of the row family of base'.
std::vector<Partition> relation_family(const RelationInstance& inst);

/// Basic kinds only (L = 2, k = 1).
RelationReport row_relation_check(const RelationInstance& inst, OracleCache& oracle);
/// Any L >= 1 and 0 <= k <= L.
RelationReport general_relation_check(const RelationInstance& inst, OracleCache& oracle);
/// Runs the row check on the conjugated instance and also checks
/// X_mu = X_mu' for every partition of the family.
RelationReport column_relation_check(const RelationInstance& inst, OracleCache& oracle);
/// Dispatches on kind.
RelationReport relation_check(const RelationInstance& inst, OracleCache& oracle);

/// Every applicable instance in delta_n: basic row and column instances, and
/// general ones for 2 <= L <= n-1 and every k.
std::vector<RelationInstance> relation_instances(int n);

/// Every e-coefficient of X_lambda is palindromic about (C(n,2) - |lambda|)/2.
RelationReport palindromicity_check(const Partition& lambda, int n, OracleCache& oracle);

}  // namespace cqsym
