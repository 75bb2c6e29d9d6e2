#include "cqsym/relations.hpp"

#include <stdexcept>

namespace cqsym {

std::string RelationInstance::to_string() const {
  static const char* names[] = {"row-basic", "row-general", "column-basic", "column-general"};
  return std::string(names[static_cast<int>(kind)]) + " lambda=" + base.to_string() + " i=" + std::to_string(row) +
         " L=" + std::to_string(stretch) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

int padded_part(const Partition& lambda, int n, int j) {
  return j >= 1 && j <= n - 1 ? lambda.part(j) : 0;
}

namespace {

std::vector<Partition> row_family(const Partition& lambda, int row, int stretch, int n) {
  std::vector<Partition> out;
  for (int a = 0; a <= stretch; ++a) {
    std::vector<int> parts(static_cast<std::size_t>(std::max(n - 1, lambda.length())), 0);
    for (int j = 1; j <= lambda.length(); ++j) parts[static_cast<std::size_t>(j - 1)] = lambda.part(j);
    parts[static_cast<std::size_t>(row - 1)] += a;
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::optional<std::string> row_problem(const Partition& lambda, int row, int stretch, int n) {
  if (!fits_staircase(lambda, n)) return "lambda does not fit delta_n";
  if (stretch < 1) return "L must be at least 1";
  if (row < 2 || row > n - 1) return "row index must satisfy 2 <= i <= n-1";
  const int li = lambda.part(row);
  if (li + stretch > lambda.part(row - 1)) return "lambda_i + L exceeds lambda_{i-1}";
  for (int t = 1; t < stretch; ++t)
    if (padded_part(lambda, n, n - li - t) != padded_part(lambda, n, n - li)) return "equal-parts condition fails";
  for (const auto& nu : row_family(lambda, row, stretch, n))
    if (!fits_staircase(nu, n)) return "nu^" + nu.to_string() + " leaves delta_n";
  return std::nullopt;
}

Partition row_base(const RelationInstance& inst) { return inst.is_column() ? inst.base.conjugate() : inst.base; }

std::string label(const RelationInstance& inst) { return inst.to_string(); }

RelationReport verify(const RelationInstance& inst, OracleCache& oracle) {
  RelationReport rep;
  rep.label = label(inst);
  const Partition base = row_base(inst);
  if (auto problem = row_problem(base, inst.row, inst.stretch, inst.n)) {
    rep.reason = *problem;
    return rep;
  }
  if (inst.k < 0 || inst.k > inst.stretch) {
    rep.reason = "k must satisfy 0 <= k <= L";
    return rep;
  }
  const auto fam = relation_family(inst);
  const int L = inst.stretch, k = inst.k, n = inst.n;
  EExpansion lhs = oracle.get(fam.front(), n).scaled(qint(L - k));
  lhs += oracle.get(fam.back(), n).scaled(scale_power(qint(k), static_cast<std::size_t>(L - k)));
  const EExpansion rhs = oracle.get(fam[static_cast<std::size_t>(k)], n).scaled(qint(L));
  rep.mismatch = first_difference(lhs, rhs);
  rep.verdict = rep.mismatch ? Verdict::Fail : Verdict::Pass;
  if (rep.mismatch) rep.reason = "relation fails at e_" + rep.mismatch->mu.to_string();
  return rep;
}

}  // namespace

bool row_applicable(const Partition& lambda, int row, int stretch, int n) {
  return !row_problem(lambda, row, stretch, n);
}

bool reads_padding(const Partition& lambda, int row, int stretch, int n) {
  const int li = lambda.part(row);
  for (int t = 0; t < stretch; ++t) {
    const int j = n - li - t;
    if (j < 1 || j > n - 1) return true;
  }
  return false;
}

std::vector<Partition> relation_family(const RelationInstance& inst) {
  auto fam = row_family(row_base(inst), inst.row, inst.stretch, inst.n);
  if (inst.is_column())
    for (auto& p : fam) p = p.conjugate();
  return fam;
}

RelationReport row_relation_check(const RelationInstance& inst, OracleCache& oracle) {
  if (inst.kind != RelationInstance::Kind::RowBasic && inst.kind != RelationInstance::Kind::RowGeneral)
    throw std::invalid_argument("row_relation_check needs a row instance");
  if (inst.stretch != 2 || inst.k != 1) {
    RelationReport rep;
    rep.label = label(inst);
    rep.reason = "basic relation needs L = 2 and k = 1";
    return rep;
  }
  return verify(inst, oracle);
}

RelationReport general_relation_check(const RelationInstance& inst, OracleCache& oracle) {
  return verify(inst, oracle);
}

RelationReport column_relation_check(const RelationInstance& inst, OracleCache& oracle) {
  if (!inst.is_column()) throw std::invalid_argument("column_relation_check needs a column instance");
  RelationReport rep = verify(inst, oracle);
  if (rep.verdict != Verdict::Pass) return rep;
  for (const auto& mu : relation_family(inst)) {
    auto diff = first_difference(oracle.get(mu, inst.n), oracle.get(mu.conjugate(), inst.n));
    if (diff) {
      rep.verdict = Verdict::Fail;
      rep.reason = "X_" + mu.to_string() + " differs from its conjugate";
      rep.mismatch = diff;
      break;
    }
  }
  return rep;
}

RelationReport relation_check(const RelationInstance& inst, OracleCache& oracle) {
  using K = RelationInstance::Kind;
  switch (inst.kind) {
    case K::RowBasic: return row_relation_check(inst, oracle);
    case K::RowGeneral: return general_relation_check(inst, oracle);
    case K::ColumnBasic:
    case K::ColumnGeneral: return column_relation_check(inst, oracle);
  }
  throw std::logic_error("unknown relation kind");
}

std::vector<RelationInstance> relation_instances(int n) {
  using K = RelationInstance::Kind;
  std::vector<RelationInstance> out;
  const auto shapes = partitions_in_staircase(n);
  for (bool column : {false, true}) {
    for (const auto& lambda : shapes) {
      const Partition base = column ? lambda.conjugate() : lambda;
      for (int row = 2; row <= n - 1; ++row) {
        if (row_applicable(lambda, row, 2, n))
          out.push_back({column ? K::ColumnBasic : K::RowBasic, base, row, 2, 1, n});
        for (int L = 2; L <= n - 1; ++L) {
          if (!row_applicable(lambda, row, L, n)) continue;
          for (int k = 0; k <= L; ++k) out.push_back({column ? K::ColumnGeneral : K::RowGeneral, base, row, L, k, n});
        }
      }
    }
  }
  return out;
}

RelationReport palindromicity_check(const Partition& lambda, int n, OracleCache& oracle) {
  RelationReport rep;
  rep.label = "lambda=" + lambda.to_string() + " n=" + std::to_string(n);
  if (!fits_staircase(lambda, n)) {
    rep.reason = "lambda does not fit delta_n";
    return rep;
  }
  const HalfInt want = x_lambda_center(lambda, n);
  rep.verdict = Verdict::Pass;
  for (const auto& [mu, c] : oracle.get(lambda, n).terms()) {
    auto center = palindrome_center(c);
    if (!center || !center->admits(want)) {
      rep.verdict = Verdict::Fail;
      rep.reason = "e_" + mu.to_string() + " coefficient " + c.to_pretty() + " is not palindromic about " +
                   want.to_string();
      break;
    }
  }
  return rep;
}

}  // namespace cqsym
