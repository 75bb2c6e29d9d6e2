#include "cqsym/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#include "cqsym/json_io.hpp"
#include "cqsym/nonabelian.hpp"
#include "cqsym/rectlemma.hpp"
#include "cqsym/relations.hpp"
#include "cqsym/rook.hpp"

namespace cqsym {

unsigned worker_count() {
  if (const char* env = std::getenv("CQSYM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, unsigned workers) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    while (!failed) {
      const std::size_t i = next++;
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Skipped: return "skipped";
    case RowStatus::Finding: return "finding";
  }
  return "?";
}

std::size_t SweepResult::count(RowStatus s) const {
  std::size_t c = 0;
  for (const auto& r : rows) c += r.status == s ? 1 : 0;
  return c;
}

std::string SweepResult::summary() const {
  std::string s = name + ": " + std::to_string(count(RowStatus::Pass)) + " pass, " +
                  std::to_string(count(RowStatus::Fail)) + " fail";
  if (auto k = count(RowStatus::Skipped)) s += ", " + std::to_string(k) + " skipped";
  if (auto k = count(RowStatus::Finding)) s += ", " + std::to_string(k) + " findings";
  return s;
}

namespace {

SweepResult run_rows(std::string name, std::size_t count, const std::function<SweepRow(std::size_t)>& row) {
  SweepResult out{std::move(name), std::vector<SweepRow>(count)};
  parallel_for(count, [&](std::size_t i) { out.rows[i] = row(i); });
  return out;
}

SweepRow from_report(const CheckReport& rep) {
  SweepRow row{rep.label, rep.pass ? RowStatus::Pass : RowStatus::Fail, {}};
  if (rep.mismatch)
    row.detail = "e_" + rep.mismatch->mu.to_string() + ": lhs " + rep.mismatch->lhs.to_array_string() + " rhs " +
                 rep.mismatch->rhs.to_array_string();
  for (const auto& note : rep.notes) row.detail += (row.detail.empty() ? "" : "; ") + note;
  return row;
}

SweepRow compare_expansions(std::string label, const EExpansion& formula, const EExpansion& truth) {
  SweepRow row{std::move(label), RowStatus::Pass, {}};
  if (auto diff = first_difference(formula, truth)) {
    row.status = RowStatus::Fail;
    row.detail = "e_" + diff->mu.to_string() + ": formula " + diff->lhs.to_array_string() + " oracle " +
                 diff->rhs.to_array_string();
  }
  return row;
}

struct RectInstance {
  Partition lambda;
  int ell, s;
};

std::vector<RectInstance> rect_instances(int n) {
  std::vector<RectInstance> out;
  for (int s = 1; s < n; ++s)
    for (int ell = 1; ell <= std::min(s, n - s); ++ell)
      for (const auto& lambda : partitions_in_box(ell, n - s)) out.push_back({lambda, ell, s});
  return out;
}

struct AbelianInstance {
  Partition lambda;
  int ell;
};

std::vector<AbelianInstance> abelian_instances(int n) {
  std::vector<AbelianInstance> out;
  for (int ell = 1; 2 * ell <= n; ++ell)
    for (const auto& lambda : partitions_in_box(ell, n - ell)) out.push_back({lambda, ell});
  return out;
}

std::string abelian_label(const AbelianInstance& in, int n) {
  return "lambda=" + in.lambda.to_string() + " ell=" + std::to_string(in.ell) + " n=" + std::to_string(n);
}

SweepRow closed_form_row(const std::string& kind, const HookFamily& fam, const std::optional<QPoly>& value, int r,
                         OracleCache& oracle, RowStatus on_mismatch) {
  SweepRow row{kind + " " + fam.to_string(), RowStatus::Pass, {}};
  if (!value) {
    row.status = RowStatus::Skipped;
    row.detail = "display has a negative argument";
    return row;
  }
  const QPoly truth = oracle_two_row_coefficient(fam, r, oracle);
  if (*value != truth) {
    row.status = on_mismatch;
    row.detail = "formula " + value->to_array_string() + " oracle " + truth.to_array_string();
  }
  return row;
}

Json conjecture_record(const ConjectureReport& rep) {
  const HookFamily& f = rep.family;
  Json j;
  j["key"] = "conjecture " + f.to_string();
  j["kind"] = "conjecture-e-n22";
  j["n"] = f.n;
  j["i"] = f.i;
  j["a"] = f.a;
  j["ell"] = f.ell;
  j["p"] = f.p();
  j["b"] = f.b.front();
  j["lambda"] = f.partition();
  j["verdict"] = to_string(rep.verdict);
  j["predicted"] = rep.predicted ? Json(*rep.predicted) : Json(nullptr);
  j["oracle"] = rep.oracle;
  return j;
}

struct PositivityFacts {
  bool positive = true, unimodal = true, palindromic = true;
  bool clean() const { return positive && unimodal && palindromic; }
};

PositivityFacts positivity_facts(const Partition& lambda, int n, OracleCache& oracle) {
  PositivityFacts f;
  const HalfInt want = x_lambda_center(lambda, n);
  for (const auto& [mu, c] : oracle.get(lambda, n).terms()) {
    f.positive = f.positive && is_nonnegative(c);
    f.unimodal = f.unimodal && is_unimodal(c);
    auto center = palindrome_center(c);
    f.palindromic = f.palindromic && center && center->admits(want);
  }
  return f;
}

}  // namespace

SweepResult sweep_rect(int n, OracleCache& oracle) {
  const auto inst = rect_instances(n);
  // Notes about F_r shape are carried in the detail; only the identity decides.
  return run_rows("rect n=" + std::to_string(n), inst.size(), [&](std::size_t i) {
    return from_report(rect_decompose_check(inst[i].lambda, inst[i].ell, n, inst[i].s, oracle));
  });
}

SweepResult sweep_centers(int n) {
  const auto inst = rect_instances(n);
  return run_rows("centers n=" + std::to_string(n), inst.size(),
                  [&](std::size_t i) { return from_report(center_check(inst[i].lambda, inst[i].ell, n, inst[i].s)); });
}

SweepResult sweep_f_equals_h(int n) {
  const auto inst = rect_instances(n);
  return run_rows("corollary-fqhit n=" + std::to_string(n), inst.size(), [&](std::size_t i) {
    return from_report(f_equals_h_check(inst[i].lambda, inst[i].ell, n, inst[i].s));
  });
}

SweepResult sweep_hit_decompose(int n, OracleCache& oracle) {
  const auto inst = rect_instances(n);
  return run_rows("hit-decompose n=" + std::to_string(n), inst.size(), [&](std::size_t i) {
    return from_report(hit_decompose_check(inst[i].lambda, inst[i].ell, n, inst[i].s, oracle));
  });
}

SweepResult sweep_theorem_e(int n, OracleCache& oracle) {
  const auto inst = abelian_instances(n);
  return run_rows("theorem-e n=" + std::to_string(n), inst.size(), [&](std::size_t i) {
    return compare_expansions(abelian_label(inst[i], n), e_expansion_abelian(inst[i].lambda, inst[i].ell, n),
                              oracle.get(inst[i].lambda, n));
  });
}

SweepResult sweep_abreu_nigro(int n, OracleCache& oracle) {
  const auto inst = abelian_instances(n);
  return run_rows("abreu-nigro n=" + std::to_string(n), inst.size(), [&](std::size_t i) {
    return compare_expansions(abelian_label(inst[i], n), abreu_nigro_expansion(inst[i].lambda, inst[i].ell, n),
                              oracle.get(inst[i].lambda, n));
  });
}

SweepResult sweep_relations(int n, OracleCache& oracle) {
  const auto inst = relation_instances(n);
  return run_rows("relations n=" + std::to_string(n), inst.size(), [&](std::size_t i) {
    const RelationReport rep = relation_check(inst[i], oracle);
    RowStatus status = rep.verdict == Verdict::Pass ? RowStatus::Pass
                       : rep.verdict == Verdict::Fail ? RowStatus::Fail
                                                      : RowStatus::Skipped;
    std::string detail = rep.reason;
    const Partition base = inst[i].is_column() ? inst[i].base.conjugate() : inst[i].base;
    if (reads_padding(base, inst[i].row, inst[i].stretch, n))
      detail += std::string(detail.empty() ? "" : "; ") + "reads zero padding";
    return SweepRow{rep.label, status, detail};
  });
}

SweepResult sweep_palindromic(int n, OracleCache& oracle) {
  const auto shapes = partitions_in_staircase(n);
  return run_rows("palindromic n=" + std::to_string(n), shapes.size(), [&](std::size_t i) {
    const RelationReport rep = palindromicity_check(shapes[i], n, oracle);
    return SweepRow{rep.label, rep.verdict == Verdict::Pass ? RowStatus::Pass : RowStatus::Fail, rep.reason};
  });
}

SweepResult sweep_c_lemma(int ell) {
  std::vector<Subset> subsets;
  for (int r = 0; r <= ell; ++r)
    for (auto& s : subsets_colex(ell, r)) subsets.push_back(std::move(s));
  return run_rows("c-lemma ell=" + std::to_string(ell), subsets.size(), [&](std::size_t i) {
    const NestGraph g = build_nest_graph(ell, subsets[i]);
    std::string label = "ell=" + std::to_string(ell) + " I={";
    for (std::size_t k = 0; k < subsets[i].size(); ++k) label += (k ? "," : "") + std::to_string(subsets[i][k]);
    label += "}";
    SweepRow row{label, RowStatus::Pass, {}};
    const QPoly ci = c_inductive(g), ch = c_hook(g);
    if (ci != ch) {
      row.status = RowStatus::Fail;
      row.detail = "inductive " + ci.to_array_string() + " hook " + ch.to_array_string();
    }
    long index_sum = 0;
    for (int a : subsets[i]) index_sum += a;
    for (const auto& e : g.edges) index_sum -= e.length;
    const long r = static_cast<long>(subsets[i].size());
    if (index_sum != -(ell - r) * (ell - r + 1) / 2) {
      row.status = RowStatus::Fail;
      row.detail += (row.detail.empty() ? "" : "; ") + std::string("index identity fails");
    }
    return row;
  });
}

SweepResult sweep_nonabelian(int n, OracleCache& oracle) {
  struct Job {
    int kind;
    HookFamily fam;
  };
  std::vector<Job> jobs;
  for (const auto& f : hook_families(n)) {
    jobs.push_back({0, f});
    if (n >= 4) jobs.push_back({1, f});
  }
  for (const auto& f : general_families(n)) jobs.push_back({2, f});
  for (const auto& f : constant_b_families(n))
    if (in_general_regime(f)) jobs.push_back({3, f});
  return run_rows("nonabelian n=" + std::to_string(n), jobs.size(), [&](std::size_t i) {
    const auto& [kind, fam] = jobs[i];
    switch (kind) {
      case 0: return closed_form_row("e-n11-hook", fam, coeff_e_n11_hook(fam), 1, oracle, RowStatus::Fail);
      case 1: return closed_form_row("e-n22-hook", fam, coeff_e_n22_hook(fam), 2, oracle, RowStatus::Fail);
      case 2: return closed_form_row("e-n11-general", fam, coeff_e_n11_general(fam), 1, oracle, RowStatus::Fail);
      default:
        return closed_form_row("e-n11-constant-b", fam, coeff_e_n11_constant_b(fam), 1, oracle, RowStatus::Fail);
    }
  });
}

SweepResult sweep_constant_b_gap(int n, OracleCache& oracle) {
  std::vector<HookFamily> fams;
  for (const auto& f : constant_b_families(n))
    if (!in_general_regime(f)) fams.push_back(f);
  return run_rows("constant-b-gap n=" + std::to_string(n), fams.size(), [&](std::size_t i) {
    return closed_form_row("e-n11-constant-b", fams[i], coeff_e_n11_constant_b(fams[i]), 1, oracle,
                           RowStatus::Finding);
  });
}

SweepResult sweep_conjecture(int n, OracleCache& oracle) {
  std::vector<HookFamily> fams;
  if (n >= 4) fams = constant_b_families(n);
  return run_rows("conjecture n=" + std::to_string(n), fams.size(), [&](std::size_t i) {
    const ConjectureReport rep = conjecture_e_n22_check(fams[i], oracle);
    SweepRow row{"e-n22-conjecture " + fams[i].to_string(), RowStatus::Pass, to_string(rep.verdict)};
    if (rep.verdict == ConjectureVerdict::NotEvaluable) row.status = RowStatus::Skipped;
    if (rep.verdict == ConjectureVerdict::CounterexampleCandidate) {
      row.status = RowStatus::Finding;
      row.detail += ": predicted " + rep.predicted->to_array_string() + " oracle " + rep.oracle.to_array_string();
    }
    return row;
  });
}

SweepResult sweep_epositivity(int n, OracleCache& oracle) {
  const auto shapes = partitions_in_staircase(n);
  return run_rows("epositivity n=" + std::to_string(n), shapes.size(), [&](std::size_t i) {
    const PositivityFacts f = positivity_facts(shapes[i], n, oracle);
    SweepRow row{"lambda=" + shapes[i].to_string() + " n=" + std::to_string(n), RowStatus::Pass, {}};
    if (!f.clean()) {
      row.status = RowStatus::Finding;
      if (!f.positive) row.detail += "not e-positive; ";
      if (!f.unimodal) row.detail += "not e-unimodal; ";
      if (!f.palindromic) row.detail += "not palindromic about the common center; ";
    }
    return row;
  });
}

FindingsLog::FindingsLog(const std::string& path) {
  {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      // A torn last line from an interrupted run is ignored and redone.
      Json j = Json::parse(line, nullptr, false);
      if (!j.is_discarded() && j.contains("key")) keys_.insert(j["key"].get<std::string>());
    }
  }
  out_.open(path, std::ios::app);
  if (!out_) throw std::runtime_error("cannot open " + path + " for appending");
}

bool FindingsLog::has(const std::string& key) const {
  std::lock_guard lock(mutex_);
  return keys_.count(key) != 0;
}

void FindingsLog::append(const Json& record) {
  const std::string key = record.at("key").get<std::string>();
  std::lock_guard lock(mutex_);
  out_ << record.dump() << '\n';
  out_.flush();
  keys_.insert(key);
}

std::size_t FindingsLog::size() const {
  std::lock_guard lock(mutex_);
  return keys_.size();
}

namespace {

template <class Item>
LoggedSweep log_items(const std::vector<Item>& items, FindingsLog& log,
                      const std::function<std::string(const Item&)>& key,
                      const std::function<std::pair<Json, bool>(const Item&)>& compute) {
  LoggedSweep out;
  std::vector<const Item*> todo;
  for (const auto& it : items) {
    if (log.has(key(it))) ++out.resumed;
    else todo.push_back(&it);
  }
  std::atomic<std::size_t> findings{0};
  parallel_for(todo.size(), [&](std::size_t i) {
    auto [record, finding] = compute(*todo[i]);
    record["finding"] = finding;
    if (finding) ++findings;
    log.append(record);
  });
  out.recorded = todo.size();
  out.findings = findings;
  return out;
}

}  // namespace

LoggedSweep log_epositivity(int max_n, FindingsLog& log, OracleCache& oracle) {
  std::vector<std::pair<int, Partition>> items;
  for (int n = 1; n <= max_n; ++n)
    for (auto& lambda : partitions_in_staircase(n)) items.emplace_back(n, std::move(lambda));
  using Item = std::pair<int, Partition>;
  return log_items<Item>(
      items, log,
      [](const Item& it) { return "epositivity n=" + std::to_string(it.first) + " lambda=" + it.second.to_string(); },
      [&](const Item& it) {
        const PositivityFacts f = positivity_facts(it.second, it.first, oracle);
        Json j;
        j["key"] = "epositivity n=" + std::to_string(it.first) + " lambda=" + it.second.to_string();
        j["kind"] = "epositivity";
        j["n"] = it.first;
        j["lambda"] = it.second;
        j["e_positive"] = f.positive;
        j["e_unimodal"] = f.unimodal;
        j["palindromic"] = f.palindromic;
        return std::pair{j, !f.clean()};
      });
}

LoggedSweep log_conjecture(int max_n, FindingsLog& log, OracleCache& oracle) {
  std::vector<HookFamily> items;
  for (int n = 4; n <= max_n; ++n)
    for (auto& f : constant_b_families(n)) items.push_back(std::move(f));
  return log_items<HookFamily>(
      items, log, [](const HookFamily& f) { return "conjecture " + f.to_string(); },
      [&](const HookFamily& f) {
        const ConjectureReport rep = conjecture_e_n22_check(f, oracle);
        return std::pair{conjecture_record(rep), rep.verdict == ConjectureVerdict::CounterexampleCandidate};
      });
}

}  // namespace cqsym
