// cqsym: compute and verify chromatic quasisymmetric functions of natural
// unit interval orders.
//
// Exit status: 0 computed / all checks pass, 1 a verification mismatch,
// 2 usage error.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "cqsym/json_io.hpp"
#include "cqsym/nonabelian.hpp"
#include "cqsym/oracle.hpp"
#include "cqsym/rectlemma.hpp"
#include "cqsym/relations.hpp"
#include "cqsym/rook.hpp"
#include "cqsym/sweep.hpp"

using namespace cqsym;

namespace {

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Pretty, Json, Csv };

struct Output {
  std::string format = "pretty";
  bool json = false;
  bool csv = false;

  Format get() const {
    if (json) return Format::Json;
    if (csv) return Format::Csv;
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Pretty;
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "pretty, json or csv")->check(CLI::IsMember({"pretty", "json", "csv"}));
  cmd->add_flag("--json", out.json, "same as --format json");
  cmd->add_flag("--csv", out.csv, "same as --format csv");
}

Partition parse_partition(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--lambda: ") + e.what());
  }
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("cannot parse list entry '" + tok + "'");
    }
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_poly_list(const std::string& name, const std::vector<QPoly>& polys, Format fmt, Json& j) {
  if (fmt == Format::Json) {
    j[name] = polys;
  } else if (fmt == Format::Csv) {
    std::cout << "index,coeffs\n";
    for (std::size_t r = 0; r < polys.size(); ++r) std::cout << r << "," << csv_field(polys[r].to_array_string()) << "\n";
  } else {
    for (std::size_t r = 0; r < polys.size(); ++r) std::cout << name << "_" << r << " = " << polys[r].to_pretty() << "\n";
  }
}

void print_expansion_csv(const EExpansion& e) {
  std::cout << "mu,coeffs\n";
  for (const auto& [mu, c] : e.terms()) std::cout << csv_field(mu.to_string()) << "," << csv_field(c.to_array_string()) << "\n";
}

// eexpand -----------------------------------------------------------------

struct EexpandArgs {
  std::string lambda;
  int n = 0;
  int ell = 0;
  Output out;
};

int run_eexpand(const EexpandArgs& a) {
  const Partition lambda = parse_partition(a.lambda);
  require(a.n >= 1 && a.n <= 63, "--n must be between 1 and 63");
  require(fits_staircase(lambda, a.n), "lambda=" + lambda.to_string() + " does not fit delta_" + std::to_string(a.n));
  const int ell = a.ell > 0 ? a.ell : std::max(lambda.length(), 1);
  const bool abelian = abelian_admissible(lambda, ell, a.n);
  require(a.ell == 0 || abelian, "--ell given but lambda is not inside ell x (n-ell) with ell <= n/2");

  const EExpansion truth = x_lambda_oracle(lambda, a.n);
  std::optional<EExpansion> formula;
  if (abelian) formula = e_expansion_abelian(lambda, ell, a.n);
  const bool agree = !formula || *formula == truth;

  switch (a.out.get()) {
    case Format::Json: std::cout << Json(truth).dump() << "\n"; break;
    case Format::Csv: print_expansion_csv(truth); break;
    case Format::Pretty:
      std::cout << "X_(" << lambda.to_string() << "), n=" << a.n << ":\n" << truth.to_pretty() << "\n";
      if (formula) {
        std::cout << "two-row formula (ell=" << ell << "): " << (agree ? "agrees with the oracle" : "MISMATCH") << "\n";
        if (!agree) std::cout << formula->to_pretty() << "\n";
      } else {
        std::cout << "two-row formula: not applicable (lambda is not abelian for ell=" << ell << ")\n";
      }
  }
  return agree ? kPass : kMismatch;
}

// decompose ---------------------------------------------------------------

struct DecomposeArgs {
  std::string lambda;
  int n = 0, ell = 0, s = 0;
  Output out;
};

int run_decompose(const DecomposeArgs& a) {
  const Partition lambda = parse_partition(a.lambda);
  require(a.n >= 2 && a.n <= 63, "--n must be between 2 and 63");
  require(rect_admissible(lambda, a.ell, a.n, a.s), "need 1 <= ell <= min(s, n-s) and lambda inside ell x (n-s)");
  std::vector<QPoly> f;
  for (int r = 0; r <= a.ell; ++r) f.push_back(big_f(lambda, a.ell, a.n, a.s, r));
  OracleCache oracle;
  const CheckReport rep = rect_decompose_check(lambda, a.ell, a.n, a.s, oracle);
  const Format fmt = a.out.get();
  Json j;
  if (fmt == Format::Json) {
    j["lambda"] = lambda;
    j["n"] = a.n;
    j["ell"] = a.ell;
    j["s"] = a.s;
  }
  print_poly_list("F", f, fmt, j);
  if (fmt == Format::Json) {
    j["pass"] = rep.pass;
    if (rep.mismatch) j["mismatch"] = {{"mu", rep.mismatch->mu}, {"lhs", rep.mismatch->lhs}, {"rhs", rep.mismatch->rhs}};
    std::cout << j.dump() << "\n";
  } else if (fmt == Format::Pretty) {
    std::cout << "decomposition against the oracle: " << (rep.pass ? "pass" : "FAIL") << "\n";
    if (rep.mismatch)
      std::cout << "  e_(" << rep.mismatch->mu.to_string() << "): lhs " << rep.mismatch->lhs.to_pretty() << " | rhs "
                << rep.mismatch->rhs.to_pretty() << "\n";
  }
  return rep.pass ? kPass : kMismatch;
}

// hit ---------------------------------------------------------------------

struct HitArgs {
  std::string lambda;
  int rows = 0, cols = 0;
  Output out;
};

int run_hit(const HitArgs& a) {
  const Partition lambda = parse_partition(a.lambda);
  require(a.rows >= 0 && a.rows <= a.cols && a.cols <= 10, "need 0 <= rows <= cols <= 10");
  require(fits_rectangle(lambda, a.rows, a.cols), "lambda does not fit the board");
  const auto h = hit_numbers(lambda, a.rows, a.cols);
  Json j;
  const Format fmt = a.out.get();
  if (fmt == Format::Json) {
    j["lambda"] = lambda;
    j["rows"] = a.rows;
    j["cols"] = a.cols;
  }
  print_poly_list("H", h, fmt, j);
  if (fmt == Format::Json) std::cout << j.dump() << "\n";
  return kPass;
}

// nonabelian --------------------------------------------------------------

struct NonabelianArgs {
  int i = 0, a = 0, ell = 0, n = 0;
  std::string b;
  std::string which = "e-n11";
  Output out;
};

int run_nonabelian(const NonabelianArgs& args) {
  HookFamily fam{args.i, args.a, args.ell, args.b.empty() ? std::vector<int>{} : parse_list(args.b), args.n};
  require(args.n >= 4 && args.n <= 12, "--n must be between 4 and 12");
  require(family_valid(fam), "need ell >= 2, 0 <= b_p <= ... <= b_1 <= a <= n-ell <= i <= n-1 inside delta_n");
  std::optional<QPoly> value;
  int r = 1;
  if (args.which == "e-n11") {
    if (fam.p() == 0) value = coeff_e_n11_hook(fam);
    else if (in_general_regime(fam)) value = coeff_e_n11_general(fam);
    else if (fam.constant_b()) value = coeff_e_n11_constant_b(fam);
    else throw UsageError("a non-constant b-list needs a <= n-ell-p");
  } else if (args.which == "e-n22") {
    require(fam.p() == 0, "--which e-n22 has a closed form only without b; use --which conjecture");
    value = coeff_e_n22_hook(fam);
    r = 2;
  } else {
    require(fam.constant_b(), "--which conjecture needs a constant b-list");
    value = conjecture_e_n22(fam);
    r = 2;
  }
  OracleCache oracle;
  const QPoly truth = oracle_two_row_coefficient(fam, r, oracle);
  const std::string verdict = !value ? "not-evaluable" : *value == truth ? "match" : "mismatch";
  switch (args.out.get()) {
    case Format::Json: {
      Json j;
      j["lambda"] = fam.partition();
      j["n"] = fam.n;
      j["which"] = args.which;
      j["formula"] = value ? Json(*value) : Json(nullptr);
      j["oracle"] = truth;
      j["verdict"] = verdict;
      std::cout << j.dump() << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "lambda,n,which,formula,oracle,verdict\n"
                << csv_field(fam.partition().to_string()) << "," << fam.n << "," << args.which << ","
                << csv_field(value ? value->to_array_string() : "") << "," << csv_field(truth.to_array_string()) << ","
                << verdict << "\n";
      break;
    case Format::Pretty:
      std::cout << "lambda=(" << fam.partition().to_string() << "), n=" << fam.n << ", coefficient of e_("
                << two_row(fam.n, r).to_string() << ")\n"
                << "formula: " << (value ? value->to_pretty() : "not evaluable (negative bracket argument)") << "\n"
                << "oracle:  " << truth.to_pretty() << "\n"
                << "verdict: " << verdict << "\n";
  }
  // A conjecture mismatch is a finding, not a failed check.
  if (verdict == "mismatch" && args.which != "conjecture") return kMismatch;
  return kPass;
}

// verify / sweep ----------------------------------------------------------

void print_sweep(const SweepResult& res, Format fmt, bool all_rows, Json& rows) {
  for (const auto& row : res.rows) {
    if (!all_rows && row.status != RowStatus::Fail && row.status != RowStatus::Finding) continue;
    if (fmt == Format::Json) {
      rows.push_back({{"check", res.name}, {"label", row.label}, {"status", to_string(row.status)}, {"detail", row.detail}});
    } else if (fmt == Format::Csv) {
      std::cout << csv_field(res.name) << "," << csv_field(row.label) << "," << to_string(row.status) << ","
                << csv_field(row.detail) << "\n";
    } else {
      std::cout << "  " << to_string(row.status) << "  " << row.label;
      if (!row.detail.empty()) std::cout << "  [" << row.detail << "]";
      std::cout << "\n";
    }
  }
  if (fmt == Format::Pretty) std::cout << res.summary() << "\n";
}

struct VerifyArgs {
  std::string what;
  int n = 0, max_n = 0, ell = 0;
  bool failures_only = false;
  Output out;
};

int run_verify(const VerifyArgs& a) {
  const bool c_lemma = a.what == "c-lemma";
  int lo, hi;
  if (c_lemma) {
    require(a.ell >= 1 && a.ell <= 10, "c-lemma needs --ell between 1 and 10");
    lo = hi = a.ell;
  } else {
    require((a.n > 0) != (a.max_n > 0), "give exactly one of --n and --max-n");
    lo = a.n > 0 ? a.n : 2;
    hi = a.n > 0 ? a.n : a.max_n;
    require(lo >= 1 && hi <= 9, "n must be between 1 and 9");
  }
  using Runner = std::function<SweepResult(int, OracleCache&)>;
  const std::map<std::string, Runner> runners{
      {"rect", sweep_rect},
      {"theorem-e", sweep_theorem_e},
      {"corollary-fqhit", [](int n, OracleCache&) { return sweep_f_equals_h(n); }},
      {"abreu-nigro", sweep_abreu_nigro},
      {"relations", sweep_relations},
      {"palindromic", sweep_palindromic},
      {"centers", [](int n, OracleCache&) { return sweep_centers(n); }},
      {"c-lemma", [](int ell, OracleCache&) { return sweep_c_lemma(ell); }},
      {"nonabelian", sweep_nonabelian},
  };
  const Runner& run = runners.at(a.what);
  OracleCache oracle;
  const Format fmt = a.out.get();
  Json rows = Json::array();
  if (fmt == Format::Csv) std::cout << "check,label,status,detail\n";
  bool ok = true;
  for (int k = lo; k <= hi; ++k) {
    const SweepResult res = run(k, oracle);
    print_sweep(res, fmt, !a.failures_only, rows);
    ok = ok && res.ok();
  }
  if (fmt == Format::Json) std::cout << Json{{"check", a.what}, {"pass", ok}, {"rows", rows}}.dump() << "\n";
  return ok ? kPass : kMismatch;
}

struct SweepArgs {
  std::string what;
  int max_n = 0;
  std::string out_path;
};

int run_sweep(const SweepArgs& a) {
  require(a.max_n >= 1 && a.max_n <= 9, "--max-n must be between 1 and 9");
  const std::string path = a.out_path.empty() ? a.what + ".jsonl" : a.out_path;
  FindingsLog log(path);
  OracleCache oracle;
  const LoggedSweep res =
      a.what == "epositivity" ? log_epositivity(a.max_n, log, oracle) : log_conjecture(a.max_n, log, oracle);
  std::cout << a.what << " up to n=" << a.max_n << ": " << res.recorded << " recorded, " << res.resumed
            << " already in " << path << ", " << res.findings << " new findings\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic quasisymmetric functions of natural unit interval orders"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: CQSYM_THREADS or all cores)")->check(CLI::PositiveNumber);

  EexpandArgs ee;
  auto* eexpand = app.add_subcommand("eexpand", "X_lambda in the elementary basis, checked against the two-row formula");
  eexpand->add_option("--lambda", ee.lambda, "partition, e.g. 2,1 (0 for empty)")->required();
  eexpand->add_option("--n", ee.n, "number of vertices")->required();
  eexpand->add_option("--ell", ee.ell, "rows of the bounding rectangle (default: length of lambda)");
  add_output_flags(eexpand, ee.out);

  DecomposeArgs de;
  auto* decompose = app.add_subcommand("decompose", "coefficients F_r expressing X_lambda through rectangles");
  decompose->add_option("--lambda", de.lambda, "partition inside ell x (n-s)")->required();
  decompose->add_option("--n", de.n)->required();
  decompose->add_option("--ell", de.ell)->required();
  decompose->add_option("--s", de.s)->required();
  add_output_flags(decompose, de.out);

  HitArgs hi;
  auto* hit = app.add_subcommand("hit", "q-hit numbers H_0..H_rows of lambda on a rows x cols board");
  hit->add_option("--lambda", hi.lambda)->required();
  hit->add_option("--rows", hi.rows)->required();
  hit->add_option("--cols", hi.cols)->required();
  add_output_flags(hit, hi.out);

  NonabelianArgs na;
  auto* nonab = app.add_subcommand("nonabelian", "closed-form coefficients for lambda = (i, a^(ell-1), b)");
  nonab->add_option("--i", na.i)->required();
  nonab->add_option("--a", na.a)->required();
  nonab->add_option("--ell", na.ell)->required();
  nonab->add_option("--b", na.b, "b_1,...,b_p (omit for none)");
  nonab->add_option("--n", na.n)->required();
  nonab->add_option("--which", na.which)->check(CLI::IsMember({"e-n11", "e-n22", "conjecture"}));
  add_output_flags(nonab, na.out);

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "exhaustive identity checks against the oracle");
  verify->require_subcommand(1);
  const std::pair<const char*, const char*> checks[] = {
      {"rect", "F_r decomposition of every lambda in an ell x (n-s) box"},
      {"theorem-e", "two-row e-expansion of abelian shapes"},
      {"corollary-fqhit", "F_r equals the q-hit number H_r"},
      {"abreu-nigro", "e-expansion from square-board hit numbers"},
      {"relations", "row and column linear relations"},
      {"palindromic", "common palindromic center of the e-coefficients"},
      {"centers", "common center of the F_r summands"},
      {"c-lemma", "inductive and hook-length c_I agree"},
      {"nonabelian", "e_{n-1,1} and e_{n-2,2} closed forms"}};
  for (const auto& [what, about] : checks) {
    auto* sub = verify->add_subcommand(what, about);
    sub->add_option("--n", ve.n, "single n");
    sub->add_option("--max-n", ve.max_n, "every n from 2 up to this");
    if (std::string(what) == "c-lemma") sub->add_option("--ell", ve.ell, "number of rows")->required();
    sub->add_flag("--failures-only", ve.failures_only, "print only failing rows and findings");
    add_output_flags(sub, ve.out);
    sub->callback([&ve, sub] { ve.what = sub->get_name(); });
  }

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "resumable searches logging JSON lines");
  sweep->require_subcommand(1);
  const std::pair<const char*, const char*> searches[] = {
      {"epositivity", "e-positivity, e-unimodality and palindromicity of every X_lambda"},
      {"conjecture55", "conjectured e_{n-2,2} coefficient on constant-b families"}};
  for (const auto& [what, about] : searches) {
    auto* sub = sweep->add_subcommand(what, about);
    sub->add_option("--max-n", sw.max_n, "largest n to visit")->required();
    sub->add_option("--out", sw.out_path, "JSON-lines file (appended to, default <name>.jsonl)");
    sub->callback([&sw, sub] { sw.what = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  if (threads > 0) setenv("CQSYM_THREADS", std::to_string(threads).c_str(), 1);

  try {
    if (*eexpand) return run_eexpand(ee);
    if (*decompose) return run_decompose(de);
    if (*hit) return run_hit(hi);
    if (*nonab) return run_nonabelian(na);
    if (*verify) return run_verify(ve);
    if (*sweep) return run_sweep(sw);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
