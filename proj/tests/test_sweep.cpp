#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <stdexcept>

#include "cqsym/sweep.hpp"

using namespace cqsym;

TEST_CASE("parallel_for visits every index once") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; }, 4);
  for (const auto& h : hits) CHECK(h.load() == 1);
  parallel_for(0, [](std::size_t) { FAIL("no work expected"); }, 3);
}

TEST_CASE("parallel_for rethrows") {
  CHECK_THROWS_AS(parallel_for(
                      50, [](std::size_t i) {
                        if (i == 17) throw std::runtime_error("boom");
                      },
                      4),
                  std::runtime_error);
}

TEST_CASE("sweep results summarise their rows") {
  SweepResult r{"demo", {{"a", RowStatus::Pass, ""}, {"b", RowStatus::Skipped, ""}, {"c", RowStatus::Finding, ""}}};
  CHECK(r.count(RowStatus::Pass) == 1);
  CHECK(r.ok());
  r.rows.push_back({"d", RowStatus::Fail, "x"});
  CHECK_FALSE(r.ok());
  CHECK(to_string(RowStatus::Finding) == "finding");
}

TEST_CASE("small sweeps") {
  OracleCache oracle;
  const SweepResult rect = sweep_rect(6, oracle);
  CHECK(rect.ok());
  CHECK(rect.count(RowStatus::Pass) == 71);
  CHECK(rect.summary() == "rect n=6: 71 pass, 0 fail");
  CHECK(sweep_centers(6).ok());
  CHECK(sweep_f_equals_h(6).ok());
  CHECK(sweep_hit_decompose(5, oracle).ok());
  CHECK(sweep_theorem_e(6, oracle).ok());
  CHECK(sweep_abreu_nigro(6, oracle).ok());
  CHECK(sweep_relations(5, oracle).ok());
  CHECK(sweep_palindromic(5, oracle).ok());
  CHECK(sweep_c_lemma(5).ok());
  CHECK(sweep_nonabelian(6, oracle).ok());
  const SweepResult e = sweep_epositivity(5, oracle);
  CHECK(e.ok());
  CHECK(e.count(RowStatus::Finding) == 0);
}

TEST_CASE("findings log resumes") {
  const auto path = std::filesystem::temp_directory_path() / "cqsym_test_findings.jsonl";
  std::filesystem::remove(path);
  OracleCache oracle;
  std::size_t first = 0;
  {
    FindingsLog log(path.string());
    const LoggedSweep s = log_epositivity(4, log, oracle);
    first = s.recorded;
    CHECK(first == 1 + 2 + 5 + 14);
    CHECK(s.resumed == 0);
    CHECK(s.findings == 0);
    CHECK(log.size() == first);
  }
  {
    FindingsLog log(path.string());
    CHECK(log.size() == first);
    CHECK(log.has("epositivity n=4 lambda=2,1"));
    CHECK_FALSE(log.has("epositivity n=5 lambda=2,1"));
    const LoggedSweep s = log_epositivity(5, log, oracle);
    CHECK(s.resumed == first);
    CHECK(s.recorded == 42);
  }
  {
    FindingsLog log(path.string());
    CHECK_THROWS(log.append(Json{{"no", "key"}}));
  }
  std::filesystem::remove(path);
}
