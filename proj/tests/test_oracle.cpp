#include <doctest.h>

#include <algorithm>
#include <random>

#include "cqsym/oracle.hpp"

using namespace cqsym;

namespace {

IncGraph complete(int n) {
  IncGraph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

// Every function V -> [k], filtered by color counts; no pruning at all.
QPoly brute_force(const IncGraph& g, const std::vector<int>& composition) {
  const int n = g.vertex_count();
  const int k = static_cast<int>(composition.size());
  std::vector<int> col(static_cast<std::size_t>(n) + 1, 0);
  std::vector<long> counts;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= k;
  for (long code = 0; code < total; ++code) {
    long c = code;
    std::vector<int> used(static_cast<std::size_t>(k), 0);
    for (int v = 1; v <= n; ++v) {
      col[static_cast<std::size_t>(v)] = static_cast<int>(c % k);
      c /= k;
      ++used[static_cast<std::size_t>(col[static_cast<std::size_t>(v)])];
    }
    if (used != composition) continue;
    bool proper = true;
    std::size_t asc = 0;
    for (const auto& [i, j] : g.edges()) {
      if (col[static_cast<std::size_t>(i)] == col[static_cast<std::size_t>(j)]) proper = false;
      if (col[static_cast<std::size_t>(i)] < col[static_cast<std::size_t>(j)]) ++asc;
    }
    if (!proper) continue;
    if (counts.size() <= asc) counts.resize(asc + 1, 0);
    ++counts[asc];
  }
  std::vector<Integer> coeffs;
  for (long v : counts) coeffs.emplace_back(v);
  return QPoly(std::move(coeffs));
}

}  // namespace

TEST_CASE("monomial coefficients") {
  CHECK(monomial_coefficient(complete(3), Partition({1, 1, 1})) == QPoly{1, 2, 2, 1});
  CHECK(monomial_coefficient(inc_graph(Partition({1}), 3), Partition({2, 1})) == QPoly{0, 1});
  IncGraph empty(5);
  CHECK(monomial_coefficient(empty, Partition({3, 2})) == QPoly{10});
  CHECK(monomial_coefficient(empty, Partition({2, 2, 1})) == QPoly{30});
  const std::vector<int> bad{2, 2};
  CHECK_THROWS_AS(monomial_coefficient(empty, bad), std::invalid_argument);
}

TEST_CASE("monomial coefficients agree with unpruned enumeration") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_in_staircase(n)) {
      const IncGraph g = inc_graph(lambda, n);
      for (const auto& mu : partitions_of(n)) {
        std::vector<int> alpha = mu.parts();
        CHECK(monomial_coefficient(g, mu) == brute_force(g, alpha));
        std::reverse(alpha.begin(), alpha.end());
        CHECK(monomial_coefficient(g, alpha) == brute_force(g, alpha));
      }
    }
}

TEST_CASE("elementary to monomial transition") {
  using Row = std::map<Partition, Integer, ReverseLex>;
  CHECK(e_in_m(Partition({2})) == Row{{Partition({1, 1}), 1}});
  CHECK(e_in_m(Partition({1, 1})) == Row{{Partition({2}), 1}, {Partition({1, 1}), 2}});
  CHECK(e_in_m(Partition({2, 1})) == Row{{Partition({2, 1}), 1}, {Partition({1, 1, 1}), 3}});
  // e_mu contains m_{mu'} with coefficient 1 and nothing dominating it.
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      const auto row = e_in_m(mu);
      CHECK(row.at(mu.conjugate()) == 1);
      for (const auto& [nu, c] : row) CHECK_FALSE(ReverseLex{}(nu, mu.conjugate()));
    }
}

TEST_CASE("change of basis") {
  const QPoly p{1, 2, 3};
  MonomialData m11{{Partition({1, 1}), p}};
  EExpansion e = to_e_basis(m11, 2);
  CHECK(e.terms().size() == 1);
  CHECK(e.coefficient(Partition({2})) == p);

  EExpansion kn = to_e_basis(MonomialData{{Partition({1, 1, 1, 1}), qfact(4)}}, 4);
  CHECK(kn.terms().size() == 1);
  CHECK(kn.coefficient(Partition({4})) == qfact(4));

  CHECK_THROWS_AS(to_e_basis(MonomialData{{Partition({2}), QPoly{1}}}, 3), std::invalid_argument);
}

TEST_CASE("oracle values") {
  const EExpansion k3 = x_lambda_oracle(Partition{}, 3);
  CHECK(k3.terms().size() == 1);
  CHECK(k3.coefficient(Partition({3})) == qfact(3));

  const EExpansion path = x_lambda_oracle(Partition({1}), 3);
  CHECK(path.terms().size() == 2);
  CHECK(path.coefficient(Partition({3})) == qint(3));
  CHECK(path.coefficient(Partition({2, 1})) == QPoly{0, 1});

  const EExpansion edgeless = x_lambda_oracle(Partition({3, 2, 1}), 4);
  CHECK(edgeless.terms().size() == 1);
  CHECK(edgeless.coefficient(Partition({1, 1, 1, 1})) == QPoly{1});

  CHECK_THROWS_AS(x_lambda_oracle(Partition({3}), 3), std::invalid_argument);
}

TEST_CASE("symmetry on random compositions") {
  std::mt19937 rng(2024);
  for (int n = 2; n <= 6; ++n)
    for (const auto& lambda : partitions_in_staircase(n)) {
      const IncGraph g = inc_graph(lambda, n);
      for (int t = 0; t < 20; ++t) {
        // Random composition of n with at most n parts, zeros allowed.
        std::vector<int> alpha(static_cast<std::size_t>(1 + rng() % n), 0);
        for (int k = 0; k < n; ++k) ++alpha[rng() % alpha.size()];
        std::vector<int> sorted = alpha;
        std::sort(sorted.rbegin(), sorted.rend());
        CHECK(monomial_coefficient(g, alpha) == monomial_coefficient(g, Partition(sorted)));
      }
    }
}

TEST_CASE("degree law and common palindromic center") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_in_staircase(n)) {
      const EExpansion x = x_lambda_oracle(lambda, n, 2);
      std::size_t top = 0;
      for (const auto& [mu, c] : x.terms()) {
        top = std::max(top, *c.degree());
        auto center = palindrome_center(c);
        REQUIRE(center);
        CHECK(center->admits(x_lambda_center(lambda, n)));
      }
      CHECK(static_cast<int>(top) == n * (n - 1) / 2 - lambda.size());
    }
}

TEST_CASE("cache returns the oracle value") {
  OracleCache cache;
  const EExpansion& a = cache.get(Partition({2, 1}), 5);
  const EExpansion& b = cache.get(Partition({2, 1}), 5);
  CHECK(&a == &b);
  CHECK(a == x_lambda_oracle(Partition({2, 1}), 5));
  CHECK(cache.size() == 1);
}
