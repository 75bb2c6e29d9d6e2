#include "cqsym/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace cqsym {

namespace {

struct ColoringSearch {
  const IncGraph& g;
  int n;
  std::vector<int> remaining;
  std::vector<std::uint64_t> colour_mask;  // vertices holding each colour
  std::vector<std::uint64_t> counts;       // indexed by asc

  void run(int v, int asc) {
    if (v > n) {
      if (static_cast<std::size_t>(asc) >= counts.size()) counts.resize(static_cast<std::size_t>(asc) + 1, 0);
      ++counts[static_cast<std::size_t>(asc)];
      return;
    }
    const std::uint64_t nbrs = g.lower_neighbours(v);
    std::uint64_t below = 0;  // vertices coloured with a smaller colour
    for (std::size_t c = 0; c < remaining.size(); ++c) {
      if (remaining[c] > 0 && (nbrs & colour_mask[c]) == 0) {
        --remaining[c];
        colour_mask[c] |= std::uint64_t{1} << v;
        run(v + 1, asc + __builtin_popcountll(nbrs & below));
        colour_mask[c] &= ~(std::uint64_t{1} << v);
        ++remaining[c];
      }
      below |= colour_mask[c];
    }
  }
};

}  // namespace

QPoly monomial_coefficient(const IncGraph& g, std::span<const int> composition) {
  const int n = g.vertex_count();
  int total = 0;
  for (int c : composition) {
    if (c < 0) throw std::invalid_argument("composition has a negative part");
    total += c;
  }
  if (total != n) throw std::invalid_argument("composition size does not match the vertex count");
  ColoringSearch s{g, n, std::vector<int>(composition.begin(), composition.end()),
                   std::vector<std::uint64_t>(composition.size(), 0), {}};
  s.run(1, 0);
  std::vector<Integer> coeffs;
  coeffs.reserve(s.counts.size());
  for (auto c : s.counts) coeffs.emplace_back(static_cast<unsigned long>(c));
  return QPoly(std::move(coeffs));
}

QPoly monomial_coefficient(const IncGraph& g, const Partition& mu) {
  return monomial_coefficient(g, std::span<const int>(mu.parts()));
}

namespace {

// 0-1 matrices with the given row sums and column capacities.
Integer count_01(const std::vector<int>& rows, std::size_t row, std::vector<int>& cols,
                 std::map<std::pair<std::size_t, std::vector<int>>, Integer>& memo) {
  if (row == rows.size())
    return std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; }) ? 1 : 0;
  auto key = std::make_pair(row, cols);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Integer total = 0;
  // Choose rows[row] distinct columns with capacity left.
  auto pick = [&](auto&& self, std::size_t start, int need) -> void {
    if (need == 0) {
      total += count_01(rows, row + 1, cols, memo);
      return;
    }
    for (std::size_t c = start; c + static_cast<std::size_t>(need) <= cols.size(); ++c) {
      if (cols[c] == 0) continue;
      --cols[c];
      self(self, c + 1, need - 1);
      ++cols[c];
    }
  };
  pick(pick, 0, rows[row]);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::map<Partition, Integer, ReverseLex> e_in_m(const Partition& mu) {
  std::map<Partition, Integer, ReverseLex> out;
  for (const auto& nu : partitions_of(mu.size())) {
    std::vector<int> cols = nu.parts();
    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
    Integer c = count_01(mu.parts(), 0, cols, memo);
    if (c != 0) out.emplace(nu, c);
  }
  return out;
}

EExpansion to_e_basis(const MonomialData& mono, int n) {
  for (const auto& [nu, c] : mono)
    if (nu.size() != n) throw std::invalid_argument("monomial data contains m_" + nu.to_string() + " of the wrong degree");

  // e_{nu'} = m_nu + (terms m_rho with rho < nu in dominance), so walking nu
  // from the top of reverse-lex order solves for one e-coefficient per step.
  const auto order = partitions_of(n);
  std::map<Partition, std::map<Partition, Integer, ReverseLex>, ReverseLex> transition;
  EExpansion out(n);
  std::vector<Partition> solved;
  for (const auto& nu : order) {
    const Partition mu = nu.conjugate();
    auto it = mono.find(nu);
    QPoly acc = it == mono.end() ? QPoly{} : it->second;
    for (const auto& prev : solved) {
      const auto& row = transition.at(prev);
      auto hit = row.find(nu);
      if (hit != row.end()) acc -= out.coefficient(prev) * QPoly::constant(hit->second);
    }
    auto& row = transition.emplace(mu, e_in_m(mu)).first->second;
    const QPoly diag = QPoly::constant(row.at(nu));
    out.add_term(mu, exact_div(acc, diag));
    solved.push_back(mu);
  }
  return out;
}

EExpansion x_lambda_oracle(const Partition& lambda, int n, int symmetry_checks) {
  const IncGraph g = inc_graph(lambda, n);
  MonomialData mono;
  std::mt19937 rng(0x5eed + static_cast<unsigned>(n));
  for (const auto& nu : partitions_of(n)) {
    QPoly c = monomial_coefficient(g, nu);
    for (int k = 0; k < symmetry_checks; ++k) {
      std::vector<int> alpha = nu.parts();
      if (k == 0) std::reverse(alpha.begin(), alpha.end());
      else std::shuffle(alpha.begin(), alpha.end(), rng);
      if (monomial_coefficient(g, alpha) != c)
        throw SymmetryViolation("X_" + lambda.to_string() + " (n=" + std::to_string(n) +
                                ") is not symmetric at m_" + nu.to_string());
    }
    if (!c.is_zero()) mono.emplace(nu, std::move(c));
  }
  return to_e_basis(mono, n);
}

const EExpansion& OracleCache::get(const Partition& lambda, int n) {
  auto key = std::make_pair(n, lambda);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  EExpansion value = x_lambda_oracle(lambda, n);
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(std::move(key), std::move(value)).first->second;
}

std::size_t OracleCache::size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

HalfInt x_lambda_center(const Partition& lambda, int n) {
  return HalfInt{static_cast<long>(n) * (n - 1) / 2 - lambda.size()};
}

}  // namespace cqsym
