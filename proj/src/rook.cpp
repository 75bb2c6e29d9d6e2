#include "cqsym/rook.hpp"

#include <stdexcept>

namespace cqsym {

void RookPlacement::validate() const {
  if (m1 < 0 || m1 > m2) throw std::invalid_argument("board needs 0 <= m1 <= m2");
  if (static_cast<int>(cols.size()) != m1) throw std::invalid_argument("need exactly one rook per row");
  std::vector<bool> seen(static_cast<std::size_t>(m2) + 1, false);
  for (int c : cols) {
    if (c < 1 || c > m2) throw std::invalid_argument("rook column out of range");
    if (seen[static_cast<std::size_t>(c)]) throw std::invalid_argument("two rooks share a column");
    seen[static_cast<std::size_t>(c)] = true;
  }
}

std::string WeightConvention::to_string() const {
  static const char* names[] = {"top-left", "top-right", "bottom-left", "bottom-right"};
  return std::string(names[static_cast<int>(anchor)]) + (left_is_smaller_column ? " left=smaller" : " left=larger") +
         (below_is_larger_row ? " below=larger" : " below=smaller") +
         (rook_free_column_counts ? " empty-column=counts" : " empty-column=excluded");
}

std::vector<WeightConvention> all_weight_conventions() {
  using A = WeightConvention::Anchor;
  std::vector<WeightConvention> out;
  for (A a : {A::TopLeft, A::TopRight, A::BottomLeft, A::BottomRight})
    for (bool l : {true, false})
      for (bool b : {true, false})
        for (bool v : {true, false}) out.push_back({a, l, b, v});
  return out;
}

bool cell_in_lambda(const Partition& lambda, int m1, int m2, int row, int col, WeightConvention::Anchor anchor) {
  using A = WeightConvention::Anchor;
  const int r = (anchor == A::TopLeft || anchor == A::TopRight) ? row : m1 + 1 - row;
  const int c = (anchor == A::TopLeft || anchor == A::BottomLeft) ? col : m2 + 1 - col;
  return c <= lambda.part(r);
}

namespace {

// Weight without validation; rook_row[c] is the row of the rook in column c, 0 if none.
int weight_of(const std::vector<int>& cols, const std::vector<int>& rook_row, const Partition& lambda, int m1,
              int m2, const WeightConvention& conv) {
  int w = 0;
  for (int i = 1; i <= m1; ++i) {
    const int rc = cols[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= m2; ++j) {
      if (rc == j) continue;
      if (conv.left_is_smaller_column ? rc < j : rc > j) continue;
      const int rr = rook_row[static_cast<std::size_t>(j)];
      bool ok;
      if (rr == 0) {
        ok = conv.rook_free_column_counts;
      } else {
        const bool rook_in = cell_in_lambda(lambda, m1, m2, rr, j, conv.anchor);
        const bool below = conv.below_is_larger_row ? rr > i : rr < i;
        ok = cell_in_lambda(lambda, m1, m2, i, j, conv.anchor) ? (rook_in && below) : (rook_in || below);
      }
      if (ok) ++w;
    }
  }
  return w;
}

void require_board(const Partition& lambda, int m1, int m2) {
  if (m1 < 0 || m1 > m2) throw std::invalid_argument("board needs 0 <= m1 <= m2");
  if (!fits_rectangle(lambda, m1, m2))
    throw std::invalid_argument("lambda=" + lambda.to_string() + " does not fit the board");
}

}  // namespace

int lambda_weight(const RookPlacement& p, const Partition& lambda, const WeightConvention& conv) {
  p.validate();
  require_board(lambda, p.m1, p.m2);
  std::vector<int> rook_row(static_cast<std::size_t>(p.m2) + 1, 0);
  for (int i = 1; i <= p.m1; ++i) rook_row[static_cast<std::size_t>(p.cols[static_cast<std::size_t>(i - 1)])] = i;
  return weight_of(p.cols, rook_row, lambda, p.m1, p.m2, conv);
}

std::vector<QPoly> hit_numbers(const Partition& lambda, int m1, int m2, const WeightConvention& conv) {
  require_board(lambda, m1, m2);
  // counts[j][w]: placements with j rooks in lambda and weight w.
  std::vector<std::vector<long>> counts(static_cast<std::size_t>(m1) + 1);
  std::vector<int> cols(static_cast<std::size_t>(m1), 0);
  std::vector<int> rook_row(static_cast<std::size_t>(m2) + 1, 0);
  auto rec = [&](auto&& self, int row, int inside) -> void {
    if (row > m1) {
      const auto w = static_cast<std::size_t>(weight_of(cols, rook_row, lambda, m1, m2, conv));
      auto& bucket = counts[static_cast<std::size_t>(inside)];
      if (bucket.size() <= w) bucket.resize(w + 1, 0);
      ++bucket[w];
      return;
    }
    for (int c = 1; c <= m2; ++c) {
      if (rook_row[static_cast<std::size_t>(c)] != 0) continue;
      rook_row[static_cast<std::size_t>(c)] = row;
      cols[static_cast<std::size_t>(row - 1)] = c;
      self(self, row + 1, inside + (cell_in_lambda(lambda, m1, m2, row, c, conv.anchor) ? 1 : 0));
      rook_row[static_cast<std::size_t>(c)] = 0;
    }
  };
  rec(rec, 1, 0);
  std::vector<QPoly> out;
  for (const auto& bucket : counts) {
    std::vector<Integer> coeffs;
    for (long v : bucket) coeffs.emplace_back(v);
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

CheckReport hit_decompose_check(const Partition& lambda, int ell, int n, int s, OracleCache& oracle) {
  if (!rect_admissible(lambda, ell, n, s))
    throw std::invalid_argument("need 1 <= ell <= min(s, n-s) and lambda inside ell x (n-s)");
  CheckReport report;
  report.label = "lambda=" + lambda.to_string() + " ell=" + std::to_string(ell) + " n=" + std::to_string(n) +
                 " s=" + std::to_string(s);
  const auto h = hit_numbers(lambda, ell, n - s);
  const EExpansion lhs = oracle.get(lambda, n).scaled(qint_range(n - s, n - s - ell + 1));
  EExpansion rhs(n);
  for (int r = 0; r <= ell; ++r)
    if (!h[static_cast<std::size_t>(r)].is_zero())
      rhs += oracle.get(rectangle(r, n - s), n).scaled(h[static_cast<std::size_t>(r)]);
  report.mismatch = first_difference(lhs, rhs);
  report.pass = !report.mismatch;
  return report;
}

CheckReport f_equals_h_check(const Partition& lambda, int ell, int n, int s, const WeightConvention& conv) {
  if (!rect_admissible(lambda, ell, n, s))
    throw std::invalid_argument("need 1 <= ell <= min(s, n-s) and lambda inside ell x (n-s)");
  CheckReport report;
  report.label = "lambda=" + lambda.to_string() + " ell=" + std::to_string(ell) + " n=" + std::to_string(n) +
                 " s=" + std::to_string(s);
  const auto h = hit_numbers(lambda, ell, n - s, conv);
  for (int r = 0; r <= ell; ++r) {
    const QPoly f = big_f(lambda, ell, n, s, r);
    if (f != h[static_cast<std::size_t>(r)]) {
      report.pass = false;
      report.notes.push_back("r=" + std::to_string(r) + ": F=" + f.to_array_string() +
                             " H=" + h[static_cast<std::size_t>(r)].to_array_string());
    }
  }
  return report;
}

EExpansion abreu_nigro_expansion(const Partition& lambda, int ell, int n) {
  if (!abelian_admissible(lambda, ell, n))
    throw std::invalid_argument("need lambda inside ell x (n-ell) with ell <= n/2");
  const Partition shape = lambda.length() > lambda.largest() ? lambda.conjugate() : lambda;
  const int k = shape.length();
  EExpansion out(n);
  out.add_term(two_row(n, k), qfact(k) * hit_numbers(shape, n - k, n - k)[static_cast<std::size_t>(k)]);
  for (int r = 0; r < k; ++r) {
    const QPoly h = hit_numbers(shape, n - r - 1, n - r - 1)[static_cast<std::size_t>(r)];
    out.add_term(two_row(n, r), scale_power(qfact(r) * qint(n - 2 * r) * h, static_cast<std::size_t>(r)));
  }
  return out;
}

}  // namespace cqsym
