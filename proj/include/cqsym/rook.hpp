#pragma once

// Rook placements on an m1 x m2 board, the lambda-weight statistic and the
// q-hit numbers it produces.
//
// Board picture: rows 1..m1 top to bottom, columns 1..m2 left to right, and
// lambda hugs the top-right corner (row i holds the last lambda_i columns).
// A cell without a rook counts toward the weight when
//   - the rook of its row is not to its left, and
//   - if the cell is in lambda, its column's rook is in lambda and below it;
//     otherwise the column's rook is in lambda or below it.
// A column without a rook satisfies the column conditions. This is the only
// orientation (up to mirror images) under which the hit numbers agree with
// the rectangular-lemma coefficients.

#include <vector>

#include "cqsym/eexpansion.hpp"
#include "cqsym/oracle.hpp"
#include "cqsym/partition.hpp"
#include "cqsym/qpoly.hpp"
#include "cqsym/rectlemma.hpp"

namespace cqsym {

struct RookPlacement {
  int m1 = 0;
  int m2 = 0;
  std::vector<int> cols;  // cols[i-1] = column (1-based) of the rook in row i

  /// Throws std::invalid_argument unless m1 <= m2 and cols is an injection
  /// into [m2] of length m1.
  void validate() const;
};

/// Orientation choices for reading the weight conditions. Used to calibrate;
/// library code uses the default.
struct WeightConvention {
  enum class Anchor { TopLeft, TopRight, BottomLeft, BottomRight };
  Anchor anchor = Anchor::TopRight;
  bool left_is_smaller_column = true;
  bool below_is_larger_row = true;
  bool rook_free_column_counts = true;

  std::string to_string() const;
  friend bool operator==(const WeightConvention&, const WeightConvention&) = default;
};

/// All 32 combinations of the four choices.
std::vector<WeightConvention> all_weight_conventions();

/// Whether (row, col), both 1-based, lies in lambda placed on the board.
bool cell_in_lambda(const Partition& lambda, int m1, int m2, int row, int col,
                    WeightConvention::Anchor anchor = WeightConvention::Anchor::TopRight);

int lambda_weight(const RookPlacement& p, const Partition& lambda, const WeightConvention& conv = {});

/// H_0..H_{m1}: sum of q^weight over placements with exactly j rooks in lambda.
std::vector<QPoly> hit_numbers(const Partition& lambda, int m1, int m2, const WeightConvention& conv = {});

/// [n-s]...[n-s-ell+1] X_lambda == sum_r H_r X_{(n-s)^r} on the ell x (n-s) board.
CheckReport hit_decompose_check(const Partition& lambda, int ell, int n, int s, OracleCache& oracle);
/// big_f(lambda, ell, n, s, r) == H_r for every r.
CheckReport f_equals_h_check(const Partition& lambda, int ell, int n, int s, const WeightConvention& conv = {});

/// [k]_q! H^{n-k}_k e_{n-k,k} + sum_{r<k} q^r [r]_q! [n-2r]_q H^{n-r-1}_r e_{n-r,r},
/// k = l(lambda), with square boards. lambda is replaced by its conjugate
/// when it has more rows than columns.
EExpansion abreu_nigro_expansion(const Partition& lambda, int ell, int n);

}  // namespace cqsym
