#pragma once

// Coefficients expressing X_lambda, for lambda inside an ell x (n-s)
// rectangle, through the rectangles (n-s)^r, and the two-row e-expansion of
// abelian X_lambda built from the same pieces.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqsym/eexpansion.hpp"
#include "cqsym/oracle.hpp"
#include "cqsym/partition.hpp"
#include "cqsym/qpoly.hpp"

namespace cqsym {

using Subset = std::vector<int>;

/// r-subsets of {1..ell}, each sorted, in colexicographic order.
std::vector<Subset> subsets_colex(int ell, int r);

struct NestEdge {
  int lo;
  int hi;
  int length;
  friend bool operator==(const NestEdge&, const NestEdge&) = default;
};

/// Non-crossing edge diagram on {0..ell+1} attached to I, with nesting lengths.
struct NestGraph {
  int ell = 0;
  Subset subset;
  std::vector<NestEdge> edges;  // in construction order
};

/// Each a in I (increasing) joins the largest unused vertex below it in
/// {0} and the complement of I; 0 never gets used up. Unmatched complement
/// vertices join ell+1, and (0, ell+1) edges pad the count to ell.
NestGraph build_nest_graph(int ell, std::span<const int> subset);

/// lambda read with lambda_0 = m and zeros past its length.
class ExtendedShape {
 public:
  ExtendedShape(const Partition& lambda, long m) : lambda_(lambda), m_(m) {}
  long operator[](int j) const { return j == 0 ? m_ : lambda_.part(j); }

 private:
  Partition lambda_;
  long m_;
};

struct FProduct {
  QPoly value;
  /// Some factor had a negative argument; the product was set to 0.
  bool negative_factor = false;
};

/// prod over edges (b,a) of [lambda_{ell+1-a} - lambda_{ell+1-b} - len + 1]_q.
/// A factor with argument <= 0 makes the product 0.
FProduct f_product(int ell, long m, const Partition& lambda, std::span<const int> subset);
QPoly f_poly(int ell, long m, const Partition& lambda, std::span<const int> subset);

/// Recursive definition: the outer edge is removed and the blocks under it
/// are shuffled together.
QPoly c_inductive(const NestGraph& g);
/// [ell]_q! / prod [length]_q.
QPoly c_hook(const NestGraph& g);

/// r*width - sum (ell - r + i - a_i) - sum lambda_{ell - a_i + 1}.
long d_exp(const Partition& lambda, std::span<const int> subset, int ell, long width);

/// d_exp came out negative on a term whose product is nonzero.
class NegativeExponent : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct CoefficientTerm {
  Subset subset;
  long exponent;
  QPoly c;
  QPoly f;
  QPoly value;  // q^exponent * c * f
};

/// Nonzero summands q^d c_I f(ell, m, lambda, I) over I in C([ell], r), with d
/// computed at `width`.
std::vector<CoefficientTerm> coefficient_terms(const Partition& lambda, int ell, long m,
                                               long width, int r);

/// 1 <= ell <= min(s, n-s) and lambda inside ell x (n-s).
bool rect_admissible(const Partition& lambda, int ell, int n, int s);

std::vector<CoefficientTerm> big_f_terms(const Partition& lambda, int ell, int n, int s, int r);
QPoly big_f(const Partition& lambda, int ell, int n, int s, int r);
/// Common center (n-s)(ell+r)/2 - ell(ell+1)/4 - |lambda|/2 of the summands.
HalfInt big_f_center(const Partition& lambda, int ell, int n, int s, int r);

struct CheckReport {
  bool pass = true;
  std::string label;
  std::optional<EMismatch> mismatch;
  std::vector<std::string> notes;
};

/// [n-s]...[n-s-ell+1] X_lambda == sum_r big_f_r X_{(n-s)^r}, on oracle values.
CheckReport rect_decompose_check(const Partition& lambda, int ell, int n, int s, OracleCache& oracle);
/// Every nonzero summand of every big_f_r is palindromic about big_f_center.
CheckReport center_check(const Partition& lambda, int ell, int n, int s);

/// lambda inside ell x (n-ell) with 1 <= ell <= n/2.
bool abelian_admissible(const Partition& lambda, int ell, int n);
QPoly g_r(const Partition& lambda, int ell, int n, int r);
/// sum_r [n-2r]_q [n-r-ell-1]_q! [r]_q! g_r e_{n-r,r}; when n = 2 ell the
/// r = ell prefactor [0]_q [-1]_q! is read as its limit 1.
EExpansion e_expansion_abelian(const Partition& lambda, int ell, int n);

/// Moving one column of I left: for u not in I, u+1 in I (1 <= u < ell),
/// [2]_q c_I equals the sum over the neighbouring blocks of the shortest
/// edge enclosing (u, u+1). Returns both sides.
struct MoveIdentity {
  QPoly lhs;
  QPoly rhs;
};
MoveIdentity column_move_identity(int ell, std::span<const int> subset, int u);

/// Some j has lambda_{ell-j} = lambda_{ell-j+1}, j not in I, j+1 in I; f then
/// vanishes.
bool has_vanishing_pair(const Partition& lambda, int ell, std::span<const int> subset);

}  // namespace cqsym
