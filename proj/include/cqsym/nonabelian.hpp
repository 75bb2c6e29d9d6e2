#pragma once

// Closed forms for the e_{n-1,1} and e_{n-2,2} coefficients of X_lambda when
// lambda = (i, a^{ell-1}, b_1, ..., b_p) has a long first row, plus a checker
// for the conjectured e_{n-2,2} coefficient with constant b.
//
// A display is evaluated only when every q-integer and q-factorial argument
// in it is nonnegative (a descending run [x]...[y] with x < y is 1). Outside
// that range the functions return nullopt.

#include <optional>
#include <string>
#include <vector>

#include "cqsym/oracle.hpp"
#include "cqsym/partition.hpp"
#include "cqsym/qpoly.hpp"

namespace cqsym {

struct HookFamily {
  int i = 0;
  int a = 0;
  int ell = 2;
  std::vector<int> b;  // b_1 >= ... >= b_p, zeros allowed
  int n = 0;

  int p() const { return static_cast<int>(b.size()); }
  bool constant_b() const;
  Partition partition() const;
  std::string to_string() const;
};

/// ell >= 2, 0 <= a <= n-ell <= i <= n-1, b weakly decreasing with
/// b_1 <= a and the partition inside delta_n.
bool family_valid(const HookFamily& fam);
/// family_valid and a <= n-ell-p.
bool in_general_regime(const HookFamily& fam);

/// p = 0. Closed form for the e_{n-1,1} coefficient.
std::optional<QPoly> coeff_e_n11_hook(const HookFamily& fam);
/// p = 0. Closed form for the e_{n-2,2} coefficient.
std::optional<QPoly> coeff_e_n22_hook(const HookFamily& fam);
/// p >= 1, general regime. Uses f(p+1, n-ell-1, (a, b), {k}).
std::optional<QPoly> coeff_e_n11_general(const HookFamily& fam);
/// p >= 1, constant b. The three-term specialisation of the general form;
/// accepts any valid family so the regime a > n-ell-p can be probed.
std::optional<QPoly> coeff_e_n11_constant_b(const HookFamily& fam);
/// p >= 1, constant b. Conjectured e_{n-2,2} coefficient.
std::optional<QPoly> conjecture_e_n22(const HookFamily& fam);

/// The coefficient of e_{n-r,r} in the oracle value of fam.partition().
QPoly oracle_two_row_coefficient(const HookFamily& fam, int r, OracleCache& oracle);

enum class ConjectureVerdict { Match, CounterexampleCandidate, NotEvaluable };
std::string to_string(ConjectureVerdict v);

struct ConjectureReport {
  ConjectureVerdict verdict = ConjectureVerdict::NotEvaluable;
  HookFamily family;
  std::optional<QPoly> predicted;
  QPoly oracle;
};
ConjectureReport conjecture_e_n22_check(const HookFamily& fam, OracleCache& oracle);

/// p = 0 families for one n, ordered by (ell, a, i).
std::vector<HookFamily> hook_families(int n);
/// p >= 1 families in the general regime, every decreasing b-list.
std::vector<HookFamily> general_families(int n);
/// p >= 1 valid families with constant b (any a <= n-ell).
std::vector<HookFamily> constant_b_families(int n);

}  // namespace cqsym
