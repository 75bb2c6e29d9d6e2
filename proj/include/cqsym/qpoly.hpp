#pragma once

// Dense polynomials in one variable q with arbitrary-precision integer
// coefficients, plus the q-integers, q-factorials and q-multinomials that
// every coefficient formula in this library is built from.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cqsym {

using Integer = mpz_class;

/// Raised by exact_div when the quotient does not have integer coefficients.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A half-integer, stored as twice its value so centers like 5/2 stay exact.
struct HalfInt {
  long twice = 0;

  static constexpr HalfInt from_int(long v) { return HalfInt{2 * v}; }
  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
  std::string to_string() const;
};

/// Center of symmetry of a palindromic polynomial. The zero polynomial is
/// palindromic about every point and reports `any`.
struct Center {
  bool any = false;
  HalfInt value{};

  static Center any_center() { return Center{true, {}}; }
  static Center at(HalfInt v) { return Center{false, v}; }
  /// True when this center is compatible with `v` (always for `any`).
  bool admits(HalfInt v) const { return any || value == v; }
  friend bool operator==(const Center&, const Center&) = default;
};

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Integer> coeffs);
  QPoly(std::initializer_list<long> coeffs);
  static QPoly constant(const Integer& c);
  static QPoly monomial(std::size_t power, const Integer& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  /// Lowest power with a nonzero coefficient, or nullopt for zero.
  std::optional<std::size_t> valuation() const;
  /// Coefficient of q^i; zero past the end.
  Integer coeff(std::size_t i) const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer at_one() const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Canonical text: `[1,1,2,1,1]`, lowest degree first; `[]` for zero.
  std::string to_array_string() const;
  /// Human form: `1 + q + 2q^2 + q^3 + q^4`; `0` for zero.
  std::string to_pretty() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

QPoly add(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
/// Multiplies by q^k.
QPoly scale_power(const QPoly& a, std::size_t k);
/// Returns c with a = b * c. Throws InexactDivision if no such c exists
/// over the integers, std::domain_error if b is zero.
QPoly exact_div(const QPoly& a, const QPoly& b);

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0. Negative n throws.
QPoly qint(long n);
/// [n]_q! ; [0]_q! = 1. Negative n throws.
QPoly qfact(long n);
/// [sum]_q! / prod [part]_q!.
QPoly qmultinomial(std::span<const long> parts);
QPoly qmultinomial(std::initializer_list<long> parts);
/// [top]_q [top-1]_q ... [bottom]_q, the empty product 1 when top < bottom.
QPoly qint_range(long top, long bottom);

/// Center (v+d)/2 when the coefficients between the valuation v and the
/// degree d read the same both ways; `any` for the zero polynomial.
std::optional<Center> palindrome_center(const QPoly& p);
bool is_unimodal(const QPoly& p);
bool is_nonnegative(const QPoly& p);

}  // namespace cqsym
