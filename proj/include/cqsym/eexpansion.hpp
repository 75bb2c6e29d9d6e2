#pragma once

#include <map>
#include <optional>
#include <string>

#include "cqsym/partition.hpp"
#include "cqsym/qpoly.hpp"

namespace cqsym {

/// A homogeneous symmetric function of degree n written in the elementary
/// basis: sum over mu of terms[mu] * e_mu. Zero coefficients are never stored.
class EExpansion {
 public:
  using Terms = std::map<Partition, QPoly, ReverseLex>;

  EExpansion() = default;
  explicit EExpansion(int n) : n_(n) {}

  int degree() const { return n_; }
  const Terms& terms() const { return terms_; }
  /// Zero polynomial when mu is absent.
  QPoly coefficient(const Partition& mu) const;
  /// Adds to the coefficient of e_mu; mu must be a partition of n.
  void add_term(const Partition& mu, const QPoly& c);

  EExpansion& operator+=(const EExpansion& rhs);
  EExpansion scaled(const QPoly& c) const;
  friend bool operator==(const EExpansion&, const EExpansion&) = default;

  std::string to_pretty() const;

 private:
  int n_ = 0;
  Terms terms_;
};

/// The two-row shape (n-r, r), dropping a zero second part.
Partition two_row(int n, int r);

/// First e-coefficient where two expansions disagree.
struct EMismatch {
  Partition mu;
  QPoly lhs;
  QPoly rhs;
};
std::optional<EMismatch> first_difference(const EExpansion& lhs, const EExpansion& rhs);

}  // namespace cqsym
