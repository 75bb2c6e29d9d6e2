#pragma once

// Ground truth for X_lambda(x,q): enumerate proper colorings of the
// incomparability graph, weight by q^asc, and change basis from monomial to
// elementary symmetric functions. Nothing here depends on the closed-form
// modules; they are checked against it.

#include <map>
#include <mutex>
#include <span>
#include <stdexcept>

#include "cqsym/eexpansion.hpp"
#include "cqsym/partition.hpp"
#include "cqsym/qpoly.hpp"

namespace cqsym {

class SymmetryViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using MonomialData = std::map<Partition, QPoly, ReverseLex>;

/// Sum of q^asc(k) over proper colorings k using color c exactly
/// composition[c-1] times. The composition may contain zeros and need not be
/// sorted; its sum must equal the vertex count.
QPoly monomial_coefficient(const IncGraph& g, std::span<const int> composition);
QPoly monomial_coefficient(const IncGraph& g, const Partition& mu);

/// Coefficients of e_mu in the monomial basis: entry nu counts 0-1 matrices
/// with row sums mu and column sums nu.
std::map<Partition, Integer, ReverseLex> e_in_m(const Partition& mu);

/// Solves sum_mu E[mu] e_mu = sum_nu mono[nu] m_nu. Partitions of n missing
/// from `mono` are read as zero.
EExpansion to_e_basis(const MonomialData& mono, int n);

/// X_lambda for P_lambda on [n]. `symmetry_checks` permuted compositions are
/// re-enumerated per partition; a disagreement throws SymmetryViolation.
EExpansion x_lambda_oracle(const Partition& lambda, int n, int symmetry_checks = 1);

/// Thread-safe memo over x_lambda_oracle for sweeps that revisit shapes.
class OracleCache {
 public:
  const EExpansion& get(const Partition& lambda, int n);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::pair<int, Partition>, EExpansion> cache_;
};

/// Palindromic center every e-coefficient of X_lambda shares:
/// (C(n,2) - |lambda|)/2.
HalfInt x_lambda_center(const Partition& lambda, int n);

}  // namespace cqsym
