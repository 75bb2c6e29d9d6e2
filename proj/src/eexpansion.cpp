#include "cqsym/eexpansion.hpp"

#include <set>
#include <stdexcept>

namespace cqsym {

QPoly EExpansion::coefficient(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? QPoly{} : it->second;
}

void EExpansion::add_term(const Partition& mu, const QPoly& c) {
  if (mu.size() != n_)
    throw std::invalid_argument("e_" + mu.to_string() + " has degree " + std::to_string(mu.size()) +
                                ", expected " + std::to_string(n_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EExpansion& EExpansion::operator+=(const EExpansion& rhs) {
  if (rhs.n_ != n_ && !rhs.terms_.empty()) {
    if (!terms_.empty()) throw std::invalid_argument("adding expansions of different degree");
    n_ = rhs.n_;
  }
  for (const auto& [mu, c] : rhs.terms_) add_term(mu, c);
  return *this;
}

EExpansion EExpansion::scaled(const QPoly& c) const {
  EExpansion out(n_);
  for (const auto& [mu, v] : terms_) out.add_term(mu, v * c);
  return out;
}

std::string EExpansion::to_pretty() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [mu, c] : terms_) {
    if (!s.empty()) s += "\n";
    s += "e_(" + mu.to_string() + "): " + c.to_pretty();
  }
  return s;
}

Partition two_row(int n, int r) {
  if (r < 0 || r > n - r) throw std::invalid_argument("two_row: need 0 <= r <= n - r");
  return Partition({n - r, r});
}

std::optional<EMismatch> first_difference(const EExpansion& lhs, const EExpansion& rhs) {
  std::set<Partition, ReverseLex> keys;
  for (const auto& [mu, c] : lhs.terms()) keys.insert(mu);
  for (const auto& [mu, c] : rhs.terms()) keys.insert(mu);
  for (const auto& mu : keys) {
    QPoly a = lhs.coefficient(mu), b = rhs.coefficient(mu);
    if (a != b) return EMismatch{mu, a, b};
  }
  return std::nullopt;
}

}  // namespace cqsym
