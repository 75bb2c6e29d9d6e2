#include "cqsym/qpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cqsym {

std::string HalfInt::to_string() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly QPoly::constant(const Integer& c) { return QPoly(std::vector<Integer>{c}); }

QPoly QPoly::monomial(std::size_t power, const Integer& c) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> QPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::optional<std::size_t> QPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return std::nullopt;
}

Integer QPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

Integer QPoly::at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string QPoly::to_array_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += coeffs_[i].get_str();
  }
  return s + "]";
}

std::string QPoly::to_pretty() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Integer c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Integer mag = abs(c);
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << 'q';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_pretty(); }

QPoly add(const QPoly& a, const QPoly& b) { return a + b; }
QPoly mul(const QPoly& a, const QPoly& b) { return a * b; }

QPoly scale_power(const QPoly& a, std::size_t k) {
  if (a.is_zero() || k == 0) return a;
  std::vector<Integer> v(k);
  v.insert(v.end(), a.coeffs().begin(), a.coeffs().end());
  return QPoly(std::move(v));
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by the zero polynomial");
  if (a.is_zero()) return {};
  const auto& bc = b.coeffs();
  std::vector<Integer> rem = a.coeffs();
  if (rem.size() < bc.size()) throw InexactDivision("exact_div: " + a.to_pretty() + " / " + b.to_pretty());
  const std::size_t qlen = rem.size() - bc.size() + 1;
  std::vector<Integer> quot(qlen);
  const Integer& lead = bc.back();
  for (std::size_t step = qlen; step-- > 0;) {
    Integer& top = rem[step + bc.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw InexactDivision("exact_div: " + a.to_pretty() + " / " + b.to_pretty());
    Integer c = top / lead;
    quot[step] = c;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[step + j] -= c * bc[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw InexactDivision("exact_div: " + a.to_pretty() + " / " + b.to_pretty());
  return QPoly(std::move(quot));
}

QPoly qint(long n) {
  if (n < 0) throw std::domain_error("qint: negative argument " + std::to_string(n));
  return QPoly(std::vector<Integer>(static_cast<std::size_t>(n), Integer(1)));
}

QPoly qfact(long n) {
  if (n < 0) throw std::domain_error("qfact: negative argument " + std::to_string(n));
  QPoly r{1};
  for (long k = 2; k <= n; ++k) r *= qint(k);
  return r;
}

QPoly qmultinomial(std::span<const long> parts) {
  long total = 0;
  QPoly denom{1};
  for (long p : parts) {
    if (p < 0) throw std::domain_error("qmultinomial: negative part");
    total += p;
    denom *= qfact(p);
  }
  return exact_div(qfact(total), denom);
}

QPoly qmultinomial(std::initializer_list<long> parts) {
  return qmultinomial(std::span<const long>(parts.begin(), parts.size()));
}

QPoly qint_range(long top, long bottom) {
  QPoly r{1};
  for (long k = bottom; k <= top; ++k) r *= qint(k);
  return r;
}

std::optional<Center> palindrome_center(const QPoly& p) {
  if (p.is_zero()) return Center::any_center();
  // Symmetry is about (lowest + highest power)/2, so q^k shifts the center.
  const auto& c = p.coeffs();
  const std::size_t lo = *p.valuation();
  const std::size_t hi = c.size() - 1;
  for (std::size_t i = lo, j = hi; i < j; ++i, --j)
    if (c[i] != c[j]) return std::nullopt;
  return Center::at(HalfInt{static_cast<long>(lo + hi)});
}

bool is_nonnegative(const QPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Integer& c) { return c >= 0; });
}

bool is_unimodal(const QPoly& p) {
  const auto& c = p.coeffs();
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

}  // namespace cqsym
