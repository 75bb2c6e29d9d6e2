#include "cqsym/nonabelian.hpp"

#include <stdexcept>

#include "cqsym/eexpansion.hpp"
#include "cqsym/rectlemma.hpp"

namespace cqsym {

namespace {

// Builds one display; any negative argument marks the whole display as not
// evaluable.
class Display {
 public:
  QPoly q(long k) {
    if (k < 0) {
      bad_ = true;
      return {};
    }
    return qint(k);
  }
  QPoly fact(long k) {
    if (k < 0) {
      bad_ = true;
      return {};
    }
    return qfact(k);
  }
  /// [top][top-1]...[bottom], 1 when top < bottom.
  QPoly run(long top, long bottom) {
    QPoly out{1};
    for (long k = bottom; k <= top; ++k) out *= q(k);
    return out;
  }
  QPoly shift(const QPoly& p, long e) {
    if (p.is_zero()) return {};
    if (e < 0) {
      bad_ = true;
      return {};
    }
    return scale_power(p, static_cast<std::size_t>(e));
  }
  std::optional<QPoly> result(const QPoly& p) const {
    if (bad_) return std::nullopt;
    return p;
  }

 private:
  bool bad_ = false;
};

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

bool HookFamily::constant_b() const {
  for (int x : b)
    if (x != b.front()) return false;
  return !b.empty();
}

Partition HookFamily::partition() const {
  std::vector<int> parts{i};
  for (int k = 1; k < ell; ++k) parts.push_back(a);
  parts.insert(parts.end(), b.begin(), b.end());
  return Partition(std::move(parts));
}

std::string HookFamily::to_string() const {
  std::string bs;
  for (int x : b) bs += (bs.empty() ? "" : ",") + std::to_string(x);
  return "i=" + std::to_string(i) + " a=" + std::to_string(a) + " ell=" + std::to_string(ell) + " b=(" + bs +
         ") n=" + std::to_string(n);
}

bool family_valid(const HookFamily& fam) {
  if (fam.ell < 2 || fam.a < 0 || fam.a > fam.n - fam.ell) return false;
  if (fam.i < fam.n - fam.ell || fam.i > fam.n - 1) return false;
  for (std::size_t k = 0; k < fam.b.size(); ++k) {
    if (fam.b[k] < 0 || fam.b[k] > fam.a) return false;
    if (k > 0 && fam.b[k] > fam.b[k - 1]) return false;
  }
  return fits_staircase(fam.partition(), fam.n);
}

bool in_general_regime(const HookFamily& fam) {
  return family_valid(fam) && fam.a <= fam.n - fam.ell - fam.p();
}

std::optional<QPoly> coeff_e_n11_hook(const HookFamily& fam) {
  require(fam.p() == 0 && family_valid(fam), "e_{n-1,1} hook form needs a valid family with p = 0");
  const long i = fam.i, a = fam.a, l = fam.ell, n = fam.n;
  Display d;
  const QPoly pre = d.run(n - 3 - a, n - l - a) * d.fact(n - l - 2);
  const QPoly sum = d.shift(d.q(n - 1 - i) * d.q(n - 1) * d.q(a) * d.q(l - 2), n - l - a) +
                    d.shift(d.q(i) * d.q(n - 2 - a) * d.q(n - l - 1), n - 1 - i);
  return d.result(pre * sum);
}

std::optional<QPoly> coeff_e_n22_hook(const HookFamily& fam) {
  require(fam.p() == 0 && family_valid(fam), "e_{n-2,2} hook form needs a valid family with p = 0");
  const long i = fam.i, a = fam.a, l = fam.ell, n = fam.n;
  Display d;
  const QPoly pre = d.q(n - 1 - i) * d.q(n - 4) * d.run(n - 4 - a, n - l - a) * d.fact(n - l - 3);
  const QPoly sum = d.shift(d.q(2) * d.q(a) * d.q(n - l - a) * d.q(n - l - 2), n - 2 - a) +
                    d.shift(d.q(l) * d.q(a) * d.q(a - 1) * d.q(l - 3), 2 * (n - l - a));
  return d.result(pre * sum);
}

std::optional<QPoly> coeff_e_n11_general(const HookFamily& fam) {
  require(fam.p() >= 1 && in_general_regime(fam), "e_{n-1,1} general form needs p >= 1 and a <= n-ell-p");
  const long i = fam.i, a = fam.a, l = fam.ell, n = fam.n, p = fam.p();
  std::vector<int> nu_parts{fam.a};
  nu_parts.insert(nu_parts.end(), fam.b.begin(), fam.b.end());
  const Partition nu(nu_parts);
  Display d;
  const QPoly pre = d.run(n - 3 - a, n - l - a) * d.fact(n - l - p - 2);
  QPoly first = d.q(i) * d.q(n - 2 - a) * d.q(n - l - p - 1);
  for (long j = 1; j <= p; ++j) first *= d.q(n - l - j - fam.b[static_cast<std::size_t>(j - 1)]);
  first = d.shift(first, n - 1 - i);
  QPoly second;
  for (int k = 1; k <= p + 1; ++k) {
    const int subset[] = {k};
    const QPoly f = f_poly(static_cast<int>(p + 1), n - l - 1, nu, subset);
    const long e = a - (p + 1 - k) - nu.part(static_cast<int>(p + 2 - k));
    second += d.shift(f * d.q(l + p - 1 - k), n - l - a + e);
  }
  second *= d.q(n - 1 - i) * d.q(n - 1);
  return d.result(pre * (first + second));
}

std::optional<QPoly> coeff_e_n11_constant_b(const HookFamily& fam) {
  require(fam.constant_b() && family_valid(fam), "constant-b form needs p >= 1 and a constant b-list");
  const long i = fam.i, a = fam.a, l = fam.ell, n = fam.n, p = fam.p(), b = fam.b.front();
  Display d;
  const QPoly pre = d.run(n - 3 - a, n - l - a) * d.fact(n - l - p - 2);
  const QPoly common = d.run(n - l - 2 - b, n - l - p - b);
  const QPoly t1 = d.shift(d.q(n - 1 - i) * d.q(n - 1) * d.q(a - b) * common * d.q(n - l - p - 1) * d.q(l - 2),
                           n - l - a);
  const QPoly t2 =
      d.shift(d.q(n - 1 - i) * d.q(n - 1) * d.q(b) * d.q(n - l - 1 - a) * common * d.q(l + p - 2), n - l - p - b);
  const QPoly t3 = d.shift(d.q(i) * d.q(n - 2 - a) * d.run(n - l - 1 - b, n - l - p - b) * d.q(n - l - p - 1),
                           n - 1 - i);
  return d.result(pre * (t1 + t2 + t3));
}

std::optional<QPoly> conjecture_e_n22(const HookFamily& fam) {
  require(fam.constant_b() && family_valid(fam), "conjectured form needs p >= 1 and a constant b-list");
  const long i = fam.i, a = fam.a, l = fam.ell, n = fam.n, p = fam.p(), b = fam.b.front();
  Display d;
  QPoly pre, sum;
  if (p >= 2) {
    pre = d.q(n - 1 - i) * d.q(n - 4) * d.run(n - 4 - a, n - l - a) * d.run(n - l - 3 - b, n - l - p - b) *
          d.fact(n - l - p - 3);
    sum = d.shift(d.q(2) * d.q(a - b) * d.q(n - l - a) * d.q(n - l - 2 - b) * d.q(n - l - p - 1) * d.q(n - l - p - 2),
                  n - 2 - a) +
          d.shift(d.q(2) * d.q(b) * d.q(n - l - 1 - a) * d.q(n - l - 2 - b) * d.q(n - l - p - a) * d.q(n - l - p - 2),
                  n - 2 - b) +
          d.shift(d.q(a - b) * d.q(a - b - 1) * d.q(n - l - p - 1) * d.q(n - l - p - 2) * d.q(l) * d.q(l - 3),
                  2 * (n - l - a)) +
          d.shift(d.q(2) * d.q(b) * d.q(a - b) * d.q(n - l - 1 - a) * d.q(n - l - p - 2) *
                      (d.q(l + p - 1) * d.q(l - 2) + d.shift(d.q(p - 2), l - 1)),
                  2 * n - 2 * l - a - b - p - 1) +
          d.shift(d.q(b) * d.q(b - 1) * d.q(n - l - 1 - a) * d.q(n - l - 2 - a) * d.q(l + p) * d.q(l + p - 3),
                  2 * (n - l - p - b));
  } else {
    pre = d.q(n - 1 - i) * d.q(n - 4) * d.run(n - 4 - a, n - l - a) * d.fact(n - l - 4);
    sum = d.shift(d.q(2) * d.q(a - b) * d.q(n - l - a) * d.q(n - l - 2) * d.q(n - l - 3), n - 2 - a) +
          d.shift(d.q(2) * d.q(b) * d.q(n - l - 1 - a) * d.q(n - l - 1 - a) * d.q(n - l - 3), n - 2 - b) +
          d.shift(d.q(a - b) * d.q(a - 1) * d.q(n - l - 3) * d.q(l) * d.q(l - 3), 2 * (n - l - a)) +
          d.shift(d.q(b) * d.q(a - 1) * d.q(n - l - 1 - a) * d.q(l + 1) * d.q(l - 2), 2 * n - 2 * l - a - b - 2);
  }
  return d.result(pre * sum);
}

QPoly oracle_two_row_coefficient(const HookFamily& fam, int r, OracleCache& oracle) {
  return oracle.get(fam.partition(), fam.n).coefficient(two_row(fam.n, r));
}

std::string to_string(ConjectureVerdict v) {
  switch (v) {
    case ConjectureVerdict::Match: return "match";
    case ConjectureVerdict::CounterexampleCandidate: return "counterexample-candidate";
    case ConjectureVerdict::NotEvaluable: return "not-evaluable";
  }
  return "?";
}

ConjectureReport conjecture_e_n22_check(const HookFamily& fam, OracleCache& oracle) {
  ConjectureReport rep;
  rep.family = fam;
  rep.predicted = conjecture_e_n22(fam);
  if (fam.n >= 4) rep.oracle = oracle_two_row_coefficient(fam, 2, oracle);
  if (!rep.predicted) rep.verdict = ConjectureVerdict::NotEvaluable;
  else rep.verdict = *rep.predicted == rep.oracle ? ConjectureVerdict::Match : ConjectureVerdict::CounterexampleCandidate;
  return rep;
}

std::vector<HookFamily> hook_families(int n) {
  std::vector<HookFamily> out;
  for (int ell = 2; ell <= n - 1; ++ell)
    for (int a = 0; a <= n - ell; ++a)
      for (int i = n - ell; i <= n - 1; ++i) {
        HookFamily fam{i, a, ell, {}, n};
        if (family_valid(fam)) out.push_back(std::move(fam));
      }
  return out;
}

std::vector<HookFamily> general_families(int n) {
  std::vector<HookFamily> out;
  for (int ell = 2; ell <= n - 1; ++ell)
    for (int p = 1; ell + p <= n - 1; ++p)
      for (int a = 0; a <= n - ell - p; ++a)
        for (int i = n - ell; i <= n - 1; ++i) {
          std::vector<int> b;
          auto rec = [&](auto&& self, int cap) -> void {
            if (static_cast<int>(b.size()) == p) {
              HookFamily fam{i, a, ell, b, n};
              if (in_general_regime(fam)) out.push_back(std::move(fam));
              return;
            }
            for (int x = cap; x >= 0; --x) {
              b.push_back(x);
              self(self, x);
              b.pop_back();
            }
          };
          rec(rec, a);
        }
  return out;
}

std::vector<HookFamily> constant_b_families(int n) {
  std::vector<HookFamily> out;
  for (int ell = 2; ell <= n - 1; ++ell)
    for (int p = 1; ell + p <= n - 1; ++p)
      for (int a = 0; a <= n - ell; ++a)
        for (int b = 0; b <= a; ++b)
          for (int i = n - ell; i <= n - 1; ++i) {
            HookFamily fam{i, a, ell, std::vector<int>(static_cast<std::size_t>(p), b), n};
            if (family_valid(fam)) out.push_back(std::move(fam));
          }
  return out;
}

}  // namespace cqsym
