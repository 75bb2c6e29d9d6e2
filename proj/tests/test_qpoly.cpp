#include <doctest.h>

#include <random>

#include "cqsym/qpoly.hpp"

using namespace cqsym;

TEST_CASE("q-integers and factorials") {
  CHECK(qint(3) == QPoly{1, 1, 1});
  CHECK(qint(0).is_zero());
  CHECK(qint(1) == QPoly{1});
  CHECK_THROWS_AS(qint(-1), std::domain_error);
  CHECK(qfact(0) == QPoly{1});
  CHECK(qfact(2) == QPoly{1, 1});
  CHECK(qfact(3) == QPoly{1, 2, 2, 1});
  CHECK_THROWS_AS(qfact(-2), std::domain_error);
}

TEST_CASE("q-multinomials") {
  CHECK(qmultinomial({2, 2}) == QPoly{1, 1, 2, 1, 1});
  CHECK(qmultinomial({2, 2}) == qint(3) * QPoly{1, 0, 1});
  CHECK(qmultinomial({1, 2}) == qint(3));
  for (long n = 0; n <= 6; ++n) CHECK(qmultinomial({n}) == QPoly{1});
  CHECK(qmultinomial({3, 0, 2}) == qmultinomial({3, 2}));
}

TEST_CASE("ring operations") {
  CHECK(add(QPoly{1, 1}, QPoly{0, 1}) == QPoly{1, 2});
  CHECK(mul(QPoly{1, 1}, QPoly{1, 1}) == QPoly{1, 2, 1});
  CHECK(scale_power(QPoly{1, 1}, 2) == QPoly{0, 0, 1, 1});
  CHECK(scale_power(QPoly{}, 3).is_zero());
  CHECK((QPoly{1, 1} - QPoly{1, 1}).is_zero());
  CHECK(QPoly{0, 0, 0} == QPoly{});
  CHECK_FALSE(QPoly{}.degree());
  CHECK(*QPoly{0, 2, 3}.degree() == 2);
  CHECK(*QPoly{0, 2, 3}.valuation() == 1);
}

TEST_CASE("exact division") {
  CHECK(exact_div(QPoly{1, 2, 1}, QPoly{1, 1}) == QPoly{1, 1});
  CHECK(exact_div(qint(6), qint(3)) == QPoly{1, 0, 0, 1});
  CHECK_THROWS_AS(exact_div(QPoly{1, 0, 1}, QPoly{1, 1}), InexactDivision);
  CHECK_THROWS_AS(exact_div(QPoly{1, 1}, QPoly{}), std::domain_error);
  CHECK_THROWS_AS(exact_div(QPoly{1}, QPoly{2}), InexactDivision);
  CHECK(exact_div(QPoly{2, 4}, QPoly{2}) == QPoly{1, 2});
  CHECK(exact_div(QPoly{}, QPoly{1, 1}).is_zero());
}

TEST_CASE("descending runs of q-integers") {
  CHECK(qint_range(4, 2) == qint(4) * qint(3) * qint(2));
  CHECK(qint_range(1, 3) == QPoly{1});
  CHECK(qint_range(5, 1) == qfact(5));
}

TEST_CASE("palindromic centers") {
  CHECK(palindrome_center(qint(5)) == Center::at(HalfInt::from_int(2)));
  const QPoly p = scale_power(qint(2) * qint(2) * qint(2), 1);
  REQUIRE(p == QPoly{0, 1, 3, 3, 1});
  CHECK(palindrome_center(p) == Center::at(HalfInt{5}));
  CHECK(palindrome_center(p)->value.to_string() == "5/2");
  CHECK_FALSE(palindrome_center(QPoly{1, 2}));
  CHECK(palindrome_center(QPoly{})->any);
  CHECK(palindrome_center(QPoly{})->admits(HalfInt{7}));
}

TEST_CASE("unimodal and nonnegative") {
  CHECK(is_unimodal(QPoly{1, 3, 2}));
  CHECK(is_nonnegative(QPoly{1, 3, 2}));
  CHECK_FALSE(is_unimodal(QPoly{1, 0, 1}));
  CHECK(is_nonnegative(QPoly{1, 0, 1}));
  CHECK_FALSE(is_nonnegative(QPoly{1, -1}));
  CHECK(is_unimodal(QPoly{}));
  CHECK(is_nonnegative(QPoly{}));
  CHECK(is_unimodal(scale_power(qint(3), 4)));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::uniform_int_distribution<int> len(0, 6);
  auto random_poly = [&] {
    std::vector<Integer> c(static_cast<std::size_t>(len(rng)));
    for (auto& x : c) x = coef(rng);
    return QPoly(std::move(c));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const QPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("telescoping q^a [b] = [a+b] - [a]") {
  for (long a = 0; a <= 30; ++a)
    for (long b = 0; b <= 30; ++b) CHECK(scale_power(qint(b), static_cast<std::size_t>(a)) == qint(a + b) - qint(a));
}

TEST_CASE("telescoping sum over partial sums, cleared of denominators") {
  // sum_i q^{s_{i-1}+1} [a_i] / ([s_{i-1}+1][s_i+1]) = 1 - 1/[a+1], s_i partial sums.
  std::vector<long> parts;
  auto check = [&] {
    std::vector<long> s{0};
    for (long x : parts) s.push_back(s.back() + x);
    QPoly cleared{1};
    for (long v : s) cleared *= qint(v + 1);
    QPoly lhs;
    for (std::size_t i = 1; i < s.size(); ++i) {
      const QPoly rest = exact_div(cleared, qint(s[i - 1] + 1) * qint(s[i] + 1));
      lhs += scale_power(qint(parts[i - 1]) * rest, static_cast<std::size_t>(s[i - 1] + 1));
    }
    const QPoly rhs = cleared - exact_div(cleared, qint(s.back() + 1));
    CHECK(lhs == rhs);
  };
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth > 0) check();
    if (depth == 4) return;
    for (long x = 0; x <= 4; ++x) {
      parts.push_back(x);
      self(self, depth + 1);
      parts.pop_back();
    }
  };
  rec(rec, 0);
}

TEST_CASE("[a+b+2] - [a+1] - [b+1] = (q-1)[a+1][b+1]") {
  const QPoly q_minus_one{-1, 1};
  for (long a = 0; a <= 8; ++a)
    for (long b = 0; b <= 8; ++b) {
      CHECK(qint(a + b + 2) - qint(a + 1) - qint(b + 1) == q_minus_one * qint(a + 1) * qint(b + 1));
      CHECK(qint(a + b + 2) - qint(a + 1) - qint(b + 1) ==
            scale_power(qint(b + 1), static_cast<std::size_t>(a + 1)) - qint(b + 1));
    }
}

TEST_CASE("products of palindromic polynomials add their centers") {
  const std::vector<QPoly> pals{qint(3), scale_power(qint(2), 2), qfact(4), QPoly{1, 0, 1}, scale_power(QPoly{2, 5, 2}, 1)};
  for (const auto& a : pals)
    for (const auto& b : pals) {
      auto ca = palindrome_center(a), cb = palindrome_center(b), cab = palindrome_center(a * b);
      REQUIRE(ca);
      REQUIRE(cb);
      REQUIRE(cab);
      CHECK(cab->value.twice == ca->value.twice + cb->value.twice);
    }
}

TEST_CASE("large coefficients stay exact") {
  const QPoly f = qfact(20);
  CHECK(f.at_one() == Integer("2432902008176640000"));
  CHECK(exact_div(qfact(30), qfact(29)) == qint(30));
}

TEST_CASE("text forms") {
  const QPoly p{1, 1, 2, 1, 1};
  CHECK(p.to_array_string() == "[1,1,2,1,1]");
  CHECK(p.to_pretty() == "1 + q + 2q^2 + q^3 + q^4");
  CHECK(QPoly{}.to_array_string() == "[]");
  CHECK(QPoly{}.to_pretty() == "0");
}
