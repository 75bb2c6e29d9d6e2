#include <doctest.h>

#include "cqsym/json_io.hpp"
#include "cqsym/oracle.hpp"

using namespace cqsym;
using nlohmann::ordered_json;

TEST_CASE("polynomials") {
  CHECK(ordered_json(QPoly{1, 1, 2, 1, 1}).dump() == "[1,1,2,1,1]");
  CHECK(ordered_json(QPoly{}).dump() == "[]");
  const QPoly big = QPoly::constant(Integer("123456789012345678901234567890"));
  CHECK(ordered_json(big).dump() == "[\"123456789012345678901234567890\"]");
  CHECK(ordered_json(big).get<QPoly>() == big);
  CHECK(ordered_json::parse("[0,\"-5\",3]").get<QPoly>() == QPoly{0, -5, 3});
  CHECK_THROWS_AS(ordered_json::parse("{}").get<QPoly>(), std::invalid_argument);
  CHECK_THROWS_AS(ordered_json::parse("[1.5]").get<QPoly>(), std::invalid_argument);
}

TEST_CASE("partitions") {
  CHECK(ordered_json(Partition({3, 1})).dump() == "[3,1]");
  CHECK(ordered_json(Partition{}).dump() == "[]");
  CHECK(ordered_json::parse("[2,2,0]").get<Partition>() == Partition({2, 2}));
}

TEST_CASE("expansions") {
  const EExpansion path = x_lambda_oracle(Partition({1}), 3);
  CHECK(ordered_json(path).dump() == R"({"n":3,"terms":[{"mu":[3],"coeffs":[1,1,1]},{"mu":[2,1],"coeffs":[0,1]}]})");
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_in_staircase(n)) {
      const EExpansion x = x_lambda_oracle(lambda, n);
      CHECK(ordered_json::parse(ordered_json(x).dump()).get<EExpansion>() == x);
    }
}
