#pragma once

// JSON forms: a QPoly is its coefficient array (lowest degree first), a
// Partition its parts array, and an EExpansion
// {"n":6,"terms":[{"mu":[4,2],"coeffs":[...]}, ...]} in reverse-lex order.
// Coefficients too large for a 64-bit integer are written as decimal strings.

#include <json.hpp>

#include "cqsym/eexpansion.hpp"
#include "cqsym/partition.hpp"
#include "cqsym/qpoly.hpp"

namespace cqsym {

void to_json(nlohmann::ordered_json& j, const QPoly& p);
void from_json(const nlohmann::ordered_json& j, QPoly& p);
void to_json(nlohmann::ordered_json& j, const Partition& p);
void from_json(const nlohmann::ordered_json& j, Partition& p);
void to_json(nlohmann::ordered_json& j, const EExpansion& e);
void from_json(const nlohmann::ordered_json& j, EExpansion& e);

}  // namespace cqsym
