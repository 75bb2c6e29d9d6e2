#include "cqsym/json_io.hpp"

#include <stdexcept>

namespace cqsym {

void to_json(nlohmann::ordered_json& j, const QPoly& p) {
  j = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) {
    if (c.fits_slong_p()) j.push_back(c.get_si());
    else j.push_back(c.get_str());
  }
}

void from_json(const nlohmann::ordered_json& j, QPoly& p) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a coefficient array");
  std::vector<Integer> coeffs;
  for (const auto& v : j) {
    if (v.is_number_integer()) coeffs.emplace_back(v.get<long>());
    else if (v.is_string()) coeffs.emplace_back(v.get<std::string>());
    else throw std::invalid_argument("polynomial coefficient must be an integer");
  }
  p = QPoly(std::move(coeffs));
}

void to_json(nlohmann::ordered_json& j, const Partition& p) { j = p.parts(); }

void from_json(const nlohmann::ordered_json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

void to_json(nlohmann::ordered_json& j, const EExpansion& e) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [mu, c] : e.terms()) terms.push_back({{"mu", mu}, {"coeffs", c}});
  j = nlohmann::ordered_json{{"n", e.degree()}, {"terms", std::move(terms)}};
}

void from_json(const nlohmann::ordered_json& j, EExpansion& e) {
  EExpansion out(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) out.add_term(t.at("mu").get<Partition>(), t.at("coeffs").get<QPoly>());
  e = std::move(out);
}

}  // namespace cqsym
