#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spherical/rational.hpp"

namespace spherical::cli {

enum class Method { closed_form, character_oracle, module_oracle };

std::string_view method_name(Method m);
Method parse_method_name(std::string_view name);

/// One evaluated spherical function value.
struct ResultRecord {
    std::array<int, 3> n{};
    int k = 0;
    std::vector<int> cycle;
    Method method = Method::closed_form;
    Rational value;
    int multiplicity = 0;
    std::optional<bool> agreement;  // present iff at least two methods ran
};

nlohmann::ordered_json to_json(const ResultRecord& r);
ResultRecord record_from_json(const nlohmann::json& j);

std::string csv_header();
std::string to_csv(const ResultRecord& r);

/// Parses "a,b,c" into integers; throws InvalidInput on malformed input.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace spherical::cli
