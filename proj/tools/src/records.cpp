#include "sphfun/records.hpp"

#include <charconv>

#include "spherical/errors.hpp"

namespace spherical::cli {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::character_oracle: return "character_oracle";
        case Method::module_oracle: return "module_oracle";
    }
    return "unknown";
}

Method parse_method_name(std::string_view name) {
    if (name == "closed_form") return Method::closed_form;
    if (name == "character_oracle") return Method::character_oracle;
    if (name == "module_oracle") return Method::module_oracle;
    throw InvalidInput("unknown method '" + std::string(name) + "'");
}

nlohmann::ordered_json to_json(const ResultRecord& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["cycle"] = r.cycle;
    j["method"] = method_name(r.method);
    j["value"] = r.value.str();
    j["multiplicity"] = r.multiplicity;
    if (r.agreement) j["agreement"] = *r.agreement;
    return j;
}

ResultRecord record_from_json(const nlohmann::json& j) {
    ResultRecord r;
    r.n = j.at("n").get<std::array<int, 3>>();
    r.k = j.at("k").get<int>();
    r.cycle = j.at("cycle").get<std::vector<int>>();
    r.method = parse_method_name(j.at("method").get<std::string>());
    r.value = Rational::parse(j.at("value").get<std::string>());
    r.multiplicity = j.at("multiplicity").get<int>();
    if (j.contains("agreement")) r.agreement = j.at("agreement").get<bool>();
    return r;
}

std::string csv_header() { return "n1,n2,n3,k,cycle,method,value,multiplicity,agreement"; }

std::string to_csv(const ResultRecord& r) {
    std::string cycle;
    for (std::size_t i = 0; i < r.cycle.size(); ++i) {
        if (i) cycle += ",";
        cycle += std::to_string(r.cycle[i]);
    }
    std::string out = std::to_string(r.n[0]) + "," + std::to_string(r.n[1]) + "," + std::to_string(r.n[2]) + "," +
                      std::to_string(r.k) + ",\"" + cycle + "\"," + std::string(method_name(r.method)) + "," +
                      r.value.str() + "," + std::to_string(r.multiplicity) + ",";
    if (r.agreement) out += *r.agreement ? "true" : "false";
    return out;
}

std::vector<int> parse_int_list(std::string_view text) {
    const std::string original(text);
    std::vector<int> out;
    while (true) {
        auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw InvalidInput("malformed integer list '" + original + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace spherical::cli
