#include "skewtab/json_io.hpp"

#include <json.hpp>

namespace skewtab {

using nlohmann::json;

std::string count_report_to_json(const CountReport& rep, long elapsed_ms) {
    json j;
    j["shape"] = rep.shape;
    j["method"] = rep.method;
    j["value"] = rep.value.get_str();
    if (rep.term_count) j["terms"] = rep.term_count->get_str();
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

CountReport count_report_from_json(const std::string& text) {
    json j = json::parse(text);
    CountReport rep;
    rep.shape = j.at("shape").get<std::string>();
    rep.method = j.at("method").get<std::string>();
    rep.value = Int(j.at("value").get<std::string>());
    if (j.contains("terms")) rep.term_count = Int(j.at("terms").get<std::string>());
    return rep;
}

std::string qlaurent_to_json(const QLaurent& p) {
    json j;
    j["minDeg"] = p.is_zero() ? 0 : p.min_degree();
    json coeffs = json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(c.get_str());
    j["coeffs"] = coeffs;
    return j.dump();
}

QLaurent qlaurent_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return QLaurent(j.at("minDeg").get<long>(), std::move(coeffs));
}

}  // namespace skewtab
