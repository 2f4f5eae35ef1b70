#include "nilorb/report.hpp"

namespace nilorb {

nlohmann::ordered_json to_json(const CheckReport& report, bool include_elapsed) {
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    for (const auto& w : report.witnesses) {
        nlohmann::ordered_json input = nlohmann::ordered_json::object();
        for (const auto& [key, value] : w.fields) input[key] = value;
        witnesses.push_back({{"input", std::move(input)}});
    }
    nlohmann::ordered_json out{
        {"check", std::string(to_string(report.id))},
        {"params", {{"max_n", report.params.max_n}, {"a_offset", report.params.a_offset}}},
        {"instances", report.instances},
        {"failures", report.failures},
        {"witnesses", std::move(witnesses)},
    };
    if (include_elapsed) out["elapsed_ms"] = report.elapsed.count();
    return out;
}

}  // namespace nilorb
