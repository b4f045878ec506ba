#include "smcstrict/json_io.hpp"

namespace smc {

nlohmann::ordered_json to_json(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["commutes"] = r.commutes;
    j["boundary"] = {{"source", to_text(r.source)}, {"target", to_text(r.target)}};
    j["path1_perm"] = r.path1_perm.map;
    j["path2_perm"] = r.path2_perm.map;
    return j;
}

nlohmann::ordered_json to_json(const SuiteReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["cases"] = r.cases;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : r.failures)
        j["failures"].push_back({{"case", f.case_label}, {"reproducer", f.reproducer}});
    if (r.seed)
        j["seed"] = *r.seed;
    else
        j["seed"] = nullptr;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

}  // namespace smc
