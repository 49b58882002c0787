#include "regrep/report.hpp"

namespace regrep {

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["parameters"] = parameters;
    j["passed"] = passed();
    j["failures"] = failures;
    j["details"] = details;
    j["elapsed"] = elapsed;
    return j;
}

void Report::absorb(const Report& sub) {
    for (auto f : sub.failures) {
        f["subcheck"] = sub.check;
        failures.push_back(std::move(f));
    }
    if (!details.contains("subchecks")) details["subchecks"] = nlohmann::json::array();
    details["subchecks"].push_back({{"check", sub.check},
                                    {"parameters", sub.parameters},
                                    {"passed", sub.passed()},
                                    {"failures", sub.failures.size()},
                                    {"elapsed", sub.elapsed}});
}

}  // namespace regrep
