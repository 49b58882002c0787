#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace regrep {

/// Outcome of a verification sweep. Serializes as
/// {check, parameters, passed, failures: [...], details, elapsed}.
struct Report {
    std::string check;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<nlohmann::json> failures;
    nlohmann::json details = nlohmann::json::object();
    double elapsed = 0.0;  // seconds

    bool passed() const noexcept { return failures.empty(); }
    nlohmann::json to_json() const;

    /// Folds another report in as a sub-check; its failures are tagged with
    /// the sub-check name.
    void absorb(const Report& sub);
};

/// Measures wall time into a Report on destruction.
class ReportTimer {
   public:
    explicit ReportTimer(Report& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
    ~ReportTimer() {
        r_.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
    ReportTimer(const ReportTimer&) = delete;
    ReportTimer& operator=(const ReportTimer&) = delete;

   private:
    Report& r_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace regrep
