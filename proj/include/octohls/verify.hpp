#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace octohls {

enum class CheckKind {
    Abs,    // |value - reference| <= tolerance
    Rel,    // |value - reference| / |reference| <= tolerance
    RelOrAbs,  // either of the above, abs threshold 1e-8 for vanishing references
    AtMost,    // value <= reference + tolerance
    AtLeast,   // value >= reference - tolerance
    Below,     // value < reference - tolerance (strict)
    Above,     // value > reference + tolerance (strict)
};

struct CheckResult {
    std::string check;
    double lambda_or_alpha = 0.0;
    double value = 0.0;
    double reference = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    CheckKind kind = CheckKind::Rel;
};

CheckResult make_check(std::string name, double param, double value, double reference, double tolerance,
                       CheckKind kind);

struct VerifyConfig {
    std::uint64_t seed = 20240917;
    int nodes_theta = 256;
    int nodes_phi = 256;
    int jmax = 40;
    std::size_t mc_samples = 200000;
    std::optional<double> tolerance_override;  // replaces every check's tolerance
};

struct CriterionReport {
    int id = 0;
    std::string title;
    std::vector<CheckResult> checks;
    double seconds = 0.0;  // wall time; not serialized
    double budget_seconds = 0.0;
    bool pass() const;
};

constexpr int kCriterionCount = 12;

// Throws DomainError for an unknown id.
CriterionReport run_criterion(int id, const VerifyConfig& config = {});

// Monte-Carlo cross-checks of the spectral evaluators (id kCriterionCount + 1); pass within 4 sigma.
CriterionReport run_mc_crosschecks(const VerifyConfig& config = {});

// {"schema_version":1,"pass":..,"criteria":[{"id","title","pass","checks":[...]}]}; no timings,
// so output is reproducible for a fixed config.
std::string report_json(const std::vector<CriterionReport>& reports);
std::string report_csv(const std::vector<CriterionReport>& reports);

} // namespace octohls
