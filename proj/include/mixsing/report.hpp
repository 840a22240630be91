#pragma once

#include "mixsing/invariants.hpp"
#include "mixsing/mixed_poly.hpp"
#include "mixsing/nondegen.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace mixsing {

using Json = nlohmann::ordered_json;

// A refused stage: exit code 2 for preconditions, 3 for numeric non-convergence.
struct StageError {
    std::string stage;
    std::string message;
    int exit_code = 2;
};

Json to_json(const ProbeConfig& c);
Json to_json(const ProbeVerdict& v);
Json to_json(const CheckReport& r);
Json to_json(const TrackerResult& t);
Json to_json(const CurveInvariants& ci);
Json to_json(const ZetaFunction& z);

Json newton_report(const MixedPolynomial& f, const std::optional<IVec>& weight);
std::string plot_data_csv(const MixedPolynomial& f);
Json classification_report(const MixedPolynomial& f);
Json fan_report(const MixedPolynomial& f);
Json probe_report(const MixedPolynomial& f, CheckMode mode, const ProbeConfig& cfg, const std::optional<IVec>& weight);
Json lkn_report(const MixedPolynomial& f, int steps, std::uint64_t seed);
Json zeta_report(const MixedPolynomial& f, const InvariantOptions& opt);

struct AnalyzeResult {
    Json report;
    std::optional<StageError> error;
};
AnalyzeResult analyze(const std::string& input, const MixedPolynomial& f, const ProbeConfig& cfg,
                      const InvariantOptions& opt);

// Header shared by every command's output.
Json envelope(const std::string& command, const std::string& input, const MixedPolynomial& f);

}  // namespace mixsing
