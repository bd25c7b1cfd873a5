#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "l2c/l2c_model.hpp"

namespace l2c {

// Per-input evaluation of one counterfactual set; all fields are percentages
// except the wall-clock time.
struct DesiderataReport {
    double validity = 0.0;
    double coverage = 0.0;
    double sparsity = 0.0;
    double diversity = 0.0;
    double harmonic_mean = 0.0;
    double unary = 100.0;
    double binary = 100.0;
    double inference_time_seconds = 0.0;
};

// 100 * (#valid / #samples) over the returned set. Throws on an empty set;
// uncovered inputs carry no sample-level metrics.
double validity_pct(const CounterfactualSet& set);

// 100 iff the generation run saw at least one valid draw.
double coverage_pct(const CounterfactualSet& set);

// Mean over all returned samples of the fraction of features whose level
// equals the origin's, x100. Immutable features count as unchanged, which
// gives the immutable-share sparsity floor.
double sparsity_pct(const CounterfactualSet& set, const DatasetSchema& schema);

// Mean normalized Hamming distance over unordered pairs of valid samples,
// x100. Denominator is all N features; fewer than two valid samples score 0.
double diversity_pct(const CounterfactualSet& set, const DatasetSchema& schema);

// 2DS/(D+S), or 0 when D+S = 0.
double harmonic_mean_pct(double diversity, double sparsity);

// Fraction of (sample, constrained mutable feature) pairs whose level moved
// in the allowed direction relative to the origin, x100. Vacuously 100 when
// the schema has no constrained mutable features.
double unary_rate_pct(const CounterfactualSet& set, const DatasetSchema& schema);

// Fraction of samples satisfying every correlation rule ("parent moved up ->
// child did not move down"), x100. Throws when a rule references an unknown
// feature; vacuously 100 without rules.
double binary_rate_pct(const CounterfactualSet& set, const DatasetSchema& schema);

// All of the above in one report; inference_time_seconds = set.wall_seconds.
// Throws on a set with no samples (check coverage first).
DesiderataReport evaluate_set(const CounterfactualSet& set, const DatasetSchema& schema);

// Unweighted mean per field; harmonic_mean recomputed from the aggregated
// sparsity and diversity rather than averaged.
DesiderataReport aggregate_reports(const std::vector<DesiderataReport>& reports);

nlohmann::json report_to_json(const DesiderataReport& report);
DesiderataReport report_from_json(const nlohmann::json& j);

// Aligned-column text table, one row per labelled report.
std::string report_table(const std::vector<std::pair<std::string, DesiderataReport>>& rows);

}  // namespace l2c
