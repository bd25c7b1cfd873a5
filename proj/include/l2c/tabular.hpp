#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace l2c {

enum class Kind { Categorical, Continuous };
enum class Monotonic { None, NonDecreasing, NonIncreasing };
enum class Strategy { EqualFrequency, MdpEntropy, Cart, Manual, Mixed };

struct FeatureSpec {
    std::string name;
    Kind kind = Kind::Categorical;
    bool is_mutable = true;
    Monotonic monotonic = Monotonic::None;
    // Categorical: declared labels, in ordinal order. Discretized continuous:
    // interval labels, one per bucket, with the numeric edges kept alongside.
    std::vector<std::string> levels;
    std::vector<double> edges;
    double range_lo = 0.0, range_hi = 0.0;  // continuous only
    bool quasi_identifier = false;
    bool sensitive = false;
    double mutation_cost = 0.0;  // in [0,1]; ignored when immutable

    int level_count() const { return static_cast<int>(levels.size()); }
    bool discretized() const { return kind == Kind::Continuous && !levels.empty(); }
};

// Directional plausibility rule: when `parent` is perturbed upward, `child`
// may not move below its current level.
struct CorrelationRule {
    std::string parent;
    std::string child;
};

struct DatasetSchema {
    std::vector<FeatureSpec> features;
    std::string target_name;
    std::vector<CorrelationRule> correlations;

    int one_hot_dim() const;  // sum of level counts; requires every feature leveled
    int feature_index(const std::string& name) const;  // -1 when absent
};

// Rows hold level indices for categorical / discretized cells and raw reals
// for continuous cells. Labels are binary.
struct Dataset {
    DatasetSchema schema;
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;

    std::size_t size() const { return rows.size(); }
};

struct Discretizer {
    Strategy strategy = Strategy::EqualFrequency;
    std::map<std::string, std::vector<double>> per_feature_edges;
    int max_buckets = 4;
    int min_split_samples = 30;
};

DatasetSchema schema_from_json(const nlohmann::json& config);
nlohmann::json schema_to_json(const DatasetSchema& schema);
DatasetSchema load_schema(const std::string& schema_json_path);

// CSV must carry a header naming every schema feature plus the target column.
// Value errors report the offending row (header = row 1) and column.
Dataset load_csv(const std::string& csv_path, const std::string& schema_json_path);
Dataset load_csv(const std::string& csv_path, const DatasetSchema& schema);

// Quantile cut with linear interpolation; duplicate edges merged, so the
// result may have fewer than max_buckets buckets. Throws if the feature has
// fewer than two distinct values.
std::vector<double> fit_equal_frequency(const Dataset& data, const std::string& feature,
                                        int max_buckets);

// Recursive entropy minimization; a cut is kept only when information gain
// clears the MDL threshold. Degenerate labels give a single bucket.
std::vector<double> fit_mdp_entropy(const Dataset& data, const std::string& feature,
                                    const std::vector<int>& labels);

// Greedy entropy recursion; nodes smaller than min_split never split.
std::vector<double> fit_cart(const Dataset& data, const std::string& feature,
                             const std::vector<int>& labels, int min_split);

// User-supplied edges. Coverage is validated against declared feature ranges
// when the discretizer is applied.
Discretizer fit_manual_bins(const std::map<std::string, std::vector<double>>& edges_per_feature);

// Fits every continuous feature with the requested strategy. Mixed assigns
// each feature one of the four fitters, drawn deterministically from seed.
Discretizer fit_discretizer(const Dataset& data, Strategy strategy,
                            const std::vector<int>& labels,
                            const std::map<std::string, std::vector<double>>& manual_edges,
                            int max_buckets, int min_split, std::uint64_t seed = 0);

// Replaces continuous columns with bucket indices and rewrites the schema
// with interval levels. Intervals are (lo, hi], the first also closed at lo.
// Out-of-span values clamp to the edge buckets; *clamped counts them.
Dataset discretize(const Dataset& data, const Discretizer& disc, long* clamped = nullptr);

// One block per feature, single 1 per block.
std::vector<double> one_hot_encode(const std::vector<double>& row, const DatasetSchema& schema);

// Block offset of each feature in the one-hot layout, plus the total width.
std::vector<int> one_hot_offsets(const DatasetSchema& schema);

double bucket_midpoint(const FeatureSpec& feature, int level);

// Bucket of a raw value under the feature's fitted edges; out-of-span values
// clamp to the edge buckets.
int bucket_index(const FeatureSpec& feature, double value);

nlohmann::json discretizer_to_json(const Discretizer& disc);
Discretizer discretizer_from_json(const nlohmann::json& j);

std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

}  // namespace l2c
