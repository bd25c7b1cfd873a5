#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "l2c/autodiff.hpp"
#include "l2c/blackbox.hpp"
#include "l2c/tabular.hpp"

namespace l2c {

struct L2cConfig {
    int epochs = 200;
    double lr = 1e-4;
    double tau = 0.2;
    double alpha = 1e-4;
    int batch_size = 64;
    int mc_samples = 1;  // reparameterized draws per input per step
    int hidden_generator = 64;
    int hidden_selector = 64;
    double epsilon = 4.5399929762484854e-05;  // e^-10
    bool selector_enabled = true;
    std::uint64_t seed = 0;
};

// Generator G (two ReLU hidden layers, then per-feature logit blocks over the
// mutable features) and selector S (one ReLU hidden layer, then K gate
// logits). Hidden layers are Glorot-initialized, output layers start at zero
// so the untrained model proposes uniform perturbations and 0.5 gates.
struct L2cModel {
    DatasetSchema schema;  // discretized: every feature carries levels
    double tau = 0.2;
    double alpha = 1e-4;
    double epsilon = 4.5399929762484854e-05;
    bool selector_enabled = true;
    std::vector<int> mutable_features;  // schema indices in sampling order
    std::vector<Parameter> generator;   // w1,b1,w2,b2,w3,b3
    std::vector<Parameter> selector;    // w1,b1,w2,b2
    int input_dim = 0;
    int generator_width = 0;  // sum of mutable level counts

    int mutable_count() const { return static_cast<int>(mutable_features.size()); }
};

// Throws if the schema has non-leveled features, no mutable features, or a
// correlation cycle (parents must be sampleable before their children).
L2cModel make_l2c_model(const DatasetSchema& discretized_schema, const L2cConfig& config);

// Per mutable feature, softmax of that feature's generator block. No masking.
std::vector<Vec> perturbation_distribution(const L2cModel& model, const Vec& z);

// Cost-weighted gates: (1 - mutation_cost_i) * sigmoid(S_i(z)), one per
// mutable feature, in model.mutable_features order.
Vec selection_distribution(const L2cModel& model, const Vec& z);

// Multiplies the levels ruled out by the monotonic direction (below the
// current level for non-decreasing, above it for non-increasing) by epsilon
// and renormalizes. Identity when the feature is unconstrained or the
// restricted set is empty.
Vec apply_unary_mask(const Vec& p, const FeatureSpec& feature, int current_level,
                     double epsilon);

// When the parent moved up, the child may not move below its current level;
// otherwise the distribution is returned unchanged.
Vec apply_binary_mask(const Vec& p_child, const FeatureSpec& child, int child_level,
                      bool parent_moved_up, double epsilon);

// Blockwise (1-s_j) z_j + s_j z~_j on mutable blocks, immutable blocks copied
// verbatim. z_tilde and s are indexed per model.mutable_features; s may be
// relaxed (training) or hard 0/1 (inference).
Vec compose_counterfactual(const L2cModel& model, const Vec& z,
                           const std::vector<Vec>& z_tilde, const Vec& s);

// Eq-style decode to a dataset-convention row: categorical cells take the
// argmax of the composed block; continuous cells blend the original raw value
// with the z~-weighted bucket midpoints, so a hard s_j = 0 returns the
// original value exactly and a hard s_j = 1 snaps to the sampled midpoint.
std::vector<double> one_hot_decode(const L2cModel& model, const std::vector<Vec>& z_tilde,
                                   const Vec& s, const std::vector<double>& origin_raw_row);

// Joint training of G and S on the relaxed objective CE(f(x~), y') + alpha
// |pi|_1 with Adam. disc_data and raw_data must be row-aligned views of the
// same split; raw_data supplies original continuous values for the decode
// blend (pass disc_data again when the classifier is discretized-mode).
// Returns the mean loss per epoch.
std::vector<double> train_l2c(L2cModel& model, const Classifier& classifier,
                              const Dataset& disc_data, const Dataset& raw_data,
                              const L2cConfig& config);

struct CfSample {
    std::vector<int> levels;             // every feature, level index
    std::vector<double> row;             // decoded heterogeneous row
    std::vector<std::uint8_t> selected;  // per mutable feature
    int predicted_label = 0;
    bool valid = false;
};

struct CounterfactualSet {
    std::vector<double> origin_row;
    std::vector<int> origin_levels;
    int origin_label = 0;
    int target_label = 0;
    std::uint64_t generation_seed = 0;
    bool coverage = false;       // at least one valid draw
    long draws = 0;              // hard draws attempted
    long valid_draws = 0;        // draws that classified to the target
    long restricted_draws = 0;   // draws landing on a unary-restricted level
    double wall_seconds = 0.0;
    std::vector<CfSample> samples;  // the requested set: valid draws kept
};

// Rejection-samples hard draws (Gumbel argmax levels, Bernoulli gates) until
// num_samples valid counterfactuals are kept or the wall-clock budget runs
// out (checked every 32 draws). min_sparsity in [0,1] additionally requires
// kept samples to leave at least that fraction of features unchanged; pass a
// negative value to disable. Zero valid draws yield coverage = false.
CounterfactualSet generate(const L2cModel& model, const Classifier& classifier,
                           const std::vector<double>& raw_row, int num_samples,
                           double budget_seconds, double min_sparsity, std::uint64_t seed);

nlohmann::json l2c_to_json(const L2cModel& model);
L2cModel l2c_from_json(const nlohmann::json& j);
void save_l2c(const L2cModel& model, const std::string& path);
L2cModel load_l2c(const std::string& path);

// FNV-1a over the canonical schema JSON; checkpoints embed it so a model is
// never resumed against a different schema.
std::string schema_hash(const DatasetSchema& schema);

}  // namespace l2c
