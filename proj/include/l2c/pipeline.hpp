#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "l2c/blackbox.hpp"
#include "l2c/l2c_model.hpp"
#include "l2c/metrics.hpp"
#include "l2c/privacy.hpp"
#include "l2c/tabular.hpp"

namespace l2c {

// One experiment end to end. JSON keys equal the field names; any subset may
// be given and the rest keep these defaults. Unknown keys are rejected.
struct ExperimentConfig {
    std::string name = "experiment";
    std::string train_csv;
    std::string val_csv;   // optional
    std::string test_csv;  // optional; also the default generation input
    std::string schema_path;
    std::string output_dir = "out";

    std::string strategy = "equal_frequency";
    int max_buckets = 4;
    int min_split = 30;
    std::map<std::string, std::vector<double>> manual_edges;

    std::string classifier = "logistic";  // or "mlp"
    std::vector<int> hidden_dims;
    int classifier_epochs = 100;
    double classifier_lr = 0.1;
    bool classifier_on_levels = false;  // train f on the discretized one-hot space

    L2cConfig l2c;

    int num_samples = 100;
    double budget_seconds = 300.0;
    double min_sparsity = -1.0;  // fraction in [0,1]; negative disables the filter
    int max_inputs = -1;         // cap on generation rows; -1 takes every row
    std::vector<std::uint64_t> seeds{0};
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig load_config(const std::string& path);

// Artifact filenames under an output directory. Timing logs are the only
// files allowed to differ between identical reruns.
struct ArtifactPaths {
    std::string dir;

    std::string effective_config() const { return dir + "/effective_config.json"; }
    std::string discretizer() const { return dir + "/discretizer.json"; }
    std::string classifier() const { return dir + "/classifier.json"; }
    std::string accuracy() const { return dir + "/accuracy.json"; }
    std::string model(std::uint64_t seed) const;
    std::string loss_curve(std::uint64_t seed) const;
    std::string sets(std::uint64_t seed) const;
    std::string counterfactuals(std::uint64_t seed) const;
    std::string timing(std::uint64_t seed) const;
    std::string desiderata() const { return dir + "/desiderata.json"; }
    std::string desiderata_table() const { return dir + "/desiderata_table.txt"; }
    std::string privacy() const { return dir + "/privacy.json"; }
};

// Pipeline stages. Each loads its upstream artifacts from config.output_dir,
// throws with a human-readable message when they are missing or inconsistent,
// and writes deterministic outputs (wall-clock goes to the timing log only).
void cmd_discretize(const ExperimentConfig& config);
void cmd_train_blackbox(const ExperimentConfig& config);
void cmd_train_l2c(const ExperimentConfig& config);
void cmd_generate(const ExperimentConfig& config, const std::string& input_csv);
nlohmann::json cmd_evaluate(const ExperimentConfig& config);
nlohmann::json cmd_privacy_audit(const ExperimentConfig& config, const std::string& attack_csv);

// discretize -> train-blackbox -> train-l2c -> generate -> evaluate, with a
// privacy audit appended when attack_csv is nonempty. Returns the desiderata
// report. Generation inputs default to config.test_csv.
nlohmann::json run_pipeline(const ExperimentConfig& config, const std::string& input_csv = "",
                            const std::string& attack_csv = "");

// Counterfactual-set serialization used by the artifact files. Wall-clock is
// deliberately not stored so identical reruns produce identical bytes.
nlohmann::json set_to_json(const CounterfactualSet& set);
CounterfactualSet set_from_json(const nlohmann::json& j);

// Bundled loan benchmark: income ~ U(0,60) and savings ~ U(0,20000) decide
// the label through income/60 + savings/20000 > 1 with a margin of 0.06
// around the boundary; education (4 ordered levels, may only increase),
// channel (3 levels), and an immutable 2-level group tag ride along.
DatasetSchema synthetic_schema();
Dataset make_synthetic_dataset(int n, std::uint64_t seed);

// Rewrites data/synthetic: full/train/test CSVs (500 = 400 + 100 rows,
// seed 7) plus schema.json.
void write_synthetic_files(const std::string& dir);

// Dataset-convention CSV: level names for leveled features, shortest
// round-trip formatting for continuous values.
void write_dataset_csv(const Dataset& data, const std::string& path);

}  // namespace l2c
