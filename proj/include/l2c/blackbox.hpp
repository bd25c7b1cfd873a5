#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "l2c/autodiff.hpp"
#include "l2c/tabular.hpp"

namespace l2c {

enum class ClassifierKind { Logistic, Mlp };

// One block per schema feature. Leveled features (categoricals and discretized
// continuous) occupy one-hot blocks; raw continuous features occupy a single
// column standardized with the training-set mean and deviation.
struct LayoutBlock {
    std::string feature;
    int offset = 0;
    int width = 1;
    bool one_hot = false;
    double mean = 0.0;
    double stdev = 1.0;
};

struct InputLayout {
    std::vector<LayoutBlock> blocks;
    int dim = 0;

    const LayoutBlock& block_for(const std::string& feature) const;
};

InputLayout make_input_layout(const Dataset& train_data);

// Dataset-convention row (level indices / raw reals) -> design vector.
Vec encode_input(const InputLayout& layout, const DatasetSchema& schema,
                 const std::vector<double>& row);

struct Classifier {
    ClassifierKind kind = ClassifierKind::Logistic;
    InputLayout layout;
    std::vector<int> hidden_dims;  // empty for Logistic
    std::vector<Parameter> params;
    double train_accuracy = 0.0;
    double validation_accuracy = -1.0;  // set by callers that hold a split
};

// Logistic: full-batch gradient descent from zero weights (seed unused).
// Mlp: Glorot init, minibatch-64 Adam. Throws on labels outside {0,1}.
Classifier train_classifier(const Dataset& data, ClassifierKind kind,
                            const std::vector<int>& hidden_dims, int epochs, double lr,
                            std::uint64_t seed);

// (p0, p1) with p0 + p1 = 1; x must match layout.dim.
std::pair<double, double> predict_proba(const Classifier& model, const Vec& x);

// argmax of predict_proba; exact ties resolve to label 0.
int predict_label(const Classifier& model, const Vec& x);

double accuracy(const Classifier& model, const Dataset& data);
std::vector<int> predict_dataset(const Classifier& model, const Dataset& data);

// d CE(f(x), target) / dx, computed on a private tape.
Vec input_gradient(const Classifier& model, const Vec& x, int target_label);

// CE(f(x), target) appended to the caller's tape. The classifier's weights
// enter as constants, so only x (and whatever feeds it) receives gradient.
Tape::NodeId classifier_loss_node(const Classifier& model, Tape& tape, Tape::NodeId x,
                                  int target_label);

// Optimizer state is not persisted; a loaded model predicts identically but
// cannot resume training.
nlohmann::json parameter_to_json(const Parameter& p);
Parameter parameter_from_json(const nlohmann::json& j);
nlohmann::json classifier_to_json(const Classifier& model);
Classifier classifier_from_json(const nlohmann::json& j);
void save_classifier(const Classifier& model, const std::string& path);
Classifier load_classifier(const std::string& path);

}  // namespace l2c
