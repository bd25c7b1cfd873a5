#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace l2c {

using Vec = std::vector<double>;

// Trainable tensor with Adam state. value/grad/adam_m/adam_v always share one shape.
struct Parameter {
    std::string name;
    int rows = 0;
    int cols = 1;  // 1 for bias vectors
    Vec value, grad, adam_m, adam_v;
    long step_count = 0;

    static Parameter matrix(std::string name, int rows, int cols);
    static Parameter vector(std::string name, int n);
    std::size_t size() const { return value.size(); }
};

// Glorot-uniform fill over fan_in = cols, fan_out = rows.
void glorot_init(Parameter& p, std::mt19937_64& rng);

// One Gumbel(0,1) draw: -log(-log u), u ~ U(0,1) bounded away from 0.
double gumbel_draw(std::mt19937_64& rng);

struct AdamConfig {
    double lr = 1e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

// Bias-corrected Adam update on each parameter; gradients are zeroed afterward.
void adam_step(const std::vector<Parameter*>& params, const AdamConfig& cfg);

// Reverse-mode tape. Nodes are appended in topological order; backward() walks
// the list in reverse and accumulates adjoints, flushing leaf adjoints into
// Parameter::grad. Probabilities are clamped to [1e-12, 1] before any log so
// the e^-10-masked levels produced by plausibility masking stay finite.
class Tape {
  public:
    using NodeId = int;

    Tape() = default;
    // Backward closures capture `this`; the tape must stay put.
    Tape(const Tape&) = delete;
    Tape& operator=(const Tape&) = delete;

    NodeId constant(Vec v);
    NodeId param(Parameter& p);  // cached: same Parameter yields the same leaf

    // y = Wx + b with W stored row-major (rows x cols), b length rows.
    NodeId dense(NodeId x, Parameter& w, Parameter& b);
    // Same affine map with frozen coefficients; only x receives gradient.
    NodeId dense_const(NodeId x, const Vec& w_row_major, const Vec& b);

    NodeId relu(NodeId x);
    NodeId sigmoid(NodeId x);
    NodeId log(NodeId x);       // input clamped to [1e-12, 1]
    NodeId logit_of(NodeId p);  // log p - log(1-p), both sides clamped
    NodeId add(NodeId a, NodeId b);
    NodeId sub(NodeId a, NodeId b);
    NodeId mul(NodeId a, NodeId b);  // elementwise
    NodeId scale(NodeId x, double c);
    NodeId add_const(NodeId x, double c);
    NodeId slice(NodeId x, int offset, int len);
    NodeId concat(const std::vector<NodeId>& parts);
    NodeId sum(NodeId x);                  // length-1 result
    NodeId dot_const(NodeId x, Vec w);     // length-1 result
    NodeId l1_norm(NodeId x);              // sum |x_i|, subgradient sign(x)

    // (1-s)*a + s*b with s a length-1 gate; gradient reaches a, b, and s.
    NodeId gate_blend(NodeId a, NodeId b, NodeId s);

    NodeId softmax(NodeId logits);
    // Independent softmax per feature block; block_sizes must cover the node.
    NodeId softmax_block(NodeId logits, const std::vector<int>& block_sizes);
    // q = p*mask / sum(p*mask); mask is constant, gradient flows through p.
    NodeId mask_renorm(NodeId probs, Vec mask);
    // softmax((log_probs + noise) / tau); noise constant, tau > 0.
    NodeId gumbel_softmax(NodeId log_probs, const Vec& noise, double tau);
    // Elementwise sigmoid((logit_pi + g1 - g0) / tau), tau > 0.
    NodeId binary_concrete(NodeId logit_pi, const Vec& g1, const Vec& g0, double tau);
    // -log p[target], p clamped below by 1e-12.
    NodeId cross_entropy(NodeId probs, int target);

    const Vec& value(NodeId id) const { return nodes_[id].val; }
    const Vec& grad(NodeId id) const { return nodes_[id].adj; }

    // Seeds the root adjoint with `seed` (1/batch for mean losses), then
    // accumulates every reachable adjoint and the bound Parameter grads.
    void backward(NodeId root, double seed = 1.0);

    std::size_t size() const { return nodes_.size(); }

  private:
    struct Node {
        Vec val;
        Vec adj;
        std::function<void()> back;  // empty for leaves without parameters
    };

    NodeId push(Vec val, std::function<void()> back = {});
    std::vector<Node> nodes_;
    std::vector<std::pair<const Parameter*, NodeId>> param_leaves_;
};

}  // namespace l2c
