#pragma once

#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace muckload::rl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class Activation { relu, tanh, linear };

std::string to_string(Activation a);
Activation activation_from_string(const std::string& name);

struct Layer {
    Matrix weight;  // out x in
    Vector bias;    // out
    Activation activation = Activation::linear;

    bool operator==(const Layer& o) const
    {
        return activation == o.activation && weight == o.weight && bias == o.bias;
    }
};

/// Fully connected network. Batches are column-major: one sample per column.
/// An optional side input (e.g. the critic's action) is appended to the
/// input of layer `side_layer`.
struct MlpParams {
    std::vector<Layer> layers;
    int side_layer = -1;
    int side_dim = 0;

    int input_dim() const;
    int output_dim() const;
    std::size_t parameter_count() const;
    bool operator==(const MlpParams&) const = default;
};

struct MlpSpec {
    int input_dim = 0;
    std::vector<int> hidden;
    int output_dim = 0;
    Activation hidden_activation = Activation::relu;
    Activation output_activation = Activation::linear;
    int side_layer = -1;
    int side_dim = 0;
    double final_layer_scale = 3e-3;
};

/// Uniform fan-in initialization; the last layer is drawn from +-final_layer_scale.
MlpParams make_mlp(const MlpSpec& spec, std::mt19937_64& rng);

struct ForwardCache {
    std::vector<Matrix> inputs;  // input of each layer, side input included
    std::vector<Matrix> pre;     // pre-activations
    Matrix output;
};

Matrix mlp_forward(const MlpParams& p, const Matrix& input, const Matrix* side = nullptr,
                   ForwardCache* cache = nullptr);
Vector mlp_forward(const MlpParams& p, const Vector& input, const Vector* side = nullptr);

struct Gradients {
    std::vector<Matrix> weight;
    std::vector<Vector> bias;
    Matrix input;
    Matrix side;

    void set_zero_like(const MlpParams& p);
};

struct BackwardOptions {
    bool parameters = true;
    bool input = true;
};

/// Reverse-mode gradients of sum(output .* upstream) with respect to every
/// parameter, the input and the side input.
Gradients mlp_backward(const MlpParams& p, const ForwardCache& cache, const Matrix& upstream,
                       BackwardOptions opts = {});
Gradients mlp_gradients(const MlpParams& p, const Matrix& input, const Matrix& upstream,
                        const Matrix* side = nullptr);

/// target <- tau * source + (1 - tau) * target
void soft_update(MlpParams& target, const MlpParams& source, double tau);

}  // namespace muckload::rl
