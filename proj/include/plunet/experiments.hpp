#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "plunet/network.hpp"
#include "plunet/optim.hpp"
#include "plunet/rng.hpp"

namespace plunet {

// The three regression targets:
//   sine        f(x) = sin(x) on [-2pi, 2pi], 50 fixed points, 1 -> 1
//   parametric  f(t) = [(cos(c1 t) - cos(c2 t))^3, (sin(c3 t) - sin(c4 t))^3], 1 -> 2
//   paraboloid  f(x, y) = x^2 - y^2 on U(-3, 3)^2 batches, 2 -> 1
enum class Task { kSine, kParametric, kParaboloid };

const char* task_name(Task task);
Task task_from_name(std::string_view name);

// Training pairs, column per sample.
struct Dataset {
    Matrix x;  // in_dim x n
    Matrix y;  // out_dim x n
};

struct ExperimentConfig {
    Task task;
    Activation activation;
    std::vector<std::size_t> layer_dims;
    long long steps = 0;
    double lr = 0.0;
    std::uint64_t seed = 1;
    std::size_t batch_size = 0;  // paraboloid only
    std::array<double, 4> parametric_c{1.0, 2.0, 2.0, 1.0};
    std::size_t sample_count = 0;
};

// Pre-update training loss at each step.
struct TrainRecord {
    long long step;  // 1-based
    double loss;
};

struct ExperimentResult {
    std::vector<TrainRecord> records;
    Mlp model;
};

// 50 linearly spaced points on [-2pi, 2pi] with y = sin(x); both endpoints
// are hit exactly.
Dataset gen_sine_data();

// n linearly spaced t in [t_lo, t_hi] inclusive, y from the parametric curve.
Dataset gen_parametric_data(const std::array<double, 4>& c, std::size_t n, double t_lo,
                            double t_hi);

// n points with both coordinates uniform in [-3, 3) and z = x^2 - y^2.
Dataset gen_paraboloid_batch(Rng& rng, std::size_t n);

// Baseline hyperparameters per task:
//   sine        dims [1,3,3,1], 2048 steps, lr 0.01, the fixed 50-point set
//   parametric  dims [1,5,5,5,5,2], 4096 steps, lr 0.01, c = [1,2,2,1],
//               200 points on one period [0, 2pi]
//   paraboloid  dims [2,3,3,1], 4096 steps, lr 0.01, batches of 100
ExperimentConfig default_config(Task task, const Activation& activation);

// Fully deterministic given the config: seeds the generator, initializes the
// model, and runs one Adam step per iteration. Sine and parametric train
// full-batch on their fixed dataset; paraboloid draws a fresh batch from the
// run's generator every step.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Where to evaluate a trained model for prediction dumps: the training set
// for sine and parametric, a fixed 25x25 grid over [-3, 3]^2 for paraboloid.
Dataset evaluation_data(const ExperimentConfig& cfg);

// Input column label for prediction dumps ("x" or "t").
const char* task_input_label(Task task);

}  // namespace plunet
