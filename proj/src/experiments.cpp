#include "plunet/experiments.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace plunet {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) v[i] = lo + static_cast<double>(i) * step;
    v.back() = hi;  // pin the endpoint exactly
    return v;
}

std::size_t task_in_dim(Task task) { return task == Task::kParaboloid ? 2 : 1; }
std::size_t task_out_dim(Task task) { return task == Task::kParametric ? 2 : 1; }

void validate(const ExperimentConfig& cfg) {
    if (cfg.steps < 1) throw ConfigError("experiment needs steps >= 1");
    if (!(cfg.lr > 0.0)) throw ConfigError("experiment needs lr > 0");
    if (cfg.layer_dims.size() < 2) throw ConfigError("experiment needs at least two layer dims");
    if (cfg.layer_dims.front() != task_in_dim(cfg.task)) {
        throw ConfigError(std::string(task_name(cfg.task)) + " task takes " +
                          std::to_string(task_in_dim(cfg.task)) + " input(s), dims start with " +
                          std::to_string(cfg.layer_dims.front()));
    }
    if (cfg.layer_dims.back() != task_out_dim(cfg.task)) {
        throw ConfigError(std::string(task_name(cfg.task)) + " task emits " +
                          std::to_string(task_out_dim(cfg.task)) + " output(s), dims end with " +
                          std::to_string(cfg.layer_dims.back()));
    }
    switch (cfg.task) {
        case Task::kSine:
            if (cfg.sample_count != 50) {
                throw ConfigError("the sine task uses the fixed 50-point dataset");
            }
            break;
        case Task::kParametric:
            if (cfg.sample_count < 2) throw ConfigError("parametric task needs sample_count >= 2");
            break;
        case Task::kParaboloid:
            if (cfg.batch_size < 1) throw ConfigError("paraboloid task needs batch_size >= 1");
            break;
    }
}

}  // namespace

const char* task_name(Task task) {
    switch (task) {
        case Task::kSine: return "sine";
        case Task::kParametric: return "parametric";
        case Task::kParaboloid: return "paraboloid";
    }
    throw ConfigError("unknown task");
}

Task task_from_name(std::string_view name) {
    if (name == "sine") return Task::kSine;
    if (name == "parametric") return Task::kParametric;
    if (name == "paraboloid") return Task::kParaboloid;
    throw ConfigError("unknown task '" + std::string(name) + "'");
}

const char* task_input_label(Task task) {
    return task == Task::kParametric ? "t" : "x";
}

Dataset gen_sine_data() {
    const std::size_t n = 50;
    Dataset data{Matrix(1, n), Matrix(1, n)};
    const std::vector<double> xs = linspace(-kTwoPi, kTwoPi, n);
    for (std::size_t j = 0; j < n; ++j) {
        data.x(0, j) = xs[j];
        data.y(0, j) = std::sin(xs[j]);
    }
    return data;
}

Dataset gen_parametric_data(const std::array<double, 4>& c, std::size_t n, double t_lo,
                            double t_hi) {
    if (n < 2) throw ConfigError("gen_parametric_data needs n >= 2");
    if (!(t_lo < t_hi)) throw ConfigError("gen_parametric_data needs t_lo < t_hi");
    Dataset data{Matrix(1, n), Matrix(2, n)};
    const std::vector<double> ts = linspace(t_lo, t_hi, n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = ts[j];
        const double u = std::cos(c[0] * t) - std::cos(c[1] * t);
        const double w = std::sin(c[2] * t) - std::sin(c[3] * t);
        data.x(0, j) = t;
        data.y(0, j) = u * u * u;
        data.y(1, j) = w * w * w;
    }
    return data;
}

Dataset gen_paraboloid_batch(Rng& rng, std::size_t n) {
    if (n < 1) throw ConfigError("gen_paraboloid_batch needs n >= 1");
    Dataset data{Matrix(2, n), Matrix(1, n)};
    for (std::size_t j = 0; j < n; ++j) {
        const double x = rng.uniform(-3.0, 3.0);
        const double y = rng.uniform(-3.0, 3.0);
        data.x(0, j) = x;
        data.x(1, j) = y;
        data.y(0, j) = x * x - y * y;
    }
    return data;
}

ExperimentConfig default_config(Task task, const Activation& activation) {
    ExperimentConfig cfg{task, activation, {}, 0, 0.01, 1};
    switch (task) {
        case Task::kSine:
            cfg.layer_dims = {1, 3, 3, 1};
            cfg.steps = 2048;
            cfg.sample_count = 50;
            break;
        case Task::kParametric:
            cfg.layer_dims = {1, 5, 5, 5, 5, 2};
            cfg.steps = 4096;
            cfg.sample_count = 200;
            break;
        case Task::kParaboloid:
            cfg.layer_dims = {2, 3, 3, 1};
            cfg.steps = 4096;
            cfg.batch_size = 100;
            break;
    }
    return cfg;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);

    Rng rng(cfg.seed);
    Mlp model = init_mlp(cfg.layer_dims, cfg.activation, rng);
    AdamState opt = adam_init(model, cfg.lr);

    Dataset data;
    if (cfg.task == Task::kSine) {
        data = gen_sine_data();
    } else if (cfg.task == Task::kParametric) {
        data = gen_parametric_data(cfg.parametric_c, cfg.sample_count, 0.0, kTwoPi);
    }

    std::vector<TrainRecord> records;
    records.reserve(static_cast<std::size_t>(cfg.steps));
    for (long long step = 1; step <= cfg.steps; ++step) {
        if (cfg.task == Task::kParaboloid) {
            data = gen_paraboloid_batch(rng, cfg.batch_size);
        }
        ForwardResult fwd = forward(model, data.x);
        MseResult mse = mse_loss(fwd.output, data.y);
        records.push_back({step, mse.loss});
        Gradients grads = backward(model, fwd.cache, mse.grad);
        adam_step(opt, model, grads);
    }
    return {std::move(records), std::move(model)};
}

Dataset evaluation_data(const ExperimentConfig& cfg) {
    switch (cfg.task) {
        case Task::kSine:
            return gen_sine_data();
        case Task::kParametric:
            return gen_parametric_data(cfg.parametric_c, cfg.sample_count, 0.0, kTwoPi);
        case Task::kParaboloid: {
            const std::size_t side = 25;
            Dataset data{Matrix(2, side * side), Matrix(1, side * side)};
            const std::vector<double> ticks = linspace(-3.0, 3.0, side);
            std::size_t j = 0;
            for (double x : ticks) {
                for (double y : ticks) {
                    data.x(0, j) = x;
                    data.x(1, j) = y;
                    data.y(0, j) = x * x - y * y;
                    ++j;
                }
            }
            return data;
        }
    }
    throw ConfigError("unknown task");
}

}  // namespace plunet
