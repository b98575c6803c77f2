#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plunet/experiments.hpp"
#include "plunet/numfmt.hpp"
#include "plunet/report.hpp"

namespace fs = std::filesystem;
using namespace plunet;

namespace {

struct CommonOpts {
    std::string task;
    std::vector<std::string> activations{"plu", "tanh", "relu"};
    long long steps = 0;  // 0 = task default
    double lr = 0.0;      // 0 = task default
    std::vector<std::size_t> dims;
    double alpha = 0.1;
    double c = 1.0;
    std::string out_dir = "results";
    bool plot = false;
};

void add_common_options(CLI::App* cmd, CommonOpts& o, bool with_plot) {
    cmd->add_option("--task", o.task, "target function")
        ->required()
        ->check(CLI::IsMember({"sine", "parametric", "paraboloid"}));
    cmd->add_option("--activations", o.activations,
                    "comma-separated activations to train (default plu,tanh,relu)")
        ->delimiter(',')
        ->check(CLI::IsMember({"plu", "tanh", "relu", "leaky_relu", "identity"}));
    cmd->add_option("--steps", o.steps, "training steps (default per task)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--lr", o.lr, "Adam learning rate (default 0.01)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--dims", o.dims, "layer dims, e.g. 1,3,3,1 (default per task)")
        ->delimiter(',');
    cmd->add_option("--alpha", o.alpha, "outer-segment slope for plu / leaky_relu")
        ->check([](const std::string& s) -> std::string {
            const double v = std::strtod(s.c_str(), nullptr);
            return (v > 0.0 && v < 1.0) ? "" : "alpha must lie in the open interval (0, 1)";
        });
    cmd->add_option("--c", o.c, "plu knee location")->check(CLI::PositiveNumber);
    cmd->add_option("--out", o.out_dir, "output directory (default results)");
    if (with_plot) {
        cmd->add_flag("--plot", o.plot, "also write an SVG loss plot");
    }
}

ExperimentConfig make_config(const CommonOpts& o, const std::string& act_name,
                             std::uint64_t seed) {
    const Activation act(act_kind_from_name(act_name), o.alpha, o.c);
    ExperimentConfig cfg = default_config(task_from_name(o.task), act);
    if (o.steps > 0) cfg.steps = o.steps;
    if (o.lr > 0.0) cfg.lr = o.lr;
    if (!o.dims.empty()) cfg.layer_dims = o.dims;
    cfg.seed = seed;
    return cfg;
}

std::string file_stem(const CommonOpts& o, const std::string& act, std::uint64_t seed) {
    return o.task + "_" + act + "_" + std::to_string(seed);
}

// Runs one experiment and writes its loss curve, prediction dump, and model.
ExperimentResult run_and_write(const CommonOpts& o, const std::string& act,
                               std::uint64_t seed) {
    const ExperimentConfig cfg = make_config(o, act, seed);
    ExperimentResult result = run_experiment(cfg);
    const fs::path dir(o.out_dir);
    const std::string stem = file_stem(o, act, seed);
    write_loss_csv(result.records, dir / (stem + "_loss.csv"));
    write_predictions_csv(result.model, evaluation_data(cfg), task_input_label(cfg.task),
                          dir / (stem + "_pred.csv"));
    save_mlp_file(result.model, dir / (stem + "_model.txt"));
    return result;
}

int cmd_run(const CommonOpts& o, std::uint64_t seed) {
    fs::create_directories(o.out_dir);
    std::vector<LossSeries> series;
    for (const std::string& act : o.activations) {
        ExperimentResult result = run_and_write(o, act, seed);
        std::cout << o.task << " " << act << " seed " << seed << ": final loss "
                  << result.records.back().loss << "\n";
        series.emplace_back(act, std::move(result.records));
    }
    if (o.plot) {
        emit_svg_plot(series, fs::path(o.out_dir) /
                                  (o.task + "_" + std::to_string(seed) + "_loss.svg"));
    }
    return 0;
}

int cmd_sweep(const CommonOpts& o, const std::vector<std::uint64_t>& seeds) {
    fs::create_directories(o.out_dir);
    const fs::path summary_path = fs::path(o.out_dir) / (o.task + "_sweep_summary.csv");
    std::ofstream summary(summary_path, std::ios::binary);
    if (!summary) throw IoError("cannot open '" + summary_path.string() + "' for writing");
    summary << "activation,seed,final_loss\n";
    for (const std::string& act : o.activations) {
        for (std::uint64_t seed : seeds) {
            ExperimentResult result = run_and_write(o, act, seed);
            const double final_loss = result.records.back().loss;
            summary << act << "," << seed << "," << format_g17(final_loss) << "\n";
            std::cout << o.task << " " << act << " seed " << seed << ": final loss "
                      << final_loss << "\n";
        }
    }
    summary.flush();
    if (!summary) throw IoError("failed writing '" + summary_path.string() + "'");
    std::cout << "summary written to " << summary_path.string() << "\n";
    return 0;
}

// Trains a small square plu network on a smooth R^3 -> R^3 warp, then checks
// that invert_mlp recovers the inputs of 100 fresh samples exactly.
int cmd_invert_demo(std::uint64_t seed) {
    Rng rng(seed);
    Mlp model = init_mlp({3, 3, 3, 3}, Activation::plu(), rng);
    AdamState opt = adam_init(model, 0.01);

    auto target = [](double x0, double x1, double x2, double* y) {
        y[0] = x0 + std::sin(x1);
        y[1] = x1 + std::sin(x2);
        y[2] = x2 + std::sin(x0);
    };

    constexpr std::size_t batch = 64;
    for (int step = 0; step < 512; ++step) {
        Matrix x(3, batch), y(3, batch);
        for (std::size_t j = 0; j < batch; ++j) {
            const double x0 = rng.uniform(-2.0, 2.0);
            const double x1 = rng.uniform(-2.0, 2.0);
            const double x2 = rng.uniform(-2.0, 2.0);
            x(0, j) = x0;
            x(1, j) = x1;
            x(2, j) = x2;
            double out[3];
            target(x0, x1, x2, out);
            for (std::size_t i = 0; i < 3; ++i) y(i, j) = out[i];
        }
        ForwardResult fwd = forward(model, x);
        MseResult mse = mse_loss(fwd.output, y);
        Gradients grads = backward(model, fwd.cache, mse.grad);
        adam_step(opt, model, grads);
    }

    Matrix x(3, 100);
    for (double& v : x.data()) v = rng.uniform(-2.0, 2.0);
    const Matrix y = forward(model, x).output;
    const Matrix x_rec = invert_mlp(model, y);
    const double err = max_abs(sub(x_rec, x));

    std::printf("max round-trip error over 100 samples: %.3g\n", err);
    if (!(err < 1e-8)) {
        std::cerr << "error: round-trip error exceeds 1e-8\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Train small dense networks on the benchmark regression tasks and compare\n"
                 "plu, tanh, relu, leaky_relu, and identity activations."};
    app.require_subcommand(1);

    CommonOpts run_opts;
    std::uint64_t run_seed = 1;
    CLI::App* run_cmd = app.add_subcommand("run", "train once per activation and write "
                                                  "loss, prediction, and model files");
    add_common_options(run_cmd, run_opts, /*with_plot=*/true);
    run_cmd->add_option("--seed", run_seed, "rng seed (default 1)");

    CommonOpts sweep_opts;
    std::vector<std::uint64_t> sweep_seeds;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "repeat run over a seed list and "
                                                      "summarize final losses");
    add_common_options(sweep_cmd, sweep_opts, /*with_plot=*/false);
    sweep_cmd->add_option("--seeds", sweep_seeds, "comma-separated seed list")
        ->required()
        ->delimiter(',');

    std::uint64_t demo_seed = 1;
    CLI::App* demo_cmd = app.add_subcommand("invert-demo", "train a square plu network and "
                                                           "report its inversion error");
    demo_cmd->add_option("--seed", demo_seed, "rng seed (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(run_cmd)) return cmd_run(run_opts, run_seed);
        if (app.got_subcommand(sweep_cmd)) return cmd_sweep(sweep_opts, sweep_seeds);
        if (app.got_subcommand(demo_cmd)) return cmd_invert_demo(demo_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
