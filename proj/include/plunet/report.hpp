#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "plunet/experiments.hpp"

namespace plunet {

// UTF-8, LF line endings, header "step,loss", losses at 17 significant
// digits so the file parses back to the exact recorded values.
void write_loss_csv(const std::vector<TrainRecord>& records, const std::filesystem::path& path);

// Header has one column group per dimension: inputs first (bare label for a
// single input, label_0, label_1, ... otherwise), then y_true, then y_pred.
void write_predictions_csv(const Mlp& model, const Dataset& data, const std::string& input_label,
                           const std::filesystem::path& path);

// Standalone SVG: one polyline per series on a log10 loss axis, with a
// legend and axis labels.
using LossSeries = std::pair<std::string, std::vector<TrainRecord>>;
void emit_svg_plot(const std::vector<LossSeries>& series, const std::filesystem::path& path);

void save_mlp_file(const Mlp& mlp, const std::filesystem::path& path);
Mlp load_mlp_file(const std::filesystem::path& path);

}  // namespace plunet
