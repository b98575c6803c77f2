#include "plunet/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "plunet/numfmt.hpp"

namespace plunet {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        if (ch == '&') out += "&amp;";
        else if (ch == '<') out += "&lt;";
        else if (ch == '>') out += "&gt;";
        else out += ch;
    }
    return out;
}

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e"};

}  // namespace

void write_loss_csv(const std::vector<TrainRecord>& records, const std::filesystem::path& path) {
    if (records.empty()) throw ConfigError("write_loss_csv: no records");
    std::ofstream out = open_for_write(path);
    out << "step,loss\n";
    for (const TrainRecord& r : records) {
        out << r.step << "," << format_g17(r.loss) << "\n";
    }
    finish_write(out, path);
}

void write_predictions_csv(const Mlp& model, const Dataset& data, const std::string& input_label,
                           const std::filesystem::path& path) {
    if (data.y.rows() != model.out_dim()) {
        throw ShapeError("write_predictions_csv: dataset has " + std::to_string(data.y.rows()) +
                         " output rows, model emits " + std::to_string(model.out_dim()));
    }
    const Matrix y_pred = forward(model, data.x).output;

    std::ofstream out = open_for_write(path);
    const std::size_t in_dim = data.x.rows();
    const std::size_t out_dim = data.y.rows();
    if (in_dim == 1) {
        out << input_label;
    } else {
        for (std::size_t i = 0; i < in_dim; ++i) {
            out << (i == 0 ? "" : ",") << input_label << "_" << i;
        }
    }
    auto emit_group = [&](const char* base) {
        if (out_dim == 1) {
            out << "," << base;
        } else {
            for (std::size_t i = 0; i < out_dim; ++i) out << "," << base << "_" << i;
        }
    };
    emit_group("y_true");
    emit_group("y_pred");
    out << "\n";

    for (std::size_t j = 0; j < data.x.cols(); ++j) {
        for (std::size_t i = 0; i < in_dim; ++i) {
            out << (i == 0 ? "" : ",") << format_g17(data.x(i, j));
        }
        for (std::size_t i = 0; i < out_dim; ++i) out << "," << format_g17(data.y(i, j));
        for (std::size_t i = 0; i < out_dim; ++i) out << "," << format_g17(y_pred(i, j));
        out << "\n";
    }
    finish_write(out, path);
}

void emit_svg_plot(const std::vector<LossSeries>& series, const std::filesystem::path& path) {
    if (series.empty() || std::all_of(series.begin(), series.end(),
                                      [](const LossSeries& s) { return s.second.empty(); })) {
        throw ConfigError("emit_svg_plot: no data to plot");
    }

    // Log-scale loss axis; the gaps between activations span orders of
    // magnitude. Zero losses are clamped to the smallest plottable decade.
    constexpr double kLossFloor = 1e-16;
    long long max_step = 1;
    double lo = 300.0, hi = -300.0;  // log10 bounds
    for (const LossSeries& s : series) {
        for (const TrainRecord& r : s.second) {
            max_step = std::max(max_step, r.step);
            const double lg = std::log10(std::max(r.loss, kLossFloor));
            lo = std::min(lo, lg);
            hi = std::max(hi, lg);
        }
    }
    double y_lo = std::floor(lo), y_hi = std::ceil(hi);
    if (y_hi <= y_lo) y_hi = y_lo + 1.0;

    constexpr double width = 960, height = 600;
    constexpr double ml = 80, mr = 170, mt = 30, mb = 60;
    const double plot_w = width - ml - mr, plot_h = height - mt - mb;
    auto sx = [&](double step) { return ml + (step - 1.0) / std::max<double>(max_step - 1, 1) * plot_w; };
    auto sy = [&](double lg) { return mt + (y_hi - lg) / (y_hi - y_lo) * plot_h; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    // axes
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << mt + plot_h << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt + plot_h << "\" x2=\"" << ml + plot_w
        << "\" y2=\"" << mt + plot_h << "\" stroke=\"black\"/>\n";

    const int decades = static_cast<int>(y_hi - y_lo);
    const int y_tick_step = decades > 8 ? 2 : 1;
    for (int d = static_cast<int>(y_lo); d <= static_cast<int>(y_hi); d += y_tick_step) {
        const double y = sy(d);
        svg << "<line x1=\"" << ml - 5 << "\" y1=\"" << coord(y) << "\" x2=\"" << ml
            << "\" y2=\"" << coord(y) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << ml - 10 << "\" y=\"" << coord(y + 4)
            << "\" text-anchor=\"end\" font-size=\"12\">1e" << d << "</text>\n";
    }
    for (int i = 0; i <= 4; ++i) {
        const double step = 1.0 + (max_step - 1.0) * i / 4.0;
        const double x = sx(step);
        svg << "<line x1=\"" << coord(x) << "\" y1=\"" << mt + plot_h << "\" x2=\"" << coord(x)
            << "\" y2=\"" << mt + plot_h + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << coord(x) << "\" y=\"" << mt + plot_h + 20
            << "\" text-anchor=\"middle\" font-size=\"12\">" << static_cast<long long>(step)
            << "</text>\n";
    }
    svg << "<text x=\"" << ml + plot_w / 2 << "\" y=\"" << height - 15
        << "\" text-anchor=\"middle\" font-size=\"14\">step</text>\n";
    svg << "<text x=\"20\" y=\"" << mt + plot_h / 2
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 "
        << mt + plot_h / 2 << ")\">mse</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        if (series[si].second.empty()) continue;
        const char* color = kPalette[si % std::size(kPalette)];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const TrainRecord& r : series[si].second) {
            svg << coord(sx(static_cast<double>(r.step))) << ","
                << coord(sy(std::log10(std::max(r.loss, kLossFloor)))) << " ";
        }
        svg << "\"/>\n";
        const double ly = mt + 20 + 22 * static_cast<double>(si);
        svg << "<line x1=\"" << ml + plot_w + 15 << "\" y1=\"" << coord(ly - 4) << "\" x2=\""
            << ml + plot_w + 45 << "\" y2=\"" << coord(ly - 4) << "\" stroke=\"" << color
            << "\" stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << ml + plot_w + 52 << "\" y=\"" << coord(ly)
            << "\" font-size=\"13\">" << xml_escape(series[si].first) << "</text>\n";
    }
    svg << "</svg>\n";

    std::ofstream out = open_for_write(path);
    out << svg.str();
    finish_write(out, path);
}

void save_mlp_file(const Mlp& mlp, const std::filesystem::path& path) {
    std::ofstream out = open_for_write(path);
    save_mlp(mlp, out);
    finish_write(out, path);
}

Mlp load_mlp_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return load_mlp(in);
}

}  // namespace plunet
