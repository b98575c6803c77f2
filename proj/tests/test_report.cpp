#include "plunet/report.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "plunet/rng.hpp"

using namespace plunet;
namespace fs = std::filesystem;

namespace {

fs::path out_dir() {
    const fs::path dir = fs::path("report_test_out");
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

// Independent of the writer: splits on the comma and uses strtol/strtod.
std::vector<TrainRecord> parse_loss_csv(const fs::path& path) {
    const std::vector<std::string> lines = lines_of(slurp(path));
    REQUIRE(!lines.empty());
    REQUIRE(lines[0] == "step,loss");
    std::vector<TrainRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t comma = lines[i].find(',');
        REQUIRE(comma != std::string::npos);
        records.push_back({std::strtoll(lines[i].c_str(), nullptr, 10),
                           std::strtod(lines[i].c_str() + comma + 1, nullptr)});
    }
    return records;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

TEST_CASE("loss csv layout") {
    const fs::path path = out_dir() / "loss_small.csv";
    write_loss_csv({{1, 0.25}, {2, 0.5}, {3, 0.125}}, path);
    const std::vector<std::string> lines = lines_of(slurp(path));
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "step,loss");
    CHECK(lines[1] == "1,0.25");
    CHECK(slurp(path).back() == '\n');
}

TEST_CASE("loss csv requires at least one record") {
    CHECK_THROWS_AS(write_loss_csv({}, out_dir() / "never.csv"), ConfigError);
}

TEST_CASE("loss csv round-trips every value exactly") {
    Rng rng(41);
    std::vector<TrainRecord> records;
    for (long long i = 1; i <= 300; ++i) {
        records.push_back({i, std::exp(rng.uniform(-30.0, 5.0))});
    }
    const fs::path path = out_dir() / "loss_roundtrip.csv";
    write_loss_csv(records, path);
    const std::vector<TrainRecord> parsed = parse_loss_csv(path);
    REQUIRE(parsed.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(parsed[i].step == records[i].step);
        CHECK(parsed[i].loss == records[i].loss);
    }
}

TEST_CASE("loss csv fails loudly on an unwritable path") {
    CHECK_THROWS_AS(write_loss_csv({{1, 0.5}}, "no_such_dir/loss.csv"), IoError);
}

TEST_CASE("prediction csv: single input and output columns") {
    // zero-weight identity model: prediction is the bias everywhere
    Mlp m{{}, Activation::identity()};
    m.layers.push_back({Matrix(1, 1), Matrix(1, 1, {0.75})});
    Dataset data{Matrix(1, 3, {0.0, 1.0, 2.0}), Matrix(1, 3, {5.0, 6.0, 7.0})};
    const fs::path path = out_dir() / "pred_1d.csv";
    write_predictions_csv(m, data, "x", path);
    const std::vector<std::string> lines = lines_of(slurp(path));
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "x,y_true,y_pred");
    CHECK(lines[1] == "0,5,0.75");
    CHECK(lines[2] == "1,6,0.75");
    CHECK(lines[3] == "2,7,0.75");
}

TEST_CASE("prediction csv: per-dimension column groups") {
    Rng rng(42);
    const Mlp m = init_mlp({1, 3, 2}, Activation::plu(), rng);
    Dataset data{Matrix(1, 4), Matrix(2, 4)};
    const fs::path path = out_dir() / "pred_2d.csv";
    write_predictions_csv(m, data, "t", path);
    const std::vector<std::string> lines = lines_of(slurp(path));
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "t,y_true_0,y_true_1,y_pred_0,y_pred_1");

    const Mlp wide = init_mlp({2, 3, 1}, Activation::plu(), rng);
    Dataset grid{Matrix(2, 4), Matrix(1, 4)};
    write_predictions_csv(wide, grid, "x", path);
    CHECK(lines_of(slurp(path))[0] == "x_0,x_1,y_true,y_pred");
}

TEST_CASE("prediction csv rejects model/dataset dimension mismatches") {
    Rng rng(43);
    const Mlp m = init_mlp({2, 3, 1}, Activation::plu(), rng);
    Dataset bad_in{Matrix(1, 4), Matrix(1, 4)};
    CHECK_THROWS_AS(write_predictions_csv(m, bad_in, "x", out_dir() / "never.csv"), ShapeError);
    Dataset bad_out{Matrix(2, 4), Matrix(2, 4)};
    CHECK_THROWS_AS(write_predictions_csv(m, bad_out, "x", out_dir() / "never.csv"), ShapeError);
}

TEST_CASE("svg plot structure") {
    std::vector<TrainRecord> curve;
    for (long long i = 1; i <= 2048; ++i) {
        curve.push_back({i, 1.0 / static_cast<double>(i)});
    }
    const fs::path path = out_dir() / "plot_one.svg";
    emit_svg_plot({{"plu", curve}}, path);
    const std::string svg = slurp(path);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count_occurrences(svg, "<polyline") == 1);
    CHECK(count_occurrences(svg, "</svg>") == 1);
    CHECK(count_occurrences(svg, ">step<") == 1);
    CHECK(count_occurrences(svg, ">mse<") == 1);

    const fs::path path3 = out_dir() / "plot_three.svg";
    emit_svg_plot({{"plu", curve}, {"tanh", curve}, {"relu", curve}}, path3);
    const std::string svg3 = slurp(path3);
    CHECK(count_occurrences(svg3, "<polyline") == 3);
    CHECK(count_occurrences(svg3, ">plu<") == 1);
    CHECK(count_occurrences(svg3, ">tanh<") == 1);
    CHECK(count_occurrences(svg3, ">relu<") == 1);
    // every opened tag is closed or self-closing
    CHECK(count_occurrences(svg3, "<") == count_occurrences(svg3, ">"));
}

TEST_CASE("svg plot requires data") {
    CHECK_THROWS_AS(emit_svg_plot({}, out_dir() / "never.svg"), ConfigError);
    CHECK_THROWS_AS(emit_svg_plot({{"plu", {}}}, out_dir() / "never.svg"), ConfigError);
}

TEST_CASE("svg plot survives zero losses") {
    emit_svg_plot({{"plu", {{1, 0.5}, {2, 0.0}}}}, out_dir() / "plot_zero.svg");
    const std::string svg = slurp(out_dir() / "plot_zero.svg");
    CHECK(count_occurrences(svg, "<polyline") == 1);
    CHECK(svg.find("nan") == std::string::npos);
    CHECK(svg.find("inf") == std::string::npos);
}

TEST_CASE("model file save/load round-trip") {
    Rng rng(44);
    const Mlp m = init_mlp({2, 3, 2}, Activation::leaky_relu(0.2), rng);
    const fs::path path = out_dir() / "model.txt";
    save_mlp_file(m, path);
    const Mlp loaded = load_mlp_file(path);
    std::ostringstream a, b;
    save_mlp(m, a);
    save_mlp(loaded, b);
    CHECK(a.str() == b.str());
    CHECK_THROWS_AS(load_mlp_file(out_dir() / "missing_model.txt"), IoError);
}
