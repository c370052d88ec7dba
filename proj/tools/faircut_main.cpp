#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "faircut/dataset.hpp"
#include "faircut/forest.hpp"
#include "faircut/metrics.hpp"
#include "faircut/serialize.hpp"

namespace {

using faircut::ConfigError;
using faircut::DataError;
using faircut::ForestConfig;
using faircut::IoError;

struct ModelArgs {
    std::string preset = "fcf";
    std::optional<std::string> criterion;
    std::optional<std::string> col_select;
    std::optional<std::string> depth_formula;
    std::optional<std::size_t> trees;
    std::optional<std::size_t> sample_size;
    std::optional<std::size_t> ndim;
    std::optional<std::size_t> ntry;
    std::optional<std::size_t> max_depth;
    std::optional<double> gain_threshold;
    bool full_isolation = false;
    bool replacement = false;
    bool global_kurtosis = false;
    std::uint64_t seed = 1;
    std::size_t threads = 0;
};

void add_model_flags(CLI::App* cmd, ModelArgs& args) {
    cmd->add_option("--preset", args.preset,
                    "Hyperparameter preset: iforest|fcf|sciforest-like|custom")
        ->default_str("fcf");
    cmd->add_option("--criterion", args.criterion,
                    "Split threshold criterion: uniform|pooled|averaged");
    cmd->add_option("--col-select", args.col_select,
                    "Column selection policy: uniform|kurtosis|range");
    cmd->add_option("--trees", args.trees, "Number of trees");
    cmd->add_option("--sample-size", args.sample_size, "Rows sampled per tree");
    cmd->add_option("--ndim", args.ndim, "Columns combined per split");
    cmd->add_option("--ntry", args.ntry, "Candidate splits per node, best gain kept");
    auto* depth_opt = cmd->add_option("--max-depth", args.max_depth, "Tree depth cap");
    auto* gain_opt = cmd->add_option("--gain-threshold", args.gain_threshold,
                                     "Stop splitting below this gain, in [0,1)");
    auto* full_iso = cmd->add_flag("--full-isolation", args.full_isolation,
                                   "Split until single rows (no depth or gain stop)");
    full_iso->excludes(depth_opt);
    full_iso->excludes(gain_opt);
    cmd->add_option("--depth-formula", args.depth_formula,
                    "Expected-depth formula override: harmonic|averaged|pooled");
    cmd->add_flag("--replacement", args.replacement, "Sample rows with replacement");
    cmd->add_flag("--global-kurtosis", args.global_kurtosis,
                  "Kurtosis column weights from the full dataset, not per node");
    cmd->add_option("--seed", args.seed, "Base random seed");
    cmd->add_option("--threads", args.threads, "Worker threads (0 = all cores)");
}

ForestConfig build_config(const ModelArgs& args) {
    ForestConfig config = faircut::preset_config(args.preset);
    if (args.criterion) config.criterion = faircut::parse_criterion(*args.criterion);
    if (args.col_select) config.col_select = faircut::parse_selector(*args.col_select);
    if (args.trees) config.trees = *args.trees;
    if (args.sample_size) config.sample_size = *args.sample_size;
    if (args.ndim) config.ndim = *args.ndim;
    if (args.ntry) config.trials = *args.ntry;
    if (args.full_isolation) {
        config.termination = faircut::TerminationPolicy{};
    }
    if (args.max_depth) config.termination.max_depth = *args.max_depth;
    if (args.gain_threshold) config.termination.gain_threshold = *args.gain_threshold;
    if (args.depth_formula) {
        config.depth_formula = faircut::parse_depth_formula(*args.depth_formula);
    }
    config.sample_with_replacement = args.replacement;
    config.global_column_weights = args.global_kurtosis;
    config.base_seed = args.seed;
    config.threads = args.threads;
    return config;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double>(elapsed).count();
}

void warn_sample_clamp(const ForestConfig& requested, const faircut::ForestModel& model) {
    if (model.config.sample_size < requested.sample_size) {
        std::cerr << "warning: sample size " << requested.sample_size << " clamped to the "
                  << model.config.sample_size << " available rows\n";
    }
}

struct FitArgs {
    ModelArgs model;
    std::string data_path;
    std::string model_out;
    std::string label_col = "last";
};

void run_fit(const FitArgs& args) {
    const ForestConfig config = build_config(args.model);
    const faircut::LabeledDataset dataset = faircut::load_csv(args.data_path, args.label_col);
    const auto start = std::chrono::steady_clock::now();
    const faircut::ForestModel model = faircut::fit_forest(dataset.matrix, config);
    const double fit_seconds = seconds_since(start);
    warn_sample_clamp(config, model);
    faircut::save_model(model, args.model_out);
    std::cout << "trees: " << model.trees.size() << "\n"
              << "nodes: " << model.total_nodes() << "\n"
              << "q: " << model.q << "\n"
              << "seconds: " << fit_seconds << "\n"
              << "model: " << args.model_out << "\n";
}

struct ScoreArgs {
    std::string model_path;
    std::string data_path;
    std::string out_path;
    std::string label_col = "last";
    std::size_t threads = 0;
};

void run_score(const ScoreArgs& args) {
    const faircut::ForestModel model = faircut::load_model(args.model_path);
    const faircut::LabeledDataset dataset = faircut::load_csv(args.data_path, args.label_col);
    const auto start = std::chrono::steady_clock::now();
    const std::vector<double> scores =
        faircut::score_matrix(dataset.matrix, model, args.threads);
    faircut::write_scores_csv(scores, args.out_path);
    std::cout << "scored " << scores.size() << " rows in " << seconds_since(start)
              << " s: " << args.out_path << "\n";
}

struct BenchArgs {
    ModelArgs model;
    std::string data_path;
    std::string label_col = "last";
    std::size_t runs = 10;
    std::string json_out;
};

nlohmann::json config_json(const ForestConfig& config) {
    nlohmann::json obj;
    obj["criterion"] = faircut::criterion_name(config.criterion);
    obj["col_select"] = faircut::selector_name(config.col_select);
    obj["trees"] = config.trees;
    obj["sample_size"] = config.sample_size;
    obj["ndim"] = config.ndim;
    obj["ntry"] = config.trials;
    obj["max_depth"] = config.termination.max_depth
                           ? nlohmann::json(*config.termination.max_depth)
                           : nlohmann::json(nullptr);
    obj["gain_threshold"] = config.termination.gain_threshold
                                ? nlohmann::json(*config.termination.gain_threshold)
                                : nlohmann::json(nullptr);
    obj["depth_formula"] =
        faircut::depth_formula_name(faircut::resolved_depth_formula(config));
    obj["replacement"] = config.sample_with_replacement;
    obj["global_column_weights"] = config.global_column_weights;
    return obj;
}

void run_bench(const BenchArgs& args) {
    if (args.runs == 0) throw ConfigError("runs must be >= 1");
    const faircut::LabeledDataset dataset = faircut::load_csv(args.data_path, args.label_col);
    if (!dataset.both_classes_present()) {
        throw DataError("benchmark needs both label classes present");
    }
    ForestConfig config = build_config(args.model);

    std::size_t n_pos = 0;
    for (int label : dataset.labels) n_pos += label == 1;
    const double outlier_pct =
        100.0 * static_cast<double>(n_pos) / static_cast<double>(dataset.labels.size());
    std::cout << "dataset: " << dataset.name << " (" << dataset.matrix.rows() << " rows, "
              << dataset.matrix.cols() << " cols, " << std::fixed << std::setprecision(1)
              << outlier_pct << "% outliers)\n";
    std::cout << "model: " << args.model.preset << "\n";
    std::cout << "seed      auroc    aupr     seconds\n" << std::setprecision(4);

    nlohmann::json runs_json = nlohmann::json::array();
    double sum_auroc = 0.0, sum_aupr = 0.0, sum_seconds = 0.0;
    bool clamp_warned = false;
    for (std::size_t r = 0; r < args.runs; ++r) {
        config.base_seed = args.model.seed + r;
        const auto start = std::chrono::steady_clock::now();
        const faircut::ForestModel model = faircut::fit_forest(dataset.matrix, config);
        const std::vector<double> scores =
            faircut::score_matrix(dataset.matrix, model, config.threads);
        const double seconds = seconds_since(start);
        if (!clamp_warned) {
            warn_sample_clamp(config, model);
            clamp_warned = true;
        }
        const double roc = faircut::auroc(scores, dataset.labels);
        const double pr = faircut::aupr(scores, dataset.labels);
        sum_auroc += roc;
        sum_aupr += pr;
        sum_seconds += seconds;
        std::cout << std::left << std::setw(10) << config.base_seed << std::setw(9) << roc
                  << std::setw(9) << pr << std::setprecision(3) << seconds
                  << std::setprecision(4) << "\n";
        runs_json.push_back({{"seed", config.base_seed},
                             {"auroc", roc},
                             {"aupr", pr},
                             {"seconds", seconds}});
    }
    const auto runs_d = static_cast<double>(args.runs);
    const double mean_auroc = sum_auroc / runs_d;
    const double mean_aupr = sum_aupr / runs_d;
    const double mean_seconds = sum_seconds / runs_d;
    std::cout << std::left << std::setw(10) << "mean" << std::setw(9) << mean_auroc
              << std::setw(9) << mean_aupr << std::setprecision(3) << mean_seconds
              << "\n";

    if (!args.json_out.empty()) {
        nlohmann::json doc;
        doc["dataset"] = dataset.name;
        doc["model"] = args.model.preset;
        doc["config"] = config_json(config);
        doc["base_seed"] = args.model.seed;
        doc["runs"] = std::move(runs_json);
        doc["mean"] = {{"auroc", mean_auroc}, {"aupr", mean_aupr}, {"seconds", mean_seconds}};
        std::ofstream out(args.json_out);
        if (!out) throw IoError("cannot write '" + args.json_out + "'");
        out << doc.dump(2) << "\n";
        if (!out) throw IoError("failed while writing '" + args.json_out + "'");
    }
}

struct SynthArgs {
    std::string kind = "bimodal";
    std::string out_path;
    std::size_t count = 1000;
    std::size_t dim = 2;
    double sdev = 1.0;
    double separation = 10.0;
    std::vector<std::string> outlier_specs;
    std::uint64_t seed = 1;
};

std::vector<double> parse_point(const std::string& text, std::size_t dim) {
    std::vector<double> point;
    std::stringstream stream(text);
    std::string cell;
    while (std::getline(stream, cell, ',')) {
        try {
            point.push_back(std::stod(cell));
        } catch (const std::exception&) {
            throw ConfigError("invalid outlier coordinate '" + cell + "'");
        }
    }
    if (point.size() != dim) {
        throw ConfigError("outlier '" + text + "' needs " + std::to_string(dim) +
                          " coordinates");
    }
    return point;
}

void run_synth(const SynthArgs& args) {
    faircut::SyntheticSpec spec;
    spec.seed = args.seed;
    if (args.kind == "bimodal") {
        const std::vector<double> first(args.dim, 0.0);
        const std::vector<double> second(args.dim, args.separation);
        spec.clusters.push_back({first, args.sdev, args.count / 2});
        spec.clusters.push_back({second, args.sdev, args.count - args.count / 2});
    } else if (args.kind == "blob") {
        spec.clusters.push_back({std::vector<double>(args.dim, 0.0), args.sdev, args.count});
        if (args.outlier_specs.empty()) {
            std::vector<double> outlier(args.dim, 0.0);
            outlier[0] = 10.0 * args.sdev;
            spec.planted_outliers.push_back(std::move(outlier));
        }
    } else {
        throw ConfigError("unknown synthetic kind '" + args.kind + "' (bimodal|blob)");
    }
    for (const auto& text : args.outlier_specs) {
        spec.planted_outliers.push_back(parse_point(text, args.dim));
    }
    const faircut::LabeledDataset dataset = faircut::gen_synthetic(spec);
    faircut::write_csv(dataset, args.out_path);
    std::cout << "wrote " << dataset.matrix.rows() << " rows to " << args.out_path << "\n";
}

struct GridArgs {
    std::string model_path;
    std::string out_path;
    faircut::GridBounds bounds{};
    std::size_t resolution = 100;
};

void run_grid(const GridArgs& args) {
    const faircut::ForestModel model = faircut::load_model(args.model_path);
    const faircut::ScoreGrid grid =
        faircut::score_grid(model, args.bounds, args.resolution);
    faircut::write_grid_csv(grid, args.out_path);
    std::cout << "wrote " << grid.score.size() << " grid scores to " << args.out_path
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Isolation-forest anomaly detection with guided splits"};
    app.require_subcommand(1);

    FitArgs fit_args;
    auto* fit = app.add_subcommand("fit", "Fit a forest and save the model");
    fit->add_option("--data", fit_args.data_path, "Training CSV")->required();
    fit->add_option("--model-out", fit_args.model_out, "Model file to write")->required();
    fit->add_option("--label-col", fit_args.label_col, "Label column name, or 'last'");
    add_model_flags(fit, fit_args.model);
    fit->callback([&] { run_fit(fit_args); });

    ScoreArgs score_args;
    auto* score = app.add_subcommand("score", "Score rows with a saved model");
    score->add_option("--model", score_args.model_path, "Model file")->required();
    score->add_option("--data", score_args.data_path, "CSV to score")->required();
    score->add_option("--out", score_args.out_path, "Score CSV to write")->required();
    score->add_option("--label-col", score_args.label_col, "Label column name, or 'last'");
    score->add_option("--threads", score_args.threads, "Worker threads (0 = all cores)");
    score->callback([&] { run_score(score_args); });

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Fit and score across seeds, report metrics");
    bench->add_option("--data", bench_args.data_path, "Labeled CSV")->required();
    bench->add_option("--label-col", bench_args.label_col, "Label column name, or 'last'");
    bench->add_option("--runs", bench_args.runs, "Seeds to aggregate over");
    bench->add_option("--json-out", bench_args.json_out, "Also write results as JSON");
    add_model_flags(bench, bench_args.model);
    bench->callback([&] { run_bench(bench_args); });

    SynthArgs synth_args;
    auto* synth = app.add_subcommand("synth", "Generate a synthetic dataset CSV");
    synth->add_option("--kind", synth_args.kind, "bimodal|blob");
    synth->add_option("--out", synth_args.out_path, "CSV to write")->required();
    synth->add_option("--count", synth_args.count, "Inlier rows (bimodal: total)");
    synth->add_option("--dim", synth_args.dim, "Dimensions");
    synth->add_option("--sdev", synth_args.sdev, "Cluster standard deviation");
    synth->add_option("--separation", synth_args.separation,
                      "Bimodal: second center coordinate on every axis");
    synth->add_option("--outlier", synth_args.outlier_specs,
                      "Planted outlier as comma-joined coordinates (repeatable)");
    synth->add_option("--seed", synth_args.seed, "Generator seed");
    synth->callback([&] { run_synth(synth_args); });

    GridArgs grid_args;
    auto* grid = app.add_subcommand("grid", "Score a 2-d lattice with a saved model");
    grid->add_option("--model", grid_args.model_path, "Model file (2-column fit)")->required();
    grid->add_option("--out", grid_args.out_path, "Grid CSV to write")->required();
    grid->add_option("--x-min", grid_args.bounds.x_min, "Lattice bounds");
    grid->add_option("--x-max", grid_args.bounds.x_max, "Lattice bounds");
    grid->add_option("--y-min", grid_args.bounds.y_min, "Lattice bounds");
    grid->add_option("--y-max", grid_args.bounds.y_max, "Lattice bounds");
    grid->add_option("--resolution", grid_args.resolution, "Points per axis (>= 2)");
    grid->callback([&] { run_grid(grid_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "error: data: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: io: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: contract: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
