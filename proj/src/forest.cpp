#include "faircut/forest.hpp"

#include <cmath>
#include <stdexcept>

#include "faircut/parallel.hpp"
#include "faircut/rng.hpp"

namespace faircut {

DepthFormulaKind resolved_depth_formula(const ForestConfig& config) {
    if (config.depth_formula) return *config.depth_formula;
    switch (config.criterion) {
        case CriterionKind::uniform_random:
            return DepthFormulaKind::harmonic;
        case CriterionKind::averaged_gain:
            return DepthFormulaKind::averaged_gain_optimal;
        case CriterionKind::pooled_gain:
            return DepthFormulaKind::pooled_gain_optimal;
    }
    return DepthFormulaKind::harmonic;
}

std::size_t ForestModel::total_nodes() const {
    std::size_t total = 0;
    for (const auto& tree : trees) total += tree.nodes.size();
    return total;
}

namespace {

void validate_config(const ForestConfig& config, const ColumnMatrix& matrix) {
    if (config.trees == 0) throw ConfigError("trees must be >= 1");
    if (config.trials == 0) throw ConfigError("ntry must be >= 1");
    if (config.ndim == 0) throw ConfigError("ndim must be >= 1");
    if (config.ndim > matrix.cols()) {
        throw ConfigError("ndim exceeds the column count");
    }
    if (config.sample_size < 2) throw ConfigError("sample size must be >= 2");
    if (config.termination.max_depth && *config.termination.max_depth == 0) {
        throw ConfigError("max depth must be >= 1");
    }
    if (config.termination.gain_threshold) {
        const double g = *config.termination.gain_threshold;
        if (!(g >= 0.0 && g < 1.0)) {
            throw ConfigError("gain threshold must lie in [0, 1)");
        }
        if (config.criterion == CriterionKind::uniform_random) {
            throw ConfigError("gain threshold requires a gain-guided criterion");
        }
    }
    if (config.global_column_weights &&
        config.col_select != SelectorKind::kurtosis_weighted) {
        throw ConfigError("global column weights apply to kurtosis selection only");
    }
    if (matrix.rows() < 2) throw DataError("need at least 2 rows to fit");
}

std::vector<double> full_data_kurtosis_weights(const ColumnMatrix& matrix) {
    RowSubset all(matrix.rows());
    for (std::size_t i = 0; i < matrix.rows(); ++i) all[i] = static_cast<RowIndex>(i);
    std::vector<double> weights(matrix.cols(), 0.0);
    for (std::size_t col = 0; col < matrix.cols(); ++col) {
        weights[col] = kurtosis(matrix, all, col).value_or(0.0);
    }
    return weights;
}

}  // namespace

ForestModel fit_forest(const ColumnMatrix& matrix, const ForestConfig& config) {
    validate_config(config, matrix);

    bool any_varying = false;
    RowSubset all_rows(matrix.rows());
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        all_rows[i] = static_cast<RowIndex>(i);
    }
    for (std::size_t col = 0; col < matrix.cols() && !any_varying; ++col) {
        any_varying = column_stats(matrix, all_rows, col).distinct_gt1;
    }
    if (!any_varying) throw DataError("nothing to split: every column is constant");

    ForestModel model;
    model.config = config;
    model.config.sample_size = std::min(config.sample_size, matrix.rows());
    model.config.depth_formula = resolved_depth_formula(config);
    model.generator_version = RngStream::generator_id;
    model.n_cols = matrix.cols();
    model.q = expected_depth(*model.config.depth_formula, model.config.sample_size);

    TreeBuildConfig tree_config;
    tree_config.ndim = model.config.ndim;
    tree_config.selector.kind = model.config.col_select;
    if (model.config.global_column_weights) {
        tree_config.selector.global_weights = full_data_kurtosis_weights(matrix);
    }
    tree_config.criterion = SplitCriterion{model.config.criterion, model.config.trials};
    tree_config.termination = model.config.termination;
    tree_config.depth_formula = *model.config.depth_formula;

    const std::size_t s = model.config.sample_size;
    model.trees.resize(config.trees);
    parallel_for(config.trees, config.threads, [&](std::size_t i) {
        RngStream stream(config.base_seed, static_cast<std::uint64_t>(i));
        RowSubset subset = config.sample_with_replacement
                               ? stream.sample_with_replacement(matrix.rows(), s)
                               : stream.sample_without_replacement(matrix.rows(), s);
        model.trees[i] = build_tree(matrix, std::move(subset), tree_config, stream);
    });
    return model;
}

double tree_score(std::span<const double> point, const IsolationTree& tree) {
    std::size_t idx = 0;
    while (!tree.nodes[idx].is_terminal) {
        const TreeNode& node = tree.nodes[idx];
        const double z = node.hyperplane.project(point);
        idx = z <= node.hyperplane.threshold ? node.left : node.right;
    }
    return tree.nodes[idx].depth_value;
}

double score_point(std::span<const double> point, const ForestModel& model) {
    // Fixed accumulation order keeps scores identical for any thread count.
    long double depth_sum = 0.0L;
    for (const auto& tree : model.trees) {
        depth_sum += static_cast<long double>(tree_score(point, tree));
    }
    const double mean_depth =
        static_cast<double>(depth_sum / static_cast<long double>(model.trees.size()));
    return std::exp2(-mean_depth / model.q);
}

namespace {

double score_matrix_row(const ColumnMatrix& matrix, RowIndex row,
                        const ForestModel& model) {
    long double depth_sum = 0.0L;
    for (const auto& tree : model.trees) {
        std::size_t idx = 0;
        while (!tree.nodes[idx].is_terminal) {
            const TreeNode& node = tree.nodes[idx];
            const double z = node.hyperplane.project_row(matrix, row);
            idx = z <= node.hyperplane.threshold ? node.left : node.right;
        }
        depth_sum += static_cast<long double>(tree.nodes[idx].depth_value);
    }
    const double mean_depth =
        static_cast<double>(depth_sum / static_cast<long double>(model.trees.size()));
    return std::exp2(-mean_depth / model.q);
}

}  // namespace

std::vector<double> score_matrix(const ColumnMatrix& matrix, const ForestModel& model,
                                 std::size_t threads) {
    if (matrix.cols() != model.n_cols) {
        throw DataError("column count mismatch: model fitted on " +
                        std::to_string(model.n_cols) + " columns, data has " +
                        std::to_string(matrix.cols()));
    }
    std::vector<double> scores(matrix.rows());
    parallel_for(matrix.rows(), threads, [&](std::size_t row) {
        scores[row] = score_matrix_row(matrix, static_cast<RowIndex>(row), model);
    });
    return scores;
}

ForestConfig preset_config(const std::string& name) {
    ForestConfig config;
    if (name == "fcf" || name == "custom") {
        config.criterion = CriterionKind::pooled_gain;
        config.trees = 200;
        config.sample_size = 256;
        config.ndim = 2;
        config.trials = 1;
        // full isolation: no termination rule
    } else if (name == "iforest") {
        config.criterion = CriterionKind::uniform_random;
        config.trees = 100;
        config.sample_size = 256;
        config.ndim = 1;
        config.trials = 1;
        config.termination.max_depth = 8;
    } else if (name == "sciforest-like") {
        config.criterion = CriterionKind::averaged_gain;
        config.trees = 100;
        config.sample_size = 256;
        config.ndim = 2;
        config.trials = 10;
        config.termination.max_depth = 8;
        config.depth_formula = DepthFormulaKind::harmonic;
    } else {
        throw ConfigError("unknown preset '" + name +
                          "' (iforest|fcf|sciforest-like|custom)");
    }
    return config;
}

const char* criterion_name(CriterionKind kind) {
    switch (kind) {
        case CriterionKind::uniform_random: return "uniform";
        case CriterionKind::pooled_gain: return "pooled";
        case CriterionKind::averaged_gain: return "averaged";
    }
    return "uniform";
}

const char* selector_name(SelectorKind kind) {
    switch (kind) {
        case SelectorKind::uniform: return "uniform";
        case SelectorKind::kurtosis_weighted: return "kurtosis";
        case SelectorKind::range_weighted: return "range";
    }
    return "uniform";
}

const char* depth_formula_name(DepthFormulaKind kind) {
    switch (kind) {
        case DepthFormulaKind::harmonic: return "harmonic";
        case DepthFormulaKind::averaged_gain_optimal: return "averaged";
        case DepthFormulaKind::pooled_gain_optimal: return "pooled";
    }
    return "harmonic";
}

CriterionKind parse_criterion(const std::string& name) {
    if (name == "uniform") return CriterionKind::uniform_random;
    if (name == "pooled") return CriterionKind::pooled_gain;
    if (name == "averaged") return CriterionKind::averaged_gain;
    throw ConfigError("unknown criterion '" + name + "' (uniform|pooled|averaged)");
}

SelectorKind parse_selector(const std::string& name) {
    if (name == "uniform") return SelectorKind::uniform;
    if (name == "kurtosis") return SelectorKind::kurtosis_weighted;
    if (name == "range") return SelectorKind::range_weighted;
    throw ConfigError("unknown column selector '" + name + "' (uniform|kurtosis|range)");
}

DepthFormulaKind parse_depth_formula(const std::string& name) {
    if (name == "harmonic") return DepthFormulaKind::harmonic;
    if (name == "averaged") return DepthFormulaKind::averaged_gain_optimal;
    if (name == "pooled") return DepthFormulaKind::pooled_gain_optimal;
    throw ConfigError("unknown depth formula '" + name + "' (harmonic|averaged|pooled)");
}

}  // namespace faircut
