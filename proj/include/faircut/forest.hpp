#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "faircut/common.hpp"
#include "faircut/depth.hpp"
#include "faircut/matrix.hpp"
#include "faircut/split.hpp"
#include "faircut/tree.hpp"

namespace faircut {

struct ForestConfig {
    std::size_t trees = 200;
    std::size_t sample_size = 256;       // clamped to the row count at fit time
    bool sample_with_replacement = false;
    std::size_t ndim = 2;
    SelectorKind col_select = SelectorKind::uniform;
    /// Kurtosis weights computed once on the full dataset instead of per node.
    bool global_column_weights = false;
    CriterionKind criterion = CriterionKind::pooled_gain;
    std::size_t trials = 1;
    TerminationPolicy termination{};     // default: full isolation
    /// Unset: matched to the criterion (harmonic for uniform_random,
    /// averaged_gain_optimal for averaged_gain, pooled_gain_optimal for
    /// pooled_gain).
    std::optional<DepthFormulaKind> depth_formula{};
    std::uint64_t base_seed = 1;
    std::size_t threads = 0;             // 0 = all hardware threads
};

/// The formula this config uses for terminal remainders and the normalizer.
DepthFormulaKind resolved_depth_formula(const ForestConfig& config);

struct ForestModel {
    std::vector<IsolationTree> trees;
    /// Normalizer: expected isolation depth of one tree's sample under the
    /// active depth formula. Scores are 2^(-(mean depth)/q).
    double q = 1.0;
    /// Effective configuration: sample_size after clamping, depth_formula
    /// resolved.
    ForestConfig config{};
    std::string generator_version;
    std::size_t n_cols = 0;

    std::size_t total_nodes() const;
};

/// Fit `config.trees` trees, tree i from the random stream (base_seed, i).
/// Throws ConfigError on inconsistent settings, DataError when the data
/// cannot support a fit (fewer than 2 rows, or every column constant).
ForestModel fit_forest(const ColumnMatrix& matrix, const ForestConfig& config);

/// Depth assigned to one point by one tree: route by hyperplane projections
/// (left when z <= threshold), return the terminal's depth value.
double tree_score(std::span<const double> point, const IsolationTree& tree);

/// Anomaly score of one point: 2^(-(mean tree depth)/q), in (0, 1], higher =
/// more anomalous. `point` must have model.n_cols values.
double score_point(std::span<const double> point, const ForestModel& model);

/// Row-wise scores, order preserving; parallel over rows with `threads`
/// workers (0 = all). Throws DataError on a column-count mismatch.
std::vector<double> score_matrix(const ColumnMatrix& matrix, const ForestModel& model,
                                 std::size_t threads = 0);

/// Named hyperparameter bundles shared by the CLI and the python bindings:
/// "iforest" (uniform splits, 100 trees, single columns, depth cap 8),
/// "fcf" and "custom" (pooled gain, 200 trees, 2-column hyperplanes, full
/// isolation), "sciforest-like" (averaged gain, 10 trials per node, depth cap
/// 8, harmonic depth formula). Throws ConfigError on any other name.
ForestConfig preset_config(const std::string& name);

const char* criterion_name(CriterionKind kind);
const char* selector_name(SelectorKind kind);
const char* depth_formula_name(DepthFormulaKind kind);
CriterionKind parse_criterion(const std::string& name);      // uniform|pooled|averaged
SelectorKind parse_selector(const std::string& name);        // uniform|kurtosis|range
DepthFormulaKind parse_depth_formula(const std::string& name);  // harmonic|averaged|pooled

}  // namespace faircut
