#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "faircut/common.hpp"
#include "faircut/matrix.hpp"
#include "faircut/rng.hpp"

namespace faircut {

enum class CriterionKind { uniform_random, pooled_gain, averaged_gain };
enum class SelectorKind { uniform, kurtosis_weighted, range_weighted };

struct SplitCriterion {
    CriterionKind kind = CriterionKind::pooled_gain;
    /// Candidate hyperplanes evaluated per node, best gain kept. Forced to 1
    /// for uniform_random, where candidates have no score to compare.
    std::size_t trials = 1;
};

struct ColumnSelector {
    SelectorKind kind = SelectorKind::uniform;
    /// When non-empty (weighted kinds only): fixed per-column weights computed
    /// once on the full dataset, used at every node instead of per-node
    /// statistics. Columns that turn out constant on a node's subset are
    /// still skipped there.
    std::vector<double> global_weights{};
};

/// Oblique split surface: z(x) = sum_v coeffs[v] * (x[columns[v]] - means[v]) / sdevs[v],
/// routed left when z <= threshold. Single-variable splits are the p = 1 case
/// with the column standardized the same way.
struct Hyperplane {
    std::vector<std::size_t> columns;
    std::vector<double> coeffs;
    std::vector<double> means;
    std::vector<double> sdevs;
    double threshold = 0.0;

    std::size_t terms() const { return columns.size(); }
    double project(std::span<const double> full_row) const;
    double project_row(const ColumnMatrix& matrix, RowIndex row) const;
};

/// A constructed hyperplane (threshold not yet chosen) plus the projection of
/// every subset row, in subset order.
struct HyperplaneDraw {
    Hyperplane plane;
    std::vector<double> projections;
};

struct ThresholdChoice {
    double threshold = 0.0;
    std::optional<double> gain;  // nullopt for uniform_random
};

struct SplitResult {
    Hyperplane hyperplane;
    std::optional<double> gain;
    RowSubset left_rows;   // projection <= threshold
    RowSubset right_rows;  // projection > threshold
};

/// Count-weighted average of the two sides' population sdevs at split_value
/// (left = values <= split_value). Throws std::invalid_argument if a side is
/// empty.
double pooled_objective(std::span<const double> projections, double split_value);

/// (sdev_all - pooled_objective) / sdev_all. Throws std::invalid_argument on
/// an empty side or constant projections.
double pooled_gain(std::span<const double> projections, double split_value);

/// (sdev_all - (sdev_left + sdev_right)/2) / sdev_all. Same error contract as
/// pooled_gain.
double averaged_gain(std::span<const double> projections, double split_value);

/// Draw up to p columns per the selector, standardize them with subset
/// statistics, attach standard-normal coefficients, and project every subset
/// row. Returns nullopt when no usable (non-constant) column can be found.
/// Column repetition across the p slots is permitted; an ineligible draw is
/// retried within a bounded budget and the hyperplane may end up with fewer
/// than p terms.
std::optional<HyperplaneDraw> build_hyperplane(const ColumnMatrix& matrix,
                                               std::span<const RowIndex> subset,
                                               std::size_t p,
                                               const ColumnSelector& selector,
                                               RngStream& stream);

/// Pick the split threshold for one projection vector. Gain criteria scan
/// every boundary between consecutive distinct sorted values exactly and
/// return the midpoint of the best bracketing pair (ties: lowest threshold);
/// uniform_random draws the threshold uniformly between min and max. Returns
/// nullopt when the projections are all equal.
std::optional<ThresholdChoice> best_split(std::span<const double> projections,
                                          const SplitCriterion& criterion,
                                          RngStream& stream);

/// Full node-split procedure: criterion.trials independent hyperplane draws,
/// best gain kept, rows partitioned by the winning threshold. Returns nullopt
/// when no trial produced a separable projection. Requires subset size >= 2.
std::optional<SplitResult> choose_split(const ColumnMatrix& matrix,
                                        std::span<const RowIndex> subset,
                                        std::size_t p,
                                        const ColumnSelector& selector,
                                        const SplitCriterion& criterion,
                                        RngStream& stream);

}  // namespace faircut
