#include "faircut/split.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace faircut {

namespace {

double population_sdev(std::span<const double> xs) {
    const auto m = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= m;
    double ssd = 0.0;
    for (double x : xs) {
        const double d = x - mean;
        ssd += d * d;
    }
    return std::sqrt(ssd / m);
}

struct SideSplit {
    std::vector<double> left;
    std::vector<double> right;
};

SideSplit partition_values(std::span<const double> z, double s) {
    SideSplit out;
    for (double v : z) {
        (v <= s ? out.left : out.right).push_back(v);
    }
    if (out.left.empty() || out.right.empty()) {
        throw std::invalid_argument("split objective: split_value leaves one side empty");
    }
    return out;
}

double whole_sdev_or_throw(std::span<const double> z) {
    const double sdev = population_sdev(z);
    if (sdev <= 0.0) {
        throw std::invalid_argument("split objective: constant projection");
    }
    return sdev;
}

}  // namespace

double Hyperplane::project(std::span<const double> full_row) const {
    double z = 0.0;
    for (std::size_t v = 0; v < columns.size(); ++v) {
        z += coeffs[v] * (full_row[columns[v]] - means[v]) / sdevs[v];
    }
    return z;
}

double Hyperplane::project_row(const ColumnMatrix& matrix, RowIndex row) const {
    double z = 0.0;
    for (std::size_t v = 0; v < columns.size(); ++v) {
        z += coeffs[v] * (matrix.at(row, columns[v]) - means[v]) / sdevs[v];
    }
    return z;
}

double pooled_objective(std::span<const double> projections, double split_value) {
    const SideSplit sides = partition_values(projections, split_value);
    const auto n_l = static_cast<double>(sides.left.size());
    const auto n_r = static_cast<double>(sides.right.size());
    return (n_l * population_sdev(sides.left) + n_r * population_sdev(sides.right)) /
           (n_l + n_r);
}

double pooled_gain(std::span<const double> projections, double split_value) {
    const double sdev_all = whole_sdev_or_throw(projections);
    return (sdev_all - pooled_objective(projections, split_value)) / sdev_all;
}

double averaged_gain(std::span<const double> projections, double split_value) {
    const double sdev_all = whole_sdev_or_throw(projections);
    const SideSplit sides = partition_values(projections, split_value);
    const double avg =
        (population_sdev(sides.left) + population_sdev(sides.right)) / 2.0;
    return (sdev_all - avg) / sdev_all;
}

namespace {

struct TermPick {
    std::size_t column;
    ColumnStats stats;
};

void append_term(Hyperplane& plane, const TermPick& pick) {
    plane.columns.push_back(pick.column);
    plane.means.push_back(pick.stats.mean);
    plane.sdevs.push_back(pick.stats.sdev);
}

// Uniform selection: draw lazily, retry ineligible columns within a shared
// budget of 4n draws, possibly ending with fewer than p terms.
void pick_uniform(const ColumnMatrix& matrix, std::span<const RowIndex> subset,
                  std::size_t p, RngStream& stream, Hyperplane& plane) {
    const std::size_t n = matrix.cols();
    std::size_t budget = 4 * n;
    while (plane.terms() < p && budget > 0) {
        const std::size_t col = stream.uniform_index(n);
        --budget;
        const ColumnStats st = column_stats(matrix, subset, col);
        if (st.distinct_gt1) {
            append_term(plane, TermPick{col, st});
        }
    }
}

// Per-node weighted selection: weights computed on the subset, ineligible
// columns weighted zero. Kurtosis weights are the raw fourth standardized
// moment (>= 1 for any non-constant column), range weights are max - min.
void pick_weighted_local(const ColumnMatrix& matrix, std::span<const RowIndex> subset,
                         std::size_t p, SelectorKind kind, RngStream& stream,
                         Hyperplane& plane) {
    const std::size_t n = matrix.cols();
    std::vector<ColumnStats> stats(n);
    std::vector<double> weights(n, 0.0);
    bool any = false;
    for (std::size_t col = 0; col < n; ++col) {
        stats[col] = column_stats(matrix, subset, col);
        if (!stats[col].distinct_gt1) continue;
        if (kind == SelectorKind::kurtosis_weighted) {
            weights[col] = kurtosis(matrix, subset, col).value();
        } else {
            weights[col] = stats[col].max - stats[col].min;
        }
        any = true;
    }
    if (!any) return;
    for (std::size_t slot = 0; slot < p; ++slot) {
        const std::size_t col = stream.weighted_index(weights);
        append_term(plane, TermPick{col, stats[col]});
    }
}

// Global-weight selection: fixed dataset-level weights, but a column that is
// constant on this node's subset is zeroed out locally and redrawn.
void pick_weighted_global(const ColumnMatrix& matrix, std::span<const RowIndex> subset,
                          std::size_t p, std::span<const double> global_weights,
                          RngStream& stream, Hyperplane& plane) {
    const std::size_t n = matrix.cols();
    if (global_weights.size() != n) {
        throw ConfigError("global column weights do not match column count");
    }
    std::vector<double> weights(global_weights.begin(), global_weights.end());
    std::vector<std::optional<ColumnStats>> cache(n);
    for (std::size_t slot = 0; slot < p; ++slot) {
        for (;;) {
            const bool any_positive =
                std::any_of(weights.begin(), weights.end(), [](double w) { return w > 0.0; });
            if (!any_positive) return;
            const std::size_t col = stream.weighted_index(weights);
            if (!cache[col]) cache[col] = column_stats(matrix, subset, col);
            if (cache[col]->distinct_gt1) {
                append_term(plane, TermPick{col, *cache[col]});
                break;
            }
            weights[col] = 0.0;
        }
    }
}

}  // namespace

std::optional<HyperplaneDraw> build_hyperplane(const ColumnMatrix& matrix,
                                               std::span<const RowIndex> subset,
                                               std::size_t p,
                                               const ColumnSelector& selector,
                                               RngStream& stream) {
    if (subset.size() < 2) {
        throw std::invalid_argument("build_hyperplane: need at least 2 rows");
    }
    if (p == 0) {
        throw std::invalid_argument("build_hyperplane: p must be >= 1");
    }

    HyperplaneDraw draw;
    switch (selector.kind) {
        case SelectorKind::uniform:
            pick_uniform(matrix, subset, p, stream, draw.plane);
            break;
        case SelectorKind::kurtosis_weighted:
        case SelectorKind::range_weighted:
            if (!selector.global_weights.empty()) {
                pick_weighted_global(matrix, subset, p, selector.global_weights, stream,
                                     draw.plane);
            } else {
                pick_weighted_local(matrix, subset, p, selector.kind, stream, draw.plane);
            }
            break;
    }
    if (draw.plane.terms() == 0) {
        return std::nullopt;  // all columns constant on this subset
    }

    draw.plane.coeffs.resize(draw.plane.terms());
    for (double& c : draw.plane.coeffs) {
        c = stream.standard_normal();
    }

    draw.projections.resize(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        draw.projections[i] = draw.plane.project_row(matrix, subset[i]);
    }
    return draw;
}

namespace {

std::optional<ThresholdChoice> uniform_threshold(std::span<const double> z,
                                                 RngStream& stream) {
    const auto [min_it, max_it] = std::minmax_element(z.begin(), z.end());
    const double lo = *min_it;
    const double hi = *max_it;
    if (!(lo < hi)) return std::nullopt;
    // Left side is z <= s, so any s in [lo, hi) yields two nonempty sides;
    // redraw the rare degenerate round-up to hi.
    for (int attempt = 0; attempt < 8; ++attempt) {
        const double s = lo + stream.uniform01() * (hi - lo);
        if (s >= lo && s < hi) {
            return ThresholdChoice{s, std::nullopt};
        }
    }
    double s = std::midpoint(lo, hi);
    if (s >= hi) s = lo;
    return ThresholdChoice{s, std::nullopt};
}

// Sum of squared deviations of every prefix (run from the left) or suffix
// (run from the right), via Welford's update. Unlike differenced prefix sums
// of squares, the running update keeps each side's value accurate relative to
// its own magnitude, so a constant or near-constant side comes out (exactly
// or nearly) zero instead of inheriting cancellation noise from the whole
// vector.
std::vector<double> running_ssd(std::span<const double> z, bool reversed) {
    const std::size_t m = z.size();
    std::vector<double> ssd(m);
    double mean = 0.0;
    double sum = 0.0;
    for (std::size_t step = 0; step < m; ++step) {
        const std::size_t i = reversed ? m - 1 - step : step;
        const double delta = z[i] - mean;
        mean += delta / static_cast<double>(step + 1);
        sum += delta * (z[i] - mean);
        ssd[i] = sum;
    }
    return ssd;
}

std::optional<ThresholdChoice> gain_scan(std::span<const double> projections,
                                         CriterionKind kind) {
    std::vector<double> z(projections.begin(), projections.end());
    std::sort(z.begin(), z.end());
    const std::size_t m = z.size();
    if (!(z.front() < z.back())) return std::nullopt;

    const std::vector<double> ssd_left = running_ssd(z, false);   // z[0..i]
    const std::vector<double> ssd_right = running_ssd(z, true);   // z[i..m-1]
    const double md = static_cast<double>(m);
    const double sdev_all = std::sqrt(std::max(0.0, ssd_left[m - 1]) / md);
    if (sdev_all <= 0.0) return std::nullopt;

    double best_gain = -std::numeric_limits<double>::infinity();
    std::size_t best_i = m;  // boundary between z[i] and z[i+1]
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (!(z[i] < z[i + 1])) continue;
        const double n_l = static_cast<double>(i + 1);
        const double n_r = md - n_l;
        const double sdev_l = std::sqrt(std::max(0.0, ssd_left[i]) / n_l);
        const double sdev_r = std::sqrt(std::max(0.0, ssd_right[i + 1]) / n_r);
        const double objective = kind == CriterionKind::pooled_gain
                                     ? (n_l * sdev_l + n_r * sdev_r) / md
                                     : (sdev_l + sdev_r) / 2.0;
        const double gain = (sdev_all - objective) / sdev_all;
        if (gain > best_gain) {  // ties keep the earlier (lower) boundary
            best_gain = gain;
            best_i = i;
        }
    }
    if (best_i == m) return std::nullopt;
    return ThresholdChoice{std::midpoint(z[best_i], z[best_i + 1]), best_gain};
}

}  // namespace

std::optional<ThresholdChoice> best_split(std::span<const double> projections,
                                          const SplitCriterion& criterion,
                                          RngStream& stream) {
    if (projections.size() < 2) {
        throw std::invalid_argument("best_split: need at least 2 projections");
    }
    if (criterion.kind == CriterionKind::uniform_random) {
        return uniform_threshold(projections, stream);
    }
    return gain_scan(projections, criterion.kind);
}

std::optional<SplitResult> choose_split(const ColumnMatrix& matrix,
                                        std::span<const RowIndex> subset,
                                        std::size_t p,
                                        const ColumnSelector& selector,
                                        const SplitCriterion& criterion,
                                        RngStream& stream) {
    if (subset.size() < 2) {
        throw std::invalid_argument("choose_split: need at least 2 rows");
    }
    if (criterion.trials == 0) {
        throw std::invalid_argument("choose_split: trials must be >= 1");
    }
    const std::size_t trials =
        criterion.kind == CriterionKind::uniform_random ? 1 : criterion.trials;

    std::optional<HyperplaneDraw> best_draw;
    std::optional<ThresholdChoice> best_choice;
    for (std::size_t t = 0; t < trials; ++t) {
        auto draw = build_hyperplane(matrix, subset, p, selector, stream);
        if (!draw) continue;
        auto choice = best_split(draw->projections, criterion, stream);
        if (!choice) continue;
        const bool better =
            !best_choice ||
            choice->gain.value_or(0.0) > best_choice->gain.value_or(0.0);
        if (better) {
            best_draw = std::move(draw);
            best_choice = choice;
        }
    }
    if (!best_choice) return std::nullopt;

    SplitResult result;
    result.hyperplane = std::move(best_draw->plane);
    result.hyperplane.threshold = best_choice->threshold;
    result.gain = best_choice->gain;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        const bool left = best_draw->projections[i] <= best_choice->threshold;
        (left ? result.left_rows : result.right_rows).push_back(subset[i]);
    }
    return result;
}

}  // namespace faircut
