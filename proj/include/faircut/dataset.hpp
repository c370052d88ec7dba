#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "faircut/common.hpp"
#include "faircut/forest.hpp"
#include "faircut/matrix.hpp"

namespace faircut {

struct LabeledDataset {
    ColumnMatrix matrix;
    std::vector<int> labels;  // 1 = outlier
    std::vector<std::string> column_names;  // label column excluded
    std::string name;

    bool both_classes_present() const;
};

/// Read a headered numeric CSV, extracting `label_column` ("last" or a header
/// name) as the 0/1 label vector. NaN, infinities, and missing cells are
/// rejected with the offending row and column named. Throws IoError when the
/// file cannot be read, DataError on malformed content.
LabeledDataset load_csv(const std::string& path, const std::string& label_column = "last");

/// Write the dataset back as CSV (label column last). Numeric cells use
/// shortest round-trip decimal form, so load_csv recovers the exact doubles.
void write_csv(const LabeledDataset& dataset, const std::string& path);

/// Row-index/score CSV, one line per score, header "row,score". Scores use
/// shortest round-trip decimal form so equal score vectors give identical
/// files.
void write_scores_csv(std::span<const double> scores, const std::string& path);

struct GaussianCluster {
    std::vector<double> center;
    double sdev = 1.0;
    std::size_t count = 0;
};

struct SyntheticSpec {
    std::vector<GaussianCluster> clusters;             // at least one
    std::vector<std::vector<double>> planted_outliers; // each one labeled row
    std::uint64_t seed = 1;
};

/// Deterministic Gaussian mixture sampler: cluster points labeled 0 in
/// cluster order, planted outliers appended with label 1. All clusters and
/// outliers must share one dimensionality.
LabeledDataset gen_synthetic(const SyntheticSpec& spec);

struct GridBounds {
    double x_min = 0.0, x_max = 1.0;
    double y_min = 0.0, y_max = 1.0;
};

struct ScoreGrid {
    std::size_t resolution = 0;
    std::vector<double> x, y, score;  // row-major, y outer, resolution^2 entries
};

/// Score a regular lattice (endpoints included) with a model fitted on
/// exactly 2 columns; resolution >= 2. Throws ConfigError otherwise.
ScoreGrid score_grid(const ForestModel& model, const GridBounds& bounds,
                     std::size_t resolution);

/// CSV with header "x,y,score".
void write_grid_csv(const ScoreGrid& grid, const std::string& path);

}  // namespace faircut
