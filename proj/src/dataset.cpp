#include "faircut/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "faircut/rng.hpp"

namespace faircut {

namespace {

std::string double_text(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string trimmed(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(trimmed(line.substr(start)));
            return cells;
        }
        cells.push_back(trimmed(line.substr(start, comma - start)));
        start = comma + 1;
    }
}

double parse_cell(const std::string& cell, std::size_t data_row,
                  const std::string& column_name) {
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end || cell.empty() || !std::isfinite(value)) {
        throw DataError("row " + std::to_string(data_row) + ", column '" + column_name +
                        "': invalid numeric value '" + cell + "'");
    }
    return value;
}

}  // namespace

bool LabeledDataset::both_classes_present() const {
    const bool any_pos = std::find(labels.begin(), labels.end(), 1) != labels.end();
    const bool any_neg = std::find(labels.begin(), labels.end(), 0) != labels.end();
    return any_pos && any_neg;
}

LabeledDataset load_csv(const std::string& path, const std::string& label_column) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw DataError("'" + path + "': empty file");
    const std::vector<std::string> header = split_line(line);
    const std::size_t n_total = header.size();
    if (n_total < 2) {
        throw DataError("'" + path + "': need at least one feature column plus the label");
    }

    std::size_t label_index = n_total - 1;
    if (label_column != "last") {
        const auto it = std::find(header.begin(), header.end(), label_column);
        if (it == header.end()) {
            throw DataError("'" + path + "': label column '" + label_column + "' not found");
        }
        label_index = static_cast<std::size_t>(it - header.begin());
    }

    std::vector<std::string> feature_names;
    for (std::size_t c = 0; c < n_total; ++c) {
        if (c != label_index) feature_names.push_back(header[c]);
    }

    std::vector<double> row_major;
    std::vector<int> labels;
    std::size_t data_row = 0;
    while (std::getline(in, line)) {
        if (trimmed(line).empty()) continue;
        ++data_row;
        const std::vector<std::string> cells = split_line(line);
        if (cells.size() != n_total) {
            throw DataError("row " + std::to_string(data_row) + " has " +
                            std::to_string(cells.size()) + " cells, expected " +
                            std::to_string(n_total));
        }
        for (std::size_t c = 0; c < n_total; ++c) {
            const double value = parse_cell(cells[c], data_row, header[c]);
            if (c == label_index) {
                if (value != 0.0 && value != 1.0) {
                    throw DataError("row " + std::to_string(data_row) +
                                    ": label must be 0 or 1, got '" + cells[c] + "'");
                }
                labels.push_back(value == 1.0 ? 1 : 0);
            } else {
                row_major.push_back(value);
            }
        }
    }
    if (data_row == 0) throw DataError("'" + path + "': no data rows");

    ColumnMatrix matrix =
        ColumnMatrix::from_rows(data_row, n_total - 1, row_major);
    return LabeledDataset{std::move(matrix), std::move(labels),
                          std::move(feature_names),
                          std::filesystem::path(path).stem().string()};
}

void write_csv(const LabeledDataset& dataset, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    for (std::size_t c = 0; c < dataset.matrix.cols(); ++c) {
        const std::string name = c < dataset.column_names.size()
                                     ? dataset.column_names[c]
                                     : "x" + std::to_string(c);
        out << name << ',';
    }
    out << "label\n";
    for (std::size_t r = 0; r < dataset.matrix.rows(); ++r) {
        for (std::size_t c = 0; c < dataset.matrix.cols(); ++c) {
            out << double_text(dataset.matrix.at(r, c)) << ',';
        }
        out << dataset.labels[r] << '\n';
    }
    if (!out) throw IoError("failed while writing '" + path + "'");
}

void write_scores_csv(std::span<const double> scores, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << "row,score\n";
    for (std::size_t i = 0; i < scores.size(); ++i) {
        out << i << ',' << double_text(scores[i]) << '\n';
    }
    if (!out) throw IoError("failed while writing '" + path + "'");
}

LabeledDataset gen_synthetic(const SyntheticSpec& spec) {
    if (spec.clusters.empty()) throw ConfigError("synthetic spec needs at least 1 cluster");
    const std::size_t dims = spec.clusters.front().center.size();
    if (dims == 0) throw ConfigError("synthetic cluster centers need at least 1 dimension");
    std::size_t total = 0;
    for (const auto& cluster : spec.clusters) {
        if (cluster.center.size() != dims) {
            throw ConfigError("synthetic clusters disagree on dimensionality");
        }
        if (!(cluster.sdev > 0.0)) throw ConfigError("cluster sdev must be positive");
        if (cluster.count == 0) throw ConfigError("cluster count must be >= 1");
        total += cluster.count;
    }
    for (const auto& point : spec.planted_outliers) {
        if (point.size() != dims) {
            throw ConfigError("planted outlier dimensionality does not match clusters");
        }
    }
    total += spec.planted_outliers.size();

    std::vector<double> row_major;
    row_major.reserve(total * dims);
    std::vector<int> labels;
    labels.reserve(total);
    RngStream stream(spec.seed, 0);
    for (const auto& cluster : spec.clusters) {
        for (std::size_t i = 0; i < cluster.count; ++i) {
            for (std::size_t d = 0; d < dims; ++d) {
                row_major.push_back(cluster.center[d] +
                                    cluster.sdev * stream.standard_normal());
            }
            labels.push_back(0);
        }
    }
    for (const auto& point : spec.planted_outliers) {
        row_major.insert(row_major.end(), point.begin(), point.end());
        labels.push_back(1);
    }

    std::vector<std::string> names;
    for (std::size_t d = 0; d < dims; ++d) names.push_back("x" + std::to_string(d));
    ColumnMatrix matrix = ColumnMatrix::from_rows(total, dims, row_major);
    return LabeledDataset{std::move(matrix), std::move(labels), std::move(names),
                          "synthetic"};
}

ScoreGrid score_grid(const ForestModel& model, const GridBounds& bounds,
                     std::size_t resolution) {
    if (model.n_cols != 2) {
        throw ConfigError("score grid requires a model fitted on exactly 2 columns");
    }
    if (resolution < 2) throw ConfigError("grid resolution must be >= 2");
    if (!(bounds.x_min < bounds.x_max) || !(bounds.y_min < bounds.y_max)) {
        throw ConfigError("grid bounds must satisfy min < max on both axes");
    }

    ScoreGrid grid;
    grid.resolution = resolution;
    const std::size_t total = resolution * resolution;
    grid.x.reserve(total);
    grid.y.reserve(total);
    grid.score.reserve(total);
    const double dx = (bounds.x_max - bounds.x_min) / static_cast<double>(resolution - 1);
    const double dy = (bounds.y_max - bounds.y_min) / static_cast<double>(resolution - 1);
    for (std::size_t iy = 0; iy < resolution; ++iy) {
        const double y = bounds.y_min + dy * static_cast<double>(iy);
        for (std::size_t ix = 0; ix < resolution; ++ix) {
            const double x = bounds.x_min + dx * static_cast<double>(ix);
            const double point[2] = {x, y};
            grid.x.push_back(x);
            grid.y.push_back(y);
            grid.score.push_back(score_point(point, model));
        }
    }
    return grid;
}

void write_grid_csv(const ScoreGrid& grid, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << "x,y,score\n";
    for (std::size_t i = 0; i < grid.score.size(); ++i) {
        out << double_text(grid.x[i]) << ',' << double_text(grid.y[i]) << ','
            << double_text(grid.score[i]) << '\n';
    }
    if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace faircut
