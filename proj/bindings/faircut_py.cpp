#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "faircut/common.hpp"
#include "faircut/depth.hpp"
#include "faircut/forest.hpp"
#include "faircut/metrics.hpp"
#include "faircut/serialize.hpp"

namespace py = pybind11;

namespace {

using faircut::ColumnMatrix;
using faircut::ForestConfig;
using faircut::ForestModel;

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using IntArray = py::array_t<int, py::array::c_style | py::array::forcecast>;

ColumnMatrix matrix_from_array(const DoubleArray& data) {
    if (data.ndim() != 2) {
        throw faircut::DataError("expected a 2-d array, got " +
                                 std::to_string(data.ndim()) + "-d");
    }
    const auto rows = static_cast<std::size_t>(data.shape(0));
    const auto cols = static_cast<std::size_t>(data.shape(1));
    return ColumnMatrix::from_rows(rows, cols, {data.data(), rows * cols});
}

std::vector<double> doubles_from_array(const DoubleArray& values, const char* what) {
    if (values.ndim() != 1) {
        throw std::invalid_argument(std::string(what) + " must be 1-d");
    }
    return {values.data(), values.data() + values.shape(0)};
}

ForestModel fit_py(const DoubleArray& data, const std::string& preset,
                   std::optional<std::string> criterion, std::optional<std::size_t> trees,
                   std::optional<std::size_t> sample_size, std::optional<std::size_t> ndim,
                   std::optional<std::size_t> trials, std::optional<std::size_t> max_depth,
                   std::optional<double> gain_threshold, bool full_isolation,
                   std::optional<std::string> depth_formula,
                   std::optional<std::string> col_select, bool global_kurtosis,
                   bool replacement, std::uint64_t seed, std::size_t threads) {
    ForestConfig config = faircut::preset_config(preset);
    if (criterion) config.criterion = faircut::parse_criterion(*criterion);
    if (col_select) config.col_select = faircut::parse_selector(*col_select);
    if (trees) config.trees = *trees;
    if (sample_size) config.sample_size = *sample_size;
    if (ndim) config.ndim = *ndim;
    if (trials) config.trials = *trials;
    if (full_isolation) {
        if (max_depth || gain_threshold) {
            throw faircut::ConfigError(
                "full_isolation excludes max_depth and gain_threshold");
        }
        config.termination = faircut::TerminationPolicy{};
    }
    if (max_depth) config.termination.max_depth = *max_depth;
    if (gain_threshold) config.termination.gain_threshold = *gain_threshold;
    if (depth_formula) {
        config.depth_formula = faircut::parse_depth_formula(*depth_formula);
    }
    config.global_column_weights = global_kurtosis;
    config.sample_with_replacement = replacement;
    config.base_seed = seed;
    config.threads = threads;

    const ColumnMatrix matrix = matrix_from_array(data);
    py::gil_scoped_release release;
    return faircut::fit_forest(matrix, config);
}

py::object score_py(const ForestModel& model, const DoubleArray& data,
                    std::size_t threads) {
    if (data.ndim() == 1) {
        const auto len = static_cast<std::size_t>(data.shape(0));
        if (len != model.n_cols) {
            throw faircut::DataError("model expects " + std::to_string(model.n_cols) +
                                     " columns, point has " + std::to_string(len));
        }
        return py::float_(faircut::score_point({data.data(), len}, model));
    }
    const ColumnMatrix matrix = matrix_from_array(data);
    std::vector<double> scores;
    {
        py::gil_scoped_release release;
        scores = faircut::score_matrix(matrix, model, threads);
    }
    return py::array_t<double>(py::ssize_t(scores.size()), scores.data());
}

double metric_py(const DoubleArray& scores, const IntArray& labels,
                 double (*metric)(std::span<const double>, std::span<const int>)) {
    const std::vector<double> score_vec = doubles_from_array(scores, "scores");
    if (labels.ndim() != 1) {
        throw std::invalid_argument("labels must be 1-d");
    }
    const std::vector<int> label_vec(labels.data(), labels.data() + labels.shape(0));
    return metric(score_vec, label_vec);
}

}  // namespace

PYBIND11_MODULE(_faircut, m) {
    m.doc() = "Isolation forests with selectable split-guiding criteria";

    py::register_exception<faircut::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<faircut::DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<faircut::IoError>(m, "IoError", PyExc_OSError);

    py::class_<ForestModel>(m, "Model")
        .def_property_readonly("q", [](const ForestModel& model) { return model.q; },
                               "Depth normalizer: expected isolation depth of one sample")
        .def_property_readonly(
            "num_trees", [](const ForestModel& model) { return model.trees.size(); })
        .def_property_readonly("total_nodes", &ForestModel::total_nodes)
        .def_property_readonly(
            "n_cols", [](const ForestModel& model) { return model.n_cols; })
        .def_property_readonly(
            "sample_size",
            [](const ForestModel& model) { return model.config.sample_size; })
        .def_property_readonly(
            "criterion",
            [](const ForestModel& model) {
                return std::string(faircut::criterion_name(model.config.criterion));
            })
        .def_property_readonly(
            "base_seed", [](const ForestModel& model) { return model.config.base_seed; })
        .def("score", &score_py, py::arg("data"), py::arg("threads") = 0,
             "Anomaly scores in (0, 1], higher = more anomalous. A 1-d point "
             "gives a float, a 2-d matrix one score per row.")
        .def("to_json", [](const ForestModel& model) { return model_to_json(model); },
             "Versioned JSON document that reproduces scores bit-exactly")
        .def_static("from_json",
                    [](const std::string& text) { return faircut::model_from_json(text); },
                    py::arg("text"))
        .def("save",
             [](const ForestModel& model, const std::string& path) {
                 faircut::save_model(model, path);
             },
             py::arg("path"))
        .def_static("load",
                    [](const std::string& path) { return faircut::load_model(path); },
                    py::arg("path"))
        .def("__repr__", [](const ForestModel& model) {
            return "<faircut.Model criterion=" +
                   std::string(faircut::criterion_name(model.config.criterion)) +
                   " trees=" + std::to_string(model.trees.size()) +
                   " cols=" + std::to_string(model.n_cols) + ">";
        });

    m.def("fit", &fit_py, py::arg("data"), py::kw_only(), py::arg("preset") = "fcf",
          py::arg("criterion") = py::none(), py::arg("trees") = py::none(),
          py::arg("sample_size") = py::none(), py::arg("ndim") = py::none(),
          py::arg("trials") = py::none(), py::arg("max_depth") = py::none(),
          py::arg("gain_threshold") = py::none(), py::arg("full_isolation") = false,
          py::arg("depth_formula") = py::none(), py::arg("col_select") = py::none(),
          py::arg("global_kurtosis") = false, py::arg("replacement") = false,
          py::arg("seed") = std::uint64_t{1}, py::arg("threads") = std::size_t{0},
          "Fit an isolation forest on a 2-d array of row vectors. Starts from "
          "the named preset (iforest|fcf|sciforest-like|custom), then applies "
          "any explicitly passed setting on top.");

    m.def("auroc",
          [](const DoubleArray& scores, const IntArray& labels) {
              return metric_py(scores, labels, faircut::auroc);
          },
          py::arg("scores"), py::arg("labels"),
          "Area under the ROC curve, ties counted one half; labels are 0/1 "
          "with 1 = outlier");

    m.def("aupr",
          [](const DoubleArray& scores, const IntArray& labels) {
              return metric_py(scores, labels, faircut::aupr);
          },
          py::arg("scores"), py::arg("labels"),
          "Area under the precision-recall curve as average precision");

    m.def("expected_depth",
          [](const std::string& formula, std::size_t m_points) {
              return faircut::expected_depth(faircut::parse_depth_formula(formula),
                                             m_points);
          },
          py::arg("formula"), py::arg("m"),
          "Expected isolation depth of m points: harmonic|averaged|pooled");
}
