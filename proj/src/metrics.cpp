#include "faircut/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace faircut {

namespace {

struct ClassCounts {
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
};

ClassCounts check_inputs(std::span<const double> scores, std::span<const int> labels) {
    if (scores.size() != labels.size()) {
        throw std::invalid_argument("metrics: scores and labels differ in length");
    }
    if (scores.empty()) {
        throw std::invalid_argument("metrics: empty input");
    }
    ClassCounts counts;
    for (int label : labels) {
        if (label == 1) {
            ++counts.n_pos;
        } else if (label == 0) {
            ++counts.n_neg;
        } else {
            throw std::invalid_argument("metrics: labels must be 0 or 1");
        }
    }
    if (counts.n_pos == 0 || counts.n_neg == 0) {
        throw std::invalid_argument("metrics: both classes must be present");
    }
    return counts;
}

std::vector<std::size_t> order_by_score(std::span<const double> scores, bool descending) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return descending ? scores[a] > scores[b] : scores[a] < scores[b];
    });
    return order;
}

}  // namespace

double auroc(std::span<const double> scores, std::span<const int> labels) {
    const ClassCounts counts = check_inputs(scores, labels);
    const auto order = order_by_score(scores, /*descending=*/false);

    // Midranks over ascending scores; the rank sum of positives gives the
    // Mann-Whitney statistic with ties at one half.
    const std::size_t n = scores.size();
    double positive_rank_sum = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) ++j;
        const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k) {
            if (labels[order[k]] == 1) positive_rank_sum += midrank;
        }
        i = j;
    }
    const auto p = static_cast<double>(counts.n_pos);
    const auto q = static_cast<double>(counts.n_neg);
    const double u = positive_rank_sum - p * (p + 1.0) / 2.0;
    return u / (p * q);
}

double aupr(std::span<const double> scores, std::span<const int> labels) {
    const ClassCounts counts = check_inputs(scores, labels);
    const auto order = order_by_score(scores, /*descending=*/true);

    const std::size_t n = scores.size();
    const auto total_pos = static_cast<double>(counts.n_pos);
    double average_precision = 0.0;
    double previous_recall = 0.0;
    std::size_t tp = 0;
    std::size_t predicted = 0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        std::size_t group_pos = 0;
        while (j < n && scores[order[j]] == scores[order[i]]) {
            if (labels[order[j]] == 1) ++group_pos;
            ++j;
        }
        tp += group_pos;
        predicted += j - i;
        const double recall = static_cast<double>(tp) / total_pos;
        const double precision = static_cast<double>(tp) / static_cast<double>(predicted);
        average_precision += (recall - previous_recall) * precision;
        previous_recall = recall;
        i = j;
    }
    return average_precision;
}

}  // namespace faircut
