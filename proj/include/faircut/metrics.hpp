#pragma once

#include <span>

namespace faircut {

/// Area under the ROC curve: probability that a uniformly drawn positive
/// outscores a uniformly drawn negative, ties counted one half (computed via
/// midranks). labels are 0/1 with 1 = outlier; both classes must be present.
/// Throws std::invalid_argument otherwise.
double auroc(std::span<const double> scores, std::span<const int> labels);

/// Area under the precision-recall curve as average precision: sum of
/// precision times recall increment over descending score thresholds, equal
/// scores grouped at one threshold. Same input contract as auroc.
double aupr(std::span<const double> scores, std::span<const int> labels);

}  // namespace faircut
