#pragma once

#include <cstddef>

namespace faircut {

/// Expected isolation depth of m points under different split regimes:
/// harmonic for uniformly random splits, and the two idealized-criterion
/// curves used to normalize gain-guided trees.
enum class DepthFormulaKind { harmonic, averaged_gain_optimal, pooled_gain_optimal };

/// harmonic            -> 2 * (H_m - 1)
/// averaged_gain_optimal -> (m * (m + 1) / 2 - 1) / m
/// pooled_gain_optimal -> E(m) = 1 + (floor(m/2)/m) E(floor(m/2))
///                               + (ceil(m/2)/m) E(ceil(m/2)), E(1) = 0
///                        (= log2 m at powers of two)
/// All kinds return 0 at m = 1. Throws std::invalid_argument for m = 0.
double expected_depth(DepthFormulaKind kind, std::size_t m);

}  // namespace faircut
