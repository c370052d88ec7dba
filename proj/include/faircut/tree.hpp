#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "faircut/common.hpp"
#include "faircut/depth.hpp"
#include "faircut/matrix.hpp"
#include "faircut/rng.hpp"
#include "faircut/split.hpp"

namespace faircut {

/// When neither rule is set the tree isolates every point (splits continue
/// until single rows or constant subsets). A singleton node is always
/// terminal, so at least one stopping rule is active in every configuration.
struct TerminationPolicy {
    std::optional<std::size_t> max_depth;     // internal nodes only at depth < max_depth
    std::optional<double> gain_threshold;     // stop when the best gain falls below this

    bool full_isolation() const { return !max_depth && !gain_threshold; }
};

struct TreeNode {
    bool is_terminal = true;
    /// Terminal: actual depth plus the extrapolated expected depth of the
    /// points left unisolated here (zero extra for singletons).
    double depth_value = 0.0;
    /// Internal: split surface and child slots. Children always sit at a
    /// higher index than their parent.
    Hyperplane hyperplane{};
    std::uint32_t left = 0;
    std::uint32_t right = 0;
};

struct IsolationTree {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    std::size_t sample_size = 0;

    std::size_t node_count() const { return nodes.size(); }
};

struct TreeBuildConfig {
    std::size_t ndim = 1;
    ColumnSelector selector{};
    SplitCriterion criterion{};
    TerminationPolicy termination{};
    DepthFormulaKind depth_formula = DepthFormulaKind::harmonic;
};

/// Grow one isolation tree over `subset` (at least 1 row). Terminal depth
/// values carry the remainder extrapolation from config.depth_formula.
/// All randomness is drawn from `stream` in a fixed order (node split, then
/// the entire left subtree, then the right), so equal inputs give equal
/// trees.
IsolationTree build_tree(const ColumnMatrix& matrix, RowSubset subset,
                         const TreeBuildConfig& config, RngStream& stream);

/// Nodes reachable from the root, counted by traversal.
std::size_t count_nodes(const IsolationTree& tree);

}  // namespace faircut
