#include "faircut/tree.hpp"

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>

namespace faircut {

IsolationTree build_tree(const ColumnMatrix& matrix, RowSubset subset,
                         const TreeBuildConfig& config, RngStream& stream) {
    if (subset.empty()) {
        throw std::invalid_argument("build_tree: subset must hold at least 1 row");
    }

    IsolationTree tree;
    tree.sample_size = subset.size();
    tree.nodes.reserve(2 * subset.size());
    RowSubset rows = std::move(subset);  // working buffer, partitioned in place

    constexpr std::uint32_t no_parent = std::numeric_limits<std::uint32_t>::max();
    struct Frame {
        std::size_t begin;
        std::size_t end;
        std::size_t depth;
        std::uint32_t parent;
        bool is_left;
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{0, rows.size(), 0, no_parent, false});

    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        const auto index = static_cast<std::uint32_t>(tree.nodes.size());
        if (f.parent != no_parent) {
            auto& slot = f.is_left ? tree.nodes[f.parent].left : tree.nodes[f.parent].right;
            slot = index;
        }
        const std::size_t m = f.end - f.begin;

        const auto make_terminal = [&](double remainder) {
            TreeNode node;
            node.is_terminal = true;
            node.depth_value = static_cast<double>(f.depth) + remainder;
            tree.nodes.push_back(std::move(node));
        };

        if (m == 1) {
            make_terminal(0.0);
            continue;
        }
        if (config.termination.max_depth && f.depth >= *config.termination.max_depth) {
            make_terminal(expected_depth(config.depth_formula, m));
            continue;
        }

        const std::span<const RowIndex> node_rows(rows.data() + f.begin, m);
        auto split = choose_split(matrix, node_rows, config.ndim, config.selector,
                                  config.criterion, stream);
        if (!split) {
            // Nothing separable here (constant columns or constant
            // projections on every trial).
            make_terminal(expected_depth(config.depth_formula, m));
            continue;
        }
        if (config.termination.gain_threshold && split->gain &&
            *split->gain < *config.termination.gain_threshold) {
            make_terminal(expected_depth(config.depth_formula, m));
            continue;
        }

        TreeNode node;
        node.is_terminal = false;
        node.hyperplane = std::move(split->hyperplane);
        tree.nodes.push_back(std::move(node));

        const std::size_t n_left = split->left_rows.size();
        std::copy(split->left_rows.begin(), split->left_rows.end(),
                  rows.begin() + static_cast<std::ptrdiff_t>(f.begin));
        std::copy(split->right_rows.begin(), split->right_rows.end(),
                  rows.begin() + static_cast<std::ptrdiff_t>(f.begin + n_left));
        // Right pushed first so the left branch pops next: stream consumption
        // follows left-subtree-first order.
        stack.push_back(Frame{f.begin + n_left, f.end, f.depth + 1, index, false});
        stack.push_back(Frame{f.begin, f.begin + n_left, f.depth + 1, index, true});
    }
    return tree;
}

std::size_t count_nodes(const IsolationTree& tree) {
    if (tree.nodes.empty()) return 0;
    std::size_t count = 0;
    std::vector<std::uint32_t> stack{0};
    while (!stack.empty()) {
        const std::uint32_t i = stack.back();
        stack.pop_back();
        ++count;
        const TreeNode& node = tree.nodes[i];
        if (!node.is_terminal) {
            stack.push_back(node.right);
            stack.push_back(node.left);
        }
    }
    return count;
}

}  // namespace faircut
