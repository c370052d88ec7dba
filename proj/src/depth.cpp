#include "faircut/depth.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace faircut {

namespace {

double harmonic_depth(std::size_t m) {
    // Small terms first for accuracy.
    double h = 0.0;
    for (std::size_t i = m; i >= 1; --i) {
        h += 1.0 / static_cast<double>(i);
    }
    return 2.0 * (h - 1.0);
}

double averaged_optimal_depth(std::size_t m) {
    const double md = static_cast<double>(m);
    return (md * (md + 1.0) / 2.0 - 1.0) / md;
}

double pooled_optimal_depth(std::size_t m) {
    // Only O(log m) distinct arguments are reachable by floor/ceil halving.
    std::unordered_map<std::size_t, double> memo;
    std::function<double(std::size_t)> rec = [&](std::size_t k) -> double {
        if (k <= 1) return 0.0;
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        const std::size_t lo = k / 2;
        const std::size_t hi = k - lo;
        const double kd = static_cast<double>(k);
        const double v = 1.0 + (static_cast<double>(lo) / kd) * rec(lo) +
                         (static_cast<double>(hi) / kd) * rec(hi);
        memo.emplace(k, v);
        return v;
    };
    return rec(m);
}

}  // namespace

double expected_depth(DepthFormulaKind kind, std::size_t m) {
    if (m == 0) {
        throw std::invalid_argument("expected_depth: m must be >= 1");
    }
    if (m == 1) return 0.0;
    switch (kind) {
        case DepthFormulaKind::harmonic:
            return harmonic_depth(m);
        case DepthFormulaKind::averaged_gain_optimal:
            return averaged_optimal_depth(m);
        case DepthFormulaKind::pooled_gain_optimal:
            return pooled_optimal_depth(m);
    }
    throw std::invalid_argument("expected_depth: unknown formula");
}

}  // namespace faircut
