#include "faircut/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace faircut {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t stream_index) {
    return splitmix64(splitmix64(base_seed) ^
                      splitmix64(stream_index ^ 0xd1b54a32d192ed03ULL));
}

}  // namespace

RngStream::RngStream(std::uint64_t base_seed, std::uint64_t stream_index)
    : engine_(derive_seed(base_seed, stream_index)) {}

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t RngStream::uniform_index(std::size_t upper) {
    if (upper == 0) {
        throw std::invalid_argument("uniform_index: upper must be positive");
    }
    // Lemire's multiply-shift rejection method: unbiased without a modulo in
    // the common path.
    const std::uint64_t range = upper;
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * range;
    auto low = static_cast<std::uint64_t>(m);
    if (low < range) {
        const std::uint64_t threshold = (0ULL - range) % range;
        while (low < threshold) {
            x = next_u64();
            m = static_cast<__uint128_t>(x) * range;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::size_t>(m >> 64);
}

std::size_t RngStream::weighted_index(std::span<const double> weights) {
    if (weights.empty()) {
        throw std::invalid_argument("weighted_index: no weights");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            throw std::invalid_argument("weighted_index: weights must be finite and non-negative");
        }
        total += w;
    }
    if (total <= 0.0) {
        throw std::invalid_argument("weighted_index: weights sum to zero");
    }
    const double u = uniform01() * total;
    double cum = 0.0;
    std::size_t last_positive = 0;
    bool seen_positive = false;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] > 0.0) {
            last_positive = i;
            seen_positive = true;
        }
        cum += weights[i];
        if (cum > u) {
            // A zero-weight entry can only land here through floating-point
            // accumulation ties; push the pick to a positive-weight index.
            return weights[i] > 0.0 ? i : last_positive;
        }
    }
    (void)seen_positive;
    return last_positive;
}

double RngStream::standard_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_normal_ = v * factor;
    has_spare_ = true;
    return u * factor;
}

RowSubset RngStream::sample_without_replacement(std::size_t population, std::size_t k) {
    if (k > population) {
        throw std::invalid_argument("sample_without_replacement: k exceeds population");
    }
    RowSubset pool(population);
    for (std::size_t i = 0; i < population; ++i) {
        pool[i] = static_cast<RowIndex>(i);
    }
    // Partial Fisher-Yates: after k swaps the prefix is the sample.
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + uniform_index(population - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

RowSubset RngStream::sample_with_replacement(std::size_t population, std::size_t k) {
    if (population == 0) {
        throw std::invalid_argument("sample_with_replacement: empty population");
    }
    RowSubset out(k);
    for (std::size_t i = 0; i < k; ++i) {
        out[i] = static_cast<RowIndex>(uniform_index(population));
    }
    return out;
}

}  // namespace faircut
