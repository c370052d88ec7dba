#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "faircut/common.hpp"

namespace faircut {

/// Deterministic random stream derived from (base_seed, stream_index).
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard; every distribution on top of it is implemented here rather than
/// through std::*_distribution, so identical (seed, index) pairs yield
/// identical draw sequences on any conforming toolchain. Streams for
/// different indices are seeded through splitmix64-style mixing of the pair.
///
/// A stream is single-owner: never share one across threads. Constructing
/// streams is pure and thread-safe.
class RngStream {
public:
    RngStream(std::uint64_t base_seed, std::uint64_t stream_index);

    /// Identifier written into model files so round-trips are honest about
    /// which generator produced the fit.
    static constexpr const char* generator_id = "mt19937_64/sm-v1";

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53 bits of randomness.
    double uniform01();

    /// Uniform integer in [0, upper); upper must be >= 1.
    std::size_t uniform_index(std::size_t upper);

    /// Index i with probability weights[i] / sum(weights). Weights must be
    /// finite and non-negative with a positive sum; ties on the cumulative
    /// boundary resolve toward the lower index (zero-weight entries are
    /// never selected).
    std::size_t weighted_index(std::span<const double> weights);

    /// Standard normal deviate (Marsaglia polar, spare cached).
    double standard_normal();

    /// k distinct indices from [0, population), all subsets equiprobable.
    RowSubset sample_without_replacement(std::size_t population, std::size_t k);

    /// k independent uniform indices from [0, population); duplicates allowed.
    RowSubset sample_with_replacement(std::size_t population, std::size_t k);

private:
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace faircut
