#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "faircut/common.hpp"

namespace faircut {

/// Immutable numeric dataset, stored column-contiguously in double precision.
/// Construction rejects NaN / infinite entries and empty dimensions; after
/// that the object is safe for unrestricted concurrent reads.
class ColumnMatrix {
public:
    ColumnMatrix(std::size_t rows, std::size_t cols, std::vector<double> column_major);

    static ColumnMatrix from_rows(std::size_t rows, std::size_t cols,
                                  std::span<const double> row_major);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double at(std::size_t row, std::size_t col) const {
        return values_[col * rows_ + row];
    }

    std::span<const double> column(std::size_t col) const {
        return {values_.data() + col * rows_, rows_};
    }

    /// One row gathered into a contiguous vector (scoring-path convenience).
    std::vector<double> row(std::size_t r) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> values_;
};

/// Population summary of one column over one row subset.
struct ColumnStats {
    double mean = 0.0;
    double sdev = 0.0;  // population standard deviation; 0 iff min == max
    double min = 0.0;
    double max = 0.0;
    bool distinct_gt1 = false;
};

/// Population statistics of `col` over exactly the rows in `subset`.
/// Two-pass (shifted) variance; throws on an empty subset.
ColumnStats column_stats(const ColumnMatrix& matrix, std::span<const RowIndex> subset,
                         std::size_t col);

/// Raw (non-excess) kurtosis E[(x-mu)^4] / sigma^4 over the subset; a normal
/// sample sits near 3. Returns nullopt for a constant column ("no signal"),
/// never divides by zero. Requires at least 2 rows.
std::optional<double> kurtosis(const ColumnMatrix& matrix, std::span<const RowIndex> subset,
                               std::size_t col);

}  // namespace faircut
