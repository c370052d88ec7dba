#include "faircut/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace faircut {

ColumnMatrix::ColumnMatrix(std::size_t rows, std::size_t cols, std::vector<double> column_major)
    : rows_(rows), cols_(cols), values_(std::move(column_major)) {
    if (rows_ < 1 || cols_ < 1)
        throw std::invalid_argument("ColumnMatrix: rows and cols must be >= 1");
    if (values_.size() != rows_ * cols_)
        throw std::invalid_argument("ColumnMatrix: value count does not match rows*cols");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            throw std::invalid_argument("ColumnMatrix: non-finite value at row " +
                                        std::to_string(i % rows_) + ", column " +
                                        std::to_string(i / rows_));
    }
}

ColumnMatrix ColumnMatrix::from_rows(std::size_t rows, std::size_t cols,
                                     std::span<const double> row_major) {
    if (row_major.size() != rows * cols)
        throw std::invalid_argument("ColumnMatrix::from_rows: value count does not match rows*cols");
    std::vector<double> colmajor(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            colmajor[c * rows + r] = row_major[r * cols + c];
    return ColumnMatrix(rows, cols, std::move(colmajor));
}

std::vector<double> ColumnMatrix::row(std::size_t r) const {
    std::vector<double> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

ColumnStats column_stats(const ColumnMatrix& matrix, std::span<const RowIndex> subset,
                         std::size_t col) {
    if (subset.empty())
        throw std::invalid_argument("column_stats: empty row subset");
    const auto values = matrix.column(col);

    ColumnStats st;
    double sum = 0.0;
    st.min = st.max = values[subset[0]];
    for (RowIndex r : subset) {
        const double x = values[r];
        sum += x;
        if (x < st.min) st.min = x;
        if (x > st.max) st.max = x;
    }
    const double n = static_cast<double>(subset.size());
    st.mean = sum / n;
    st.distinct_gt1 = st.min < st.max;
    if (st.distinct_gt1) {
        double ssd = 0.0;
        for (RowIndex r : subset) {
            const double d = values[r] - st.mean;
            ssd += d * d;
        }
        st.sdev = std::sqrt(ssd / n);
    }
    return st;
}

std::optional<double> kurtosis(const ColumnMatrix& matrix, std::span<const RowIndex> subset,
                               std::size_t col) {
    if (subset.size() < 2)
        throw std::invalid_argument("kurtosis: need at least 2 rows");
    const auto values = matrix.column(col);

    double sum = 0.0;
    for (RowIndex r : subset) sum += values[r];
    const double n = static_cast<double>(subset.size());
    const double mean = sum / n;

    double m2 = 0.0, m4 = 0.0;
    bool varies = false;
    for (RowIndex r : subset) {
        const double d = values[r] - mean;
        const double d2 = d * d;
        m2 += d2;
        m4 += d2 * d2;
        varies = varies || values[r] != values[subset[0]];
    }
    if (!varies) return std::nullopt;
    m2 /= n;
    m4 /= n;
    return m4 / (m2 * m2);
}

}  // namespace faircut
