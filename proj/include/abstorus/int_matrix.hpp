#pragma once

#include <cstddef>
#include <vector>

#include "abstorus/numeric.hpp"

namespace abstorus {

/// Dense matrix over arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
    IntMatrix(size_t rows, size_t cols, std::vector<Int> entries);

    static IntMatrix identity(size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Int& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    Int& at(size_t i, size_t j) { return e_[i * cols_ + j]; }

    std::vector<Int> row(size_t i) const;
    void set_row(size_t i, const std::vector<Int>& r);

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const;

    /// Stack other below this (column counts must agree; an empty matrix acts
    /// as a 0 x cols block).
    IntMatrix stack(const IntMatrix& below) const;

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    void negate_row(size_t i);
    void negate_col(size_t j);
    /// row[i] += k * row[j]
    void add_row_multiple(size_t i, size_t j, const Int& k);
    /// col[i] += k * col[j]
    void add_col_multiple(size_t i, size_t j, const Int& k);

private:
    size_t rows_, cols_;
    std::vector<Int> e_;
};

/// Exact determinant via fraction-free elimination. Square input required.
Int determinant(const IntMatrix& a);

}  // namespace abstorus
