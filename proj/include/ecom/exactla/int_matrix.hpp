#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ecom/error.hpp"

namespace ecom::exactla {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
    static IntMatrix diagonal(const std::vector<Integer>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Integer>& data() const { return data_; }

    IntMatrix transpose() const;
    bool is_zero() const;
    Integer determinant() const;

    /// Sub-block rows [r0, r0+nr) x cols [c0, c0+nc).
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);
    void add_block(std::size_t r0, std::size_t c0, const IntMatrix& b);

    std::vector<Integer> column(std::size_t c) const;
    static IntMatrix from_columns(const std::vector<std::vector<Integer>>& cols, std::size_t nrows);

    // elementary operations
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& s, const IntMatrix& a);
std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v);

/// Kronecker product; index (i, k) of the result is i * b.rows() + k.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);
/// Block-diagonal sum.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// Nested-array text form "[[1,2],[3,4]]"; a 0 x n matrix is written as "[]" plus its shape elsewhere.
std::string to_nested_array(const IntMatrix& m);

}  // namespace ecom::exactla
