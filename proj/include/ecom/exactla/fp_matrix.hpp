#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecom/exactla/int_matrix.hpp"

namespace ecom::exactla {

/// Dense matrix over F_p for a word-sized prime p. Entries are kept reduced in [0, p).
class FpMatrix {
public:
    using Entry = std::uint32_t;

    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    static FpMatrix identity(std::size_t n, std::uint32_t p);
    static FpMatrix from_rows(const std::vector<std::vector<long>>& rows, std::uint32_t p, std::size_t cols_if_empty = 0);
    static FpMatrix reduce(const IntMatrix& m, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t prime() const { return p_; }

    Entry operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long v);

    bool is_zero() const;
    FpMatrix transpose() const;
    FpMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const FpMatrix& b);

    /// Reduced row echelon form; pivot columns returned in `pivots` when non-null.
    FpMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    std::size_t rank() const;
    /// Columns span the kernel.
    FpMatrix kernel() const;
    /// Some X with (*this) * X = b, or nothing when inconsistent.
    std::optional<FpMatrix> solve(const FpMatrix& b) const;
    bool injective() const { return rank() == cols_; }
    bool surjective() const { return rank() == rows_; }

    std::vector<std::vector<long>> to_rows() const;
    std::string to_string() const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

    FpMatrix operator*(const FpMatrix& b) const;
    FpMatrix operator+(const FpMatrix& b) const;
    FpMatrix operator-(const FpMatrix& b) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<Entry> data_;

    Entry& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

std::size_t rank_mod_p(const IntMatrix& a, std::uint32_t p);

}  // namespace ecom::exactla
