#pragma once

#include <cstddef>
#include <vector>

#include "ecom/exactla/int_matrix.hpp"

namespace ecom::exactla {

/// Sublattice of Z^n kept in row echelon (Hermite) form, grown one vector at a time.
class IntegerSpan {
public:
    explicit IntegerSpan(std::size_t ambient) : n_(ambient) {}

    std::size_t ambient() const { return n_; }
    std::size_t rank() const { return rows_.size(); }

    /// Returns true when the lattice grew.
    bool insert(std::vector<Integer> v);
    bool contains(std::vector<Integer> v) const;

    /// Basis rows in echelon order, pivots positive.
    const std::vector<std::vector<Integer>>& basis() const { return rows_; }

private:
    std::size_t n_;
    std::vector<std::vector<Integer>> rows_;
    std::vector<std::size_t> pivot_;

    static std::size_t leading(const std::vector<Integer>& v, std::size_t from);
    // Subtracts multiples of rows[k] from rows above it so their entries at its pivot lie in [0, pivot).
    void reduce_above(std::size_t k);
};

}  // namespace ecom::exactla
