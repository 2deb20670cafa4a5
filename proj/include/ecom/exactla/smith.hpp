#pragma once

#include <cstddef>
#include <vector>

#include "ecom/exactla/int_matrix.hpp"

namespace ecom::exactla {

/// A = U * D * V with U, V unimodular and D diagonal in invariant-factor form.
///
/// `left` and `right` are the inverses of U and V, so that left * A * right = D.
/// They are what kernel and image computations actually consume: the last
/// cols - rank columns of `right` span ker A, and the first rank columns of U
/// scaled by the invariant factors span im A.
struct SNFDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix left;
    IntMatrix right;
    std::vector<Integer> invariant_factors;

    std::size_t rank() const { return invariant_factors.size(); }
};

/// Smallest-absolute-value pivoting, ties broken by (row, col). Deterministic.
SNFDecomposition smith_normal_form(const IntMatrix& a);

/// Invariant factors only; skips the transform bookkeeping.
std::vector<Integer> invariant_factors(const IntMatrix& a);

std::size_t rank_over_z(const IntMatrix& a);

/// Basis of ker A (as columns of the result, cols(A) x (cols(A) - rank)).
/// The basis spans the full integer kernel, which is a saturated sublattice.
IntMatrix kernel_basis(const IntMatrix& a);

}  // namespace ecom::exactla
