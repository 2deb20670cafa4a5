#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ecom/coinv/polynomial.hpp"

namespace ecom::specseq {

using BasePolynomial = coinv::Polynomial<coinv::Integer>;

/// Chern classes c_1..c_n of a sum of n line bundles over (CP∞)^k, as polynomials
/// in β_1..β_k (each of degree 2). Entry i has cohomological degree 2(i+1).
struct ChernVector {
    std::size_t base_rank = 0;
    std::vector<BasePolynomial> classes;

    /// "1 + (2β1+β2) + (β1^2+2β1β2) + β1^2β2"; zero classes are skipped.
    std::string total_to_string() const;
};

/// Expands Π_i (1 + Σ_j weights[i][j] β_j). Rows are line bundles.
ChernVector whitney_chern(const std::vector<std::vector<long>>& weights);

/// "2β1+β2"; "0" for zero. Monomials in descending lexicographic order.
std::string base_polynomial_string(const BasePolynomial& p);

}  // namespace ecom::specseq
