#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ecom/exactla/abelian_group.hpp"

namespace ecom::exactla {

/// Polynomial with nonnegative integer coefficients, index = degree. Trailing zeros are stripped.
class PoincareSeries {
public:
    using Coeff = std::uint64_t;

    PoincareSeries() = default;
    explicit PoincareSeries(std::vector<Coeff> coefficients);

    static PoincareSeries one() { return PoincareSeries({1}); }
    static PoincareSeries monomial(std::size_t degree, Coeff c = 1);

    const std::vector<Coeff>& coefficients() const { return c_; }
    /// Zero past the stored length.
    Coeff operator[](std::size_t d) const { return d < c_.size() ? c_[d] : 0; }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }

    Coeff total() const;
    /// Sum of (-1)^d c_d.
    long long euler_characteristic() const;
    bool is_palindromic() const;
    /// Coefficients shifted: t -> t^k.
    PoincareSeries substitute_power(std::size_t k) const;
    PoincareSeries truncate(std::size_t max_degree) const;

    PoincareSeries operator+(const PoincareSeries& o) const;
    PoincareSeries operator*(const PoincareSeries& o) const;
    friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;

    /// "1+t^3+2t^4+t^5"; the zero series prints as "0".
    std::string to_string() const;

private:
    std::vector<Coeff> c_;
    void trim();
};

/// Parses the to_string form. Also accepts "t" for t^1 and spaces.
PoincareSeries parse_poincare(const std::string& text);

/// Mod-p Betti numbers from p-local integral cohomology (universal coefficients):
/// b_d = free(H^d) + #p-torsion(H^d) + #p-torsion(H^{d+1}).
PoincareSeries mod_p_series(const std::vector<AbelianGroup>& graded, unsigned long p);

/// Free ranks only.
PoincareSeries rational_series(const std::vector<AbelianGroup>& graded);

}  // namespace ecom::exactla
