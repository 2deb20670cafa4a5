#pragma once

#include <cstddef>
#include <vector>

#include "ecom/holim/diagram.hpp"

namespace ecom::holim {

/// C^0 -> C^1 -> C^2 of the normalized cosimplicial replacement in one degree.
/// C^m is the product over nondegenerate chains a_0 ⊂ ... ⊂ a_m of H^k(a_m).
struct CosimplicialComplex {
    int degree = 0;
    std::size_t c0 = 0, c1 = 0, c2 = 0;
    FpMatrix d0;  // C^1 x C^0
    FpMatrix d1;  // C^2 x C^1
};

struct HigherLimits {
    std::size_t lim0 = 0, lim1 = 0, lim2 = 0;
    friend bool operator==(const HigherLimits&, const HigherLimits&) = default;
};

/// Built from a block directly; no validation.
CosimplicialComplex cosimplicial_complex(const PosetSn& poset, const Block& block, const std::vector<std::size_t>& dims,
                                         std::uint32_t p, int k = 0);
/// Throws FunctorialityViolation when the diagram fails at degree k.
CosimplicialComplex cosimplicial_complex(const PosetDiagram& d, int k);

HigherLimits limits_of(const CosimplicialComplex& c);
HigherLimits higher_limits(const PosetDiagram& d, int k);

/// True iff d^1 is onto C^2.
bool lim2_vanishing_check(const PosetDiagram& d, int k);

struct BousfieldKan {
    std::vector<HigherLimits> e2;  // by k
    PoincareSeries total;          // H^n = lim^0 H^n + lim^1 H^{n-1}
};

/// Degrees 0..max_degree(); throws NonVanishingLim2 if some lim^2 is nonzero.
BousfieldKan bk_assemble(const PosetDiagram& d);

}  // namespace ecom::holim
