#pragma once

#include <cstdint>
#include <vector>

#include "ecom/holim/diagram.hpp"
#include "ecom/holim/limits.hpp"

namespace ecom::holim {

constexpr int kU3MaxDegree = 14;

/// The seven spaces H(i) over S(2) with their mod-p series. At p = 2 the series are the
/// published ones; at p = 3 they come from the spectral sequence engines and Künneth.
std::vector<DiagramObject> u3_objects(std::uint32_t p);

/// Properties the maps must satisfy: identities in degree 0 and on (0,2) -> (0,1,2);
/// at p = 2 also the degree-3 injectivity and the degree-4 projection.
std::vector<MapConstraint> u3_constraints(std::uint32_t p);

/// The published (lim0, lim1) per degree 0..14.
std::vector<HigherLimits> published_e2(std::uint32_t p);
/// The published mod-p cohomology of E_com U(3) through degree 14.
PoincareSeries published_total(std::uint32_t p);

struct LimitTarget {
    HigherLimits limits;
    Provenance source = Provenance::Published;
};

/// What the bundled maps are built to realise. Equal to published_e2 except where the
/// published pair disagrees with the Euler characteristic of the object series (p = 2,
/// degrees 5, 10, 11). There the target is the χ-consistent pair closest to the published
/// one; ties go to pairs that keep dim H^n >= the rational Betti numbers, then to keeping lim0.
std::vector<LimitTarget> reconstruction_targets(std::uint32_t p);

/// χ_k = Σ dim H^k(object) - Σ over 2-chains + Σ over 3-chains.
/// 1+t^4+2t^6+t^8+t^12, from the rational invariant ring.
PoincareSeries rational_betti();

long long block_euler_characteristic(const PosetSn& poset, const std::vector<std::size_t>& dims);

}  // namespace ecom::holim
