#pragma once

#include <cstddef>
#include <vector>

#include "ecom/exactla/abelian_group.hpp"
#include "ecom/grpcoh/group_module.hpp"
#include "ecom/grpcoh/resolution.hpp"

namespace ecom::grpcoh {

using exactla::AbelianGroup;

/// δ^k : Hom_ZG(F_k, M) = M^{r_k} -> M^{r_{k+1}}. Block (j, i) is Σ_g c_j(i, g) ρ(g),
/// where c_j is the boundary of the j-th free generator of F_{k+1}.
IntMatrix hom_differential(const FreeResolution& res, const GroupModule& module, std::size_t k);

/// H^d(G; M) from the given resolution, which must have length >= d + 1.
AbelianGroup group_cohomology(const FreeResolution& res, const GroupModule& module, std::size_t d);

/// Same, with the memoized (and possibly disk-cached) resolution of the module's group.
AbelianGroup group_cohomology(const GroupModule& module, std::size_t d);

/// H^0 .. H^max_degree.
std::vector<AbelianGroup> group_cohomology_range(const GroupModule& module, std::size_t max_degree);

struct CohomologyValue {
    AbelianGroup group;
    /// True when the value was read off a lower degree through verified periodicity.
    bool extended_by_periodicity = false;
    std::size_t source_degree = 0;
};

/// H^d for any d: computed directly up to `computed_range`, beyond that taken from
/// d - k*period after checking periodicity on [1, computed_range]. Throws
/// ResolutionFailure if the check fails.
CohomologyValue group_cohomology_extended(const GroupModule& module, std::size_t d, std::size_t period,
                                          std::size_t computed_range);

/// True iff H^d ≅ H^{d+period} for every 1 <= d <= range - period.
bool periodicity_verify(const GroupModule& module, std::size_t period, std::size_t range);

}  // namespace ecom::grpcoh
