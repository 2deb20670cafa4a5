#include "ecom/grpcoh/cohomology.hpp"

#include "ecom/exactla/cohomology.hpp"

namespace ecom::grpcoh {

IntMatrix hom_differential(const FreeResolution& res, const GroupModule& module, std::size_t k) {
    const FiniteGroup& G = *res.group;
    const std::size_t n = G.order(), m = module.rank();
    if (k + 1 > res.length()) throw ResolutionFailure("resolution too short for δ^" + std::to_string(k));
    const IntMatrix& d = res.boundary(k + 1);
    const std::size_t r_src = res.ranks[k], r_dst = res.ranks[k + 1];
    IntMatrix delta(m * r_dst, m * r_src);
    for (std::size_t j = 0; j < r_dst; ++j) {
        const std::size_t col = j * n + G.identity();
        for (std::size_t i = 0; i < r_src; ++i)
            for (std::size_t g = 0; g < n; ++g) {
                const auto& c = d(i * n + g, col);
                if (sgn(c) == 0) continue;
                delta.add_block(j * m, i * m, c * module.action(g));
            }
    }
    return delta;
}

AbelianGroup group_cohomology(const FreeResolution& res, const GroupModule& module, std::size_t d) {
    if (res.group->canonical_text() != module.group().canonical_text())
        throw ShapeMismatch("module and resolution belong to different groups");
    const IntMatrix in = d == 0 ? IntMatrix(module.rank() * res.ranks[0], 0) : hom_differential(res, module, d - 1);
    const IntMatrix out = hom_differential(res, module, d);
    return exactla::cohomology_at(in, out);
}

AbelianGroup group_cohomology(const GroupModule& module, std::size_t d) {
    return group_cohomology(*resolution_for(module.group_ptr(), d + 1), module, d);
}

std::vector<AbelianGroup> group_cohomology_range(const GroupModule& module, std::size_t max_degree) {
    const auto res = resolution_for(module.group_ptr(), max_degree + 1);
    std::vector<AbelianGroup> out;
    for (std::size_t d = 0; d <= max_degree; ++d) out.push_back(group_cohomology(*res, module, d));
    return out;
}

bool periodicity_verify(const GroupModule& module, std::size_t period, std::size_t range) {
    if (period == 0 || range < period + 1) return false;
    const auto h = group_cohomology_range(module, range);
    for (std::size_t d = 1; d + period <= range; ++d)
        if (h[d] != h[d + period]) return false;
    return true;
}

CohomologyValue group_cohomology_extended(const GroupModule& module, std::size_t d, std::size_t period,
                                          std::size_t computed_range) {
    if (d <= computed_range) return {group_cohomology(module, d), false, d};
    if (!periodicity_verify(module, period, computed_range))
        throw ResolutionFailure("H^*(" + module.group().name() + "; " + module.name() + ") is not " +
                                std::to_string(period) + "-periodic on [1, " + std::to_string(computed_range) + "]");
    std::size_t src = d;
    while (src > computed_range) src -= period;
    if (src == 0) src += period;
    return {group_cohomology(module, src), true, src};
}

}  // namespace ecom::grpcoh
