#include "ecom/holim/limits.hpp"

#include "ecom/error.hpp"

namespace ecom::holim {

namespace {

std::vector<std::size_t> offsets(const std::vector<Chain>& chains, const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> off{0};
    for (const auto& c : chains) off.push_back(off.back() + dims[c.back()]);
    return off;
}

// (δy)(a_0..a_{m+1}) = Σ_{i ≤ m} (-1)^i y(face_i) + (-1)^{m+1} p_{a_m a_{m+1}} y(a_0..a_m).
FpMatrix coboundary(const PosetSn& poset, const Block& block, const std::vector<std::size_t>& dims, std::uint32_t p,
                    std::size_t m) {
    const auto& src = poset.chains(m + 1);
    const auto& dst = poset.chains(m + 2);
    const auto so = offsets(src, dims);
    const auto to = offsets(dst, dims);
    FpMatrix out(to.back(), so.back(), p);
    for (std::size_t r = 0; r < dst.size(); ++r) {
        const Chain& c = dst[r];
        const std::size_t top = dims[c.back()];
        if (top == 0) continue;
        for (std::size_t i = 0; i <= m; ++i) {
            Chain face = c;
            face.erase(face.begin() + static_cast<long>(i));
            const std::size_t s = poset.chain_index(face);
            const long sign = i % 2 ? -1 : 1;
            for (std::size_t t = 0; t < top; ++t) out.set(to[r] + t, so[s] + t, sign);
        }
        Chain face(c.begin(), c.end() - 1);
        const std::size_t s = poset.chain_index(face);
        const std::size_t below = dims[face.back()];
        if (below == 0) continue;
        const FpMatrix& f = block.at({face.back(), c.back()});
        const long sign = (m + 1) % 2 ? -1 : 1;
        for (std::size_t x = 0; x < top; ++x)
            for (std::size_t y = 0; y < below; ++y)
                if (f(x, y)) out.set(to[r] + x, so[s] + y, sign * static_cast<long>(f(x, y)));
    }
    return out;
}

}  // namespace

CosimplicialComplex cosimplicial_complex(const PosetSn& poset, const Block& block, const std::vector<std::size_t>& dims,
                                         std::uint32_t p, int k) {
    CosimplicialComplex c;
    c.degree = k;
    c.d0 = coboundary(poset, block, dims, p, 0);
    c.d1 = coboundary(poset, block, dims, p, 1);
    c.c0 = c.d0.cols();
    c.c1 = c.d0.rows();
    c.c2 = c.d1.rows();
    return c;
}

CosimplicialComplex cosimplicial_complex(const PosetDiagram& d, int k) {
    if (auto f = d.functoriality_failures(k); !f.empty()) throw FunctorialityViolation(f.front());
    auto c = cosimplicial_complex(d.poset(), d.block(k), d.dims(k), d.prime(), k);
    if (!(c.d1 * c.d0).is_zero()) throw CompositionNonzero("d1 d0 != 0 in degree " + std::to_string(k));
    return c;
}

HigherLimits limits_of(const CosimplicialComplex& c) {
    const std::size_t r0 = c.d0.rank();
    const std::size_t r1 = c.d1.rank();
    return {c.c0 - r0, c.c1 - r0 - r1, c.c2 - r1};
}

HigherLimits higher_limits(const PosetDiagram& d, int k) { return limits_of(cosimplicial_complex(d, k)); }

bool lim2_vanishing_check(const PosetDiagram& d, int k) {
    const auto c = cosimplicial_complex(d, k);
    return c.d1.rank() == c.c2;
}

BousfieldKan bk_assemble(const PosetDiagram& d) {
    BousfieldKan out;
    std::vector<PoincareSeries::Coeff> total(static_cast<std::size_t>(d.max_degree()) + 2, 0);
    for (int k = 0; k <= d.max_degree(); ++k) {
        const auto l = higher_limits(d, k);
        if (l.lim2 != 0)
            throw NonVanishingLim2("lim^2 has dimension " + std::to_string(l.lim2) + " in degree " + std::to_string(k));
        out.e2.push_back(l);
        total[static_cast<std::size_t>(k)] += l.lim0;
        total[static_cast<std::size_t>(k) + 1] += l.lim1;
    }
    // lim^1 of the top degree lands one past the range the diagram covers.
    total.pop_back();
    out.total = PoincareSeries(total);
    return out;
}

}  // namespace ecom::holim
