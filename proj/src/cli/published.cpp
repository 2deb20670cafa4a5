#include "ecom/cli/published.hpp"

#include <functional>
#include <map>

#include "ecom/error.hpp"
#include "ecom/grpcoh/group_module.hpp"

namespace ecom::cli {

namespace {

using exactla::Integer;
using exactla::parse_poincare;

std::vector<AbelianGroup> table(std::size_t max_degree, const std::function<AbelianGroup(std::size_t)>& f) {
    std::vector<AbelianGroup> out;
    for (std::size_t d = 0; d <= max_degree; ++d) out.push_back(f(d));
    return out;
}

AbelianGroup zp(unsigned p, std::size_t count = 1) { return AbelianGroup(0, std::vector<Integer>(count, Integer(p))); }

}  // namespace

std::optional<std::vector<AbelianGroup>> published_sigma3_cohomology(const std::string& module, unsigned p,
                                                                     std::size_t max_degree) {
    const std::string name = grpcoh::sigma3_module(module).name();
    const auto Z = AbelianGroup::free(1);
    const auto O = AbelianGroup::zero();
    if (p == 0) {
        if (name != "trivial") return std::nullopt;
        return table(max_degree, [&](std::size_t d) {
            if (d == 0) return Z;
            if (d % 4 == 0) return AbelianGroup::cyclic(6);
            if (d % 4 == 2) return AbelianGroup::cyclic(2);
            return O;
        });
    }
    if (p == 3) {
        if (name == "trivial") return table(max_degree, [&](std::size_t d) { return d == 0 ? Z : d % 4 == 0 ? zp(3) : O; });
        if (name == "sign") return table(max_degree, [&](std::size_t d) { return d % 4 == 2 ? zp(3) : O; });
        if (name == "standard" || name == "standard'")
            return table(max_degree, [&](std::size_t d) { return d % 4 == 3 ? zp(3) : O; });
        if (name == "standard⊗standard")
            return table(max_degree, [&](std::size_t d) { return d == 0 ? Z : d % 4 == 2 ? zp(3) : O; });
        if (name == "standard⊗sign") return table(max_degree, [&](std::size_t d) { return d % 4 == 1 ? zp(3) : O; });
    }
    if (p == 2) {
        if (name == "trivial") return table(max_degree, [&](std::size_t d) { return d == 0 ? Z : d % 2 == 0 ? zp(2) : O; });
        if (name == "sign") return table(max_degree, [&](std::size_t d) { return d % 2 == 1 ? zp(2) : O; });
        if (name == "standard" || name == "standard'" || name == "standard⊗sign")
            return table(max_degree, [&](std::size_t) { return O; });
        if (name == "standard⊗standard") return table(max_degree, [&](std::size_t d) { return d == 0 ? Z : O; });
    }
    return std::nullopt;
}

std::optional<std::vector<AbelianGroup>> published_total_cohomology(const std::string& fibration,
                                                                    std::size_t max_degree) {
    static const std::map<std::string, std::map<std::size_t, std::string>> tables = {
        {"flbar3_p3", {{0, "Z"}, {4, "Z/3"}, {5, "Z/3"}}},
        {"flbar3_p2", {{0, "Z"}, {2, "Z/2"}, {4, "Z/2"}, {6, "Z/2"}}},
        {"fl3xfl3_p2",
         {{0, "Z"}, {8, "Z"}, {12, "Z"}, {2, "Z/2"}, {7, "Z/2"}, {9, "Z/2"}, {11, "Z/2"}, {4, "Z + Z/2"},
          {6, "Z^2 + Z/2"}}},
        {"fl3xfl3_p3",
         {{0, "Z"}, {12, "Z"}, {4, "Z + Z/3"}, {5, "Z/3 + Z/3"}, {6, "Z^2 + Z/3"}, {7, "Z/3"}, {9, "Z/3"},
          {8, "Z + Z/3 + Z/3"}}},
    };
    auto it = tables.find(fibration);
    if (it == tables.end()) return std::nullopt;
    return table(max_degree, [&](std::size_t d) {
        auto jt = it->second.find(d);
        return jt == it->second.end() ? AbelianGroup::zero() : exactla::parse_abelian_group(jt->second);
    });
}

std::optional<PoincareSeries> published_mod_p_series(const std::string& fibration) {
    if (fibration == "flbar3_p3") return parse_poincare("1+t^3+2t^4+t^5");
    if (fibration == "flbar3_p2") return parse_poincare("1+t+t^2+t^3+t^4+t^5+t^6");
    if (fibration == "fl3xfl3_p2")
        return parse_poincare("1+t+t^2+t^3+2t^4+t^5+4t^6+t^7+2t^8+t^9+t^10+t^11+t^12");
    return std::nullopt;
}

std::optional<PublishedHomogeneousSpace> published_u3t2(unsigned p) {
    if (p == 2)
        return PublishedHomogeneousSpace{"F2[z5, β]/(z5^2, β^2)",
                                         parse_poincare("1+t^2+t^5+t^7"),
                                         {{"z1", "β2", false}, {"z3", "β1^2", false}, {"z5", "β1^2β2", true}}};
    if (p == 3)
        return PublishedHomogeneousSpace{
            "F3[z3, β]/(z3^2, β^3)",
            parse_poincare("1+t^2+t^3+t^4+t^5+t^7"),
            {{"z1", "2β1+β2", false}, {"z3", "β1^2+2β1β2", true}, {"z5", "β1^2β2", false}}};
    return std::nullopt;
}

}  // namespace ecom::cli
