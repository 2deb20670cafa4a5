#include <filesystem>
#include <memory>

#include "doctest.h"
#include "ecom/error.hpp"
#include "ecom/exactla/abelian_group.hpp"
#include "ecom/grpcoh/cohomology.hpp"
#include "ecom/grpcoh/finite_group.hpp"
#include "ecom/grpcoh/group_module.hpp"
#include "ecom/grpcoh/resolution.hpp"

using namespace ecom::grpcoh;
using ecom::exactla::AbelianGroup;
using ecom::exactla::p_primary;
using ecom::exactla::parse_abelian_group;

namespace {

std::vector<std::string> table(const GroupModule& m, std::size_t top, unsigned p = 0) {
    std::vector<std::string> out;
    for (auto g : group_cohomology_range(m, top)) out.push_back((p ? p_primary(g, p) : g).to_string());
    return out;
}

std::vector<std::string> from_rule(std::size_t top, auto rule) {
    std::vector<std::string> out;
    for (std::size_t d = 0; d <= top; ++d) out.push_back(parse_abelian_group(rule(d)).to_string());
    return out;
}

}  // namespace

TEST_CASE("Σ3 closes to six elements with a stable hash") {
    const auto g = sigma3();
    CHECK(g->order() == 6);
    CHECK(g->content_hash() == symmetric_group(3).content_hash());
    CHECK(g->content_hash() != cyclic_group(6).content_hash());
    for (std::size_t a = 0; a < 6; ++a) CHECK(g->mul(a, g->inverse(a)) == g->identity());
}

TEST_CASE("resolutions are exact and equivariant") {
    for (auto g : {sigma3(), std::make_shared<const FiniteGroup>(cyclic_group(4)),
                   std::make_shared<const FiniteGroup>(symmetric_group(2))}) {
        const FreeResolution res = free_resolution(g, 7);
        CHECK(res.length() == 7);
        CHECK_NOTHROW(verify_resolution(res));
    }
}

TEST_CASE("cohomology does not depend on the kernel selection") {
    const auto g = sigma3();
    const FreeResolution a = free_resolution(g, 9);
    const FreeResolution b = free_resolution(g, 9, {.reverse_selection = true});
    CHECK_NOTHROW(verify_resolution(b));
    for (const auto& name : sigma3_module_names()) {
        const GroupModule m = sigma3_module(name);
        for (std::size_t d = 0; d <= 8; ++d) CHECK(group_cohomology(a, m, d) == group_cohomology(b, m, d));
    }
}

TEST_CASE("cyclic groups: H^d(C_n; Z) = Z, 0, Z/n, 0, ...") {
    for (std::size_t n : {2, 3, 4, 5}) {
        const auto g = std::make_shared<const FiniteGroup>(cyclic_group(n));
        const auto t = table(trivial_module(g), 8);
        CHECK(t == from_rule(8, [&](std::size_t d) {
                  return d == 0 ? std::string("Z") : d % 2 ? std::string("0") : "Z/" + std::to_string(n);
              }));
    }
}

TEST_CASE("Σ3 with trivial coefficients") {
    CHECK(table(sigma3_module("trivial"), 12) == from_rule(12, [](std::size_t d) -> std::string {
              if (d == 0) return "Z";
              if (d % 4 == 0) return "Z/6";
              if (d % 4 == 2) return "Z/2";
              return "0";
          }));
    CHECK(table(sigma3_module("trivial"), 0) == std::vector<std::string>{"Z"});
}

TEST_CASE("Σ3 p-primary tables") {
    auto every = [](std::size_t period, std::size_t residue, const char* g, bool skip_zero = false) {
        return [=](std::size_t d) -> std::string {
            if (skip_zero && d == 0) return "0";
            return d % period == residue ? g : "0";
        };
    };
    CHECK(table(sigma3_module("standard"), 11, 3) == from_rule(11, every(4, 3, "Z/3")));
    CHECK(table(sigma3_module("sign"), 11, 3) == from_rule(11, every(4, 2, "Z/3")));
    CHECK(table(sigma3_module("sign"), 11, 2) == from_rule(11, every(2, 1, "Z/2")));
    CHECK(table(sigma3_module("standard"), 11, 2) == from_rule(11, every(1, 2, "0")));
    CHECK(table(sigma3_module("standard⊗sign"), 11, 3) == from_rule(11, every(4, 1, "Z/3")));
    CHECK(table(sigma3_module("standard⊗sign"), 11, 2) == from_rule(11, every(1, 2, "0")));
    CHECK(table(sigma3_module("standard⊗standard"), 11, 3) == from_rule(11, [](std::size_t d) -> std::string {
              return d == 0 ? "Z" : d % 4 == 2 ? "Z/3" : "0";
          }));
    CHECK(table(sigma3_module("M⊗M"), 11, 2) == from_rule(11, [](std::size_t d) -> std::string {
              return d == 0 ? "Z" : "0";
          }));
}

TEST_CASE("H^0 is the invariant lattice") {
    for (const auto& name : sigma3_module_names()) {
        const GroupModule m = sigma3_module(name);
        CHECK(group_cohomology(m, 0) == AbelianGroup::free(m.invariants_brute_force().cols()));
    }
}

TEST_CASE("module catalog") {
    CHECK(sigma3_module("M_S").rank() == 2);
    CHECK(sigma3_module("M*M").rank() == 4);
    CHECK(sigma3_module("S").character() == sigma3_module("sign").character());
    CHECK_THROWS_AS(sigma3_module("Q"), ecom::UnknownName);
    const GroupModule mm = tensor(sigma3_module("M"), sigma3_module("M"));
    CHECK(mm.character() == sigma3_module("M⊗M").character());
    CHECK(direct_sum(mm, sigma3_module("S")).rank() == 5);
}

TEST_CASE("resolution serialization and the disk cache") {
    const auto g = sigma3();
    const FreeResolution res = free_resolution(g, 5);
    const FreeResolution back = deserialize_resolution(serialize_resolution(res), g);
    CHECK(back.ranks == res.ranks);
    CHECK(back.boundaries == res.boundaries);

    const auto dir = std::filesystem::temp_directory_path() / "ecom-unit-cache";
    std::filesystem::remove_all(dir);
    const ResolutionCache cache(dir);
    CHECK_FALSE(cache.load(g, 3).has_value());
    cache.store(res);
    REQUIRE(cache.path_for(*g).has_value());
    CHECK(std::filesystem::exists(*cache.path_for(*g)));
    CHECK(cache.load(g, 5).has_value());
    CHECK_FALSE(cache.load(g, 6).has_value());
    CHECK_FALSE(ResolutionCache(std::nullopt).path_for(*g).has_value());
    std::filesystem::remove_all(dir);
}
