#include <random>

#include "doctest.h"
#include "ecom/error.hpp"
#include "ecom/holim/diagram.hpp"
#include "ecom/holim/limits.hpp"
#include "ecom/holim/poset.hpp"
#include "ecom/holim/reconstruct.hpp"
#include "ecom/holim/u3.hpp"

using namespace ecom::holim;

namespace {

FpMatrix random_invertible(std::mt19937& rng, std::size_t n, std::uint32_t p) {
    std::uniform_int_distribution<long> e(0, p - 1);
    for (;;) {
        FpMatrix m(n, n, p);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.set(i, j, e(rng));
        if (m.rank() == n) return m;
    }
}

PosetDiagram pullback(std::uint32_t p, long left, long right) {
    PosetDiagram d(poset(1), p, 0);
    for (std::size_t i = 0; i < 3; ++i)
        d.set_object(i, {d.poset().object(i), "pt", PoincareSeries::one(), Provenance::Derived});
    d.set_map(0, 2, 0, FpMatrix::from_rows({{left}}, p));
    d.set_map(1, 2, 0, FpMatrix::from_rows({{right}}, p));
    return d;
}

}  // namespace

TEST_CASE("poset S(n)") {
    const PosetSn s2 = poset(2);
    CHECK(s2.size() == 7);
    CHECK(s2.arrows().size() == 12);
    CHECK(s2.chains(3).size() == 6);
    CHECK(s2.chains(4).empty());
    CHECK(s2.name(3) == "(0,1)");
    CHECK(s2.index_of({0, 2}) == 4);
    CHECK(s2.less(0, 6));
    CHECK_FALSE(s2.less(3, 4));
    CHECK_THROWS_AS(s2.index_of({3}), ecom::UnknownName);
    CHECK_THROWS_AS(s2.chain_index({3, 4}), ecom::ShapeMismatch);
    CHECK(poset(1).arrows().size() == 2);
}

TEST_CASE("constant diagrams have lim0 = F_p and nothing else") {
    for (int n : {1, 2})
        for (std::uint32_t p : {2u, 3u}) {
            const PosetDiagram d = constant_diagram(n, p);
            CHECK_NOTHROW(d.validate());
            CHECK(higher_limits(d, 0) == HigherLimits{1, 0, 0});
        }
}

TEST_CASE("pullbacks of F_p -> F_p <- F_p") {
    CHECK(higher_limits(pullback(2, 1, 1), 0) == HigherLimits{1, 0, 0});
    CHECK(higher_limits(pullback(3, 0, 0), 0) == HigherLimits{2, 1, 0});
    CHECK(higher_limits(pullback(3, 2, 0), 0) == HigherLimits{1, 0, 0});
}

TEST_CASE("published complex shapes at p = 2") {
    const PosetDiagram d = bundled_diagram(2);
    const std::vector<std::array<std::size_t, 3>> shapes = {{7, 12, 6}, {9, 22, 12}, {11, 22, 12}};
    const std::vector<HigherLimits> lims = {{1, 0, 0}, {0, 1, 0}, {1, 0, 0}};
    const int ks[] = {0, 3, 4};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto c = cosimplicial_complex(d, ks[i]);
        CHECK(std::array<std::size_t, 3>{c.c0, c.c1, c.c2} == shapes[i]);
        CHECK(limits_of(c) == lims[i]);
        CHECK((c.d1 * c.d0).is_zero());
    }
}

TEST_CASE("bundled diagrams: Euler characteristic and lim2") {
    for (std::uint32_t p : {2u, 3u}) {
        const PosetDiagram d = bundled_diagram(p);
        CHECK_NOTHROW(d.validate());
        for (int k = 0; k <= d.max_degree(); ++k) {
            const auto l = higher_limits(d, k);
            CHECK(l.lim2 == 0);
            CHECK(lim2_vanishing_check(d, k));
            CHECK(static_cast<long long>(l.lim0) - static_cast<long long>(l.lim1) ==
                  block_euler_characteristic(d.poset(), d.dims(k)));
        }
    }
}

TEST_CASE("limits are invariant under change of basis") {
    std::mt19937 rng(11);
    for (std::uint32_t p : {2u, 3u}) {
        const PosetDiagram d = bundled_diagram(p);
        for (int k : {3, 5, 6, 8}) {
            const auto dims = d.dims(k);
            std::vector<FpMatrix> g, ginv;
            for (std::size_t dim : dims) {
                g.push_back(random_invertible(rng, dim, p));
                ginv.push_back(dim ? *g.back().solve(FpMatrix::identity(dim, p)) : FpMatrix(0, 0, p));
            }
            Block b = d.block(k);
            for (auto& [arrow, m] : b) m = g[arrow.second] * m * ginv[arrow.first];
            const auto base = d.block(k);
            CHECK(rank_profile(d.poset(), b, dims) == rank_profile(d.poset(), base, dims));
            CHECK(limits_of(cosimplicial_complex(d.poset(), b, dims, p, k)) ==
                  limits_of(cosimplicial_complex(d.poset(), base, dims, p, k)));
        }
    }
}

TEST_CASE("validation catches broken diagrams") {
    PosetDiagram d = bundled_diagram(2);
    const std::size_t a = 0, b = d.poset().index_of({0, 1}), top = 6;
    FpMatrix m = d.map(a, b, 3);
    m.set(0, 0, m(0, 0) + 1);
    d.set_map(a, b, 3, m);
    CHECK_THROWS_AS(d.validate_degree(3), ecom::FunctorialityViolation);

    PosetDiagram e = bundled_diagram(2);
    const std::size_t c = e.poset().index_of({0, 2});
    const auto dims = e.dims(4);
    e.set_map(c, top, 4, FpMatrix(dims[top], dims[c], 2));
    CHECK_FALSE(e.constraint_failures(4).empty());
    CHECK_THROWS(e.validate_degree(4));
}

TEST_CASE("diagram JSON round trip") {
    for (std::uint32_t p : {2u, 3u}) {
        const PosetDiagram d = bundled_diagram(p);
        const PosetDiagram back = parse_diagram(diagram_to_json(d));
        CHECK(back.max_degree() == d.max_degree());
        for (int k = 0; k <= d.max_degree(); ++k) CHECK(back.block(k) == d.block(k));
        CHECK(diagram_to_json(back) == diagram_to_json(d));
    }
    CHECK_THROWS(parse_diagram("{}"));
}

TEST_CASE("Bousfield-Kan assembly") {
    const auto three = bk_assemble(bundled_diagram(3));
    CHECK(three.total.to_string() == published_total(3).to_string());
    CHECK(three.e2 == published_e2(3));
    const auto two = bk_assemble(bundled_diagram(2));
    CHECK(two.total[0] == 1);
    const auto q = rational_betti();
    for (std::size_t n = 0; n <= q.degree(); ++n) {
        CHECK(two.total[n] >= q[n]);
        CHECK(three.total[n] >= q[n]);
    }
}

TEST_CASE("reconstruction targets have the Euler characteristic of the objects") {
    for (std::uint32_t p : {2u, 3u}) {
        const PosetDiagram d = bundled_diagram(p);
        const auto targets = reconstruction_targets(p);
        for (int k = 0; k <= d.max_degree(); ++k) {
            const auto& t = targets[static_cast<std::size_t>(k)].limits;
            CHECK(static_cast<long long>(t.lim0) - static_cast<long long>(t.lim1) ==
                  block_euler_characteristic(d.poset(), d.dims(k)));
            CHECK(higher_limits(d, k) == t);
        }
    }
}

TEST_CASE("robustness at p = 2, degree 3 is exhaustive and constant") {
    const PosetDiagram d = bundled_diagram(2);
    const auto r = robustness_check(d, 3, std::uint64_t{1} << 40, 100, 1);
    CHECK(r.exhaustive);
    CHECK(r.examined > 0);
    CHECK(r.constant());
    CHECK(r.observed.count({0, 1}) == 1);
}

TEST_CASE("sampled blocks are functorial") {
    std::mt19937 rng(5);
    const BlockShape s = block_shape(bundled_diagram(3), 6);
    int hits = 0;
    for (int i = 0; i < 200 && hits < 20; ++i) {
        const auto b = sample_block(s, rng);
        if (!b) continue;
        ++hits;
        const auto c = cosimplicial_complex(poset(2), *b, s.dims, s.p, s.degree);
        CHECK((c.d1 * c.d0).is_zero());
    }
    CHECK(hits > 0);
}
