#include <random>

#include "doctest.h"
#include "ecom/coinv/coinvariant.hpp"
#include "ecom/coinv/invariant_ring.hpp"
#include "ecom/coinv/representation.hpp"
#include "ecom/coinv/tensor.hpp"
#include "ecom/error.hpp"
#include "ecom/grpcoh/finite_group.hpp"

using namespace ecom::coinv;
using ecom::exactla::Rational;

TEST_CASE("staircase basis gives n! classes") {
    std::size_t factorial = 1;
    for (std::size_t n = 1; n <= 4; ++n) {
        factorial *= n;
        std::size_t total = 0;
        for (int d = 0; d <= top_degree(n); ++d) {
            for (const auto& m : staircase_basis(n, d)) CHECK(is_staircase(m));
            total += staircase_basis(n, d).size();
        }
        CHECK(total == factorial);
    }
    CHECK(staircase_basis(3, 4).empty());
}

TEST_CASE("symmetric polynomials vanish in the coinvariant algebra") {
    for (std::size_t k = 1; k <= 3; ++k)
        CHECK(normal_form(lift_polynomial<Integer>(elementary_symmetric(3, k)), 3).is_zero());
    const auto x1 = Polynomial<Integer>::variable(3, 0);
    CHECK(normal_form(x1.pow(3), 3).is_zero());
    CHECK_FALSE(normal_form(x1.pow(2), 3).is_zero());
}

TEST_CASE("Σ3 degree representations of H*(Fl3)") {
    const std::vector<std::string> expected = {"Z", "M", "M", "S"};
    for (int d = 0; d <= 3; ++d) CHECK(classify_sigma3_irreducible(sn_degree_representation(3, d)) == expected[d]);
    CHECK(sigma3_class_character(sn_degree_representation(3, 1)) == std::vector<long>{2, 0, -1});
    CHECK(sigma3_class_character(sn_degree_representation(3, 3)) == std::vector<long>{1, -1, 1});
}

TEST_CASE("Künneth decomposition of H*(Fl3 x Fl3)") {
    CHECK(kunneth_names(0) == std::vector<std::string>{"Z"});
    CHECK(kunneth_names(2) == std::vector<std::string>{"M", "M"});
    CHECK(kunneth_names(12) == std::vector<std::string>{"Z"});
    std::size_t total = 0;
    for (int d = 0; d <= 12; d += 2) total += flag_square_representation(d).rank();
    CHECK(total == 36);
    for (int d = 0; d <= 12; d += 2) {
        std::size_t rank = 0;
        for (const auto& s : kunneth_decompose(d)) rank += catalog_module(s.name).rank();
        CHECK(rank == flag_square_representation(d).rank());
    }
}

TEST_CASE("averaging is idempotent and lands in the invariants") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3), ex(0, 2);
    const auto g = ecom::grpcoh::symmetric_group(3);
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial<Rational> p(6);
        for (int t = 0; t < 3; ++t) {
            Monomial m(6);
            for (auto& e : m) e = ex(rng);
            p.add_term(m, Rational(coef(rng)));
        }
        const auto f = TensorClass<Rational>::from_polynomial(p, 3);
        const auto r = averaging(f);
        CHECK(averaging(r) == r);
        for (const auto& w : g.elements()) CHECK(r.act(w) == r);
    }
}

TEST_CASE("averaging needs rational scalars") {
    CHECK_THROWS_AS(averaging(TensorClass<Integer>::one(3)), ecom::NonRationalScalars);
}

TEST_CASE("maj and descent degrees") {
    CHECK(maj({1, 2, 3}) == 0);
    CHECK(maj({3, 2, 1}) == 3);
    CHECK(maj({2, 3, 1}) == 2);
    CHECK(inverse({2, 3, 1}) == OneLine{3, 1, 2});
    CHECK(all_permutations(3).size() == 6);
    for (const auto& w : all_permutations(3))
        CHECK(descent_monomial(w).degree() == 2 * (maj(w) + maj(inverse(w))));
}

TEST_CASE("invariant ring of H*(Fl3 x Fl3; Q)") {
    const RingPresentation P = evaluate_invariant_ring();
    std::vector<int> degrees;
    for (const auto& b : P.basis) degrees.push_back(b.degree);
    CHECK(degrees == std::vector<int>{0, 4, 6, 6, 8, 12});
    CHECK(P.poincare.to_string() == "1+t^4+2t^6+t^8+t^12");
    CHECK(P.normal_monomials.size() == 6);
    CHECK(sgn(P.top_scalar) != 0);
    CHECK(sgn(P.degree8_scalar) != 0);
    // γ4³ is a nonzero multiple of the top class.
    CHECK(sgn(P.cubic_scalar) != 0);
    CHECK_FALSE(P.all_relations_hold());
    CHECK_THROWS_AS(invariant_ring_presentation(), ecom::RelationFailure);
}
