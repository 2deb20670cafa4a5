#include "doctest.h"
#include "ecom/error.hpp"
#include "ecom/exactla/poincare.hpp"
#include "ecom/specseq/chern.hpp"
#include "ecom/specseq/koszul.hpp"
#include "ecom/specseq/serre.hpp"

using namespace ecom::specseq;
using ecom::exactla::parse_abelian_group;

namespace {

std::vector<std::string> names(const std::vector<ecom::exactla::AbelianGroup>& gs, std::size_t top) {
    std::vector<std::string> out;
    for (std::size_t d = 0; d <= top; ++d) out.push_back(gs.at(d).to_string());
    return out;
}

std::vector<std::string> groups(std::initializer_list<const char*> xs) {
    std::vector<std::string> out;
    for (const char* x : xs) out.push_back(parse_abelian_group(x).to_string());
    return out;
}

}  // namespace

TEST_CASE("Whitney formula") {
    const ChernVector c = whitney_chern({{1, 0}, {1, 0}, {0, 1}});
    CHECK(c.classes.size() == 3);
    CHECK(base_polynomial_string(c.classes[0]) == "2β1+β2");
    CHECK(base_polynomial_string(c.classes[1]) == "β1^2+2β1β2");
    CHECK(base_polynomial_string(c.classes[2]) == "β1^2β2");
    CHECK(whitney_chern({{1}, {1}, {1}}).total_to_string() == "1 + (3β1) + (3β1^2) + (β1^3)");
    CHECK_THROWS_AS(whitney_chern({{1, 0}, {1}}), ecom::ShapeMismatch);
}

TEST_CASE("Koszul differential squares to zero") {
    for (std::uint32_t p : {2u, 3u}) {
        const KoszulAlgebra a(whitney_chern({{1, 0}, {1, 0}, {0, 1}}), 3, p, 12);
        for (int d = 0; d + 1 < 12; ++d) {
            const auto d0 = a.differential_matrix(d);
            const auto d1 = a.differential_matrix(d + 1);
            if (d0.rows() && d0.cols() && d1.rows()) CHECK((d1 * d0).is_zero());
        }
    }
}

TEST_CASE("U(3)/T(2)") {
    const auto two = u3t2_cohomology(2);
    CHECK(two.ring.to_string() == "F2[z5, β]/(z5^2, β^2)");
    CHECK(two.ring.poincare.to_string() == "1+t^2+t^5+t^7");
    REQUIRE(two.pages.size() == 3);
    CHECK(two.pages[0].transgression == "β2");
    CHECK(two.pages[1].transgression == "β1^2");
    CHECK(two.pages[2].vanishes_on_page);

    const auto three = u3t2_cohomology(3);
    CHECK(three.ring.to_string() == "F3[z3, β]/(z3^2, β^3)");
    CHECK(three.ring.poincare.to_string() == "1+t^2+t^3+t^4+t^5+t^7");
    REQUIRE(three.pages.size() == 3);
    CHECK(three.pages[0].transgression == "2β1+β2");
    CHECK(three.pages[1].vanishes_on_page);
    CHECK(three.pages[2].transgression == "β1^2β2");
    CHECK(three.ring.poincare.is_palindromic());
}

TEST_CASE("PU(3)") {
    CHECK(pu3_cohomology(2).ring.poincare.to_string() == "1+t^3+t^5+t^8");
    CHECK(pu3_cohomology(3).ring.poincare.to_string() == "1+t+t^2+2t^3+2t^4+2t^5+t^6+t^7+t^8");
}

TEST_CASE("bundled fibrations parse") {
    CHECK(bundled_fibrations() == std::vector<std::string>{"fl3xfl3_p2", "fl3xfl3_p3", "flbar3_p2", "flbar3_p3"});
    const auto f = bundled_fibration("flbar3_p3");
    CHECK(f.prime == 3);
    CHECK(f.top_dimension == 6);
    CHECK(f.rows.size() == 4);
    CHECK_THROWS_AS(parse_fibration("{\"name\": 1"), ecom::ConfigError);
    CHECK_THROWS(parse_fibration(R"({"name":"x","group":"S4","prime":2,"top_dimension":6,"fiber":"flag3"})"));
}

TEST_CASE("Fl3/Σ3") {
    const auto three = run_serre(bundled_fibration("flbar3_p3"));
    CHECK(three.solutions.size() == 1);
    CHECK(names(three.cohomology, 6) == groups({"Z", "0", "0", "0", "Z/3", "Z/3", "0"}));
    CHECK(three.e2.period() == 4);
    const auto two = run_serre(bundled_fibration("flbar3_p2"));
    CHECK(two.solutions.size() == 1);
    CHECK(names(two.cohomology, 6) == groups({"Z", "0", "Z/2", "0", "Z/2", "0", "Z/2"}));
    CHECK(two.mod_p.to_string() == "1+t+t^2+t^3+t^4+t^5+t^6");
    CHECK(three.mod_p.to_string() == "1+t^3+2t^4+t^5");
}

TEST_CASE("E∞ vanishes above the dimension") {
    for (const auto& name : bundled_fibrations()) {
        const auto run = run_serre(bundled_fibration(name));
        for (const auto& [b, g] : run.e_infinity.entries())
            if (b.col + b.row > run.spec.top_dimension && b.col + b.row <= run.spec.truncation) CHECK(g.is_zero());
        for (const auto& d : run.differentials) CHECK_NOTHROW(check_bidegrees(d));
    }
}

TEST_CASE("loosened top dimension is ambiguous") {
    auto f = bundled_fibration("flbar3_p3");
    f.top_dimension = 20;
    CHECK_THROWS_AS(run_serre(f), ecom::Ambiguous);
}

TEST_CASE("bidegree check") {
    DifferentialSpec bad{5, {{{2, 6}, {7, 3}, 1}}};
    CHECK_THROWS_AS(check_bidegrees(bad), ecom::ShapeMismatch);
}
