#include "ecom/coinv/invariant_ring.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace ecom::coinv {

int maj(const OneLine& w) {
    int s = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) s += static_cast<int>(i + 1);
    return s;
}

OneLine inverse(const OneLine& w) {
    OneLine inv(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i + 1);
    return inv;
}

std::vector<OneLine> all_permutations(std::size_t n) {
    OneLine w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<OneLine> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

TensorClass<Rational> descent_monomial(const OneLine& w) {
    const std::size_t n = w.size();
    const OneLine wi = inverse(w);
    Monomial m(2 * n, 0);
    for (std::size_t i = 1; i < n; ++i)
        if (wi[i - 1] > wi[i])
            for (std::size_t k = 0; k < i; ++k) ++m[k];
    for (std::size_t j = 1; j < n; ++j)
        if (w[j - 1] > w[j])
            for (std::size_t k = 0; k < j; ++k) ++m[n + static_cast<std::size_t>(w[k]) - 1];
    Polynomial<Rational> p(2 * n);
    p.add_term(m, Rational(1));
    return TensorClass<Rational>::from_polynomial(p, n);
}

std::vector<Rational> coordinates(const TensorClass<Rational>& t) {
    const std::size_t n = t.n();
    std::vector<Monomial> basis;
    for (int d = 0; d <= top_degree(n); ++d)
        for (auto& m : staircase_basis(n, d)) basis.push_back(m);
    std::vector<Rational> v;
    v.reserve(basis.size() * basis.size());
    for (const auto& a : basis)
        for (const auto& b : basis) {
            const auto it = t.terms().find({a, b});
            v.push_back(it == t.terms().end() ? Rational(0) : it->second);
        }
    return v;
}

std::size_t rational_rank(const std::vector<TensorClass<Rational>>& classes) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& c : classes) rows.push_back(coordinates(c));
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t s = r;
        while (s < rows.size() && sgn(rows[s][c]) == 0) ++s;
        if (s == rows.size()) continue;
        std::swap(rows[s], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][c]) == 0) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

namespace {

// Scalar c with a = c·b, if one exists.
std::optional<Rational> proportion(const TensorClass<Rational>& a, const TensorClass<Rational>& b) {
    if (b.is_zero()) return std::nullopt;
    const auto& [key, coeff] = *b.terms().begin();
    const auto it = a.terms().find(key);
    const Rational c = it == a.terms().end() ? Rational(0) : it->second / coeff;
    if (a == b.scaled(c)) return c;
    return std::nullopt;
}

void require(std::vector<RelationCheck>& out, const std::string& name, bool holds) { out.push_back({name, holds}); }

}  // namespace

RingPresentation evaluate_invariant_ring() {
    const std::size_t n = 3;
    RingPresentation P;
    const std::vector<std::pair<std::string, std::string>> sources = {
        {"1", "1"},
        {"ρ(x1⊗y2)", "x1*y2"},
        {"ρ(x1⊗y2y3)", "x1*y2*y3"},
        {"ρ(x1x2⊗y3)", "x1*x2*y3"},
        {"ρ(x1x2⊗y2y3)", "x1*x2*y2*y3"},
        {"ρ(x1^2x2⊗y3^2y2)", "x1^2*x2*y3^2*y2"},
    };
    for (const auto& [label, src] : sources) {
        const auto v = averaging(parse_tensor<Rational>(src, n));
        P.basis.push_back({label, src, v.degree(), v});
    }

    std::vector<TensorClass<Rational>> values;
    for (const auto& b : P.basis) values.push_back(b.value);
    if (rational_rank(values) != 6) throw RelationFailure("averaged classes are not linearly independent");

    // Match every averaged descent monomial to a basis element.
    P.descent_permutations.assign(P.basis.size(), {});
    for (const auto& w : all_permutations(n)) {
        const auto r = averaging(descent_monomial(w));
        bool matched = false;
        for (std::size_t i = 0; i < P.basis.size(); ++i)
            if (r == P.basis[i].value) {
                P.descent_permutations[i] = w;
                matched = true;
            }
        if (!matched) throw RelationFailure("ρ(f_ω) is not one of the listed classes");
        if (r.degree() != 2 * (maj(w) + maj(inverse(w)))) throw RelationFailure("descent degree mismatch");
    }

    const auto& g4 = P.basis[1].value;
    const auto& g6 = P.basis[2].value;
    const auto& gt6 = P.basis[3].value;
    const auto& r8 = P.basis[4].value;
    const auto& top = P.basis[5].value;
    auto& rel = P.relations;

    require(rel, "2ρ(x1⊗y2)^2 = -ρ(x1x2⊗y2y3)", (g4 * g4).scaled(2) == r8.scaled(-1));
    require(rel, "3ρ(x1⊗y2y3)·ρ(x1x2⊗y3) = 2ρ(x1^2x2⊗y3^2y2)", (g6 * gt6).scaled(3) == top.scaled(2));
    for (std::size_t i = 1; i < P.basis.size(); ++i)
        for (std::size_t j = i; j < P.basis.size(); ++j) {
            if ((i == 1 && j == 1) || (i == 2 && j == 3)) continue;
            require(rel, P.basis[i].label + "·" + P.basis[j].label + " = 0",
                    (P.basis[i].value * P.basis[j].value).is_zero());
        }
    require(rel, "γ4^3 = 0", (g4 * g4 * g4).is_zero());
    require(rel, "γ6^2 = 0", (g6 * g6).is_zero());
    require(rel, "γ̃6^2 = 0", (gt6 * gt6).is_zero());
    require(rel, "γ4·γ6 = 0", (g4 * g6).is_zero());
    require(rel, "γ4·γ̃6 = 0", (g4 * gt6).is_zero());

    // Degrees 8 and 12 of the invariant ring are one-dimensional, so these always exist.
    const auto c8 = proportion(g4 * g4, r8);
    const auto c12 = proportion(g6 * gt6, top);
    const auto c3 = proportion(g4 * g4 * g4, g6 * gt6);
    if (!c8 || !c12 || !c3) throw RelationFailure("product is not proportional to the basis class");
    P.degree8_scalar = *c8;
    P.top_scalar = *c12;
    P.cubic_scalar = *c3;

    P.presentation = "Q[γ4,γ6,γ̃6]/(γ4^3, γ6^2, γ̃6^2, γ4·γ6, γ4·γ̃6)";

    // Monomials γ4^a γ6^b γ̃6^c outside the monomial ideal.
    std::vector<TensorClass<Rational>> images;
    std::vector<std::uint64_t> coeffs(13, 0);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                if (a >= 3 || b >= 2 || c >= 2 || (a && b) || (a && c)) continue;
                std::string label;
                auto add = [&](const std::string& g, int e) {
                    if (!e) return;
                    if (!label.empty()) label += "·";
                    label += g + (e > 1 ? "^" + std::to_string(e) : "");
                };
                add("γ4", a);
                add("γ6", b);
                add("γ̃6", c);
                if (label.empty()) label = "1";
                const int deg = 4 * a + 6 * b + 6 * c;
                P.normal_monomials.push_back({label, deg});
                ++coeffs[static_cast<std::size_t>(deg)];
                auto img = TensorClass<Rational>::one(n);
                for (int k = 0; k < a; ++k) img = img * g4;
                for (int k = 0; k < b; ++k) img = img * g6;
                for (int k = 0; k < c; ++k) img = img * gt6;
                images.push_back(img);
            }
    std::sort(P.normal_monomials.begin(), P.normal_monomials.end(),
              [](const auto& x, const auto& y) { return x.degree < y.degree || (x.degree == y.degree && x.label < y.label); });
    require(rel, "normal monomials map to a basis", images.size() == 6 && rational_rank(images) == 6);
    P.poincare = exactla::PoincareSeries(coeffs);
    return P;
}

bool RingPresentation::all_relations_hold() const { return first_failure().empty(); }

std::string RingPresentation::first_failure() const {
    for (const auto& r : relations)
        if (!r.holds) return r.name;
    return {};
}

RingPresentation invariant_ring_presentation() {
    RingPresentation P = evaluate_invariant_ring();
    if (!P.all_relations_hold()) throw RelationFailure(P.first_failure());
    return P;
}

}  // namespace ecom::coinv
