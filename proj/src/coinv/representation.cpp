#include "ecom/coinv/representation.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "ecom/coinv/coinvariant.hpp"

namespace ecom::coinv {

using exactla::IntMatrix;
using grpcoh::GroupModule;

grpcoh::GroupModule sn_degree_representation(std::size_t n, int d) {
    if (d < 0 || d > top_degree(n)) throw ShapeMismatch("degree outside the coinvariant algebra");
    const auto group = n == 3 ? grpcoh::sigma3() : std::make_shared<const grpcoh::FiniteGroup>(grpcoh::symmetric_group(n));
    const std::vector<Monomial> basis = staircase_basis(n, d);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    const auto* g = group.get();
    auto action = [&](std::size_t e) {
        IntMatrix m(basis.size(), basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Polynomial<Integer> p(n);
            p.add_term(CoinvariantElement<Integer>::permute_monomial(basis[j], g->element(e)), Integer(1));
            const auto img = normal_form(p, n);
            for (const auto& [b, c] : img.terms()) m(index.at(b), j) = c;
        }
        return m;
    };
    return GroupModule::from_function(group, "H^" + std::to_string(2 * d) + "(Fl" + std::to_string(n) + ")",
                                      basis.size(), action);
}

std::vector<long> sigma3_class_character(const grpcoh::GroupModule& m) {
    const auto& g = m.group();
    if (g.degree() != 3 || g.order() != 6) throw ShapeMismatch("not a Σ3 module");
    const auto chi = m.character();
    return {chi[g.identity()], chi[g.index_of({1, 0, 2})], chi[g.index_of({1, 2, 0})]};
}

std::string classify_sigma3_irreducible(const grpcoh::GroupModule& m) {
    const auto c = sigma3_class_character(m);
    if (c == std::vector<long>{1, 1, 1}) return "Z";
    if (c == std::vector<long>{1, -1, 1}) return "S";
    if (c == std::vector<long>{2, 0, -1}) return "M";
    throw DecompositionAmbiguous("character (" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                                 std::to_string(c[2]) + ") is not one of Z, S, M");
}

namespace {

std::string tensor_name(const std::string& a, const std::string& b) {
    if (a == "Z") return b;
    if (b == "Z") return a;
    if (a == "S" && b == "S") return "Z";
    if (a == "M" && b == "M") return "M⊗M";
    return "M_S";
}

int name_rank(const std::string& n) {
    static const std::map<std::string, int> order = {{"Z", 0}, {"S", 1}, {"M", 2}, {"M_S", 3}, {"M⊗M", 4}};
    return order.at(n);
}

}  // namespace

grpcoh::GroupModule catalog_module(const std::string& short_name) { return grpcoh::sigma3_module(short_name); }

std::vector<KunnethSummand> kunneth_decompose(int d) {
    if (d < 0 || d > 12 || d % 2 != 0) throw ShapeMismatch("Künneth decomposition needs even 0 <= d <= 12");
    const int half = d / 2;
    std::vector<KunnethSummand> out;
    std::vector<long> total(3, 0), expected(3, 0);
    for (int a = 0; a <= 3; ++a) {
        const int b = half - a;
        if (b < 0 || b > 3) continue;
        const GroupModule ra = sn_degree_representation(3, a), rb = sn_degree_representation(3, b);
        const std::string name = tensor_name(classify_sigma3_irreducible(ra), classify_sigma3_irreducible(rb));
        out.push_back({2 * a, 2 * b, name});
        const auto chi = sigma3_class_character(grpcoh::tensor(ra, rb));
        const auto cat = sigma3_class_character(catalog_module(name));
        for (int i = 0; i < 3; ++i) {
            total[i] += chi[i];
            expected[i] += cat[i];
        }
    }
    if (total != expected) throw DecompositionAmbiguous("character of H^" + std::to_string(d) + " does not match its decomposition");
    return out;
}

std::vector<std::string> kunneth_names(int d) {
    std::vector<std::string> names;
    for (const auto& s : kunneth_decompose(d)) names.push_back(s.name);
    std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) { return name_rank(a) < name_rank(b); });
    return names;
}

grpcoh::GroupModule flag_square_representation(int d) {
    if (d < 0 || d > 12 || d % 2 != 0) throw ShapeMismatch("H^d(Fl3 × Fl3) is zero unless d is even and <= 12");
    const int half = d / 2;
    std::optional<GroupModule> acc;
    for (int a = 0; a <= 3; ++a) {
        const int b = half - a;
        if (b < 0 || b > 3) continue;
        GroupModule t = grpcoh::tensor(sn_degree_representation(3, a), sn_degree_representation(3, b));
        acc = acc ? grpcoh::direct_sum(*acc, t) : t;
    }
    return *acc;
}

}  // namespace ecom::coinv
