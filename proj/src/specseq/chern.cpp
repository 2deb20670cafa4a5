#include "ecom/specseq/chern.hpp"

#include <algorithm>
#include <sstream>

#include "ecom/error.hpp"

namespace ecom::specseq {

ChernVector whitney_chern(const std::vector<std::vector<long>>& weights) {
    ChernVector out;
    out.base_rank = weights.empty() ? 0 : weights.front().size();
    const std::size_t k = out.base_rank;
    for (const auto& row : weights)
        if (row.size() != k) throw ShapeMismatch("ragged weight matrix");

    BasePolynomial total = BasePolynomial::constant(k, 1);
    for (const auto& row : weights) {
        BasePolynomial factor = BasePolynomial::constant(k, 1);
        for (std::size_t j = 0; j < k; ++j)
            factor = factor + BasePolynomial::variable(k, j).scaled(coinv::Integer(row[j]));
        total = total * factor;
    }
    out.classes.assign(weights.size(), BasePolynomial(k));
    for (const auto& [m, c] : total.terms()) {
        const int d = coinv::monomial_degree(m);
        if (d > 0) out.classes[d - 1].add_term(m, c);
    }
    return out;
}

std::string base_polynomial_string(const BasePolynomial& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<coinv::Monomial, coinv::Integer>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        const bool constant = coinv::monomial_degree(m) == 0;
        coinv::Integer a = abs(c);
        if (sgn(c) < 0)
            os << "-";
        else if (!first)
            os << "+";
        if (a != 1 || constant) os << a.get_str();
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m[j] == 0) continue;
            os << "β" << (j + 1);
            if (m[j] > 1) os << "^" << m[j];
        }
        first = false;
    }
    return os.str();
}

std::string ChernVector::total_to_string() const {
    std::ostringstream os;
    os << "1";
    for (const auto& c : classes) {
        if (c.is_zero()) continue;
        os << " + (" << base_polynomial_string(c) << ")";
    }
    return os.str();
}

}  // namespace ecom::specseq
