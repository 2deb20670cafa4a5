#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ecom/coinv/coinvariant.hpp"

namespace ecom::coinv {

/// Element of H*(Fl_n) ⊗ H*(Fl_n): coefficients on pairs of staircase monomials (x-part, y-part).
template <class S>
class TensorClass {
public:
    using Key = std::pair<Monomial, Monomial>;

    explicit TensorClass(std::size_t n = 3) : n_(n) {}

    static TensorClass one(std::size_t n) {
        TensorClass t(n);
        t.add({Monomial(n, 0), Monomial(n, 0)}, S(1));
        return t;
    }

    static TensorClass from_factors(const CoinvariantElement<S>& a, const CoinvariantElement<S>& b) {
        TensorClass t(a.n());
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) t.add({ma, mb}, ca * cb);
        return t;
    }

    /// Polynomial in x1..xn, y1..yn (2n variables, x first).
    static TensorClass from_polynomial(const Polynomial<S>& p, std::size_t n) {
        TensorClass t(n);
        for (const auto& [m, c] : p.terms()) {
            Polynomial<S> px(n), py(n);
            px.add_term(Monomial(m.begin(), m.begin() + static_cast<long>(n)), S(1));
            py.add_term(Monomial(m.begin() + static_cast<long>(n), m.end()), S(1));
            t = t + from_factors(normal_form(px, n), normal_form(py, n)).scaled(c);
        }
        return t;
    }

    std::size_t n() const { return n_; }
    const std::map<Key, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Key& k, const S& c) {
        if (ScalarTraits<S>::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (ScalarTraits<S>::is_zero(it->second)) terms_.erase(it);
        }
    }

    TensorClass operator+(const TensorClass& o) const {
        TensorClass r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k, c);
        return r;
    }
    TensorClass operator-(const TensorClass& o) const {
        TensorClass r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k, -c);
        return r;
    }
    TensorClass scaled(const S& s) const {
        TensorClass r(n_);
        for (const auto& [k, c] : terms_) r.add(k, c * s);
        return r;
    }
    /// (a ⊗ b)(c ⊗ d) = ac ⊗ bd; all classes live in even degrees, so no signs.
    TensorClass operator*(const TensorClass& o) const {
        TensorClass r(n_);
        for (const auto& [k1, c1] : terms_)
            for (const auto& [k2, c2] : o.terms_) {
                const auto left = basis_element(k1.first) * basis_element(k2.first);
                const auto right = basis_element(k1.second) * basis_element(k2.second);
                r = r + from_factors(left, right).scaled(c1 * c2);
            }
        return r;
    }

    /// Diagonal action: x_i -> x_{ω(i)}, y_i -> y_{ω(i)}.
    TensorClass act(const grpcoh::Permutation& w) const {
        TensorClass r(n_);
        for (const auto& [k, c] : terms_)
            r = r + from_factors(basis_element(k.first).act(w), basis_element(k.second).act(w)).scaled(c);
        return r;
    }

    /// Cohomological bidegree-summed degree of each term; -1 for zero, -2 if inhomogeneous.
    int degree() const {
        int d = -1;
        for (const auto& [k, c] : terms_) {
            const int e = 2 * (monomial_degree(k.first) + monomial_degree(k.second));
            if (d == -1) d = e;
            else if (d != e) return -2;
        }
        return d;
    }

    friend bool operator==(const TensorClass& a, const TensorClass& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + ScalarTraits<S>::str(c) + ")*" + monomial_string(k.first, n_) + "⊗" +
                   monomial_string(k.second, n_, true, n_);
        }
        return out;
    }

private:
    std::size_t n_;
    std::map<Key, S> terms_;

    CoinvariantElement<S> basis_element(const Monomial& m) const {
        CoinvariantElement<S> e(n_);
        e.add(m, S(1));
        return e;
    }
};

/// Parses a polynomial in x1..xn, y1..yn and maps it into the tensor product.
template <class S>
TensorClass<S> parse_tensor(const std::string& text, std::size_t n) {
    return TensorClass<S>::from_polynomial(convert_polynomial<S>(parse_polynomial(text, n, true)), n);
}

/// ρ(f) = (1/n!) Σ_ω f(ωx, ωy). Needs rational scalars.
template <class S>
TensorClass<S> averaging(const TensorClass<S>& f) {
    if constexpr (!std::is_same_v<S, Rational>) {
        throw NonRationalScalars(std::string("averaging divides by |Σ_n|; scalars are ") + ScalarTraits<S>::ring_name());
    } else {
        const grpcoh::FiniteGroup g = grpcoh::symmetric_group(f.n());
        TensorClass<S> sum(f.n());
        for (const auto& w : g.elements()) sum = sum + f.act(w);
        return sum.scaled(Rational(1, static_cast<long>(g.order())));
    }
}

}  // namespace ecom::coinv
