#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ecom/coinv/polynomial.hpp"
#include "ecom/grpcoh/finite_group.hpp"

namespace ecom::coinv {

/// Exponent vectors with e_j <= n - j (1-based j): the Artin basis of Z[x]/(σ_1..σ_n).
bool is_staircase(const Monomial& m);
/// Staircase monomials of polynomial degree d, in lexicographic order.
std::vector<Monomial> staircase_basis(std::size_t n, int d);
/// n(n-1)/2.
int top_degree(std::size_t n);

/// Integral normal forms of all monomials, one polynomial degree at a time.
///
/// In degree d the relation space is spanned by {m σ_i}; it is row reduced over Q
/// with the staircase columns last, which expresses every other monomial through
/// staircase ones. The coefficients are checked to be integers, so the table serves
/// every scalar ring.
class ReductionTable {
public:
    using Combination = std::vector<std::pair<Monomial, Integer>>;

    static const ReductionTable& get(std::size_t n);

    std::size_t n() const { return n_; }
    /// Staircase combination equal to m in the quotient (m itself when staircase, empty beyond the top degree).
    const Combination& reduce(const Monomial& m) const;

private:
    explicit ReductionTable(std::size_t n);
    void build_degree(int d);

    std::size_t n_;
    std::map<Monomial, Combination> table_;
    Combination empty_;
};

/// Element of the coinvariant algebra in the staircase basis.
template <class S>
class CoinvariantElement {
public:
    explicit CoinvariantElement(std::size_t n = 3) : n_(n) {}

    static CoinvariantElement one(std::size_t n) {
        CoinvariantElement e(n);
        e.terms_[Monomial(n, 0)] = S(1);
        return e;
    }

    static CoinvariantElement from_polynomial(const Polynomial<S>& p, std::size_t n) {
        CoinvariantElement e(n);
        const ReductionTable& t = ReductionTable::get(n);
        for (const auto& [m, c] : p.terms())
            for (const auto& [b, k] : t.reduce(m)) e.add(b, c * ScalarTraits<S>::from_integer(k));
        return e;
    }

    std::size_t n() const { return n_; }
    const std::map<Monomial, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Monomial& b, const S& c) {
        if (ScalarTraits<S>::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (ScalarTraits<S>::is_zero(it->second)) terms_.erase(it);
        }
    }

    CoinvariantElement operator+(const CoinvariantElement& o) const {
        CoinvariantElement r = *this;
        for (const auto& [m, c] : o.terms_) r.add(m, c);
        return r;
    }
    CoinvariantElement operator-(const CoinvariantElement& o) const {
        CoinvariantElement r = *this;
        for (const auto& [m, c] : o.terms_) r.add(m, -c);
        return r;
    }
    CoinvariantElement scaled(const S& s) const {
        CoinvariantElement r(n_);
        for (const auto& [m, c] : terms_) r.add(m, c * s);
        return r;
    }
    CoinvariantElement operator*(const CoinvariantElement& o) const {
        Polynomial<S> p(n_);
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : o.terms_) {
                Monomial m(n_);
                for (std::size_t i = 0; i < n_; ++i) m[i] = a[i] + b[i];
                p.add_term(m, ca * cb);
            }
        return from_polynomial(p, n_);
    }

    /// x_i -> x_{ω(i)} with ω a 0-based permutation.
    CoinvariantElement act(const grpcoh::Permutation& w) const {
        Polynomial<S> p(n_);
        for (const auto& [m, c] : terms_) p.add_term(permute_monomial(m, w), c);
        return from_polynomial(p, n_);
    }

    friend bool operator==(const CoinvariantElement& a, const CoinvariantElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    static Monomial permute_monomial(const Monomial& m, const grpcoh::Permutation& w) {
        Monomial out(m.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) out[w[i]] = m[i];
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + ScalarTraits<S>::str(c) + ")*" + monomial_string(m, n_);
        }
        return out;
    }

private:
    std::size_t n_;
    std::map<Monomial, S> terms_;
};

template <class S>
CoinvariantElement<S> normal_form(const Polynomial<S>& p, std::size_t n) {
    return CoinvariantElement<S>::from_polynomial(p, n);
}

/// Rational polynomial reduced into another scalar ring; denominators must be units there.
template <class S>
Polynomial<S> convert_polynomial(const Polynomial<Rational>& p);

template <>
inline Polynomial<Rational> convert_polynomial<Rational>(const Polynomial<Rational>& p) {
    return p;
}

template <>
inline Polynomial<Integer> convert_polynomial<Integer>(const Polynomial<Rational>& p) {
    Polynomial<Integer> out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (c.get_den() != 1) throw ParseError("non-integral coefficient " + c.get_str());
        out.add_term(m, c.get_num());
    }
    return out;
}

/// Integer polynomial viewed in another scalar ring.
template <class S>
Polynomial<S> lift_polynomial(const Polynomial<Integer>& p) {
    Polynomial<S> out(p.nvars());
    for (const auto& [m, c] : p.terms()) out.add_term(m, ScalarTraits<S>::from_integer(c));
    return out;
}

}  // namespace ecom::coinv
