#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ecom/coinv/scalar.hpp"

namespace ecom::coinv {

using Monomial = std::vector<int>;

inline int monomial_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

/// Sparse polynomial in a fixed number of variables; zero coefficients are never stored.
template <class S>
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const S& c) {
        Polynomial p(nvars);
        p.add_term(Monomial(nvars, 0), c);
        return p;
    }
    static Polynomial variable(std::size_t nvars, std::size_t i) {
        Polynomial p(nvars);
        Monomial m(nvars, 0);
        m[i] = 1;
        p.add_term(m, S(1));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const std::map<Monomial, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const S& c) {
        if (ScalarTraits<S>::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (ScalarTraits<S>::is_zero(it->second)) terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Polynomial operator-(const Polynomial& o) const {
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    Polynomial operator*(const Polynomial& o) const {
        Polynomial r(nvars_);
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : o.terms_) {
                Monomial m(nvars_);
                for (std::size_t i = 0; i < nvars_; ++i) m[i] = a[i] + b[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Polynomial scaled(const S& s) const {
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }
    Polynomial pow(unsigned k) const {
        Polynomial r = constant(nvars_, S(1));
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    std::size_t nvars_;
    std::map<Monomial, S> terms_;
};

/// Elementary symmetric polynomial σ_k in x_1..x_n.
Polynomial<Integer> elementary_symmetric(std::size_t n, std::size_t k);

/// Parses sums/products/powers of x1..xn (and y1..yn when `with_y`) with integer or
/// rational coefficients and parentheses, e.g. "2*x1^2*x2 - 1/6 x3 y1".
/// Variables are indexed x_i -> i-1, y_i -> n+i-1.
Polynomial<Rational> parse_polynomial(const std::string& text, std::size_t n, bool with_y = false);

/// Writes a monomial as x1^2*x2 (or with y-variables past index n when `with_y`).
std::string monomial_string(const Monomial& m, std::size_t n, bool with_y = false, std::size_t offset = 0);

}  // namespace ecom::coinv
