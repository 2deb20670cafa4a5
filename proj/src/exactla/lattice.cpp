#include "ecom/exactla/lattice.hpp"

#include <utility>

namespace ecom::exactla {
namespace {

void axpy(std::vector<Integer>& y, const Integer& a, const std::vector<Integer>& x) {
    for (std::size_t i = 0; i < y.size(); ++i)
        if (sgn(x[i]) != 0) y[i] += a * x[i];
}

}  // namespace

std::size_t IntegerSpan::leading(const std::vector<Integer>& v, std::size_t from) {
    for (std::size_t i = from; i < v.size(); ++i)
        if (sgn(v[i]) != 0) return i;
    return v.size();
}

void IntegerSpan::reduce_above(std::size_t k) {
    const std::size_t c = pivot_[k];
    for (std::size_t i = 0; i < k; ++i) {
        if (sgn(rows_[i][c]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows_[i][c].get_mpz_t(), rows_[k][c].get_mpz_t());
        if (sgn(q) != 0) axpy(rows_[i], -q, rows_[k]);
    }
}

bool IntegerSpan::contains(std::vector<Integer> v) const {
    if (v.size() != n_) throw ShapeMismatch("vector length does not match lattice");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t c = pivot_[k];
        if (leading(v, 0) < c) return false;
        if (sgn(v[c]) == 0) continue;
        if (!mpz_divisible_p(v[c].get_mpz_t(), rows_[k][c].get_mpz_t())) return false;
        Integer q = v[c] / rows_[k][c];
        axpy(v, -q, rows_[k]);
    }
    return leading(v, 0) == n_;
}

bool IntegerSpan::insert(std::vector<Integer> v) {
    if (v.size() != n_) throw ShapeMismatch("vector length does not match lattice");
    bool grew = false;
    std::size_t k = 0;
    for (;;) {
        const std::size_t c = leading(v, 0);
        if (c == n_) return grew;
        while (k < rows_.size() && pivot_[k] < c) ++k;
        if (k == rows_.size() || pivot_[k] > c) {
            if (sgn(v[c]) < 0)
                for (auto& x : v) x = -x;
            rows_.insert(rows_.begin() + static_cast<long>(k), std::move(v));
            pivot_.insert(pivot_.begin() + static_cast<long>(k), c);
            reduce_above(k);
            return true;
        }
        std::vector<Integer>& row = rows_[k];
        const Integer a = row[c], b = v[c];
        if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
            axpy(v, -(b / a), row);
            continue;
        }
        // Replace the row by the gcd combination and keep reducing the complement.
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        std::vector<Integer> nr(n_);
        for (std::size_t i = 0; i < n_; ++i) nr[i] = s * row[i] + t * v[i];
        const Integer ag = a / g, bg = b / g;
        std::vector<Integer> rest(n_);
        for (std::size_t i = 0; i < n_; ++i) rest[i] = ag * v[i] - bg * row[i];
        row = std::move(nr);
        if (sgn(row[c]) < 0)
            for (auto& x : row) x = -x;
        reduce_above(k);
        grew = true;
        v = std::move(rest);
    }
}

}  // namespace ecom::exactla
