#include "ecom/coinv/coinvariant.hpp"

#include <memory>
#include <mutex>

namespace ecom::coinv {
namespace {

// All exponent vectors of length n and total degree d, lexicographic.
void monomials_rec(std::size_t n, int d, Monomial& cur, std::size_t i, std::vector<Monomial>& out) {
    if (i + 1 == n) {
        cur[i] = d;
        out.push_back(cur);
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[i] = e;
        monomials_rec(n, d - e, cur, i + 1, out);
    }
}

std::vector<Monomial> all_monomials(std::size_t n, int d) {
    std::vector<Monomial> out;
    if (n == 0) return out;
    Monomial cur(n, 0);
    monomials_rec(n, d, cur, 0, out);
    return out;
}

}  // namespace

bool is_staircase(const Monomial& m) {
    const int n = static_cast<int>(m.size());
    for (int j = 0; j < n; ++j)
        if (m[j] > n - 1 - j) return false;
    return true;
}

std::vector<Monomial> staircase_basis(std::size_t n, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    for (auto& m : all_monomials(n, d))
        if (is_staircase(m)) out.push_back(m);
    return out;
}

int top_degree(std::size_t n) { return static_cast<int>(n * (n - 1) / 2); }

const ReductionTable& ReductionTable::get(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<ReductionTable>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot.reset(new ReductionTable(n));
    return *slot;
}

ReductionTable::ReductionTable(std::size_t n) : n_(n) {
    if (n < 1 || n > 5) throw ShapeMismatch("coinvariant algebra supported for 1 <= n <= 5");
    for (int d = 0; d <= top_degree(n); ++d) build_degree(d);
}

void ReductionTable::build_degree(int d) {
    const std::vector<Monomial> stairs = staircase_basis(n_, d);
    std::vector<Monomial> cols;
    for (auto& m : all_monomials(n_, d))
        if (!is_staircase(m)) cols.push_back(m);
    const std::size_t free_cols = cols.size();
    cols.insert(cols.end(), stairs.begin(), stairs.end());
    std::map<Monomial, std::size_t> col_of;
    for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = j;

    // Relation rows m * σ_k with deg m = d - k.
    std::vector<std::vector<Rational>> rows;
    for (std::size_t k = 1; k <= n_ && static_cast<int>(k) <= d; ++k) {
        const Polynomial<Integer> sk = elementary_symmetric(n_, k);
        for (auto& m : all_monomials(n_, d - static_cast<int>(k))) {
            std::vector<Rational> row(cols.size());
            for (const auto& [t, c] : sk.terms()) {
                Monomial prod(n_);
                for (std::size_t i = 0; i < n_; ++i) prod[i] = m[i] + t[i];
                row[col_of.at(prod)] += Rational(c);
            }
            rows.push_back(std::move(row));
        }
    }

    // RREF over Q.
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols.size() && r < rows.size(); ++c) {
        std::size_t s = r;
        while (s < rows.size() && sgn(rows[s][c]) == 0) ++s;
        if (s == rows.size()) continue;
        std::swap(rows[s], rows[r]);
        const Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t k = 0; k < cols.size(); ++k)
                if (sgn(rows[r][k]) != 0) rows[i][k] -= f * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    // Every non-staircase monomial must be a pivot, and no staircase monomial may be one.
    if (pivots.size() != free_cols)
        throw RelationFailure("staircase monomials do not form a basis in degree " + std::to_string(d));
    for (std::size_t i = 0; i < free_cols; ++i) {
        if (pivots[i] != i) throw RelationFailure("staircase basis check failed in degree " + std::to_string(d));
        Combination comb;
        for (std::size_t j = free_cols; j < cols.size(); ++j) {
            if (sgn(rows[i][j]) == 0) continue;
            const Rational v = -rows[i][j];
            if (v.get_den() != 1) throw RelationFailure("non-integral normal form in degree " + std::to_string(d));
            comb.emplace_back(cols[j], v.get_num());
        }
        table_[cols[i]] = std::move(comb);
    }
    for (const auto& m : stairs) table_[m] = Combination{{m, Integer(1)}};
}

const ReductionTable::Combination& ReductionTable::reduce(const Monomial& m) const {
    if (m.size() != n_) throw ShapeMismatch("monomial has the wrong number of variables");
    const auto it = table_.find(m);
    return it == table_.end() ? empty_ : it->second;
}

}  // namespace ecom::coinv
