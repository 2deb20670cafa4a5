#include "ecom/exactla/smith.hpp"

#include <optional>
#include <utility>

namespace ecom::exactla {
namespace {

// Working state: D = left * A * right, U = left^-1, V = right^-1.
class SmithWork {
public:
    SmithWork(const IntMatrix& a, bool track)
        : d_(a), track_(track) {
        if (track_) {
            left_ = IntMatrix::identity(a.rows());
            u_ = IntMatrix::identity(a.rows());
            right_ = IntMatrix::identity(a.cols());
            v_ = IntMatrix::identity(a.cols());
        }
    }

    void run() {
        const std::size_t m = d_.rows(), n = d_.cols();
        const std::size_t steps = std::min(m, n);
        for (std::size_t t = 0; t < steps; ++t) {
            auto pivot = smallest_entry(t, t);
            if (!pivot) break;
            move_to(t, *pivot);
            reduce_pivot(t);
        }
        for (std::size_t t = 0; t < steps; ++t) {
            if (sgn(d_(t, t)) == 0) break;
            factors_.push_back(d_(t, t));
        }
    }

    SNFDecomposition take() {
        SNFDecomposition out;
        out.D = std::move(d_);
        out.invariant_factors = std::move(factors_);
        if (track_) {
            out.U = std::move(u_);
            out.V = std::move(v_);
            out.left = std::move(left_);
            out.right = std::move(right_);
        }
        return out;
    }

    std::vector<Integer> factors() && { return std::move(factors_); }

private:
    using Pos = std::pair<std::size_t, std::size_t>;

    std::optional<Pos> smallest_entry(std::size_t r0, std::size_t c0) const {
        std::optional<Pos> best;
        Integer best_abs;
        for (std::size_t i = r0; i < d_.rows(); ++i)
            for (std::size_t j = c0; j < d_.cols(); ++j) {
                const Integer& x = d_(i, j);
                if (sgn(x) == 0) continue;
                Integer ax = abs(x);
                if (!best || ax < best_abs) {
                    best = Pos{i, j};
                    best_abs = ax;
                    if (best_abs == 1) return best;
                }
            }
        return best;
    }

    void move_to(std::size_t t, Pos p) {
        row_swap(t, p.first);
        col_swap(t, p.second);
    }

    // Clears row t and column t outside the pivot and enforces that the pivot
    // divides every entry of the trailing submatrix.
    void reduce_pivot(std::size_t t) {
        const std::size_t m = d_.rows(), n = d_.cols();
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(d_(i, t)) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d_(i, t).get_mpz_t(), d_(t, t).get_mpz_t());
                row_add(i, t, -q);
                if (sgn(d_(i, t)) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(d_(t, j)) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d_(t, j).get_mpz_t(), d_(t, t).get_mpz_t());
                col_add(j, t, -q);
                if (sgn(d_(t, j)) != 0) dirty = true;
            }
            if (dirty) {
                // A smaller remainder appeared in row/column t; bring it to the pivot.
                Pos best{t, t};
                Integer best_abs = abs(d_(t, t));
                for (std::size_t i = t + 1; i < m; ++i)
                    if (sgn(d_(i, t)) != 0 && abs(d_(i, t)) < best_abs) {
                        best = {i, t};
                        best_abs = abs(d_(i, t));
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (sgn(d_(t, j)) != 0 && abs(d_(t, j)) < best_abs) {
                        best = {t, j};
                        best_abs = abs(d_(t, j));
                    }
                move_to(t, best);
                continue;
            }
            // Row and column are clear; check divisibility of the trailing block.
            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < m && !offending; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (sgn(d_(i, j)) != 0 && !mpz_divisible_p(d_(i, j).get_mpz_t(), d_(t, t).get_mpz_t())) {
                        offending = i;
                        break;
                    }
            if (!offending) break;
            row_add(t, *offending, Integer(1));
        }
        if (sgn(d_(t, t)) < 0) row_negate(t);
    }

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        d_.swap_rows(i, j);
        if (track_) {
            left_.swap_rows(i, j);
            u_.swap_cols(i, j);
        }
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        d_.swap_cols(i, j);
        if (track_) {
            right_.swap_cols(i, j);
            v_.swap_rows(i, j);
        }
    }
    // row[dst] += c * row[src]
    void row_add(std::size_t dst, std::size_t src, const Integer& c) {
        d_.add_row_multiple(dst, src, c);
        if (track_) {
            left_.add_row_multiple(dst, src, c);
            u_.add_col_multiple(src, dst, -c);
        }
    }
    // col[dst] += c * col[src]
    void col_add(std::size_t dst, std::size_t src, const Integer& c) {
        d_.add_col_multiple(dst, src, c);
        if (track_) {
            right_.add_col_multiple(dst, src, c);
            v_.add_row_multiple(src, dst, -c);
        }
    }
    void row_negate(std::size_t i) {
        d_.negate_row(i);
        if (track_) {
            left_.negate_row(i);
            u_.negate_col(i);
        }
    }

    IntMatrix d_;
    bool track_;
    IntMatrix left_, u_, right_, v_;
    std::vector<Integer> factors_;
};

}  // namespace

SNFDecomposition smith_normal_form(const IntMatrix& a) {
    SmithWork w(a, true);
    w.run();
    return w.take();
}

std::vector<Integer> invariant_factors(const IntMatrix& a) {
    SmithWork w(a, false);
    w.run();
    return std::move(w).factors();
}

std::size_t rank_over_z(const IntMatrix& a) { return invariant_factors(a).size(); }

IntMatrix kernel_basis(const IntMatrix& a) {
    const SNFDecomposition snf = smith_normal_form(a);
    const std::size_t r = snf.rank();
    return snf.right.block(0, r, a.cols(), a.cols() - r);
}

}  // namespace ecom::exactla
