#include "ecom/exactla/fp_matrix.hpp"

#include <sstream>

namespace ecom::exactla {
namespace {

std::uint32_t reduce_long(long v, std::uint32_t p) {
    long r = v % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

}  // namespace

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw ShapeMismatch("element not invertible mod p");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::uint32_t p, std::size_t cols_if_empty) {
    const std::size_t nc = rows.empty() ? cols_if_empty : rows.front().size();
    FpMatrix m(rows.size(), nc, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc) throw ShapeMismatch("ragged row list");
        for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = reduce_long(rows[i][j], p);
    }
    return m;
}

FpMatrix FpMatrix::reduce(const IntMatrix& a, std::uint32_t p) {
    FpMatrix m(a.rows(), a.cols(), p);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m.at(i, j) = static_cast<Entry>(mpz_fdiv_ui(a(i, j).get_mpz_t(), p));
    return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, long v) { at(r, c) = reduce_long(v, p_); }

bool FpMatrix::is_zero() const {
    for (auto x : data_)
        if (x) return false;
    return true;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = (*this)(i, j);
    return t;
}

FpMatrix FpMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeMismatch("block out of range");
    FpMatrix b(nr, nc, p_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b.at(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void FpMatrix::set_block(std::size_t r0, std::size_t c0, const FpMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeMismatch("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b(i, j);
}

FpMatrix FpMatrix::rref(std::vector<std::size_t>* pivots) const {
    FpMatrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t s = r;
        while (s < rows_ && m(s, c) == 0) ++s;
        if (s == rows_) continue;
        if (s != r)
            for (std::size_t k = 0; k < cols_; ++k) std::swap(m.at(s, k), m.at(r, k));
        const std::uint64_t inv = inverse_mod(m(r, c), p_);
        for (std::size_t k = c; k < cols_; ++k) m.at(r, k) = static_cast<Entry>(m(r, k) * inv % p_);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const std::uint64_t f = p_ - m(i, c);
            for (std::size_t k = c; k < cols_; ++k)
                if (m(r, k)) m.at(i, k) = static_cast<Entry>((m(i, k) + f * m(r, k)) % p_);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = std::move(piv);
    return m;
}

std::size_t FpMatrix::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

FpMatrix FpMatrix::kernel() const {
    std::vector<std::size_t> piv;
    const FpMatrix e = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    FpMatrix k(cols_, cols_ - piv.size(), p_);
    std::size_t out = 0;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        k.at(f, out) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            if (e(i, f)) k.at(piv[i], out) = p_ - e(i, f);
        ++out;
    }
    return k;
}

std::optional<FpMatrix> FpMatrix::solve(const FpMatrix& b) const {
    if (b.rows_ != rows_) throw ShapeMismatch("solve: row count mismatch");
    FpMatrix aug(rows_, cols_ + b.cols_, p_);
    aug.set_block(0, 0, *this);
    aug.set_block(0, cols_, b);
    std::vector<std::size_t> piv;
    const FpMatrix e = aug.rref(&piv);
    FpMatrix x(cols_, b.cols_, p_);
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] >= cols_) return std::nullopt;
        for (std::size_t j = 0; j < b.cols_; ++j) x.at(piv[i], j) = e(i, cols_ + j);
    }
    return x;
}

std::vector<std::vector<long>> FpMatrix::to_rows() const {
    std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

std::string FpMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

FpMatrix FpMatrix::operator*(const FpMatrix& b) const {
    if (cols_ != b.rows_ || p_ != b.p_) throw ShapeMismatch("product of incompatible F_p matrices");
    FpMatrix c(rows_, b.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint64_t a = (*this)(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j)) c.at(i, j) = static_cast<Entry>((c(i, j) + a * b(k, j)) % p_);
        }
    return c;
}

FpMatrix FpMatrix::operator+(const FpMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_ || p_ != b.p_) throw ShapeMismatch("sum of incompatible F_p matrices");
    FpMatrix c = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] = (data_[i] + b.data_[i]) % p_;
    return c;
}

FpMatrix FpMatrix::operator-(const FpMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_ || p_ != b.p_) throw ShapeMismatch("difference of incompatible F_p matrices");
    FpMatrix c = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] = (data_[i] + p_ - b.data_[i]) % p_;
    return c;
}

std::size_t rank_mod_p(const IntMatrix& a, std::uint32_t p) { return FpMatrix::reduce(a, p).rank(); }

}  // namespace ecom::exactla
