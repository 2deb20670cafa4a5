#include "ecom/exactla/int_matrix.hpp"

#include <sstream>
#include <utility>

namespace ecom::exactla {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<long>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr ? rows.front().size() : 0;
    IntMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw ShapeMismatch("ragged row list");
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& diag) {
    IntMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

// Bareiss fraction-free elimination.
Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw ShapeMismatch("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && sgn(a(swap, k)) == 0) ++swap;
            if (swap == n) return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeMismatch("block out of range");
    IntMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw ShapeMismatch("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void IntMatrix::add_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw ShapeMismatch("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) += b(i, j);
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
    std::vector<Integer> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Integer>>& cols, std::size_t nrows) {
    IntMatrix m(nrows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != nrows) throw ShapeMismatch("column length mismatch");
        for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (sgn(factor) == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
        if (sgn((*this)(src, c)) != 0) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (sgn(factor) == 0) return;
    for (std::size_t r = 0; r < rows_; ++r)
        if (sgn((*this)(r, src)) != 0) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const { return to_nested_array(*this); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeMismatch("product of incompatible matrices");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("sum of incompatible matrices");
    IntMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("difference of incompatible matrices");
    IntMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
    return c;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
    IntMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
    return c;
}

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v) {
    if (a.cols() != v.size()) throw ShapeMismatch("matrix-vector size mismatch");
    std::vector<Integer> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
    return out;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
        }
    return k;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix s(a.rows() + b.rows(), a.cols() + b.cols());
    s.set_block(0, 0, a);
    s.set_block(a.rows(), a.cols(), b);
    return s;
}

std::string to_nested_array(const IntMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m(i, j).get_str();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace ecom::exactla
