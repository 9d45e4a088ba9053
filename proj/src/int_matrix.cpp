#include "bredim/int_matrix.hpp"

#include <cassert>
#include <ostream>
#include <sstream>
#include <utility>

#include "bredim/errors.hpp"

namespace bredim {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw InputError("ragged matrix literal");
        for (long x : r)
            data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, std::span<const IntVector> rows) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw InputError("dimension mismatch: vector of length " + std::to_string(rows[i].size()) +
                             " in ambient dimension " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<IntVector> IntMatrix::row_list() const {
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out.push_back(row(i));
    return out;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0)
            return false;
    return true;
}

bool IntMatrix::is_row_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
        if (sgn((*this)(i, j)) != 0)
            return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
    assert(first + count <= rows_);
    IntMatrix b(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            b(i, j) = (*this)(first + i, j);
    return b;
}

IntMatrix IntMatrix::stacked(const IntMatrix& below) const {
    if (rows_ != 0 && below.rows_ != 0 && cols_ != below.cols_)
        throw InputError("cannot stack matrices with different column counts");
    std::size_t cols = rows_ != 0 ? cols_ : below.cols_;
    IntMatrix s(rows_ + below.rows_, cols);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            s(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < below.rows_; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            s(rows_ + i, j) = below(i, j);
    return s;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (sgn(factor) == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (sgn(factor) == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::combine_rows(std::size_t a, std::size_t b, const Integer& s, const Integer& t, const Integer& u,
                             const Integer& v) {
    for (std::size_t j = 0; j < cols_; ++j) {
        Integer x = (*this)(a, j);
        Integer y = (*this)(b, j);
        (*this)(a, j) = s * x + t * y;
        (*this)(b, j) = u * x + v * y;
    }
}

void IntMatrix::combine_cols(std::size_t a, std::size_t b, const Integer& s, const Integer& t, const Integer& u,
                             const Integer& v) {
    for (std::size_t i = 0; i < rows_; ++i) {
        Integer x = (*this)(i, a);
        Integer y = (*this)(i, b);
        (*this)(i, a) = s * x + t * y;
        (*this)(i, b) = u * x + v * y;
    }
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw InputError("matrix product dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& x = a(i, k);
            if (sgn(x) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += x * b(k, j);
        }
    return c;
}

IntVector operator*(const IntVector& v, const IntMatrix& m) {
    if (v.size() != m.rows())
        throw InputError("vector-matrix product dimension mismatch");
    IntVector out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (sgn(v[i]) == 0)
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[j] += v[i] * m(i, j);
    }
    return out;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw InputError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
    return os;
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ' ';
        os << v[i];
    }
    return os.str();
}

} // namespace bredim
