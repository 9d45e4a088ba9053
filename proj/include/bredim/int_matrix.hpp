#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bredim {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    /// All rows must have length `cols`; throws InputError otherwise.
    static IntMatrix from_rows(std::size_t cols, std::span<const IntVector> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    std::vector<IntVector> row_list() const;
    bool is_zero() const;
    bool is_row_zero(std::size_t i) const;

    IntMatrix transposed() const;
    /// Rows [first, first + count).
    IntMatrix row_block(std::size_t first, std::size_t count) const;
    /// Vertical concatenation; column counts must agree.
    IntMatrix stacked(const IntMatrix& below) const;

    // Elementary operations, used by the normal-form routines.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    /// row[target] += factor * row[source]
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
    /// col[target] += factor * col[source]
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
    /// Replace rows (a, b) by (s*a + t*b, u*a + v*b).
    void combine_rows(std::size_t a, std::size_t b, const Integer& s, const Integer& t, const Integer& u,
                      const Integer& v);
    /// Replace columns (a, b) by (s*a + t*b, u*a + v*b).
    void combine_cols(std::size_t a, std::size_t b, const Integer& s, const Integer& t, const Integer& u,
                      const Integer& v);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Row vector times matrix.
IntVector operator*(const IntVector& v, const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination. Square input only.
Integer determinant(const IntMatrix& m);

/// Writes one row per line, entries separated by single spaces.
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

std::string to_string(const IntVector& v);

} // namespace bredim
