#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lgk {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense matrix of arbitrary-precision integers, stored row-major.
///
/// Lattice maps act on column vectors: a matrix with `rows() == m` and
/// `cols() == n` is a homomorphism Z^n -> Z^m.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
    static IntMatrix from_columns(const std::vector<IntVec>& columns, std::size_t rows);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Int>& entries() const noexcept { return data_; }

    IntVec row(std::size_t i) const;
    IntVec column(std::size_t j) const;
    std::vector<IntVec> row_list() const;
    std::vector<IntVec> column_list() const;

    IntMatrix transpose() const;
    IntVec apply(const IntVec& v) const;
    RatVec apply(const RatVec& v) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
    void negate_row(std::size_t i);

    /// Horizontal concatenation [a | b]; row counts must agree.
    static IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
    /// Vertical concatenation [a ; b]; column counts must agree.
    static IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);

    /// Rows [r0, r1) of the matrix.
    IntMatrix row_range(std::size_t r0, std::size_t r1) const;

    Int determinant() const;
    bool is_zero() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
    friend bool operator<(const IntMatrix& a, const IntMatrix& b);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const Int& k, const IntMatrix& a);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec scale(const Int& k, const IntVec& a);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& k, const RatVec& a);

RatVec to_rational(const IntVec& v);
bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);
bool is_integral(const RatVec& v);
IntVec to_integral(const RatVec& v);
IntVec zero_vector(std::size_t n);
RatVec zero_rat_vector(std::size_t n);
IntVec unit_vector(std::size_t n, std::size_t i);

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

/// Least common multiple of the denominators of v (1 for the empty vector).
Int common_denominator(const RatVec& v);

}  // namespace lgk
