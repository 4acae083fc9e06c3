#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lrc/gf.hpp"

namespace lrc {

// Dense row-major matrix over GF(2^w). Values are immutable by convention
// once a matrix has been built; elimination routines work on copies.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);  // zero-filled

    static Matrix identity(FieldPtr field, std::size_t n);
    static Matrix ones_row(FieldPtr field, std::size_t m);  // 1 x m, all ones
    static Matrix zeros(FieldPtr field, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    Symbol operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Symbol at(std::size_t r, std::size_t c) const;  // bounds-checked
    void set(std::size_t r, std::size_t c, Symbol v);

    std::span<const Symbol> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<const Symbol> data() const { return data_; }

    bool operator==(const Matrix& other) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    FieldPtr field_;
    std::vector<Symbol> data_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

// Columns picked in the given order; indices may repeat.
Matrix submatrix_cols(const Matrix& a, std::span<const std::size_t> cols);
Matrix submatrix_rows(const Matrix& a, std::span<const std::size_t> rows);

std::size_t rank(const Matrix& a);

// True iff the columns of `a` restricted to `cols` are linearly independent.
bool columns_independent(const Matrix& a, std::span<const std::size_t> cols);

// One solution of A x = b, or nullopt when inconsistent. When the system is
// underdetermined, free variables are set to zero; when the columns of A are
// independent the solution is unique.
std::optional<std::vector<Symbol>> solve(const Matrix& a, std::span<const Symbol> b);

std::vector<Symbol> mul_vec(const Matrix& a, std::span<const Symbol> x);  // A x

}  // namespace lrc
