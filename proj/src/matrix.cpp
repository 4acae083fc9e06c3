#include "lrc/matrix.hpp"

#include <stdexcept>
#include <string>

namespace lrc {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (!same_field(*a.field(), *b.field()))
        throw std::invalid_argument("matrices belong to different fields");
}

// In-place Gaussian elimination on an augmented row-major buffer of
// `rows` x `width` symbols, eliminating over the first `cols` columns.
// Pivot choice: first row with a nonzero entry, columns scanned left to
// right. Produces reduced row-echelon form; returns the pivot columns.
std::vector<std::size_t> eliminate(const Field& f, std::vector<Symbol>& m, std::size_t rows,
                                   std::size_t width, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t pr = 0;  // next pivot row
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t src = pr;
        while (src < rows && m[src * width + c] == 0) ++src;
        if (src == rows) continue;
        if (src != pr)
            for (std::size_t j = 0; j < width; ++j) std::swap(m[pr * width + j], m[src * width + j]);

        Symbol piv_inv = f.inv(m[pr * width + c]);
        for (std::size_t j = c; j < width; ++j)
            m[pr * width + j] = f.mul(m[pr * width + j], piv_inv);

        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr) continue;
            Symbol factor = m[r * width + c];
            if (factor == 0) continue;
            for (std::size_t j = c; j < width; ++j)
                m[r * width + j] = static_cast<Symbol>(m[r * width + j] ^ f.mul(factor, m[pr * width + j]));
        }
        pivot_cols.push_back(c);
        ++pr;
    }
    return pivot_cols;
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), field_(std::move(field)), data_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("matrix requires a field");
    if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::ones_row(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), 1, n);
    for (std::size_t i = 0; i < n; ++i) m.set(0, i, 1);
    return m;
}

Matrix Matrix::zeros(FieldPtr field, std::size_t rows, std::size_t cols) {
    return Matrix(std::move(field), rows, cols);
}

Symbol Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return data_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, Symbol v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    if (static_cast<std::uint32_t>(v) >= field_->size())
        throw std::out_of_range("entry value not in field");
    data_[r * cols_ + c] = v;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && same_field(*field_, *other.field_) &&
           data_ == other.data_;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    const Field& f = *a.field();
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Symbol s = a(i, j);
            if (s == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out.set(i * b.rows() + k, j * b.cols() + l, f.mul(s, b(k, l)));
        }
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row counts differ");
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b(r, c));
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column counts differ");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(a.rows() + r, c, b(r, c));
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.field(), a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(c, r, a(r, c));
    return out;
}

Matrix submatrix_cols(const Matrix& a, std::span<const std::size_t> cols) {
    if (cols.empty()) throw std::invalid_argument("submatrix_cols: empty column list");
    Matrix out(a.field(), a.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= a.cols()) throw std::out_of_range("submatrix_cols: column index out of range");
        for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, j, a(r, cols[j]));
    }
    return out;
}

Matrix submatrix_rows(const Matrix& a, std::span<const std::size_t> rows) {
    if (rows.empty()) throw std::invalid_argument("submatrix_rows: empty row list");
    Matrix out(a.field(), rows.size(), a.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= a.rows()) throw std::out_of_range("submatrix_rows: row index out of range");
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(i, c, a(rows[i], c));
    }
    return out;
}

std::size_t rank(const Matrix& a) {
    std::vector<Symbol> work(a.data().begin(), a.data().end());
    return eliminate(*a.field(), work, a.rows(), a.cols(), a.cols()).size();
}

bool columns_independent(const Matrix& a, std::span<const std::size_t> cols) {
    if (cols.empty()) return true;
    std::vector<Symbol> work(a.rows() * cols.size());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= a.cols())
                throw std::out_of_range("columns_independent: column index out of range");
            work[r * cols.size() + j] = a(r, cols[j]);
        }
    return eliminate(*a.field(), work, a.rows(), cols.size(), cols.size()).size() == cols.size();
}

std::optional<std::vector<Symbol>> solve(const Matrix& a, std::span<const Symbol> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length must equal row count");
    const Field& f = *a.field();
    const std::size_t width = a.cols() + 1;
    std::vector<Symbol> aug(a.rows() * width);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug[r * width + c] = a(r, c);
        aug[r * width + a.cols()] = b[r];
    }
    std::vector<std::size_t> pivots = eliminate(f, aug, a.rows(), width, a.cols());

    // A zero row with nonzero rhs means the system is inconsistent.
    for (std::size_t r = pivots.size(); r < a.rows(); ++r)
        if (aug[r * width + a.cols()] != 0) return std::nullopt;

    std::vector<Symbol> x(a.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i * width + a.cols()];
    return x;
}

std::vector<Symbol> mul_vec(const Matrix& a, std::span<const Symbol> x) {
    if (x.size() != a.cols()) throw std::invalid_argument("mul_vec: vector length must equal column count");
    const Field& f = *a.field();
    std::vector<Symbol> y(a.rows(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Symbol acc = 0;
        for (std::size_t c = 0; c < a.cols(); ++c)
            acc = static_cast<Symbol>(acc ^ f.mul(a(r, c), x[c]));
        y[r] = acc;
    }
    return y;
}

}  // namespace lrc
