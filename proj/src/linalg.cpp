#include "tamestrat/linalg.hpp"

#include <sstream>

namespace tamestrat {

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols)
    : f_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, f_->zero()) {}

Matrix Matrix::identity(FieldPtr field, size_t n) {
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

Matrix Matrix::from_rows(FieldPtr field,
                         const std::vector<std::vector<FieldElem>>& rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(std::move(field), r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw Error("LengthMismatch", "ragged matrix rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_ints(FieldPtr field,
                         const std::vector<std::vector<int64_t>>& rows) {
    std::vector<std::vector<FieldElem>> conv;
    conv.reserve(rows.size());
    for (auto& row : rows) {
        std::vector<FieldElem> r;
        r.reserve(row.size());
        for (int64_t v : row) r.push_back(field->from_int(v));
        conv.push_back(std::move(r));
    }
    return from_rows(std::move(field), conv);
}

Matrix Matrix::companion(const Poly& p) {
    if (p.is_zero() || !p.is_monic() || p.degree() < 1)
        throw Error("NotMonic", "companion matrix needs a monic polynomial of degree >= 1");
    const size_t n = (size_t)p.degree();
    Matrix m(p.field(), n, n);
    for (size_t i = 0; i + 1 < n; ++i) m.at(i + 1, i) = p.field()->one();
    for (size_t i = 0; i < n; ++i) m.at(i, n - 1) = -p.coeff((int)i);
    return m;
}

Matrix Matrix::poly_at(const Poly& p, const Matrix& m) {
    if (m.rows() != m.cols())
        throw Error("LengthMismatch", "polynomial of a non-square matrix");
    Matrix acc(m.field(), m.rows(), m.rows());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        FieldElem c = p.coeff(i);
        for (size_t d = 0; d < m.rows(); ++d) acc.at(d, d) += c;
    }
    return acc;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error("LengthMismatch", "matrix addition shape mismatch");
    Matrix out = a;
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error("LengthMismatch", "matrix subtraction shape mismatch");
    Matrix out = a;
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw Error("LengthMismatch", "matrix product shape mismatch");
    Field::require_same(a.f_, b.f_);
    Matrix out(a.f_, a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const FieldElem& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

Matrix Matrix::scaled(const FieldElem& c) const {
    Matrix out = *this;
    for (auto& x : out.a_) x *= c;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(f_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::pow(int e) const {
    if (rows_ != cols_)
        throw Error("LengthMismatch", "power of a non-square matrix");
    Matrix acc = identity(f_, rows_);
    Matrix b = *this;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

Matrix Matrix::hstack(const Matrix& right) const {
    if (rows_ != right.rows_)
        throw Error("LengthMismatch", "hstack row mismatch");
    Matrix out(f_, rows_, cols_ + right.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (size_t j = 0; j < right.cols_; ++j) out.at(i, cols_ + j) = right.at(i, j);
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
    if (cols_ != below.cols_)
        throw Error("LengthMismatch", "vstack column mismatch");
    Matrix out(f_, rows_ + below.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (size_t i = 0; i < below.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(rows_ + i, j) = below.at(i, j);
    return out;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
    Matrix out(a.f_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows_; ++i)
        for (size_t j = 0; j < b.cols_; ++j) out.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return out;
}

bool Matrix::is_zero() const {
    for (auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.a_.size(); ++i)
        if (a.a_[i] != b.a_[i]) return false;
    return true;
}

Matrix Matrix::rref(std::vector<size_t>* pivot_cols) const {
    Matrix m = *this;
    size_t lead = 0;
    if (pivot_cols) pivot_cols->clear();
    for (size_t col = 0; col < cols_ && lead < rows_; ++col) {
        size_t sel = lead;
        while (sel < rows_ && m.at(sel, col).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != lead)
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(lead, j));
        FieldElem inv = m.at(lead, col).inverse();
        for (size_t j = 0; j < cols_; ++j) m.at(lead, j) *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == lead || m.at(i, col).is_zero()) continue;
            FieldElem factor = m.at(i, col);
            for (size_t j = 0; j < cols_; ++j)
                m.at(i, j) -= factor * m.at(lead, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++lead;
    }
    return m;
}

size_t Matrix::rank() const {
    std::vector<size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

std::vector<std::vector<FieldElem>> Matrix::nullspace() const {
    std::vector<size_t> pivots;
    Matrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElem> v(cols_, f_->zero());
        v[free_col] = f_->one();
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r.at(k, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        os << "[";
        for (size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << at(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

} // namespace tamestrat
