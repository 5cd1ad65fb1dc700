#ifndef TAMESTRAT_LINALG_HPP
#define TAMESTRAT_LINALG_HPP

#include <cstddef>
#include <vector>

#include "tamestrat/poly.hpp"

namespace tamestrat {

// Dense exact matrix over a scalar field. Row-major; all eliminations are
// fraction-free in the sense that field arithmetic is exact.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, size_t rows, size_t cols);

    static Matrix identity(FieldPtr field, size_t n);
    static Matrix from_rows(FieldPtr field,
                            const std::vector<std::vector<FieldElem>>& rows);
    static Matrix from_ints(FieldPtr field,
                            const std::vector<std::vector<int64_t>>& rows);
    // companion matrix of a monic polynomial: C e_i = e_{i+1} for i < n,
    // C e_n = -(c_0 e_1 + ... + c_{n-1} e_n); minimal polynomial is p
    static Matrix companion(const Poly& p);
    static Matrix poly_at(const Poly& p, const Matrix& m); // p(m)

    const FieldPtr& field() const { return f_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FieldElem& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const FieldElem& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix scaled(const FieldElem& c) const;
    Matrix transpose() const;
    Matrix pow(int e) const;
    Matrix hstack(const Matrix& right) const;
    Matrix vstack(const Matrix& below) const;
    static Matrix block_diag(const Matrix& a, const Matrix& b);

    bool is_zero() const;
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    size_t rank() const;
    Matrix rref(std::vector<size_t>* pivot_cols = nullptr) const;
    // basis of the right nullspace, one column vector per basis element
    std::vector<std::vector<FieldElem>> nullspace() const;

    std::string str() const;

private:
    FieldPtr f_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElem> a_;
};

} // namespace tamestrat

#endif
