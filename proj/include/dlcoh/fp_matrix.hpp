#pragma once

// Dense matrices over a prime field F_p with exact row reduction.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dlcoh {

bool is_prime(std::uint32_t n);

class Matrix {
public:
    using Scalar = std::uint32_t;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Scalar p);

    static Matrix identity(std::size_t n, Scalar p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar prime() const { return p_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    // Stores v mod p.
    void set(std::size_t i, std::size_t j, std::int64_t v);

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(std::int64_t c) const;
    bool operator==(const Matrix& rhs) const = default;

    bool is_zero() const;
    Matrix column(std::size_t j) const;
    Matrix columns(const std::vector<std::size_t>& idx) const;
    Matrix transpose() const;

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);

    std::string to_string() const;

    Scalar add(Scalar a, Scalar b) const { return (a + b) % p_; }
    Scalar sub(Scalar a, Scalar b) const { return (a + p_ - b) % p_; }
    Scalar mul(Scalar a, Scalar b) const {
        return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Scalar inv(Scalar a) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Scalar p_ = 2;
    std::vector<Scalar> data_;
};

struct Echelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);

// Columns form a basis of {x : a x = 0}. One column per free variable, in
// increasing free-column order, with a 1 at that free column and 0 at every
// other free column.
Matrix nullspace(const Matrix& a);

// The pivot columns of a; a basis of its column space.
Matrix column_basis(const Matrix& a);

// X with a X = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Standard basis vectors e_i (lowest i first) completing the columns of sub
// to a basis of F_p^n. sub must have n rows (or be empty).
Matrix complement_basis(const Matrix& sub, std::size_t n, Matrix::Scalar p);

std::optional<Matrix> inverse(const Matrix& a);

// True iff every column of sub lies in the column space of space.
bool column_span_contains(const Matrix& space, const Matrix& sub);

}  // namespace dlcoh
