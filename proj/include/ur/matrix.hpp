#pragma once

#include <initializer_list>
#include <vector>

#include "ur/error.hpp"
#include "ur/polynomial.hpp"
#include "ur/rational.hpp"

namespace ur {

/// Dense matrix over an exact scalar field (Rational for construction,
/// GaussianRational for verification arithmetic). Entries are row-major,
/// equality is entrywise exact equality, and 0x0 shapes are rejected.
template <typename T>
class Matrix {
  public:
    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        require(rows > 0 && cols > 0, "InvalidInput", "matrix dimensions must be positive");
        data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), T());
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows)
        : Matrix(static_cast<int>(rows.size()),
                 rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
        int i = 0;
        for (const auto& row : rows) {
            require(static_cast<int>(row.size()) == cols_, "InvalidInput",
                    "ragged initializer for matrix");
            int j = 0;
            for (const auto& v : row) at(i, j++) = v;
            ++i;
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(Rational(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& other) const = default;

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "InvalidInput", "shape mismatch in +");
        Matrix sum(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) sum.data_[k] = a.data_[k] + b.data_[k];
        return sum;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "InvalidInput", "shape mismatch in -");
        Matrix diff(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) diff.data_[k] = a.data_[k] - b.data_[k];
        return diff;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.cols_ == b.rows_, "InvalidInput", "shape mismatch in *");
        Matrix prod(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (aik == T()) continue;
                for (int j = 0; j < b.cols_; ++j) prod.at(i, j) = prod.at(i, j) + aik * b.at(k, j);
            }
        return prod;
    }

    Matrix scaled(const T& s) const {
        Matrix out(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * s;
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    T trace() const {
        require(square(), "NotSquare", "trace of a non-square matrix");
        T acc{};
        for (int i = 0; i < rows_; ++i) acc = acc + at(i, i);
        return acc;
    }

  private:
    int rows_;
    int cols_;
    std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<GaussianRational>;

ComplexMatrix complexify(const ExactMatrix& m);

/// Exact characteristic polynomial det(xI - M), monic, by the
/// Faddeev-LeVerrier recurrence over the rationals.
Polynomial char_poly(const ExactMatrix& m);

/// Rank over the scalar field, by fraction-free (Bareiss) elimination.
int rank(const ExactMatrix& m);
int rank(const ComplexMatrix& m);

/// Exact basis of the right nullspace; empty iff full column rank.
/// Basis vectors are scaled to primitive integer entries with the first
/// nonzero entry positive (real part for complex scalars).
std::vector<std::vector<Rational>> nullspace_basis(const ExactMatrix& m);
std::vector<std::vector<GaussianRational>> nullspace_basis(const ComplexMatrix& m);

}  // namespace ur
