#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "hypersync/errors.hpp"

namespace hypersync {

/// Dense row-major matrix. Used for eigenvector blocks, Jacobians and
/// incidence; the symmetric operators live in SymMatrix.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0.0) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    std::span<double> data() { return data_; }
    std::span<const double> data() const { return data_; }
    std::span<double> row(int i) { return std::span<double>(data_).subspan(static_cast<size_t>(i) * cols_, cols_); }
    std::span<const double> row(int i) const {
        return std::span<const double>(data_).subspan(static_cast<size_t>(i) * cols_, cols_);
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    double inf_norm() const {
        double best = 0.0;
        for (int i = 0; i < rows_; ++i) {
            double s = 0.0;
            for (int j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
            best = std::max(best, s);
        }
        return best;
    }

    double max_abs() const {
        double best = 0.0;
        for (double v : data_) best = std::max(best, std::abs(v));
        return best;
    }

  private:
    int rows_, cols_;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

/// Dense symmetric real matrix, row-major n*n. Construction paths keep the
/// storage exactly symmetric: set_sym writes both triangles, symmetrize()
/// averages (i,j)/(j,i) after free-form accumulation.
class SymMatrix {
  public:
    SymMatrix() : n_(0) {}
    explicit SymMatrix(int n) : n_(n), data_(static_cast<size_t>(n) * n, 0.0) {}

    static SymMatrix identity(int n) {
        SymMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    /// Strict conversion: throws NotSymmetric unless entries match exactly.
    static SymMatrix from_dense(const Matrix& a);

    int n() const { return n_; }

    double& at(int i, int j) { return data_[static_cast<size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return data_[static_cast<size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return at(i, j); }

    void set_sym(int i, int j, double v) {
        at(i, j) = v;
        at(j, i) = v;
    }
    void add_sym(int i, int j, double v) {
        at(i, j) += v;
        if (i != j) at(j, i) += v;
    }

    /// Average the two triangles so entries[i][j] == entries[j][i] exactly.
    void symmetrize() {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                double v = 0.5 * (at(i, j) + at(j, i));
                at(i, j) = v;
                at(j, i) = v;
            }
    }

    bool is_exactly_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    std::span<double> data() { return data_; }
    std::span<const double> data() const { return data_; }

    double inf_norm() const;
    double frobenius_norm() const;
    double max_abs() const;

    /// this + s*I
    SymMatrix plus_scaled_identity(double s) const {
        SymMatrix r = *this;
        for (int i = 0; i < n_; ++i) r.at(i, i) += s;
        return r;
    }

    SymMatrix scaled(double s) const {
        SymMatrix r = *this;
        for (double& v : r.data_) v *= s;
        return r;
    }

    Matrix to_matrix() const {
        Matrix m(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(i, j) = at(i, j);
        return m;
    }

    /// y = M x
    std::vector<double> apply(std::span<const double> x) const;
    /// Y = M X for a row-major n x k state block.
    std::vector<double> apply_block(std::span<const double> x, int k) const;
    /// x^T M x
    double quadratic_form(std::span<const double> x) const;

  private:
    int n_;
    std::vector<double> data_;
};

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);

}  // namespace hypersync
