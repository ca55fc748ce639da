#include "hypersync/matrix.hpp"

#include "hypersync/kernels.hpp"

namespace hypersync {

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int l = 0; l < a.cols(); ++l) {
            const double ail = a(i, l);
            if (ail == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += ail * b(l, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape mismatch");
    Matrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference shape mismatch");
    Matrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

Matrix operator*(double s, const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

SymMatrix SymMatrix::from_dense(const Matrix& a) {
    if (a.rows() != a.cols()) throw NotSymmetric("matrix is not square");
    SymMatrix m(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j) != a(j, i)) throw NotSymmetric("entries (i,j) and (j,i) differ");
            m.at(i, j) = a(i, j);
        }
    return m;
}

double SymMatrix::inf_norm() const {
    double best = 0.0;
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j) s += std::abs(at(i, j));
        best = std::max(best, s);
    }
    return best;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

double SymMatrix::max_abs() const {
    double best = 0.0;
    for (double v : data_) best = std::max(best, std::abs(v));
    return best;
}

std::vector<double> SymMatrix::apply(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != n_) throw DimensionMismatch("matvec length mismatch");
    std::vector<double> y(n_);
    kernels::matvec(data_, n_, x, y);
    return y;
}

std::vector<double> SymMatrix::apply_block(std::span<const double> x, int k) const {
    if (static_cast<int>(x.size()) != n_ * k) throw DimensionMismatch("state block shape mismatch");
    std::vector<double> y(x.size());
    kernels::matvec_block(data_, n_, x, k, y);
    return y;
}

double SymMatrix::quadratic_form(std::span<const double> x) const {
    std::vector<double> y = apply(x);
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += x[i] * y[i];
    return s;
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
    if (a.n() != b.n()) throw DimensionMismatch("symmetric sum shape mismatch");
    SymMatrix c(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
    if (a.n() != b.n()) throw DimensionMismatch("symmetric difference shape mismatch");
    SymMatrix c(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

}  // namespace hypersync
