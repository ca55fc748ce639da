#include "hypersync/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hypersync {

namespace {

double off_diagonal_frobenius(const SymMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.n(); ++i)
        for (int j = i + 1; j < a.n(); ++j) s += a.at(i, j) * a.at(i, j);
    return std::sqrt(2.0 * s);
}

// One Jacobi rotation annihilating A[p][q]; V accumulates eigenvectors as columns.
void rotate(SymMatrix& a, Matrix& v, int p, int q) {
    const double apq = a.at(p, q);
    const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
    const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double tau = s / (1.0 + c);

    const double app = a.at(p, p);
    const double aqq = a.at(q, q);
    a.at(p, p) = app - t * apq;
    a.at(q, q) = aqq + t * apq;
    a.at(p, q) = 0.0;
    a.at(q, p) = 0.0;

    const int n = a.n();
    for (int r = 0; r < n; ++r) {
        if (r != p && r != q) {
            const double arp = a.at(r, p);
            const double arq = a.at(r, q);
            a.at(r, p) = arp - s * (arq + tau * arp);
            a.at(p, r) = a.at(r, p);
            a.at(r, q) = arq + s * (arp - tau * arq);
            a.at(q, r) = a.at(r, q);
        }
        const double vrp = v(r, p);
        const double vrq = v(r, q);
        v(r, p) = vrp - s * (vrq + tau * vrp);
        v(r, q) = vrq + s * (vrp - tau * vrq);
    }
}

void fix_signs(Matrix& vectors) {
    const int n = vectors.rows();
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (std::abs(vectors(i, j)) > 1e-12) {
                if (vectors(i, j) < 0)
                    for (int r = 0; r < n; ++r) vectors(r, j) = -vectors(r, j);
                break;
            }
        }
    }
}

// Modified Gram-Schmidt over a run [lo, hi) of near-equal eigenvalues.
void reorthonormalize(Matrix& vectors, int lo, int hi) {
    const int n = vectors.rows();
    for (int j = lo; j < hi; ++j) {
        for (int l = lo; l < j; ++l) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i) dot += vectors(i, l) * vectors(i, j);
            for (int i = 0; i < n; ++i) vectors(i, j) -= dot * vectors(i, l);
        }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += vectors(i, j) * vectors(i, j);
        norm = std::sqrt(norm);
        if (norm > 0)
            for (int i = 0; i < n; ++i) vectors(i, j) /= norm;
    }
}

}  // namespace

std::vector<double> Spectrum::eigenvector(int i) const {
    std::vector<double> v(vectors.rows());
    for (int r = 0; r < vectors.rows(); ++r) v[r] = vectors(r, i);
    return v;
}

Spectrum eig_sym(const SymMatrix& m) {
    if (!m.is_exactly_symmetric()) throw NotSymmetric("eig_sym needs exactly symmetric storage");
    const int n = m.n();
    SymMatrix a = m;
    Matrix v = Matrix::identity(n);

    const double norm_f = m.frobenius_norm();
    if (norm_f > 0.0) {
        const double target = 1e-12 * norm_f;
        bool converged = false;
        for (int sweep = 0; sweep < 100; ++sweep) {
            if (off_diagonal_frobenius(a) <= target) {
                converged = true;
                break;
            }
            for (int p = 0; p < n - 1; ++p)
                for (int q = p + 1; q < n; ++q) {
                    if (std::abs(a.at(p, q)) <= 1e-300) {
                        a.at(p, q) = 0.0;
                        a.at(q, p) = 0.0;
                        continue;
                    }
                    rotate(a, v, p, q);
                }
        }
        if (!converged && off_diagonal_frobenius(a) > target)
            throw NoConvergence("Jacobi sweep budget exhausted");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&a](int i, int j) { return a.at(i, i) < a.at(j, j); });

    Spectrum s;
    s.eigenvalues.resize(n);
    s.vectors = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        s.eigenvalues[j] = a.at(order[j], order[j]);
        for (int i = 0; i < n; ++i) s.vectors(i, j) = v(i, order[j]);
    }

    // re-orthonormalize degenerate clusters, then pin signs
    const double cluster_tol = 1e-8 * std::max(1.0, m.inf_norm());
    int lo = 0;
    while (lo < n) {
        int hi = lo + 1;
        while (hi < n && s.eigenvalues[hi] - s.eigenvalues[hi - 1] <= cluster_tol) ++hi;
        if (hi - lo > 1) reorthonormalize(s.vectors, lo, hi);
        lo = hi;
    }
    fix_signs(s.vectors);
    return s;
}

double operator_norm(const SymMatrix& m) {
    const Spectrum s = eig_sym(m);
    double best = 0.0;
    for (double ev : s.eigenvalues) best = std::max(best, std::abs(ev));
    return best;
}

double max_eigenvalue(const SymMatrix& m) { return eig_sym(m).eigenvalues.back(); }

double min_eigenvalue(const SymMatrix& m) { return eig_sym(m).eigenvalues.front(); }

DiffusionReport is_diffusion_matrix(const SymMatrix& m, double tol) {
    const Spectrum s = eig_sym(m);
    const int n = m.n();
    const double scale = std::max(1.0, m.inf_norm());
    const double zero_band = tol * scale;

    DiffusionReport report;
    int first_zero = -1;
    bool others_negative = true;
    for (int i = 0; i < n; ++i) {
        if (std::abs(s.eigenvalues[i]) <= zero_band) {
            if (first_zero < 0) first_zero = i;
            ++report.zero_multiplicity;
        } else if (s.eigenvalues[i] > 0.0) {
            others_negative = false;
        }
    }
    if (report.zero_multiplicity >= 1) {
        // |cos| between the zero eigenvector(s) and the all-ones direction
        const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
        double best = 0.0;
        for (int j = first_zero; j < first_zero + report.zero_multiplicity; ++j) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i) dot += s.vectors(i, j) * inv_sqrt_n;
            best = std::max(best, std::abs(dot));
        }
        report.has_ones_kernel = best >= 1.0 - 1e-9;
    }
    report.is_diffusion = report.zero_multiplicity == 1 && report.has_ones_kernel && others_negative;
    return report;
}

NonzeroExtremes nonzero_extremes(const Spectrum& s, double tol) {
    double max_abs = 0.0;
    for (double ev : s.eigenvalues) max_abs = std::max(max_abs, std::abs(ev));
    const double zero_band = tol * std::max(1.0, max_abs);

    NonzeroExtremes out{0.0, 0.0};
    bool any = false;
    for (double ev : s.eigenvalues) {
        const double a = std::abs(ev);
        if (a <= zero_band) continue;
        if (!any) {
            out.lambda_min_abs = a;
            out.lambda_max_abs = a;
            any = true;
        } else {
            out.lambda_min_abs = std::min(out.lambda_min_abs, a);
            out.lambda_max_abs = std::max(out.lambda_max_abs, a);
        }
    }
    if (!any) throw AllZero("no eigenvalue clears the zero tolerance");
    return out;
}

SymMatrix spectral_sqrt_neg(const SymMatrix& m, double tol) {
    const Spectrum s = eig_sym(m);
    const double scale = std::max(1.0, m.inf_norm());
    if (s.eigenvalues.back() > tol * scale)
        throw Error("matrix is not negative semidefinite; no real square root of -M");
    const int n = m.n();
    std::vector<double> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = std::sqrt(std::max(0.0, -s.eigenvalues[i]));

    SymMatrix delta(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double acc = 0.0;
            for (int l = 0; l < n; ++l) acc += s.vectors(i, l) * roots[l] * s.vectors(j, l);
            delta.set_sym(i, j, acc);
        }
    return delta;
}

}  // namespace hypersync
