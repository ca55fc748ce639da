#include "hypersync/maps.hpp"

#include <cmath>

#include "hypersync/spectra.hpp"

namespace hypersync {

MapSpec MapSpec::identity() { return MapSpec(MapKind::identity, 0.0); }
MapSpec MapSpec::zero() { return MapSpec(MapKind::zero, 0.0); }
MapSpec MapSpec::linear(double a) { return MapSpec(MapKind::linear, a); }
MapSpec MapSpec::sine(double q) { return MapSpec(MapKind::sine, q); }
MapSpec MapSpec::cosine(double p) { return MapSpec(MapKind::cosine, p); }
MapSpec MapSpec::expsin(double q) { return MapSpec(MapKind::expsin, q); }
MapSpec MapSpec::logistic(double r) { return MapSpec(MapKind::logistic, r); }

MapSpec MapSpec::linear_matrix(Matrix a) {
    if (a.rows() != a.cols() || a.rows() < 1) throw DimensionMismatch("coupling matrix must be square");
    MapSpec m(MapKind::linear, 0.0);
    m.coupling_ = std::move(a);
    return m;
}

double MapSpec::expsin_slope_factor() {
    // |cos x e^{sin x}| peaks where sin x = (sqrt5 - 1)/2; there cos^2 x = sin x.
    static const double s = (std::sqrt(5.0) - 1.0) / 2.0;
    static const double factor = std::sqrt(s) * std::exp(s);
    return factor;
}

double MapSpec::scalar(double x) const {
    switch (kind_) {
        case MapKind::identity: return x;
        case MapKind::zero: return 0.0;
        case MapKind::linear: return param_ * x;
        case MapKind::sine: return param_ * std::sin(-x);
        case MapKind::cosine: return param_ * std::cos(-x);
        case MapKind::expsin: return param_ * std::exp(std::sin(x));
        case MapKind::logistic: return param_ * x * (1.0 - x);
    }
    return 0.0;
}

double MapSpec::derivative(double x) const {
    switch (kind_) {
        case MapKind::identity: return 1.0;
        case MapKind::zero: return 0.0;
        case MapKind::linear: return param_;
        case MapKind::sine: return -param_ * std::cos(x);
        case MapKind::cosine: return -param_ * std::sin(x);
        case MapKind::expsin: return param_ * std::cos(x) * std::exp(std::sin(x));
        case MapKind::logistic: return param_ * (1.0 - 2.0 * x);
    }
    return 0.0;
}

void MapSpec::apply_row(std::span<const double> in, std::span<double> out) const {
    if (is_matrix_linear()) {
        const int k = coupling_.rows();
        if (static_cast<int>(in.size()) != k) throw DimensionMismatch("row length mismatch");
        for (int j = 0; j < k; ++j) {
            double acc = 0.0;
            for (int i = 0; i < k; ++i) acc += in[i] * coupling_(i, j);
            out[j] = acc;
        }
        return;
    }
    for (size_t i = 0; i < in.size(); ++i) out[i] = scalar(in[i]);
}

std::vector<double> MapSpec::apply_state(std::span<const double> x, int n, int k) const {
    if (static_cast<int>(x.size()) != n * k) throw DimensionMismatch("state block shape mismatch");
    if (is_matrix_linear() && coupling_.rows() != k) throw DimensionMismatch("coupling dimension mismatch");
    std::vector<double> out(x.size());
    for (int u = 0; u < n; ++u)
        apply_row(x.subspan(static_cast<size_t>(u) * k, k),
                  std::span<double>(out).subspan(static_cast<size_t>(u) * k, k));
    return out;
}

Matrix MapSpec::jacobian(std::span<const double> s) const {
    const int k = static_cast<int>(s.size());
    if (is_matrix_linear()) {
        if (coupling_.rows() != k) throw DimensionMismatch("coupling dimension mismatch");
        return coupling_;
    }
    Matrix j(k, k);
    for (int i = 0; i < k; ++i) j(i, i) = derivative(s[i]);
    return j;
}

double MapSpec::lipschitz_constant() const {
    if (is_matrix_linear()) {
        // ||A||_2 via the Gram spectrum
        const int k = coupling_.rows();
        SymMatrix gram(k);
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) {
                double acc = 0.0;
                for (int l = 0; l < k; ++l) acc += coupling_(l, i) * coupling_(l, j);
                gram.set_sym(i, j, acc);
            }
        return std::sqrt(std::max(0.0, max_eigenvalue(gram)));
    }
    switch (kind_) {
        case MapKind::identity: return 1.0;
        case MapKind::zero: return 0.0;
        case MapKind::linear: return std::abs(param_);
        case MapKind::sine: return std::abs(param_);
        case MapKind::cosine: return std::abs(param_);
        case MapKind::expsin: return std::abs(param_) * expsin_slope_factor();
        case MapKind::logistic: return std::abs(param_);
    }
    return 0.0;
}

double MapSpec::slope_bound() const {
    switch (kind_) {
        case MapKind::identity: return 1.0;
        case MapKind::zero: return 0.0;
        case MapKind::linear: return param_;  // signed
        case MapKind::sine: return std::abs(param_);
        case MapKind::cosine: return std::abs(param_);
        case MapKind::expsin: return std::abs(param_) * expsin_slope_factor();
        case MapKind::logistic: return std::abs(param_);
    }
    return 0.0;
}

std::string MapSpec::name() const { return map_kind_name(kind_); }

MapKind map_kind_from_name(const std::string& name) {
    if (name == "identity") return MapKind::identity;
    if (name == "zero") return MapKind::zero;
    if (name == "linear") return MapKind::linear;
    if (name == "sine") return MapKind::sine;
    if (name == "cosine") return MapKind::cosine;
    if (name == "expsin") return MapKind::expsin;
    if (name == "logistic") return MapKind::logistic;
    throw Error("unknown map kind: " + name);
}

std::string map_kind_name(MapKind kind) {
    switch (kind) {
        case MapKind::identity: return "identity";
        case MapKind::zero: return "zero";
        case MapKind::linear: return "linear";
        case MapKind::sine: return "sine";
        case MapKind::cosine: return "cosine";
        case MapKind::expsin: return "expsin";
        case MapKind::logistic: return "logistic";
    }
    return "unknown";
}

}  // namespace hypersync
