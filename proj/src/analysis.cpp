#include "hypersync/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "hypersync/operators.hpp"

namespace hypersync {

namespace {

void format_double(std::ostream& os, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

SymMatrix symmetrized(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("cannot symmetrize a non-square matrix");
    SymMatrix s(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i; j < m.cols(); ++j) s.set_sym(i, j, 0.5 * (m(i, j) + m(j, i)));
    return s;
}

double definiteness_band(const SymMatrix& s) { return kDefinitenessTol * std::max(1.0, s.inf_norm()); }

// Functions of a PD matrix through its spectrum.
SymMatrix spectral_power(const Spectrum& spec, double exponent) {
    const int n = spec.n();
    SymMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double acc = 0.0;
            for (int l = 0; l < n; ++l)
                acc += spec.vectors(i, l) * std::pow(spec.eigenvalues[l], exponent) * spec.vectors(j, l);
            out.set_sym(i, j, acc);
        }
    return out;
}

}  // namespace

std::string verdict_name(Verdict v) { return v == Verdict::guaranteed ? "guaranteed" : "not_guaranteed"; }

double CriterionReport::get(const std::string& key) const {
    for (const auto& [k, v] : values)
        if (k == key) return v;
    throw Error("criterion report has no entry " + key);
}

std::string CriterionReport::to_key_value() const {
    std::ostringstream os;
    os << "criterion=" << criterion << "\n";
    for (const auto& [k, v] : values) {
        os << k << "=";
        format_double(os, v);
        os << "\n";
    }
    os << "verdict=" << verdict_name(verdict) << "\n";
    os << "margin=";
    format_double(os, margin);
    os << "\n";
    return os.str();
}

NormSpec::NormSpec(SymMatrix a) : a_(std::move(a)) {
    const Spectrum spec = eig_sym(a_);
    const double scale = std::max(1.0, a_.inf_norm());
    if (spec.eigenvalues.front() <= kStrictTol * scale)
        throw ANotPositiveDefinite("norm matrix A must be positive definite");
    a_inv_ = spectral_power(spec, -1.0);
    a_half_ = spectral_power(spec, 0.5);
    a_inv_half_ = spectral_power(spec, -0.5);
}

double NormSpec::vector_norm(std::span<const double> x) const {
    return std::sqrt(std::max(0.0, a_.quadratic_form(x)));
}

double NormSpec::matrix_norm(const Matrix& j) const {
    if (j.rows() != k() || j.cols() != k()) throw DimensionMismatch("matrix must be k x k");
    // sup ||x J||_A / ||x||_A = sqrt(lambda_max(A^-1/2 J A J^T A^-1/2))
    const Matrix b = a_inv_half_.to_matrix() * j * a_.to_matrix() * j.transposed() * a_inv_half_.to_matrix();
    return std::sqrt(std::max(0.0, max_eigenvalue(symmetrized(b))));
}

CriterionReport global_discrete(double k_f, double k_g, double eps, double lw_norm) {
    if (k_f < 0 || k_g < 0) throw Error("Lipschitz constants must be nonnegative");
    if (!(eps > 0)) throw Error("coupling strength must be positive");
    CriterionReport report;
    report.criterion = "global-discrete";
    report.put("k_f", k_f);
    report.put("k_g", k_g);
    report.put("epsilon", eps);
    report.put("lw_norm", lw_norm);
    const double value = k_g + eps * lw_norm * k_f;
    report.put("value", value);
    report.margin = 1.0 - value;
    report.verdict = report.margin > kStrictTol ? Verdict::guaranteed : Verdict::not_guaranteed;
    return report;
}

CriterionReport global_discrete_feqg(double k_f, double eps, const SymMatrix& lw) {
    if (!(k_f > 0)) throw Error("k_f must be positive");
    CriterionReport report;
    report.criterion = "global-discrete-feqg";
    report.put("k_f", k_f);
    report.put("epsilon", eps);
    const double norm = operator_norm(lw.scaled(eps).plus_scaled_identity(1.0));
    report.put("iteration_norm", norm);
    report.put("threshold", 1.0 / k_f);
    report.margin = 1.0 / k_f - norm;
    report.verdict = report.margin > kStrictTol ? Verdict::guaranteed : Verdict::not_guaranteed;
    return report;
}

CriterionReport global_discrete_delta(double k_f, double k_g, double eps, const SymMatrix& lw) {
    const SymMatrix delta = spectral_sqrt_neg(lw);
    // residual of Delta^2 + L_w, recorded so the construction is auditable
    double residual = 0.0;
    const int n = lw.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int l = 0; l < n; ++l) acc += delta.at(i, l) * delta.at(l, j);
            residual = std::max(residual, std::abs(acc + lw.at(i, j)));
        }
    CriterionReport report = global_discrete(k_f, k_g, eps, operator_norm(lw));
    report.criterion = "global-discrete-delta";
    report.put("delta_residual", residual);
    return report;
}

double sigma_estimate(const std::vector<double>& s0, const MapSpec& g, const MapSpec& f, const NormSpec& a,
                      long burn_in, long horizon) {
    if (!(horizon > burn_in) || burn_in < 0) throw Error("need horizon > burn_in >= 0");
    if (static_cast<int>(s0.size()) != a.k()) throw DimensionMismatch("orbit point dimension mismatch");
    std::vector<double> s = s0;
    std::vector<double> next(s.size());
    double acc = 0.0;
    for (long r = 1; r <= horizon; ++r) {
        for (double v : s)
            if (!std::isfinite(v)) throw NonFinite("synced orbit escaped");
        if (r > burn_in) {
            const double norm = a.matrix_norm(f.jacobian(s));
            if (!(norm > 0.0)) throw ZeroDerivative("log ||J_f||_A undefined at zero");
            acc += std::log(norm);
        }
        g.apply_row(s, next);
        s = next;
    }
    return acc / static_cast<double>(horizon - burn_in);
}

CriterionReport eigenvalue_interval_check(double sigma, double eps, const Spectrum& spectrum, double tol,
                                          const std::vector<bool>* exclude_mode) {
    if (!(eps > 0)) throw Error("coupling strength must be positive");
    if (exclude_mode && static_cast<int>(exclude_mode->size()) != spectrum.n())
        throw DimensionMismatch("mode mask length mismatch");
    CriterionReport report;
    report.criterion = "eigenvalue-interval";
    report.put("sigma", sigma);
    report.put("epsilon", eps);
    const double lo = (1.0 - std::exp(-sigma)) / eps;
    const double hi = (1.0 + std::exp(-sigma)) / eps;
    report.put("interval_lo", lo);
    report.put("interval_hi", hi);

    double max_abs = 0.0;
    for (double ev : spectrum.eigenvalues) max_abs = std::max(max_abs, std::abs(ev));
    const double zero_band = tol * std::max(1.0, max_abs);

    double margin = hi - lo;  // no constrained mode: trivially inside
    int checked = 0;
    for (int i = 0; i < spectrum.n(); ++i) {
        if (exclude_mode && (*exclude_mode)[i]) continue;
        const double a = std::abs(spectrum.eigenvalues[i]);
        if (a <= zero_band) continue;  // kernel modes move along the manifold
        margin = std::min(margin, std::min(a - lo, hi - a));
        report.put("mode_" + std::to_string(i) + "_margin", std::min(a - lo, hi - a));
        ++checked;
    }
    report.put("modes_checked", checked);
    report.margin = margin;
    report.verdict = margin > kStrictTol ? Verdict::guaranteed : Verdict::not_guaranteed;
    return report;
}

Interval coupling_interval(double sigma, double lambda_min_abs, double lambda_max_abs) {
    if (!(lambda_min_abs > 0) || !(lambda_max_abs > 0)) throw Error("extreme |eigenvalues| must be positive");
    return Interval{(1.0 - std::exp(-sigma)) / lambda_min_abs, (1.0 + std::exp(-sigma)) / lambda_max_abs};
}

CriterionReport lyapunov_discrete_check(const Matrix& jg, const Matrix& jf, double eps,
                                        const std::vector<double>& eigenvalues, const NormSpec& a) {
    const int k = a.k();
    if (jg.rows() != k || jg.cols() != k || jf.rows() != k || jf.cols() != k)
        throw DimensionMismatch("Jacobians must be k x k");
    CriterionReport report;
    report.criterion = "lyapunov-discrete";
    report.put("epsilon", eps);

    const Matrix a_mat = a.a().to_matrix();
    double margin = std::numeric_limits<double>::infinity();
    bool all_direct = true;
    bool all_schur = true;
    for (size_t i = 0; i < eigenvalues.size(); ++i) {
        Matrix m(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) m(r, c) = jg(r, c) + eps * eigenvalues[i] * jf(r, c);

        // direct form: M A M^T - A < 0
        const SymMatrix s = symmetrized(m * a_mat * m.transposed() - a_mat);
        const double top = max_eigenvalue(s);
        all_direct = all_direct && top < -definiteness_band(s);
        margin = std::min(margin, -top);

        // Schur block form: [[A, M], [M^T, A^-1]] > 0
        Matrix block(2 * k, 2 * k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) {
                block(r, c) = a.a().at(r, c);
                block(r, k + c) = m(r, c);
                block(k + r, c) = m(c, r);
                block(k + r, k + c) = a.a_inverse().at(r, c);
            }
        const SymMatrix sym_block = symmetrized(block);
        all_schur = all_schur && min_eigenvalue(sym_block) > definiteness_band(sym_block);
    }
    report.put("modes_checked", static_cast<double>(eigenvalues.size()));
    report.put("schur_agrees", all_direct == all_schur ? 1.0 : 0.0);
    report.margin = margin;
    report.verdict = all_direct ? Verdict::guaranteed : Verdict::not_guaranteed;
    return report;
}

CriterionReport continuous_local_check(const std::vector<Matrix>& jf_samples,
                                       const std::vector<Matrix>& jg_samples, const std::vector<double>& mu,
                                       double b, const SymMatrix& p) {
    if (!(b > 0)) throw Error("decay rate b must be positive");
    if (jf_samples.size() != jg_samples.size()) throw DimensionMismatch("Jacobian sample counts differ");
    const int k = p.n();
    {
        const double scale = std::max(1.0, p.inf_norm());
        if (min_eigenvalue(p) <= kStrictTol * scale)
            throw PNotPositiveDefinite("P must be positive definite");
    }
    CriterionReport report;
    report.criterion = "continuous-local";
    report.put("b", b);

    const Matrix p_mat = p.to_matrix();
    double margin = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (size_t t = 0; t < jf_samples.size(); ++t) {
        if (jf_samples[t].rows() != k || jg_samples[t].rows() != k)
            throw DimensionMismatch("Jacobian samples must be k x k");
        for (double mu_i : mu) {
            Matrix m(k, k);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c)
                    m(r, c) = jf_samples[t](r, c) + mu_i * jg_samples[t](r, c) + (r == c ? b : 0.0);
            const SymMatrix s = symmetrized(m * p_mat);
            const double top = max_eigenvalue(s);
            ok = ok && top <= definiteness_band(s);  // semidefinite: (-inf, tol]
            margin = std::min(margin, -top);
        }
    }
    report.put("samples", static_cast<double>(jf_samples.size()));
    report.put("modes", static_cast<double>(mu.size()));
    report.margin = margin;
    report.verdict = ok ? Verdict::guaranteed : Verdict::not_guaranteed;
    return report;
}

CriterionReport continuous_kronecker_check(const Matrix& jf, const Matrix& jg, const std::vector<double>& mu) {
    const int k = jf.rows();
    const int n = static_cast<int>(mu.size());
    if (jf.cols() != k || jg.rows() != k || jg.cols() != k) throw DimensionMismatch("Jacobians must be k x k");
    Matrix kron(k * n, k * n);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int i = 0; i < n; ++i) kron(a * n + i, b * n + i) = jf(a, b) + mu[i] * jg(a, b);
    const SymMatrix s = symmetrized(kron);
    const double top = max_eigenvalue(s);

    CriterionReport report;
    report.criterion = "continuous-kronecker";
    report.put("modes", n);
    report.put("max_eigenvalue", top);
    report.margin = -top;
    report.verdict = top < -definiteness_band(s) ? Verdict::guaranteed : Verdict::not_guaranteed;
    return report;
}

CriterionReport continuous_global_check(const MapSpec& f, const SymMatrix& lw) {
    CriterionReport report;
    report.criterion = "continuous-global";
    SymMatrix shifted(0);
    if (f.is_matrix_linear()) {
        // sym(A) kron I_N + I_k kron L_w
        const Matrix& coupling = f.coupling();
        const SymMatrix bound = symmetrized(coupling);
        const int k = bound.n();
        const int n = lw.n();
        SymMatrix kron(k * n);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        kron.at(a * n + i, b * n + j) =
                            (i == j ? bound.at(a, b) : 0.0) + (a == b ? lw.at(i, j) : 0.0);
        shifted = std::move(kron);
        report.put("slope_bound_norm", operator_norm(bound));
    } else {
        const double slope = f.slope_bound();
        report.put("slope_bound", slope);
        shifted = lw.plus_scaled_identity(slope);
    }
    const double top = max_eigenvalue(shifted);
    report.put("max_eigenvalue", top);
    report.margin = -top;
    report.verdict = top < -definiteness_band(shifted) ? Verdict::guaranteed : Verdict::not_guaranteed;
    return report;
}

CriterionReport continuous_global_p_check(const SymMatrix& k_pf, const SymMatrix& k_plwg, double b,
                                          const SymMatrix& p) {
    if (!(b > 0)) throw Error("decay rate b must be positive");
    {
        const double scale = std::max(1.0, p.inf_norm());
        if (min_eigenvalue(p) <= kStrictTol * scale)
            throw PNotPositiveDefinite("P must be positive definite");
    }
    SymMatrix s = k_pf + k_plwg;
    for (int i = 0; i < s.n(); ++i)
        for (int j = 0; j < s.n(); ++j) s.at(i, j) += b * p.at(i, j);
    const double top = max_eigenvalue(s);

    CriterionReport report;
    report.criterion = "continuous-global-p";
    report.put("b", b);
    report.put("max_eigenvalue", top);
    report.margin = -top;
    report.verdict = top < -definiteness_band(s) ? Verdict::guaranteed : Verdict::not_guaranteed;
    return report;
}

BoundReport diameter_bound(const Hypergraph& g, const Spectrum& unweighted_spectrum) {
    BoundReport report;
    report.actual = static_cast<double>(g.diameter());  // throws when disconnected
    const NonzeroExtremes ext = nonzero_extremes(unweighted_spectrum);
    report.bound =
        4.0 / (static_cast<double>(g.n_vertices()) * (g.rank() - 1) * ext.lambda_min_abs);
    report.holds = report.actual >= report.bound - kStrictTol;
    return report;
}

int max_codegree(const Hypergraph& g) {
    std::map<std::pair<int, int>, int> counts;
    for (const Hyperedge& e : g.edges())
        for (int i = 0; i < e.size(); ++i)
            for (int j = i + 1; j < e.size(); ++j) ++counts[{e.vertices[i], e.vertices[j]}];
    int best = 0;
    for (const auto& [pair, c] : counts) best = std::max(best, c);
    return best;
}

double structural_bm(const Hypergraph& g) {
    if (!g.is_uniform()) throw NotUniform("b_m needs an m-uniform hypergraph");
    if (!g.is_connected()) throw DisconnectedHypergraph("b_m needs a connected hypergraph");
    const int m = g.rank();
    const double d_max = static_cast<double>(max_codegree(g));

    // neighbor sets under hyperedge adjacency
    std::vector<std::set<int>> neighbors(g.n_vertices());
    for (const Hyperedge& e : g.edges())
        for (int i = 0; i < e.size(); ++i)
            for (int j = 0; j < e.size(); ++j)
                if (i != j) neighbors[e.vertices[i]].insert(e.vertices[j]);

    double best = 0.0;
    for (int i = 0; i < g.n_vertices(); ++i) {
        const double d_i = static_cast<double>(g.degree(i));
        double neighbor_degree_sum = 0.0;
        for (int j : neighbors[i]) neighbor_degree_sum += g.degree(j);
        const double m_i = neighbor_degree_sum / (d_i * (m - 1));
        const double radicand = 4.0 * (m - 1) * (m - 1) * d_i * m_i * d_max * d_max - 2.0 * d_i * (m - 1) + 1.0;
        const double value = (2.0 * d_i * (m - 1) - 1.0 + std::sqrt(radicand)) / (2.0 * (m - 1));
        best = std::max(best, value);
    }
    return best;
}

BmReport uniform_upper_bound_bm(const Hypergraph& g) {
    BmReport report;
    report.b_m = structural_bm(g);
    report.lambda_max_abs = operator_norm(build_C(g));
    report.holds = report.lambda_max_abs <= report.b_m + kStrictTol;
    return report;
}

WindowReport structural_coupling_window(const Hypergraph& g, double sigma) {
    if (!g.is_uniform()) throw NotUniform("structural window needs an m-uniform hypergraph");
    const int m = g.rank();
    const double diam = static_cast<double>(g.diameter());  // throws when disconnected
    const double b_m = structural_bm(g);

    WindowReport report;
    report.raw.lo = static_cast<double>(g.n_vertices()) * (m - 1) * diam * (1.0 - std::exp(-sigma)) / 4.0;
    report.raw.hi = (1.0 + std::exp(-sigma)) / b_m;
    report.effective = report.raw;
    if (report.effective.lo < 0.0) {
        report.effective.lo = 0.0;
        report.clamped = true;
    }
    return report;
}

}  // namespace hypersync
