#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypersync/hypergraph.hpp"
#include "hypersync/maps.hpp"
#include "hypersync/matrix.hpp"
#include "hypersync/spectra.hpp"

namespace hypersync {

// Criteria report "guaranteed" only when every inequality clears this slack;
// each report's margin is signed distance to its threshold.
inline constexpr double kStrictTol = 1e-12;
// Definiteness tests accept eigenvalues within this relative band of zero.
inline constexpr double kDefinitenessTol = 1e-10;

enum class Verdict { guaranteed, not_guaranteed };
std::string verdict_name(Verdict v);

struct CriterionReport {
    std::string criterion;
    std::vector<std::pair<std::string, double>> values;  // echoed inputs, then computed quantities
    Verdict verdict = Verdict::not_guaranteed;
    double margin = 0.0;

    void put(const std::string& key, double value) { values.emplace_back(key, value); }
    double get(const std::string& key) const;
    bool guaranteed() const { return verdict == Verdict::guaranteed; }
    std::string to_key_value() const;
};

/// Positive definite A defining the Lyapunov norm ||x||_A = sqrt(x A x^T).
/// Construction rejects non-PD input (ANotPositiveDefinite).
class NormSpec {
  public:
    explicit NormSpec(SymMatrix a);
    static NormSpec euclidean(int k) { return NormSpec(SymMatrix::identity(k)); }

    int k() const { return a_.n(); }
    const SymMatrix& a() const { return a_; }
    const SymMatrix& a_inverse() const { return a_inv_; }

    double vector_norm(std::span<const double> x) const;
    /// Induced norm on row-acting matrices: sup ||x J||_A / ||x||_A.
    double matrix_norm(const Matrix& j) const;

  private:
    SymMatrix a_, a_inv_, a_half_, a_inv_half_;
};

// --- global discrete criteria (Lipschitz route) ---

/// k_g + eps * ||L_w|| * k_f < 1. Feed the operator norm or the max |eigenvalue|;
/// the two statements coincide for symmetric L_w.
CriterionReport global_discrete(double k_f, double k_g, double eps, double lw_norm);

/// f = g route: ||I + eps L_w|| < 1/k_f.
CriterionReport global_discrete_feqg(double k_f, double eps, const SymMatrix& lw);

/// Delta^2 = -L_w variant: same contraction inequality, with the spectral
/// square root constructed and its residual reported. The norm-comparison
/// hypotheses on f and g are the caller's assertion.
CriterionReport global_discrete_delta(double k_f, double k_g, double eps, const SymMatrix& lw);

// --- local discrete criteria ---

/// Cesaro mean of log ||J_f||_A along the on-manifold orbit s_{n+1} = g(s_n),
/// over steps burn_in+1 .. horizon.
double sigma_estimate(const std::vector<double>& s0, const MapSpec& g, const MapSpec& f, const NormSpec& a,
                      long burn_in, long horizon);

/// All nonzero |lambda_i| within [(1-e^-sigma)/eps, (1+e^-sigma)/eps].
/// Modes flagged in exclude_mode (zero initial perturbation component) are
/// skipped.
CriterionReport eigenvalue_interval_check(double sigma, double eps, const Spectrum& spectrum,
                                          double tol = kSpectralTol,
                                          const std::vector<bool>* exclude_mode = nullptr);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool empty() const { return lo > hi; }
};

/// Admissible coupling range [(1-e^-sigma)/lambda_min, (1+e^-sigma)/lambda_max].
Interval coupling_interval(double sigma, double lambda_min_abs, double lambda_max_abs);

/// Per-mode Lyapunov test: (J_g + eps lambda_i J_f) A (..)^T - A negative
/// definite for every i. The equivalent Schur-complement block form
/// [[A, M],[M^T, A^{-1}]] > 0 is evaluated alongside and must agree.
CriterionReport lyapunov_discrete_check(const Matrix& jg, const Matrix& jf, double eps,
                                        const std::vector<double>& eigenvalues, const NormSpec& a);

// --- continuous-time criteria ---

/// (J_f(t) + mu_i J_g(t) + b I_k) P negative semidefinite for all sampled t
/// and all modes; k = 1 reduces to f' + mu_i g' + b <= 0.
CriterionReport continuous_local_check(const std::vector<Matrix>& jf_samples,
                                       const std::vector<Matrix>& jg_samples, const std::vector<double>& mu,
                                       double b, const SymMatrix& p);

/// J_f kron I_N + J_g kron diag(mu) negative definite.
CriterionReport continuous_kronecker_check(const Matrix& jf, const Matrix& jg, const std::vector<double>& mu);

/// Global continuous check: slope bound k(I,f) of the map plus L_w negative
/// definite (k I + L_w for scalar kinds, sym(A) kron-sum L_w for the coupled
/// linear kind).
CriterionReport continuous_global_check(const MapSpec& f, const SymMatrix& lw);

/// k = 1 P-form: k_(P,f) + k_(P,L_w,g) + b P negative definite, P positive
/// definite (PNotPositiveDefinite otherwise).
CriterionReport continuous_global_p_check(const SymMatrix& k_pf, const SymMatrix& k_plwg, double b,
                                          const SymMatrix& p);

// --- structural bounds ---

struct BoundReport {
    double bound = 0.0;
    double actual = 0.0;
    bool holds = false;
};

/// diam(G) >= 4 / (|V| (m_max - 1) lambda_min), lambda_min the smallest
/// nonzero |eigenvalue| of the unweighted operator; pass the spectrum of
/// build_C(G).
BoundReport diameter_bound(const Hypergraph& g, const Spectrum& unweighted_spectrum);

struct BmReport {
    double b_m = 0.0;
    double lambda_max_abs = 0.0;
    bool holds = false;
};

/// Combinatorial upper bound b_m on the largest |eigenvalue| of a connected
/// m-uniform hypergraph's unweighted operator.
BmReport uniform_upper_bound_bm(const Hypergraph& g);

/// Max codegree: most hyperedges sharing one vertex pair.
int max_codegree(const Hypergraph& g);

/// b_m evaluated from degrees, codegree and uniformity alone (no eigensolve).
double structural_bm(const Hypergraph& g);

struct WindowReport {
    Interval raw;        // [N(m-1) diam (1-e^-sigma)/4, (1+e^-sigma)/b_m]
    Interval effective;  // raw with the left endpoint clamped to the eps > 0 domain
    bool clamped = false;
};

WindowReport structural_coupling_window(const Hypergraph& g, double sigma);

}  // namespace hypersync
