#pragma once

#include <span>
#include <string>
#include <vector>

#include "summlab/conditions.hpp"
#include "summlab/moduli.hpp"
#include "summlab/summability.hpp"

namespace summlab {

/// Normalized kernel-bound scan: max over the tested indices and t values
/// of LHS/bound, plus the per-index maxima for trend (doubling) tests.
struct KernelBoundReport {
    std::string check_id;
    double beta = 0.0;
    double max_normalized = 0.0;
    int worst_index = -1;
    double worst_t = 0.0;
    std::vector<std::pair<int, double>> per_index;  // (m or n, max over t)
    std::vector<int> flagged;  // indices skipped for a zero denominator
};

/// |sum_{j<=m} (j+1)^beta D_j(t)| * t^2 / (pi^2 (m+1)^beta) over all
/// (m, t); the bound asserts max <= 1.
KernelBoundReport lemma8_check(double beta, std::span<const int> m_list,
                               std::span<const double> t_grid);
KernelBoundReport lemma8_check_serial(double beta, std::span<const int> m_list,
                                      std::span<const double> t_grid);

/// |K_n(t)| * t / A_{n,min(tau,n)}, tau = floor(pi/t).
KernelBoundReport lemma9_rest_check(const SummabilityMatrix& A, double beta,
                                    std::span<const int> n_list, std::span<const double> t_grid);
KernelBoundReport lemma9_rest_check_serial(const SummabilityMatrix& A, double beta,
                                           std::span<const int> n_list,
                                           std::span<const double> t_grid);

/// |K_n(t)| * t^2 / a_{n,n}.
KernelBoundReport lemma9_head_check(const SummabilityMatrix& A, double beta,
                                    std::span<const int> n_list, std::span<const double> t_grid);
KernelBoundReport lemma9_head_check_serial(const SummabilityMatrix& A, double beta,
                                           std::span<const int> n_list,
                                           std::span<const double> t_grid);

enum class TheoremId { T10, T11a, T11b, T12, T13 };

const char* theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);

/// The sup-norm bound expression at row n with implicit constant 1:
///   T10:  a_{n,n} H(a_{n,n})
///   T11a: omega(pi/(n+1)) + a_{n,n} H(pi/(n+1))
///   T11b: a_{n,n} H(pi/(n+1))
///   T12:  omega(pi/(n+1)) + sum_{v=1}^{n} v^-1 omega(pi/v) A_{n,v}
///   T13:  a_{n,0} H(a_{n,0})
double theorem_bound(TheoremId id, const SummabilityMatrix& A, const ModulusProfile& w,
                     const MediateFunction& H, int n);

struct HypothesisCheck {
    std::string name;
    bool ok = false;
    double detail = 0.0;  // measured constant or max ratio
};

/// Hypothesis audit for one theorem: row-stochasticity, the relevant
/// beta-weighted variation condition, and conditions (13)/(14) when the
/// theorem requires them.
std::vector<HypothesisCheck> verify_hypotheses(TheoremId id, const SummabilityMatrix& A,
                                               double beta, const ModulusProfile& w,
                                               const MediateFunction& H);

struct ExperimentRow {
    int n = 0;
    double sup_error = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
};

struct ExperimentReport {
    std::string experiment_id;
    std::vector<ExperimentRow> rows;
    double fitted_slope = 0.0;   // OLS slope of log sup_error vs log n
    double slope_stderr = 0.0;
    // metadata
    std::string matrix_label;
    std::string function_label;
    std::string profile_label;
    double beta = 0.0;
    int grid_size = 0;
    bool hypotheses_verified = false;
    std::vector<HypothesisCheck> hypotheses;
    bool exact = false;  // all sup errors at rounding level
};

/// Measure sup errors against the theorem bound over n_list and fit the
/// log-log convergence rate (the two smallest n are excluded from the fit).
ExperimentReport run_experiment(TheoremId id, const SummabilityMatrix& A,
                                const PeriodicFunction& f, const TrigSeries& s,
                                const ModulusProfile& w, const MediateFunction& H,
                                std::span<const int> n_list, int grid_size = 4096,
                                double beta = 0.0);

/// Riesz means of a Lip(alpha) function against the rate (p_n/P_n)^alpha
/// (alpha < 1) or (p_n/P_n) log(pi P_n/p_n) (alpha = 1).
ExperimentReport corollary43_table(const WeightSequence& p, double alpha,
                                   const PeriodicFunction& f, const TrigSeries& s,
                                   std::span<const int> n_list, int grid_size = 4096,
                                   double beta = 0.0);

struct Exemplar {
    std::string name;
    PeriodicFunction f;
    TrigSeries series;
    ModulusProfile profile;
};

/// Test corpus: constant, cos x, the triangle wave (Lip 1), and the
/// lacunary sums sum_{k<=12} 2^(-k a) cos(2^k x) for a in {1/4, 1/2, 3/4}.
/// Series coefficients are closed-form and exact up to max_degree.
std::vector<Exemplar> exemplar_functions(int max_degree = 4096);

Exemplar make_constant(double value, int max_degree);
Exemplar make_cosine(int max_degree);
Exemplar make_triangle(int max_degree);
Exemplar make_lacunary(double alpha, int max_degree, int octaves = 12);

/// Lookup by name: "constant", "cos", "triangle", or "lacunary:<alpha>"
/// for any alpha in (0,1). Throws std::invalid_argument on unknown names.
Exemplar exemplar_by_name(const std::string& name, int max_degree = 4096);

}  // namespace summlab
