#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "summlab/fourier.hpp"

namespace summlab {

/// Modulus of continuity profile omega(delta) on (0, pi]. Either the
/// closed-form Lip(alpha) profile delta^alpha or a tabulated curve on a
/// log grid (monotone-regularized, interpolated log-log between nodes).
class ModulusProfile {
public:
    ModulusProfile() = default;  // identically zero

    static ModulusProfile lip(double alpha);
    static ModulusProfile tabulated(std::vector<std::pair<double, double>> table,
                                    std::string label = "tabulated");
    /// Tabulate omega(delta, f) measured on `table_size` log-spaced deltas
    /// in [delta_min, pi].
    static ModulusProfile sampled(const PeriodicFunction& f, int table_size, double delta_min,
                                  int grid_size = 2048);

    double operator()(double delta) const;

    bool is_lip() const { return is_lip_; }
    double alpha() const { return alpha_; }
    double delta_min() const;
    const std::string& label() const { return label_; }

private:
    bool is_lip_ = false;
    double alpha_ = 0.0;
    std::vector<double> deltas_;
    std::vector<double> values_;
    std::string label_;
};

/// Mediate function H(u) >= 0 on (0, pi] dominating int_u^pi t^-2 omega(t) dt.
/// Carries a closed form for int_0^t H(u) du when one exists; otherwise that
/// integral falls back to geometric-panel quadrature from eps = 1e-8.
class MediateFunction {
public:
    /// The minimal H: exactly int_u^pi t^-2 omega(t) dt. Closed form for
    /// Lip(alpha) profiles ((u^(a-1) - pi^(a-1))/(1-a), or log(pi/u) at
    /// alpha = 1), adaptive quadrature for tabulated profiles.
    static MediateFunction canonical(const ModulusProfile& w);

    /// The corollary form: u^(alpha-1) for alpha < 1, log(pi/u) at alpha = 1.
    static MediateFunction power(double alpha);

    static MediateFunction from(std::function<double(double)> evaluator, std::string label,
                                std::function<double(double)> integral_from_zero = nullptr);

    double operator()(double u) const;  // domain (0, pi]
    double integral_from_zero(double t) const;
    MediateFunction scaled(double c) const;
    const std::string& label() const { return label_; }

private:
    MediateFunction() = default;

    std::function<double(double)> eval_;
    std::function<double(double)> integral_;  // may be empty
    std::string label_;
};

/// Max over the x grid and 33 symmetric offsets |h| <= delta (including
/// +-delta) of |f(x+h) - f(x)|. A lower bound converging from below.
/// Requires grid_size >= 1024.
double modulus_of_continuity(const PeriodicFunction& f, double delta, int grid_size = 2048);
double modulus_of_continuity_serial(const PeriodicFunction& f, double delta,
                                    int grid_size = 2048);

/// Outcome of one integral-ratio check. `ratios` follows the input grid
/// order; `trend_bounded` applies the doubling-style test to the ratio
/// sequence read towards the singular end.
struct RatioReport {
    double max_ratio = 0.0;
    std::vector<double> ratios;
    bool trend_bounded = true;
    bool failed = false;  // zero denominator against nonzero numerator
    double failed_at = 0.0;
};

/// Domination check for H: max_u [int_u^pi t^-2 omega(t) dt] / H(u). Exactly 1 for
/// the canonical H.
RatioReport check_condition_13(const ModulusProfile& w, const MediateFunction& H,
                               std::span<const double> u_grid);

/// Mean-domination check for H: max_t [int_0^t H(u) du] / (t H(t)).
RatioReport check_condition_14(const MediateFunction& H, std::span<const double> t_grid);

/// int_0^v t^-1 omega(t) dt = O(v H(v)).
RatioReport lemma7_ratio(const ModulusProfile& w, const MediateFunction& H,
                         std::span<const double> v_grid);

/// int_0^{pi/m} omega(t) dt = O(m^-2 H(pi/m)).
RatioReport lemma6_ratio(const ModulusProfile& w, const MediateFunction& H,
                         std::span<const int> m_list);

}  // namespace summlab
