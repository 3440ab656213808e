#pragma once

#include <functional>
#include <numbers>
#include <string>
#include <vector>

namespace summlab {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A 2*pi-periodic continuous function given by an evaluator.
struct PeriodicFunction {
    std::function<double(double)> eval;
    std::string label;

    double operator()(double x) const { return eval(x); }
};

/// Finite Fourier coefficient table.
///
/// Reconstruction convention:
///   f(x) ~ a0/2 + sum_{j=1}^{N} (cosines[j-1] cos(jx) + sines[j-1] sin(jx))
struct TrigSeries {
    double a0 = 0.0;
    std::vector<double> cosines;  // a_1 .. a_N
    std::vector<double> sines;    // b_1 .. b_N

    int degree() const { return static_cast<int>(cosines.size()); }

    /// Full reconstruction, i.e. the partial sum of highest available order.
    double evaluate(double x) const;
};

/// Fourier coefficients of f up to the given degree, computed from
/// `samples` uniform samples on [0, 2*pi). Exact on trig polynomials of
/// degree <= degree whenever samples > 2*degree.
/// Requires samples >= 4*degree + 4.
TrigSeries fourier_coefficients(const PeriodicFunction& f, int degree, int samples);

/// Partial sum S_k at x. S_0 = a0/2. Requires 0 <= k <= s.degree().
double partial_sum(const TrigSeries& s, int k, double x);

/// Dirichlet kernel D_k(t) = sin((k+1/2)t) / (2 sin(t/2)), with the
/// cosine-sum form 1/2 + sum_{j<=k} cos(jt) near t = 0 so that the
/// continuous extension D_k(0) = k + 1/2 is produced exactly.
double dirichlet_kernel(int k, double t);

/// Symmetric second difference (f(x+t) + f(x-t) - 2 f(x)) / 2.
double psi(const PeriodicFunction& f, double x, double t);

}  // namespace summlab
