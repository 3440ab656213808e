#pragma once

#include <functional>

namespace summlab::quad {

/// Composite Simpson on a fixed number of equal panels.
double composite_simpson(const std::function<double(double)>& f, double a, double b, int panels);

/// Classic adaptive Simpson with interval bisection.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double abs_tol,
                        int max_depth = 32);

/// Integral over [a, b] split into geometric panels [a, qa], [qa, q^2 a], ...
/// each resolved adaptively. Suited to integrands varying over decades,
/// e.g. t^-2 omega(t) down to a small left endpoint. Requires 0 < a < b.
double geometric_panels(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-9, double ratio = 2.0);

}  // namespace summlab::quad
