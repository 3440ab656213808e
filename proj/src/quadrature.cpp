#include "summlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace summlab::quad {

namespace {

double simpson(double fa, double fm, double fb, double width) {
    return width / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double b, double fa,
                     double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double composite_simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    if (panels < 1) throw std::invalid_argument("composite_simpson: panels must be >= 1");
    const double h = (b - a) / panels;
    double acc = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double lo = a + i * h;
        const double hi = a + (i + 1) * h;
        acc += simpson(f(lo), f(0.5 * (lo + hi)), f(hi), hi - lo);
    }
    return acc;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = simpson(fa, fm, fb, b - a);
    return adaptive_step(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

double geometric_panels(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, double ratio) {
    if (!(a > 0.0) || !(b > a)) throw std::invalid_argument("geometric_panels: need 0 < a < b");
    if (!(ratio > 1.0)) throw std::invalid_argument("geometric_panels: ratio must be > 1");
    double acc = 0.0;
    double lo = a;
    while (lo < b) {
        const double hi = std::min(lo * ratio, b);
        const double rough = composite_simpson(f, lo, hi, 4);
        const double tol = rel_tol * (std::abs(rough) + 1e-300);
        acc += adaptive_simpson(f, lo, hi, tol);
        lo = hi;
    }
    return acc;
}

}  // namespace summlab::quad
