#include "summlab/fourier.hpp"

#include <cmath>
#include <stdexcept>

namespace summlab {

namespace {

// Below this |t| the sine quotient loses digits to 0/0 cancellation; the
// cosine sum is exact there (and yields k + 1/2 at t = 0).
constexpr double kSmallT = 1e-3;

}  // namespace

double TrigSeries::evaluate(double x) const {
    return partial_sum(*this, degree(), x);
}

TrigSeries fourier_coefficients(const PeriodicFunction& f, int degree, int samples) {
    if (degree < 1) throw std::invalid_argument("fourier_coefficients: degree must be >= 1");
    if (samples < 4 * degree + 4)
        throw std::invalid_argument("fourier_coefficients: need samples >= 4*degree + 4");

    std::vector<double> fx(samples);
    for (int i = 0; i < samples; ++i) fx[i] = f(kTwoPi * i / samples);

    TrigSeries s;
    s.cosines.assign(degree, 0.0);
    s.sines.assign(degree, 0.0);

    double mean = 0.0;
    for (int i = 0; i < samples; ++i) mean += fx[i];
    s.a0 = 2.0 * mean / samples;

    for (int j = 1; j <= degree; ++j) {
        double ca = 0.0, sa = 0.0;
        for (int i = 0; i < samples; ++i) {
            const double arg = kTwoPi * j * i / samples;
            ca += fx[i] * std::cos(arg);
            sa += fx[i] * std::sin(arg);
        }
        s.cosines[j - 1] = 2.0 * ca / samples;
        s.sines[j - 1] = 2.0 * sa / samples;
    }
    return s;
}

double partial_sum(const TrigSeries& s, int k, double x) {
    if (k < 0 || k > s.degree())
        throw std::out_of_range("partial_sum: order outside the stored series");
    double acc = 0.5 * s.a0;
    for (int j = 1; j <= k; ++j)
        acc += s.cosines[j - 1] * std::cos(j * x) + s.sines[j - 1] * std::sin(j * x);
    return acc;
}

double dirichlet_kernel(int k, double t) {
    if (k < 0) throw std::invalid_argument("dirichlet_kernel: order must be >= 0");
    if (std::abs(t) < kSmallT) {
        double acc = 0.5;
        for (int j = 1; j <= k; ++j) acc += std::cos(j * t);
        return acc;
    }
    return std::sin((k + 0.5) * t) / (2.0 * std::sin(0.5 * t));
}

double psi(const PeriodicFunction& f, double x, double t) {
    return 0.5 * (f(x + t) + f(x - t) - 2.0 * f(x));
}

}  // namespace summlab
