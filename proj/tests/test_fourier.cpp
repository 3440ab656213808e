#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "summlab/fourier.hpp"
#include "summlab/moduli.hpp"
#include "summlab/quadrature.hpp"

using namespace summlab;

namespace {

PeriodicFunction cosine() {
    return {[](double x) { return std::cos(x); }, "cos"};
}

// Deterministic random trig polynomial of the given degree.
PeriodicFunction random_trig_poly(int degree, unsigned seed, TrigSeries* out = nullptr) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    TrigSeries s;
    s.a0 = coeff(rng);
    for (int j = 1; j <= degree; ++j) {
        s.cosines.push_back(coeff(rng));
        s.sines.push_back(coeff(rng));
    }
    if (out) *out = s;
    return {[s](double x) { return s.evaluate(x); }, "random_poly"};
}

// Truncated triangle-wave sum: pi/2 - (4/pi) sum_{k<=K} cos((2k+1)x)/(2k+1)^2.
double triangle_sum(double x, int K) {
    double acc = kPi / 2.0;
    for (int k = 0; k <= K; ++k) {
        const int j = 2 * k + 1;
        acc -= 4.0 / (kPi * j * j) * std::cos(j * x);
    }
    return acc;
}

}  // namespace

TEST_CASE("fourier coefficients of cos x") {
    const auto s = fourier_coefficients(cosine(), 4, 64);
    CHECK(std::abs(s.a0) < 1e-12);
    CHECK(s.cosines[0] == doctest::Approx(1.0).epsilon(1e-12));
    for (int j = 2; j <= 4; ++j) {
        CHECK(std::abs(s.cosines[j - 1]) < 1e-12);
        CHECK(std::abs(s.sines[j - 1]) < 1e-12);
    }
    CHECK(std::abs(s.sines[0]) < 1e-12);
}

TEST_CASE("fourier coefficients of a constant") {
    const double c = 0.7;
    const PeriodicFunction f{[c](double) { return c; }, "const"};
    const auto s = fourier_coefficients(f, 2, 16);
    CHECK(s.a0 == doctest::Approx(2.0 * c).epsilon(1e-14));
    for (int j = 1; j <= 2; ++j) {
        CHECK(std::abs(s.cosines[j - 1]) < 1e-13);
        CHECK(std::abs(s.sines[j - 1]) < 1e-13);
    }
}

TEST_CASE("fourier coefficients of the truncated triangle wave") {
    const int K = 3;
    const int N = 2 * K + 1;
    const PeriodicFunction f{[K](double x) { return triangle_sum(x, K); }, "triangle_sum"};
    const auto s = fourier_coefficients(f, N, 64);

    // Oracle: direct numerical integration of the coefficient integrals.
    for (int j = 0; j <= N; ++j) {
        const auto integrand_cos = [&](double x) { return f(x) * std::cos(j * x); };
        const double oracle = quad::composite_simpson(integrand_cos, 0.0, kTwoPi, 100000) / kPi;
        const double got = j == 0 ? s.a0 : s.cosines[j - 1];
        CHECK(got == doctest::Approx(oracle).epsilon(1e-10));
    }
    // And the closed-form values the sum was built from.
    CHECK(s.a0 == doctest::Approx(kPi).epsilon(1e-12));
    for (int k = 0; k <= K; ++k) {
        const int j = 2 * k + 1;
        CHECK(s.cosines[j - 1] == doctest::Approx(-4.0 / (kPi * j * j)).epsilon(1e-12));
    }
    CHECK(std::abs(s.cosines[1]) < 1e-12);  // even harmonics vanish
}

TEST_CASE("sampled coefficients of a non-polynomial alias mildly") {
    // Exact periodized |x|: the sampled transform picks up aliasing from
    // harmonics beyond the sample rate, bounded by the coefficient tail.
    const PeriodicFunction f{[](double x) {
                                 double p = std::fmod(x, kTwoPi);
                                 if (p < 0.0) p += kTwoPi;
                                 return p <= kPi ? p : kTwoPi - p;
                             },
                             "triangle"};
    const auto s = fourier_coefficients(f, 16, 65536);
    CHECK(s.a0 == doctest::Approx(kPi).epsilon(1e-8));
    for (int j = 1; j <= 16; ++j) {
        const double expected = j % 2 == 1 ? -4.0 / (kPi * j * j) : 0.0;
        CHECK(std::abs(s.cosines[j - 1] - expected) <= 1e-8);
        CHECK(std::abs(s.sines[j - 1]) <= 1e-8);
    }
}

TEST_CASE("fourier coefficients precondition") {
    CHECK_THROWS_AS(fourier_coefficients(cosine(), 8, 32), std::invalid_argument);
}

TEST_CASE("partial sums") {
    const auto s = fourier_coefficients(cosine(), 4, 64);
    CHECK(partial_sum(s, 0, 1.234) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(partial_sum(s, 1, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(partial_sum(s, 4, 0.0) == doctest::Approx(1.0).epsilon(1e-12));

    TrigSeries triangle;
    const PeriodicFunction f{[](double x) { return triangle_sum(x, 5); }, "triangle_sum"};
    triangle = fourier_coefficients(f, 11, 64);
    CHECK(partial_sum(triangle, 1, 0.0) == doctest::Approx(kPi / 2 - 4.0 / kPi).epsilon(1e-12));

    CHECK_THROWS_AS(partial_sum(s, 5, 0.0), std::out_of_range);
}

TEST_CASE("dirichlet kernel values") {
    for (double t : {0.2, 1.0, kPi}) CHECK(dirichlet_kernel(0, t) == doctest::Approx(0.5));
    CHECK(dirichlet_kernel(3, 0.0) == doctest::Approx(3.5));
    CHECK(dirichlet_kernel(3, 1e-9) == doctest::Approx(3.5).epsilon(1e-12));
    CHECK(dirichlet_kernel(5, kPi / 2) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("dirichlet kernel matches the cosine sum") {
    // Both closed forms agree on (0, pi] for orders up to 512.
    const int points = 257;
    for (int i = 0; i < points; ++i) {
        const double t = kPi * (i + 1) / points;
        double cossum = 0.5;
        for (int k = 0; k <= 512; ++k) {
            if (k >= 1) cossum += std::cos(k * t);
            CHECK(std::abs(dirichlet_kernel(k, t) - cossum) <= 1e-10);
        }
    }
}

TEST_CASE("reconstruction of trig polynomials") {
    TrigSeries truth;
    const auto f = random_trig_poly(8, 42u, &truth);
    const auto s = fourier_coefficients(f, 8, 64);
    for (int i = 0; i < 1024; ++i) {
        const double x = kTwoPi * i / 1024;
        CHECK(partial_sum(s, 8, x) == doctest::Approx(f(x)).epsilon(1e-10));
    }
}

TEST_CASE("kernel representation of partial sums") {
    const auto f = random_trig_poly(8, 7u);
    const auto s = fourier_coefficients(f, 8, 64);
    for (int k : {0, 3, 8}) {
        for (double x : {0.0, 1.0, 2.5}) {
            const auto integrand = [&](double t) { return f(x + t) * dirichlet_kernel(k, t); };
            const double via_kernel =
                quad::composite_simpson(integrand, -kPi, kPi, 1 << 14) / kPi;
            CHECK(partial_sum(s, k, x) == doctest::Approx(via_kernel).epsilon(1e-6));
        }
    }
}

TEST_CASE("psi basics") {
    const PeriodicFunction constant{[](double) { return 2.5; }, "const"};
    CHECK(psi(constant, 0.3, 1.1) == doctest::Approx(0.0));

    const auto cosf = cosine();
    const PeriodicFunction sinf{[](double x) { return std::sin(x); }, "sin"};
    for (double t : {0.1, 0.5, 2.0}) {
        CHECK(psi(cosf, 0.0, t) == doctest::Approx(std::cos(t) - 1.0).epsilon(1e-14));
        CHECK(psi(sinf, kPi / 2, t) == doctest::Approx(std::cos(t) - 1.0).epsilon(1e-13));
    }
}

TEST_CASE("psi is bounded by the modulus of continuity") {
    const PeriodicFunction f{[](double x) {
                                 double p = std::fmod(x, kTwoPi);
                                 if (p < 0.0) p += kTwoPi;
                                 return p <= kPi ? p : kTwoPi - p;
                             },
                             "triangle"};
    for (double t : {0.1, 0.5, 1.5, 3.0}) {
        const double omega = modulus_of_continuity(f, t, 2048);
        for (int i = 0; i < 2048; i += 32) {
            const double x = kTwoPi * i / 2048;
            CHECK(std::abs(psi(f, x, t)) <= omega + 1e-9);
        }
    }
}
