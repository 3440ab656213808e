#include "summlab/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "summlab/quadrature.hpp"

namespace summlab {

namespace {

// Lower cutoff for integrals with a singularity at t = 0.
constexpr double kEps = 1e-8;

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

// Arguments a few ulp above pi (log-grid rounding) snap back to pi.
double require_unit_interval(double u, const char* who) {
    if (u > kPi && u < kPi * (1.0 + 1e-12)) u = kPi;
    if (!(u > 0.0) || u > kPi) throw std::domain_error(std::string(who) + ": need u in (0, pi]");
    return u;
}

double integral_t2(const ModulusProfile& w, double u) {
    if (u >= kPi) return 0.0;
    return quad::geometric_panels([&w](double t) { return w(t) / (t * t); }, u, kPi);
}

}  // namespace

ModulusProfile ModulusProfile::lip(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("ModulusProfile::lip: alpha must be in (0, 1]");
    ModulusProfile w;
    w.is_lip_ = true;
    w.alpha_ = alpha;
    w.label_ = "lip:" + format_number(alpha);
    return w;
}

ModulusProfile ModulusProfile::tabulated(std::vector<std::pair<double, double>> table,
                                         std::string label) {
    if (table.size() < 2) throw std::invalid_argument("ModulusProfile: need >= 2 table points");
    std::sort(table.begin(), table.end());
    ModulusProfile w;
    w.label_ = std::move(label);
    w.deltas_.reserve(table.size());
    w.values_.reserve(table.size());
    double running = 0.0;
    for (const auto& [delta, value] : table) {
        if (!(delta > 0.0) || delta > kPi)
            throw std::invalid_argument("ModulusProfile: table deltas must lie in (0, pi]");
        if (!w.deltas_.empty() && delta <= w.deltas_.back())
            throw std::invalid_argument("ModulusProfile: table deltas must be strictly increasing");
        if (!(value >= 0.0)) throw std::invalid_argument("ModulusProfile: omega must be >= 0");
        running = std::max(running, value);  // monotone regularization
        w.deltas_.push_back(delta);
        w.values_.push_back(running);
    }
    return w;
}

ModulusProfile ModulusProfile::sampled(const PeriodicFunction& f, int table_size, double delta_min,
                                       int grid_size) {
    if (table_size < 2) throw std::invalid_argument("ModulusProfile::sampled: table too small");
    if (!(delta_min > 0.0) || delta_min >= kPi)
        throw std::invalid_argument("ModulusProfile::sampled: delta_min must be in (0, pi)");
    std::vector<std::pair<double, double>> table(static_cast<size_t>(table_size));
    const double step = std::log(kPi / delta_min) / (table_size - 1);
    for (int i = 0; i < table_size; ++i) {
        const double delta = std::min(delta_min * std::exp(step * i), kPi);
        table[static_cast<size_t>(i)] = {delta, modulus_of_continuity(f, delta, grid_size)};
    }
    return tabulated(std::move(table), "sampled:" + f.label);
}

double ModulusProfile::operator()(double delta) const {
    if (delta <= 0.0) return 0.0;
    if (is_lip_) return std::pow(delta, alpha_);
    if (deltas_.empty()) return 0.0;

    const auto& d = deltas_;
    const auto& v = values_;
    if (delta >= d.back()) return v.back();
    if (delta <= d.front()) {
        // Power-law extension below the table, slope clamped nonnegative.
        if (v[0] <= 0.0) return 0.0;
        double slope = 0.0;
        if (v[1] > 0.0)
            slope = std::max(0.0, std::log(v[1] / v[0]) / std::log(d[1] / d[0]));
        return v[0] * std::pow(delta / d[0], slope);
    }
    const auto it = std::upper_bound(d.begin(), d.end(), delta);
    const size_t hi = static_cast<size_t>(it - d.begin());
    const size_t lo = hi - 1;
    if (v[lo] > 0.0 && v[hi] > 0.0) {
        const double s = std::log(delta / d[lo]) / std::log(d[hi] / d[lo]);
        return v[lo] * std::exp(s * std::log(v[hi] / v[lo]));
    }
    const double s = (delta - d[lo]) / (d[hi] - d[lo]);
    return v[lo] + s * (v[hi] - v[lo]);
}

double ModulusProfile::delta_min() const {
    return (is_lip_ || deltas_.empty()) ? 0.0 : deltas_.front();
}

MediateFunction MediateFunction::canonical(const ModulusProfile& w) {
    MediateFunction h;
    h.label_ = "canonical:" + w.label();
    if (w.is_lip()) {
        const double a = w.alpha();
        if (a < 1.0) {
            h.eval_ = [a](double u) {
                return (std::pow(u, a - 1.0) - std::pow(kPi, a - 1.0)) / (1.0 - a);
            };
            h.integral_ = [a](double t) {
                return (std::pow(t, a) / a - t * std::pow(kPi, a - 1.0)) / (1.0 - a);
            };
        } else {
            h.eval_ = [](double u) { return std::log(kPi / u); };
            h.integral_ = [](double t) { return t * std::log(kPi / t) + t; };
        }
        return h;
    }
    h.eval_ = [w](double u) { return integral_t2(w, u); };
    return h;
}

MediateFunction MediateFunction::power(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("MediateFunction::power: alpha must be in (0, 1]");
    MediateFunction h;
    h.label_ = "power:" + format_number(alpha);
    if (alpha < 1.0) {
        h.eval_ = [alpha](double u) { return std::pow(u, alpha - 1.0); };
        h.integral_ = [alpha](double t) { return std::pow(t, alpha) / alpha; };
    } else {
        h.eval_ = [](double u) { return std::log(kPi / u); };
        h.integral_ = [](double t) { return t * std::log(kPi / t) + t; };
    }
    return h;
}

MediateFunction MediateFunction::from(std::function<double(double)> evaluator, std::string label,
                                      std::function<double(double)> integral_from_zero) {
    if (!evaluator) throw std::invalid_argument("MediateFunction::from: missing evaluator");
    MediateFunction h;
    h.eval_ = std::move(evaluator);
    h.integral_ = std::move(integral_from_zero);
    h.label_ = std::move(label);
    return h;
}

double MediateFunction::operator()(double u) const {
    u = require_unit_interval(u, "MediateFunction");
    return eval_(u);
}

double MediateFunction::integral_from_zero(double t) const {
    t = require_unit_interval(t, "MediateFunction::integral_from_zero");
    if (integral_) return integral_(t);
    const auto& eval = eval_;
    return quad::geometric_panels([&eval](double u) { return eval(u); }, kEps, t);
}

MediateFunction MediateFunction::scaled(double c) const {
    if (!(c > 0.0)) throw std::invalid_argument("MediateFunction::scaled: factor must be > 0");
    MediateFunction h;
    const auto eval = eval_;
    h.eval_ = [eval, c](double u) { return c * eval(u); };
    if (integral_) {
        const auto integral = integral_;
        h.integral_ = [integral, c](double t) { return c * integral(t); };
    }
    h.label_ = label_ + "*" + format_number(c);
    return h;
}

double modulus_of_continuity_serial(const PeriodicFunction& f, double delta, int grid_size) {
    if (grid_size < 1024)
        throw std::invalid_argument("modulus_of_continuity: grid_size must be >= 1024");
    if (!(delta > 0.0) || delta > kPi)
        throw std::domain_error("modulus_of_continuity: delta must be in (0, pi]");
    double best = 0.0;
    for (int i = 0; i < grid_size; ++i) {
        const double x = kTwoPi * i / grid_size;
        const double fx = f(x);
        double local = 0.0;
        for (int j = 0; j <= 32; ++j) {
            const double h = -delta + delta * j / 16.0;
            local = std::max(local, std::abs(f(x + h) - fx));
        }
        best = std::max(best, local);
    }
    return best;
}

double modulus_of_continuity(const PeriodicFunction& f, double delta, int grid_size) {
    if (grid_size < 1024)
        throw std::invalid_argument("modulus_of_continuity: grid_size must be >= 1024");
    if (!(delta > 0.0) || delta > kPi)
        throw std::domain_error("modulus_of_continuity: delta must be in (0, pi]");
    std::vector<double> local(static_cast<size_t>(grid_size), 0.0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < grid_size; ++i) {
        const double x = kTwoPi * i / grid_size;
        const double fx = f(x);
        double acc = 0.0;
        for (int j = 0; j <= 32; ++j) {
            const double h = -delta + delta * j / 16.0;
            acc = std::max(acc, std::abs(f(x + h) - fx));
        }
        local[static_cast<size_t>(i)] = acc;
    }
    double best = 0.0;
    for (double v : local) best = std::max(best, v);
    return best;
}

namespace {

// Ratio sequences are judged towards the singular end: the max over the
// small-argument half must not outgrow the large-argument half.
bool trend_is_bounded(const std::vector<std::pair<double, double>>& arg_ratio) {
    if (arg_ratio.size() < 4) return true;
    auto sorted = arg_ratio;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    const size_t half = sorted.size() / 2;
    double outer = 0.0, inner = 0.0;
    for (size_t i = 0; i < half; ++i) outer = std::max(outer, sorted[i].second);
    for (size_t i = half; i < sorted.size(); ++i) inner = std::max(inner, sorted[i].second);
    return inner <= 1.1 * outer + 0.1;
}

template <typename Numerator, typename Denominator>
RatioReport ratio_scan(std::span<const double> grid, const Numerator& numerator,
                       const Denominator& denominator) {
    RatioReport report;
    report.ratios.reserve(grid.size());
    std::vector<std::pair<double, double>> valid;
    for (double u : grid) {
        u = require_unit_interval(u, "ratio check");
        const double num = numerator(u);
        const double den = denominator(u);
        double ratio = 0.0;
        if (den > 0.0) {
            ratio = num / den;
            valid.emplace_back(u, ratio);
            if (ratio > report.max_ratio) report.max_ratio = ratio;
        } else if (num > 1e-14) {
            report.failed = true;
            report.failed_at = u;
        }
        report.ratios.push_back(ratio);
    }
    report.trend_bounded = !report.failed && trend_is_bounded(valid);
    return report;
}

}  // namespace

RatioReport check_condition_13(const ModulusProfile& w, const MediateFunction& H,
                               std::span<const double> u_grid) {
    return ratio_scan(
        u_grid, [&](double u) { return integral_t2(w, u); }, [&](double u) { return H(u); });
}

RatioReport check_condition_14(const MediateFunction& H, std::span<const double> t_grid) {
    return ratio_scan(
        t_grid, [&](double t) { return H.integral_from_zero(t); },
        [&](double t) { return t * H(t); });
}

RatioReport lemma7_ratio(const ModulusProfile& w, const MediateFunction& H,
                         std::span<const double> v_grid) {
    const auto numerator = [&](double v) {
        if (w.is_lip()) return std::pow(v, w.alpha()) / w.alpha();
        return quad::geometric_panels([&w](double t) { return w(t) / t; }, kEps, v);
    };
    return ratio_scan(v_grid, numerator, [&](double v) { return v * H(v); });
}

RatioReport lemma6_ratio(const ModulusProfile& w, const MediateFunction& H,
                         std::span<const int> m_list) {
    std::vector<double> grid;
    grid.reserve(m_list.size());
    for (int m : m_list) {
        if (m < 1) throw std::invalid_argument("lemma6_ratio: m must be >= 1");
        grid.push_back(kPi / m);
    }
    const auto numerator = [&](double v) {
        if (w.is_lip()) return std::pow(v, w.alpha() + 1.0) / (w.alpha() + 1.0);
        return quad::geometric_panels([&w](double t) { return w(t); }, kEps, v);
    };
    // v = pi/m, so m^-2 H(pi/m) = (v/pi)^2 H(v).
    return ratio_scan(grid, numerator,
                      [&](double v) { return (v / kPi) * (v / kPi) * H(v); });
}

}  // namespace summlab
