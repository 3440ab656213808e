#include "summlab/summability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace summlab {

namespace {

constexpr double kSmallT = 1e-3;  // matches dirichlet_kernel's branch point

void require_row(const SummabilityMatrix& A, int n) {
    if (n < 0 || n > A.max_row())
        throw std::out_of_range("summability: row index outside stored matrix");
}

}  // namespace

WeightSequence WeightSequence::from_values(std::vector<double> values, std::string label) {
    if (values.empty()) throw std::invalid_argument("WeightSequence: empty weight list");
    for (double v : values)
        if (!(v >= 0.0)) throw std::invalid_argument("WeightSequence: weights must be >= 0");
    WeightSequence w;
    w.p = std::move(values);
    w.cumulative.resize(w.p.size());
    double acc = 0.0;
    for (size_t i = 0; i < w.p.size(); ++i) {
        acc += w.p[i];
        w.cumulative[i] = acc;
    }
    w.label = std::move(label);
    return w;
}

WeightSequence WeightSequence::ones(int count) {
    return from_values(std::vector<double>(count, 1.0), "ones");
}

WeightSequence WeightSequence::linear(int count) {
    std::vector<double> v(count);
    for (int k = 0; k < count; ++k) v[k] = k + 1.0;
    return from_values(std::move(v), "linear");
}

WeightSequence WeightSequence::geometric(double r, int count) {
    if (!(r > 0.0)) throw std::invalid_argument("WeightSequence: geometric ratio must be > 0");
    std::vector<double> v(count);
    double pk = 1.0;
    for (int k = 0; k < count; ++k) {
        v[k] = pk;
        pk *= r;
    }
    char label[48];
    std::snprintf(label, sizeof(label), "geometric:%g", r);
    return from_values(std::move(v), label);
}

SummabilityMatrix::SummabilityMatrix(std::vector<std::vector<double>> rows, std::string label)
    : rows_(std::move(rows)), label_(std::move(label)) {
    for (size_t n = 0; n < rows_.size(); ++n)
        if (rows_[n].size() != n + 1)
            throw std::invalid_argument("SummabilityMatrix: row " + std::to_string(n) +
                                        " must have " + std::to_string(n + 1) + " entries");
}

SummabilityMatrix SummabilityMatrix::cesaro(int max_row) {
    if (max_row < 0) throw std::invalid_argument("cesaro: max_row must be >= 0");
    std::vector<std::vector<double>> rows(max_row + 1);
    for (int n = 0; n <= max_row; ++n) rows[n].assign(n + 1, 1.0 / (n + 1));
    return SummabilityMatrix(std::move(rows), "cesaro");
}

SummabilityMatrix SummabilityMatrix::norlund(const WeightSequence& w, int max_row) {
    if (max_row < 0) throw std::invalid_argument("norlund: max_row must be >= 0");
    if (w.count() <= max_row)
        throw std::invalid_argument("norlund: weight sequence shorter than max_row + 1");
    std::vector<std::vector<double>> rows(max_row + 1);
    for (int n = 0; n <= max_row; ++n) {
        const double pn = w.cumulative[n];
        if (!(pn > 0.0)) throw std::domain_error("norlund: P_n must be positive");
        rows[n].resize(n + 1);
        for (int k = 0; k <= n; ++k) rows[n][k] = w.p[n - k] / pn;
    }
    return SummabilityMatrix(std::move(rows), "norlund:" + w.label);
}

SummabilityMatrix SummabilityMatrix::riesz(const WeightSequence& w, int max_row) {
    if (max_row < 0) throw std::invalid_argument("riesz: max_row must be >= 0");
    if (w.count() <= max_row)
        throw std::invalid_argument("riesz: weight sequence shorter than max_row + 1");
    std::vector<std::vector<double>> rows(max_row + 1);
    for (int n = 0; n <= max_row; ++n) {
        const double pn = w.cumulative[n];
        if (!(pn > 0.0)) throw std::domain_error("riesz: P_n must be positive");
        rows[n].resize(n + 1);
        for (int k = 0; k <= n; ++k) rows[n][k] = w.p[k] / pn;
    }
    return SummabilityMatrix(std::move(rows), "riesz:" + w.label);
}

std::span<const double> SummabilityMatrix::row(int n) const {
    require_row(*this, n);
    return rows_[static_cast<size_t>(n)];
}

double SummabilityMatrix::at(int n, int k) const {
    require_row(*this, n);
    if (k < 0) throw std::out_of_range("SummabilityMatrix: negative column");
    return k <= n ? rows_[static_cast<size_t>(n)][static_cast<size_t>(k)] : 0.0;
}

double CumulativeWeights::head_sum(int m) const {
    if (m < 0 || m > n()) throw std::out_of_range("CumulativeWeights: head_sum index");
    const double next = (m + 1 <= n()) ? lambda[static_cast<size_t>(m + 1)] : 0.0;
    return lambda[0] - next;
}

CumulativeWeights cumulative_weights(const SummabilityMatrix& A, int n) {
    const auto row = A.row(n);
    CumulativeWeights cw;
    cw.lambda.resize(row.size());
    double acc = 0.0;
    for (int j = n; j >= 0; --j) {
        acc += row[static_cast<size_t>(j)];
        cw.lambda[static_cast<size_t>(j)] = acc;
    }
    return cw;
}

namespace {

double transform_with_lambda(const CumulativeWeights& cw, const TrigSeries& s, int n, double x) {
    double acc = 0.5 * s.a0 * cw.lambda[0];
    for (int j = 1; j <= n; ++j)
        acc += cw.lambda[static_cast<size_t>(j)] *
               (s.cosines[j - 1] * std::cos(j * x) + s.sines[j - 1] * std::sin(j * x));
    return acc;
}

}  // namespace

double transform(const SummabilityMatrix& A, const TrigSeries& s, int n, double x) {
    require_row(A, n);
    if (n > s.degree()) throw std::out_of_range("transform: row order exceeds series degree");
    return transform_with_lambda(cumulative_weights(A, n), s, n, x);
}

double transform_direct(const SummabilityMatrix& A, const TrigSeries& s, int n, double x) {
    require_row(A, n);
    if (n > s.degree()) throw std::out_of_range("transform: row order exceeds series degree");
    const auto row = A.row(n);
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) acc += row[static_cast<size_t>(k)] * partial_sum(s, k, x);
    return acc;
}

double kernel(const SummabilityMatrix& A, int n, double t) {
    const auto row = A.row(n);
    double acc = 0.0;
    if (std::abs(t) < kSmallT) {
        // Running cosine-sum form of D_k, one term added per k.
        double dk = 0.5;
        for (int k = 0; k <= n; ++k) {
            if (k >= 1) dk += std::cos(k * t);
            acc += row[static_cast<size_t>(k)] * dk;
        }
    } else {
        const double inv_denom = 1.0 / (2.0 * std::sin(0.5 * t));
        for (int k = 0; k <= n; ++k)
            acc += row[static_cast<size_t>(k)] * std::sin((k + 0.5) * t) * inv_denom;
    }
    return acc;
}

namespace {

struct GridScan {
    int argmax = 0;
    double max = 0.0;
};

GridScan finish_scan(const std::vector<double>& err) {
    GridScan scan;
    for (size_t i = 0; i < err.size(); ++i) {
        if (err[i] > scan.max) {
            scan.max = err[i];
            scan.argmax = static_cast<int>(i);
        }
    }
    return scan;
}

// Golden-section maximization of err on [lo, hi].
template <typename Err>
double golden_refine(const Err& err, double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    constexpr int kIterations = 64;
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = err(c);
    double fd = err(d);
    for (int i = 0; i < kIterations; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = err(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = err(d);
        }
    }
    return std::max(fc, fd);
}

}  // namespace

double sup_error_serial(const SummabilityMatrix& A, const PeriodicFunction& f,
                        const TrigSeries& s, int n, int grid_size) {
    if (grid_size < 256) throw std::invalid_argument("sup_error: grid_size must be >= 256");
    require_row(A, n);
    if (n > s.degree()) throw std::out_of_range("sup_error: row order exceeds series degree");
    const auto cw = cumulative_weights(A, n);
    const auto err = [&](double x) { return std::abs(transform_with_lambda(cw, s, n, x) - f(x)); };

    std::vector<double> grid_err(static_cast<size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i)
        grid_err[static_cast<size_t>(i)] = err(kTwoPi * i / grid_size);

    const GridScan scan = finish_scan(grid_err);
    const double h = kTwoPi / grid_size;
    const double x_star = scan.argmax * h;
    return std::max(scan.max, golden_refine(err, x_star - h, x_star + h));
}

double sup_error(const SummabilityMatrix& A, const PeriodicFunction& f, const TrigSeries& s,
                 int n, int grid_size) {
    if (grid_size < 256) throw std::invalid_argument("sup_error: grid_size must be >= 256");
    require_row(A, n);
    if (n > s.degree()) throw std::out_of_range("sup_error: row order exceeds series degree");
    const auto cw = cumulative_weights(A, n);
    const auto err = [&](double x) { return std::abs(transform_with_lambda(cw, s, n, x) - f(x)); };

    std::vector<double> grid_err(static_cast<size_t>(grid_size));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < grid_size; ++i)
        grid_err[static_cast<size_t>(i)] = err(kTwoPi * i / grid_size);

    const GridScan scan = finish_scan(grid_err);
    const double h = kTwoPi / grid_size;
    const double x_star = scan.argmax * h;
    return std::max(scan.max, golden_refine(err, x_star - h, x_star + h));
}

}  // namespace summlab
