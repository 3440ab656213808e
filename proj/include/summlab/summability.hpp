#pragma once

#include <span>
#include <string>
#include <vector>

#include "summlab/fourier.hpp"

namespace summlab {

/// Nonnegative weights p_0..p_N with running totals P_n = sum_{k<=n} p_k.
struct WeightSequence {
    std::vector<double> p;
    std::vector<double> cumulative;  // P_n per n
    std::string label;

    static WeightSequence from_values(std::vector<double> values, std::string label = "custom");
    static WeightSequence ones(int count);              // p_k = 1
    static WeightSequence linear(int count);            // p_k = k+1
    static WeightSequence geometric(double r, int count);  // p_k = r^k

    int count() const { return static_cast<int>(p.size()); }
};

/// Rows 0..N of a lower-triangular matrix A = (a_{n,k}); row n stores
/// a_{n,0}..a_{n,n}. Entries with k > n are implicitly zero.
class SummabilityMatrix {
public:
    SummabilityMatrix() = default;
    SummabilityMatrix(std::vector<std::vector<double>> rows, std::string label);

    static SummabilityMatrix cesaro(int max_row);
    static SummabilityMatrix norlund(const WeightSequence& w, int max_row);  // a_{n,k} = p_{n-k}/P_n
    static SummabilityMatrix riesz(const WeightSequence& w, int max_row);    // a_{n,k} = p_k/P_n

    int max_row() const { return static_cast<int>(rows_.size()) - 1; }
    std::span<const double> row(int n) const;
    double at(int n, int k) const;  // 0 outside the triangle
    const std::string& label() const { return label_; }

private:
    std::vector<std::vector<double>> rows_;
    std::string label_;
};

/// Tail sums lambda_j = sum_{k=j}^{n} a_{n,k} of one matrix row. In this
/// coefficient-space form T_{n,A} multiplies the j-th harmonic by lambda_j.
struct CumulativeWeights {
    std::vector<double> lambda;  // j = 0..n

    int n() const { return static_cast<int>(lambda.size()) - 1; }

    /// Head sum A_{n,m} = sum_{r=0}^{m} a_{n,r} = lambda_0 - lambda_{m+1}.
    double head_sum(int m) const;
};

CumulativeWeights cumulative_weights(const SummabilityMatrix& A, int n);

/// T_{n,A}(f;x) in coefficient space:
///   (a0/2) lambda_0 + sum_{j=1}^{n} lambda_j (a_j cos(jx) + b_j sin(jx)).
double transform(const SummabilityMatrix& A, const TrigSeries& s, int n, double x);

/// Testing oracle: the direct form sum_{k=0}^{n} a_{n,k} S_k(f;x).
double transform_direct(const SummabilityMatrix& A, const TrigSeries& s, int n, double x);

/// Summability kernel K_n(t) = sum_{k=0}^{n} a_{n,k} D_k(t), signed.
double kernel(const SummabilityMatrix& A, int n, double t);

/// Sup-norm error max_x |T_{n,A}(f;x) - f(x)|: uniform grid scan over
/// [0, 2*pi) followed by one golden-section refinement around the argmax.
/// Requires grid_size >= 256.
double sup_error(const SummabilityMatrix& A, const PeriodicFunction& f, const TrigSeries& s,
                 int n, int grid_size = 4096);
double sup_error_serial(const SummabilityMatrix& A, const PeriodicFunction& f,
                        const TrigSeries& s, int n, int grid_size = 4096);

}  // namespace summlab
