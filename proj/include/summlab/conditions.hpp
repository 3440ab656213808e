#pragma once

#include <span>
#include <string>
#include <vector>

#include "summlab/summability.hpp"

namespace summlab {

enum class ConditionId {
    RowStochastic,
    NonDecreasing,
    NonIncreasing,
    Hbvs,
    Rbvs,
    BetaHead,
    BetaRest,
};

const char* condition_name(ConditionId id);

struct ConditionWitness {
    int n = -1;
    int m = -1;
};

/// How a measured best-constant sequence is judged "uniformly bounded".
/// The per-row constants must stay below max_constant and pass the doubling
/// test c_{2n} <= doubling_factor * c_n + doubling_slack. Rows below
/// doubling_min_n are pre-asymptotic and excluded from the doubling test.
struct UniformityPolicy {
    double max_constant = 100.0;
    double doubling_factor = 1.1;
    double doubling_slack = 0.1;
    int doubling_min_n = 8;
};

struct ConditionReport {
    ConditionId id = ConditionId::RowStochastic;
    double beta = 0.0;
    std::vector<double> per_row_constant;  // indexed by n
    ConditionWitness witness;              // (n, m) attaining overall_constant
    double overall_constant = 0.0;
    bool holds_uniformly = false;
    // Zero denominator a_{n,m} = 0 against a nonzero sum: reported as a
    // failure with a witness instead of an infinite constant.
    bool degenerate = false;
    ConditionWitness degenerate_witness;
};

/// Per-row result of one bounded-variation style condition.
struct RowConditionStat {
    double constant = 0.0;  // sup over admissible m of LHS(m)/a_{n,m}
    int witness_m = -1;
    bool degenerate = false;
    int degenerate_m = -1;
};

// Row-level primitives. `row` is one matrix row a_{n,0}..a_{n,n}.
// A row of all zeros raises std::domain_error.
RowConditionStat hbvs_row(std::span<const double> row);
RowConditionStat rbvs_row(std::span<const double> row);
RowConditionStat beta_head_row(std::span<const double> row, double beta);
RowConditionStat beta_rest_row(std::span<const double> row, double beta);

/// Row-stochasticity: entries >= -tol and |row sum - 1| <= tol on every row.
ConditionReport check_row_stochastic(const SummabilityMatrix& A, double tol = 1e-12);

enum class MonotoneDirection { NonDecreasing, NonIncreasing };

/// Adjacent entries ordered within each row, zero
/// tolerance. Witness is the first violation.
ConditionReport check_monotone(const SummabilityMatrix& A, MonotoneDirection direction);

/// Head bounded variation: sup_m sum_{k<m} |a_{n,k} - a_{n,k+1}| / a_{n,m},
/// m = 1..n.
ConditionReport hbvs_constant(const SummabilityMatrix& A, UniformityPolicy policy = {});

/// Rest bounded variation: sup_m [sum_{k=m}^{n-1} |a_{n,k} - a_{n,k+1}| + a_{n,n}]
/// / a_{n,m}, m = 0..n. The formally infinite sum truncates exactly at
/// k = n by triangularity.
ConditionReport rbvs_constant(const SummabilityMatrix& A, UniformityPolicy policy = {});

/// Beta-weighted head condition; beta = 0 reproduces hbvs_constant.
ConditionReport beta_head_constant(const SummabilityMatrix& A, double beta,
                                   UniformityPolicy policy = {});

/// Beta-weighted rest condition; beta = 0 reproduces rbvs_constant.
ConditionReport beta_rest_constant(const SummabilityMatrix& A, double beta,
                                   UniformityPolicy policy = {});

struct ImplicationFinding {
    std::string claim;
    bool verified = false;
    bool vacuous = false;  // antecedent does not hold, so nothing to check
    double antecedent_constant = 0.0;
    double consequent_constant = 0.0;
    double ratio = 0.0;  // consequent / antecedent where meaningful
};

/// Numerical audit of the two implications relating the beta-weighted
/// conditions to HBVS/RBVS membership of {a_{n,k}/(k+1)^beta}.
std::vector<ImplicationFinding> implication_audit(const SummabilityMatrix& A, double beta,
                                                  UniformityPolicy policy = {});

}  // namespace summlab
