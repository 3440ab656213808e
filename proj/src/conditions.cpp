#include "summlab/conditions.hpp"

#include <cmath>
#include <stdexcept>

namespace summlab {

namespace {

bool all_zero(std::span<const double> row) {
    for (double v : row)
        if (v != 0.0) return false;
    return true;
}

// (j+1)^beta for j = 0..n. pow(x, 0) == 1 exactly, so beta = 0 reproduces
// the unweighted sums bit for bit.
std::vector<double> index_powers(int n, double beta) {
    std::vector<double> p(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) p[static_cast<size_t>(j)] = std::pow(j + 1.0, beta);
    return p;
}

struct LhsSequence {
    // lhs[m] = the condition's variation sum at cut m; admissible m range
    // is [m_lo, n].
    std::vector<double> lhs;
    int m_lo = 0;
};

RowConditionStat rate_against_row(std::span<const double> row, const LhsSequence& seq) {
    if (all_zero(row)) throw std::domain_error("conditions: degenerate all-zero row");
    const int n = static_cast<int>(row.size()) - 1;
    RowConditionStat stat;
    for (int m = seq.m_lo; m <= n; ++m) {
        const double lhs = seq.lhs[static_cast<size_t>(m)];
        const double denom = row[static_cast<size_t>(m)];
        if (denom > 0.0) {
            const double ratio = lhs / denom;
            if (ratio > stat.constant) {
                stat.constant = ratio;
                stat.witness_m = m;
            }
        } else if (lhs > 0.0) {
            if (!stat.degenerate) {
                stat.degenerate = true;
                stat.degenerate_m = m;
            }
        }
        // denom == 0 with lhs == 0 constrains nothing.
    }
    return stat;
}

LhsSequence head_lhs(std::span<const double> row, const std::vector<double>* powers) {
    const int n = static_cast<int>(row.size()) - 1;
    LhsSequence seq;
    seq.m_lo = 1;  // m = 0 gives an empty sum: vacuous for head conditions
    seq.lhs.assign(static_cast<size_t>(n) + 1, 0.0);
    double acc = 0.0;
    for (int m = 1; m <= n; ++m) {
        const int k = m - 1;
        if (powers) {
            const auto& w = *powers;
            acc += w[static_cast<size_t>(k)] *
                   std::abs(row[static_cast<size_t>(k)] / w[static_cast<size_t>(k)] -
                            row[static_cast<size_t>(k + 1)] / w[static_cast<size_t>(k + 1)]);
        } else {
            acc += std::abs(row[static_cast<size_t>(k)] - row[static_cast<size_t>(k + 1)]);
        }
        seq.lhs[static_cast<size_t>(m)] = acc;
    }
    return seq;
}

LhsSequence rest_lhs(std::span<const double> row, const std::vector<double>* powers) {
    const int n = static_cast<int>(row.size()) - 1;
    LhsSequence seq;
    seq.m_lo = 0;
    seq.lhs.assign(static_cast<size_t>(n) + 1, 0.0);
    // k = n term: a_{n,n+1} = 0 by triangularity, so the term is a_{n,n}
    // exactly at any beta.
    double acc = row[static_cast<size_t>(n)];
    seq.lhs[static_cast<size_t>(n)] = acc;
    for (int m = n - 1; m >= 0; --m) {
        if (powers) {
            const auto& w = *powers;
            acc += w[static_cast<size_t>(m)] *
                   std::abs(row[static_cast<size_t>(m)] / w[static_cast<size_t>(m)] -
                            row[static_cast<size_t>(m + 1)] / w[static_cast<size_t>(m + 1)]);
        } else {
            acc += std::abs(row[static_cast<size_t>(m)] - row[static_cast<size_t>(m + 1)]);
        }
        seq.lhs[static_cast<size_t>(m)] = acc;
    }
    return seq;
}

bool doubling_test_passes(const std::vector<double>& per_row, const UniformityPolicy& policy) {
    const int max_n = static_cast<int>(per_row.size()) - 1;
    for (int n = policy.doubling_min_n; 2 * n <= max_n; ++n) {
        const double at_n = per_row[static_cast<size_t>(n)];
        const double at_2n = per_row[static_cast<size_t>(2 * n)];
        if (at_2n > policy.doubling_factor * at_n + policy.doubling_slack) return false;
    }
    return true;
}

using RowFn = RowConditionStat (*)(std::span<const double>, double);

ConditionReport assemble(const SummabilityMatrix& A, ConditionId id, double beta, RowFn row_fn,
                         const UniformityPolicy& policy) {
    ConditionReport report;
    report.id = id;
    report.beta = beta;
    report.per_row_constant.reserve(static_cast<size_t>(A.max_row()) + 1);
    for (int n = 0; n <= A.max_row(); ++n) {
        const RowConditionStat stat = row_fn(A.row(n), beta);
        report.per_row_constant.push_back(stat.constant);
        if (stat.constant > report.overall_constant || report.witness.n < 0) {
            report.overall_constant = stat.constant;
            report.witness = {n, stat.witness_m};
        }
        if (stat.degenerate && !report.degenerate) {
            report.degenerate = true;
            report.degenerate_witness = {n, stat.degenerate_m};
        }
    }
    report.holds_uniformly = !report.degenerate &&
                             report.overall_constant <= policy.max_constant &&
                             doubling_test_passes(report.per_row_constant, policy);
    return report;
}

RowConditionStat hbvs_row_fn(std::span<const double> row, double) { return hbvs_row(row); }
RowConditionStat rbvs_row_fn(std::span<const double> row, double) { return rbvs_row(row); }

RowConditionStat beta_head_row_fn(std::span<const double> row, double beta) {
    return beta_head_row(row, beta);
}

RowConditionStat beta_rest_row_fn(std::span<const double> row, double beta) {
    return beta_rest_row(row, beta);
}

SummabilityMatrix beta_scaled_matrix(const SummabilityMatrix& A, double beta) {
    std::vector<std::vector<double>> rows(static_cast<size_t>(A.max_row()) + 1);
    for (int n = 0; n <= A.max_row(); ++n) {
        const auto row = A.row(n);
        auto& out = rows[static_cast<size_t>(n)];
        out.resize(row.size());
        for (int k = 0; k <= n; ++k)
            out[static_cast<size_t>(k)] = row[static_cast<size_t>(k)] / std::pow(k + 1.0, beta);
    }
    return SummabilityMatrix(std::move(rows), A.label() + "/(k+1)^beta");
}

}  // namespace

const char* condition_name(ConditionId id) {
    switch (id) {
        case ConditionId::RowStochastic: return "row_stochastic";
        case ConditionId::NonDecreasing: return "nondecreasing";
        case ConditionId::NonIncreasing: return "nonincreasing";
        case ConditionId::Hbvs: return "hbvs";
        case ConditionId::Rbvs: return "rbvs";
        case ConditionId::BetaHead: return "beta_head";
        case ConditionId::BetaRest: return "beta_rest";
    }
    return "unknown";
}

RowConditionStat hbvs_row(std::span<const double> row) {
    return rate_against_row(row, head_lhs(row, nullptr));
}

RowConditionStat rbvs_row(std::span<const double> row) {
    return rate_against_row(row, rest_lhs(row, nullptr));
}

RowConditionStat beta_head_row(std::span<const double> row, double beta) {
    if (!(beta >= 0.0)) throw std::invalid_argument("beta_head_row: beta must be >= 0");
    const auto powers = index_powers(static_cast<int>(row.size()) - 1, beta);
    return rate_against_row(row, head_lhs(row, &powers));
}

RowConditionStat beta_rest_row(std::span<const double> row, double beta) {
    if (!(beta >= 0.0)) throw std::invalid_argument("beta_rest_row: beta must be >= 0");
    const auto powers = index_powers(static_cast<int>(row.size()) - 1, beta);
    return rate_against_row(row, rest_lhs(row, &powers));
}

ConditionReport check_row_stochastic(const SummabilityMatrix& A, double tol) {
    ConditionReport report;
    report.id = ConditionId::RowStochastic;
    report.per_row_constant.reserve(static_cast<size_t>(A.max_row()) + 1);
    for (int n = 0; n <= A.max_row(); ++n) {
        const auto row = A.row(n);
        double sum = 0.0;
        double worst = 0.0;
        int worst_m = -1;  // -1 marks the row-sum deviation
        for (int k = 0; k <= n; ++k) {
            const double v = row[static_cast<size_t>(k)];
            sum += v;
            if (-v > worst) {
                worst = -v;
                worst_m = k;
            }
        }
        if (std::abs(sum - 1.0) > worst) {
            worst = std::abs(sum - 1.0);
            worst_m = -1;
        }
        report.per_row_constant.push_back(worst);
        if (worst > report.overall_constant || report.witness.n < 0) {
            report.overall_constant = worst;
            report.witness = {n, worst_m};
        }
    }
    report.holds_uniformly = report.overall_constant <= tol;
    return report;
}

ConditionReport check_monotone(const SummabilityMatrix& A, MonotoneDirection direction) {
    ConditionReport report;
    report.id = direction == MonotoneDirection::NonDecreasing ? ConditionId::NonDecreasing
                                                              : ConditionId::NonIncreasing;
    report.per_row_constant.reserve(static_cast<size_t>(A.max_row()) + 1);
    bool violated = false;
    for (int n = 0; n <= A.max_row(); ++n) {
        const auto row = A.row(n);
        double worst = 0.0;
        for (int k = 0; k + 1 <= n; ++k) {
            const double step = row[static_cast<size_t>(k)] - row[static_cast<size_t>(k + 1)];
            const double violation = direction == MonotoneDirection::NonDecreasing ? step : -step;
            if (violation > 0.0) {
                if (!violated) {
                    violated = true;
                    report.witness = {n, k};  // first violation
                }
                worst = std::max(worst, violation);
            }
        }
        report.per_row_constant.push_back(worst);
        report.overall_constant = std::max(report.overall_constant, worst);
    }
    report.holds_uniformly = !violated;
    return report;
}

ConditionReport hbvs_constant(const SummabilityMatrix& A, UniformityPolicy policy) {
    return assemble(A, ConditionId::Hbvs, 0.0, hbvs_row_fn, policy);
}

ConditionReport rbvs_constant(const SummabilityMatrix& A, UniformityPolicy policy) {
    return assemble(A, ConditionId::Rbvs, 0.0, rbvs_row_fn, policy);
}

ConditionReport beta_head_constant(const SummabilityMatrix& A, double beta,
                                   UniformityPolicy policy) {
    return assemble(A, ConditionId::BetaHead, beta, beta_head_row_fn, policy);
}

ConditionReport beta_rest_constant(const SummabilityMatrix& A, double beta,
                                   UniformityPolicy policy) {
    return assemble(A, ConditionId::BetaRest, beta, beta_rest_row_fn, policy);
}

std::vector<ImplicationFinding> implication_audit(const SummabilityMatrix& A, double beta,
                                                  UniformityPolicy policy) {
    const SummabilityMatrix derived = beta_scaled_matrix(A, beta);

    const auto judge = [](const ConditionReport& antecedent, const ConditionReport& consequent,
                          std::string claim) {
        ImplicationFinding finding;
        finding.claim = std::move(claim);
        finding.antecedent_constant = antecedent.overall_constant;
        finding.consequent_constant = consequent.overall_constant;
        finding.vacuous = antecedent.degenerate || !antecedent.holds_uniformly;
        if (antecedent.overall_constant > 0.0)
            finding.ratio = consequent.overall_constant / antecedent.overall_constant;
        else
            finding.ratio = consequent.overall_constant > 0.0 ? HUGE_VAL : 1.0;
        finding.verified =
            finding.vacuous || (!consequent.degenerate && finding.ratio <= 1.0 + 1e-9);
        return finding;
    };

    std::vector<ImplicationFinding> findings;
    findings.push_back(judge(hbvs_constant(derived, policy), beta_head_constant(A, beta, policy),
                             "HBVS of {a_nk/(k+1)^beta} implies the beta-weighted head condition"));
    findings.push_back(judge(beta_rest_constant(A, beta, policy), rbvs_constant(derived, policy),
                             "the beta-weighted rest condition implies RBVS of {a_nk/(k+1)^beta}"));
    return findings;
}

}  // namespace summlab
