#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "summlab/conditions.hpp"
#include "summlab/experiments.hpp"

namespace summlab {

enum class ReportFormat { Csv, Json };

ReportFormat format_from_name(const std::string& name);

/// "16..1024x2" (range with multiplicative step, default x2) or an explicit
/// comma list "1,2,4". Values must be nonnegative and strictly increasing.
std::vector<int> parse_n_list(const std::string& spec);

/// Line-per-row matrix file: row n holds exactly n+1 whitespace-separated
/// entries; '#' starts a comment. Negative entries parse with a warning on
/// stderr (the condition checkers report them); ragged rows throw.
SummabilityMatrix matrix_from_file(const std::string& path);

/// One weight per line, '#' comments allowed.
WeightSequence weights_from_file(const std::string& path);

// CSV bodies. ExperimentReport columns are fixed: n,sup_error,bound,ratio
// with 12 significant digits. Output is byte-stable for identical inputs.
std::string to_csv(const ExperimentReport& r);
std::string to_csv(const ConditionReport& r);
std::string to_csv(const KernelBoundReport& r);

std::string to_json_string(const ExperimentReport& r);
std::string to_json_string(const ConditionReport& r);
std::string to_json_string(const KernelBoundReport& r);

ExperimentReport experiment_report_from_json(const std::string& text);
ConditionReport condition_report_from_json(const std::string& text);
KernelBoundReport kernel_bound_report_from_json(const std::string& text);

/// Serialize to `path` ("-" writes to stdout). I/O failure throws
/// std::runtime_error (the CLI maps it to exit code 3).
void write_report(const ExperimentReport& r, ReportFormat format, const std::string& path);
void write_report(const ConditionReport& r, ReportFormat format, const std::string& path);
void write_report(const KernelBoundReport& r, ReportFormat format, const std::string& path);

}  // namespace summlab
