#include "summlab/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace summlab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

ConditionId condition_from_name(const std::string& name) {
    for (ConditionId id : {ConditionId::RowStochastic, ConditionId::NonDecreasing,
                           ConditionId::NonIncreasing, ConditionId::Hbvs, ConditionId::Rbvs,
                           ConditionId::BetaHead, ConditionId::BetaRest})
        if (name == condition_name(id)) return id;
    throw std::invalid_argument("unknown condition name: " + name);
}

void write_text(const std::string& text, const std::string& path) {
    if (path == "-") {
        std::cout << text;
        if (!std::cout) throw std::runtime_error("write_report: stdout write failed");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_report: cannot open " + path);
    out << text;
    if (!out) throw std::runtime_error("write_report: write failed for " + path);
}

ordered_json witness_json(const ConditionWitness& w) {
    return ordered_json{{"n", w.n}, {"m", w.m}};
}

ConditionWitness witness_from(const ordered_json& j) {
    return ConditionWitness{j.at("n").get<int>(), j.at("m").get<int>()};
}

}  // namespace

ReportFormat format_from_name(const std::string& name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    throw std::invalid_argument("unknown format: " + name + " (expected csv or json)");
}

namespace {

int parse_int_exact(const std::string& text, const char* what) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("n list: bad ") + what + " '" + text + "'");
    }
    if (used != text.size())
        throw std::invalid_argument(std::string("n list: bad ") + what + " '" + text + "'");
    return value;
}

}  // namespace

std::vector<int> parse_n_list(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("n list: empty specification");
    std::vector<int> out;
    const auto range_pos = spec.find("..");
    if (range_pos != std::string::npos) {
        const std::string lo_text = spec.substr(0, range_pos);
        std::string hi_text = spec.substr(range_pos + 2);
        int factor = 2;
        const auto x_pos = hi_text.find('x');
        if (x_pos != std::string::npos) {
            factor = parse_int_exact(hi_text.substr(x_pos + 1), "range factor");
            hi_text = hi_text.substr(0, x_pos);
        }
        const int lo = parse_int_exact(lo_text, "range start");
        const int hi = parse_int_exact(hi_text, "range end");
        if (lo < 1 || hi < lo) throw std::invalid_argument("n list: bad range " + spec);
        if (factor < 2) throw std::invalid_argument("n list: range factor must be >= 2");
        for (long long n = lo; n <= hi; n *= factor) out.push_back(static_cast<int>(n));
        return out;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const int n = parse_int_exact(item, "entry");
        if (n < 0) throw std::invalid_argument("n list: entries must be >= 0");
        if (!out.empty() && n <= out.back())
            throw std::invalid_argument("n list: entries must be strictly increasing");
        out.push_back(n);
    }
    if (out.empty()) throw std::invalid_argument("n list: empty specification");
    return out;
}

SummabilityMatrix matrix_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("matrix file: cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    bool warned_negative = false;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::stringstream ss(line);
        std::vector<double> row;
        double v = 0.0;
        while (ss >> v) {
            if (v < 0.0 && !warned_negative) {
                std::cerr << "warning: negative entry in " << path
                          << " (condition checks will report it)\n";
                warned_negative = true;
            }
            row.push_back(v);
        }
        if (row.empty()) continue;  // blank or comment-only line
        if (row.size() != rows.size() + 1)
            throw std::invalid_argument("matrix file: row " + std::to_string(rows.size()) +
                                        " must have " + std::to_string(rows.size() + 1) +
                                        " entries, found " + std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("matrix file: no rows in " + path);
    return SummabilityMatrix(std::move(rows), "file:" + path);
}

WeightSequence weights_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("weights file: cannot open " + path);
    std::vector<double> values;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::stringstream ss(line);
        double v = 0.0;
        while (ss >> v) values.push_back(v);
    }
    if (values.empty()) throw std::invalid_argument("weights file: no values in " + path);
    return WeightSequence::from_values(std::move(values), "file:" + path);
}

std::string to_csv(const ExperimentReport& r) {
    std::string out = "n,sup_error,bound,ratio\n";
    for (const auto& row : r.rows) {
        out += std::to_string(row.n);
        out += ',';
        out += fmt12(row.sup_error);
        out += ',';
        out += fmt12(row.bound);
        out += ',';
        out += fmt12(row.ratio);
        out += '\n';
    }
    return out;
}

std::string to_csv(const ConditionReport& r) {
    std::string out = "n,constant\n";
    for (size_t n = 0; n < r.per_row_constant.size(); ++n) {
        out += std::to_string(n);
        out += ',';
        out += fmt12(r.per_row_constant[n]);
        out += '\n';
    }
    return out;
}

std::string to_csv(const KernelBoundReport& r) {
    std::string out = "index,constant\n";
    for (const auto& [index, constant] : r.per_index) {
        out += std::to_string(index);
        out += ',';
        out += fmt12(constant);
        out += '\n';
    }
    return out;
}

namespace {

ordered_json to_json(const ExperimentReport& r) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows)
        rows.push_back(ordered_json{{"n", row.n},
                                    {"sup_error", row.sup_error},
                                    {"bound", row.bound},
                                    {"ratio", row.ratio}});
    ordered_json checks = ordered_json::array();
    for (const auto& check : r.hypotheses)
        checks.push_back(
            ordered_json{{"name", check.name}, {"ok", check.ok}, {"detail", check.detail}});
    return ordered_json{{"experiment_id", r.experiment_id},
                        {"matrix", r.matrix_label},
                        {"function", r.function_label},
                        {"profile", r.profile_label},
                        {"beta", r.beta},
                        {"grid_size", r.grid_size},
                        {"hypotheses_verified", r.hypotheses_verified},
                        {"hypotheses", checks},
                        {"exact", r.exact},
                        {"fitted_slope", r.fitted_slope},
                        {"slope_stderr", r.slope_stderr},
                        {"rows", rows}};
}

ordered_json to_json(const ConditionReport& r) {
    return ordered_json{{"condition", condition_name(r.id)},
                        {"beta", r.beta},
                        {"overall_constant", r.overall_constant},
                        {"holds_uniformly", r.holds_uniformly},
                        {"witness", witness_json(r.witness)},
                        {"degenerate", r.degenerate},
                        {"degenerate_witness", witness_json(r.degenerate_witness)},
                        {"per_row_constant", r.per_row_constant}};
}

ordered_json to_json(const KernelBoundReport& r) {
    ordered_json per_index = ordered_json::array();
    for (const auto& [index, constant] : r.per_index)
        per_index.push_back(ordered_json{{"index", index}, {"constant", constant}});
    return ordered_json{{"check", r.check_id},
                        {"beta", r.beta},
                        {"max_normalized", r.max_normalized},
                        {"worst_index", r.worst_index},
                        {"worst_t", r.worst_t},
                        {"flagged", r.flagged},
                        {"per_index", per_index}};
}

}  // namespace

std::string to_json_string(const ExperimentReport& r) { return to_json(r).dump(2) + "\n"; }
std::string to_json_string(const ConditionReport& r) { return to_json(r).dump(2) + "\n"; }
std::string to_json_string(const KernelBoundReport& r) { return to_json(r).dump(2) + "\n"; }

ExperimentReport experiment_report_from_json(const std::string& text) {
    const auto j = ordered_json::parse(text);
    ExperimentReport r;
    r.experiment_id = j.at("experiment_id").get<std::string>();
    r.matrix_label = j.at("matrix").get<std::string>();
    r.function_label = j.at("function").get<std::string>();
    r.profile_label = j.at("profile").get<std::string>();
    r.beta = j.at("beta").get<double>();
    r.grid_size = j.at("grid_size").get<int>();
    r.hypotheses_verified = j.at("hypotheses_verified").get<bool>();
    for (const auto& check : j.at("hypotheses"))
        r.hypotheses.push_back({check.at("name").get<std::string>(), check.at("ok").get<bool>(),
                                check.at("detail").get<double>()});
    r.exact = j.at("exact").get<bool>();
    r.fitted_slope = j.at("fitted_slope").get<double>();
    r.slope_stderr = j.at("slope_stderr").get<double>();
    for (const auto& row : j.at("rows"))
        r.rows.push_back({row.at("n").get<int>(), row.at("sup_error").get<double>(),
                          row.at("bound").get<double>(), row.at("ratio").get<double>()});
    return r;
}

ConditionReport condition_report_from_json(const std::string& text) {
    const auto j = ordered_json::parse(text);
    ConditionReport r;
    r.id = condition_from_name(j.at("condition").get<std::string>());
    r.beta = j.at("beta").get<double>();
    r.overall_constant = j.at("overall_constant").get<double>();
    r.holds_uniformly = j.at("holds_uniformly").get<bool>();
    r.witness = witness_from(j.at("witness"));
    r.degenerate = j.at("degenerate").get<bool>();
    r.degenerate_witness = witness_from(j.at("degenerate_witness"));
    r.per_row_constant = j.at("per_row_constant").get<std::vector<double>>();
    return r;
}

KernelBoundReport kernel_bound_report_from_json(const std::string& text) {
    const auto j = ordered_json::parse(text);
    KernelBoundReport r;
    r.check_id = j.at("check").get<std::string>();
    r.beta = j.at("beta").get<double>();
    r.max_normalized = j.at("max_normalized").get<double>();
    r.worst_index = j.at("worst_index").get<int>();
    r.worst_t = j.at("worst_t").get<double>();
    r.flagged = j.at("flagged").get<std::vector<int>>();
    for (const auto& entry : j.at("per_index"))
        r.per_index.emplace_back(entry.at("index").get<int>(), entry.at("constant").get<double>());
    return r;
}

void write_report(const ExperimentReport& r, ReportFormat format, const std::string& path) {
    write_text(format == ReportFormat::Csv ? to_csv(r) : to_json_string(r), path);
}

void write_report(const ConditionReport& r, ReportFormat format, const std::string& path) {
    write_text(format == ReportFormat::Csv ? to_csv(r) : to_json_string(r), path);
}

void write_report(const KernelBoundReport& r, ReportFormat format, const std::string& path) {
    write_text(format == ReportFormat::Csv ? to_csv(r) : to_json_string(r), path);
}

}  // namespace summlab
