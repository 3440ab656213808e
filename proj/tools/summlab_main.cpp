// Command-line front end: matrix condition checks, kernel-bound scans,
// theorem-rate experiments, and Riesz rate tables, reported as CSV or JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "summlab/experiments.hpp"
#include "summlab/report_io.hpp"

namespace {

using summlab::ReportFormat;

struct Options {
    std::string matrix = "cesaro";
    std::string weights = "ones";
    std::string function;  // empty: pick the Lip(alpha) exemplar
    std::string theorem = "T10";
    double alpha = 0.5;
    double beta = 0.0;
    std::string n_spec = "16..1024x2";
    int grid = 4096;
    int t_grid = 2048;
    int m_max = 512;
    double tol = 1e-12;
    std::string output = "-";
    std::string format = "csv";
    bool strict = false;
};

double parse_double_exact(const std::string& text, const std::string& context) {
    size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(context + ": bad number '" + text + "'");
    }
    if (used != text.size())
        throw std::invalid_argument(context + ": bad number '" + text + "'");
    return value;
}

summlab::WeightSequence weights_from_spec(const std::string& spec, int count) {
    using summlab::WeightSequence;
    if (spec == "ones") return WeightSequence::ones(count);
    if (spec == "linear") return WeightSequence::linear(count);
    if (spec.rfind("geometric:", 0) == 0)
        return WeightSequence::geometric(parse_double_exact(spec.substr(10), "weights spec"),
                                         count);
    if (spec.rfind("file:", 0) == 0) return summlab::weights_from_file(spec.substr(5));
    throw std::invalid_argument("unknown weights spec: " + spec);
}

summlab::SummabilityMatrix matrix_from_spec(const std::string& spec, int max_row) {
    using summlab::SummabilityMatrix;
    if (spec == "cesaro") return SummabilityMatrix::cesaro(max_row);
    if (spec.rfind("norlund:", 0) == 0)
        return SummabilityMatrix::norlund(weights_from_spec(spec.substr(8), max_row + 1), max_row);
    if (spec.rfind("riesz:", 0) == 0)
        return SummabilityMatrix::riesz(weights_from_spec(spec.substr(6), max_row + 1), max_row);
    if (spec.rfind("file:", 0) == 0) {
        SummabilityMatrix A = summlab::matrix_from_file(spec.substr(5));
        if (A.max_row() < max_row)
            throw std::invalid_argument("matrix file has " + std::to_string(A.max_row() + 1) +
                                        " rows, need " + std::to_string(max_row + 1));
        return A;
    }
    throw std::invalid_argument("unknown matrix spec: " + spec);
}

summlab::Exemplar pick_function(const Options& opt, int max_degree) {
    if (!opt.function.empty()) return summlab::exemplar_by_name(opt.function, max_degree);
    if (opt.alpha == 1.0) return summlab::make_triangle(max_degree);
    char name[48];
    std::snprintf(name, sizeof(name), "lacunary:%g", opt.alpha);
    return summlab::exemplar_by_name(name, max_degree);
}

int exemplar_degree_for(const std::vector<int>& n_list) {
    const int need = n_list.back();
    int degree = 4096;
    while (degree < need) degree *= 2;
    return degree;
}

std::vector<double> make_t_grid(int count) {
    std::vector<double> grid(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        grid[static_cast<size_t>(i)] = summlab::kPi * (i + 1) / count;
    return grid;
}

void write_text_or_throw(const std::string& text, const std::string& path) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

int run_check_matrix(const Options& opt) {
    const auto n_list = summlab::parse_n_list(opt.n_spec);
    const int max_row = n_list.back();
    const auto A = matrix_from_spec(opt.matrix, max_row);

    std::vector<summlab::ConditionReport> reports;
    reports.push_back(summlab::check_row_stochastic(A, opt.tol));
    reports.push_back(summlab::check_monotone(A, summlab::MonotoneDirection::NonDecreasing));
    reports.push_back(summlab::check_monotone(A, summlab::MonotoneDirection::NonIncreasing));
    reports.push_back(summlab::hbvs_constant(A));
    reports.push_back(summlab::rbvs_constant(A));
    reports.push_back(summlab::beta_head_constant(A, opt.beta));
    reports.push_back(summlab::beta_rest_constant(A, opt.beta));
    const auto audit = summlab::implication_audit(A, opt.beta);

    if (opt.format == "csv") {
        std::string out =
            "condition,beta,overall_constant,holds_uniformly,degenerate,witness_n,witness_m\n";
        for (const auto& r : reports) {
            char line[256];
            std::snprintf(line, sizeof(line), "%s,%g,%.12g,%d,%d,%d,%d\n",
                          summlab::condition_name(r.id), r.beta, r.overall_constant,
                          r.holds_uniformly ? 1 : 0, r.degenerate ? 1 : 0, r.witness.n,
                          r.witness.m);
            out += line;
        }
        for (const auto& f : audit) {
            char line[320];
            std::snprintf(line, sizeof(line), "implication,%g,%.12g,%d,%d,-1,-1\n", opt.beta,
                          f.ratio, f.verified ? 1 : 0, f.vacuous ? 1 : 0);
            out += line;
        }
        write_text_or_throw(out, opt.output);
    } else {
        nlohmann::ordered_json doc;
        doc["matrix"] = A.label();
        doc["max_row"] = max_row;
        auto conditions = nlohmann::ordered_json::array();
        for (const auto& r : reports)
            conditions.push_back(nlohmann::ordered_json::parse(summlab::to_json_string(r)));
        doc["conditions"] = conditions;
        auto implications = nlohmann::ordered_json::array();
        for (const auto& f : audit)
            implications.push_back(nlohmann::ordered_json{{"claim", f.claim},
                                                          {"verified", f.verified},
                                                          {"vacuous", f.vacuous},
                                                          {"antecedent", f.antecedent_constant},
                                                          {"consequent", f.consequent_constant},
                                                          {"ratio", f.ratio}});
        doc["implications"] = implications;
        write_text_or_throw(doc.dump(2) + "\n", opt.output);
    }
    return 0;
}

int run_kernel_bounds(const Options& opt) {
    const auto t_grid = make_t_grid(opt.t_grid);
    std::vector<int> m_list(static_cast<size_t>(opt.m_max) + 1);
    for (int m = 0; m <= opt.m_max; ++m) m_list[static_cast<size_t>(m)] = m;

    std::vector<summlab::KernelBoundReport> reports;
    reports.push_back(summlab::lemma8_check(opt.beta, m_list, t_grid));
    if (!opt.matrix.empty()) {
        const auto n_list = summlab::parse_n_list(opt.n_spec);
        const auto A = matrix_from_spec(opt.matrix, n_list.back());
        reports.push_back(summlab::lemma9_rest_check(A, opt.beta, n_list, t_grid));
        reports.push_back(summlab::lemma9_head_check(A, opt.beta, n_list, t_grid));
    }

    if (opt.format == "csv") {
        std::string out = "check,index,constant\n";
        for (const auto& r : reports)
            for (const auto& [index, constant] : r.per_index) {
                char line[128];
                std::snprintf(line, sizeof(line), "%s,%d,%.12g\n", r.check_id.c_str(), index,
                              constant);
                out += line;
            }
        write_text_or_throw(out, opt.output);
    } else {
        auto doc = nlohmann::ordered_json::array();
        for (const auto& r : reports)
            doc.push_back(nlohmann::ordered_json::parse(summlab::to_json_string(r)));
        write_text_or_throw(doc.dump(2) + "\n", opt.output);
    }
    return 0;
}

int run_theorem(const Options& opt) {
    const auto n_list = summlab::parse_n_list(opt.n_spec);
    const auto id = summlab::theorem_from_name(opt.theorem);
    const auto A = matrix_from_spec(opt.matrix, n_list.back());
    const auto exemplar = pick_function(opt, exemplar_degree_for(n_list));
    const auto H = summlab::MediateFunction::canonical(exemplar.profile);

    // Hypotheses are cheap relative to the sweep; gate before running.
    const auto checks = summlab::verify_hypotheses(id, A, opt.beta, exemplar.profile, H);
    bool verified = true;
    for (const auto& check : checks) verified = verified && check.ok;
    if (!verified) {
        std::cerr << "warning: hypotheses unverified for " << opt.theorem << " on " << A.label();
        for (const auto& check : checks)
            if (!check.ok) std::cerr << " [" << check.name << "]";
        std::cerr << "\n";
        if (opt.strict) return 4;
    }

    const auto report = summlab::run_experiment(id, A, exemplar.f, exemplar.series,
                                                exemplar.profile, H, n_list, opt.grid, opt.beta);
    summlab::write_report(report, summlab::format_from_name(opt.format), opt.output);
    return 0;
}

int run_rate_table(const Options& opt) {
    const auto n_list = summlab::parse_n_list(opt.n_spec);
    const auto weights = weights_from_spec(opt.weights, n_list.back() + 1);
    const auto exemplar = pick_function(opt, exemplar_degree_for(n_list));

    const auto A = summlab::SummabilityMatrix::riesz(weights, n_list.back());
    const auto stochastic = summlab::check_row_stochastic(A, 1e-9);
    const auto head = summlab::beta_head_constant(A, opt.beta);
    if (!stochastic.holds_uniformly || !head.holds_uniformly || head.degenerate) {
        std::cerr << "warning: hypotheses unverified for rate-table on " << A.label() << "\n";
        if (opt.strict) return 4;
    }

    const auto report = summlab::corollary43_table(weights, opt.alpha, exemplar.f,
                                                   exemplar.series, n_list, opt.grid, opt.beta);
    summlab::write_report(report, summlab::format_from_name(opt.format), opt.output);
    return 0;
}

int run_list_exemplars(const Options& opt) {
    std::string out = "name,degree,profile\n";
    for (const auto& e : summlab::exemplar_functions()) {
        out += e.name;
        out += ',';
        out += std::to_string(e.series.degree());
        out += ',';
        out += e.profile.label();
        out += '\n';
    }
    write_text_or_throw(out, opt.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    if (const char* threads = std::getenv("THREADS")) {
        const int count = std::atoi(threads);
        if (count > 0) omp_set_num_threads(count);
    }
#endif

    CLI::App app{"numerical laboratory for matrix means of Fourier series"};
    app.require_subcommand(1);
    app.set_config("--config");
    app.allow_config_extras(false);

    Options opt;

    auto add_output_flags = [&opt](CLI::App* cmd) {
        cmd->configurable(true);  // accept a [subcommand] section in --config files
        cmd->add_option("--output,-o", opt.output, "output path, - for stdout");
        cmd->add_option("--format", opt.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };
    const auto beta_check = CLI::Validator(
        [](std::string& value) {
            if (std::stod(value) < 0.0) return std::string("beta must be >= 0");
            return std::string();
        },
        "BETA>=0");
    const auto alpha_check = CLI::Validator(
        [](std::string& value) {
            const double a = std::stod(value);
            if (!(a > 0.0) || a > 1.0) return std::string("alpha must be in (0, 1]");
            return std::string();
        },
        "ALPHA");

    auto* check = app.add_subcommand("check-matrix", "row-sequence condition checks");
    check->add_option("--matrix", opt.matrix, "cesaro | norlund:<w> | riesz:<w> | file:<path>");
    check->add_option("--beta", opt.beta, "weight exponent")->check(beta_check);
    check->add_option("--n", opt.n_spec, "max row (largest value of the list)");
    check->add_option("--tol", opt.tol, "row-stochasticity tolerance");
    add_output_flags(check);

    auto* bounds = app.add_subcommand("kernel-bounds", "Dirichlet-sum and kernel bound scans");
    bounds->add_option("--matrix", opt.matrix, "matrix spec for the kernel scans");
    bounds->add_option("--beta", opt.beta, "weight exponent")->check(beta_check);
    bounds->add_option("--n", opt.n_spec, "rows for the kernel scans");
    bounds->add_option("--m-max", opt.m_max, "largest partial-sum order")->check(CLI::Range(0, 65536));
    bounds->add_option("--t-grid", opt.t_grid, "t samples on (0, pi]")->check(CLI::Range(16, 1 << 20));
    add_output_flags(bounds);

    auto* theorem = app.add_subcommand("theorem", "sup-error vs theorem bound over n");
    theorem->add_option("--id", opt.theorem, "T10 | T11a | T11b | T12 | T13");
    theorem->add_option("--matrix", opt.matrix, "matrix spec");
    theorem->add_option("--function", opt.function, "exemplar name (default: Lip(alpha) pick)");
    theorem->add_option("--alpha", opt.alpha, "Lip exponent")->check(alpha_check);
    theorem->add_option("--beta", opt.beta, "weight exponent")->check(beta_check);
    theorem->add_option("--n", opt.n_spec, "n list, e.g. 16..1024x2 or 9,99,999");
    theorem->add_option("--grid", opt.grid, "sup-norm grid size")->check(CLI::Range(256, 1 << 22));
    theorem->add_flag("--strict", opt.strict, "exit 4 if hypotheses fail");
    add_output_flags(theorem);

    auto* rate = app.add_subcommand("rate-table", "Riesz Lip(alpha) rate table");
    rate->add_option("--weights", opt.weights, "ones | linear | geometric:<r> | file:<path>");
    rate->add_option("--alpha", opt.alpha, "Lip exponent")->check(alpha_check);
    rate->add_option("--beta", opt.beta, "weight exponent")->check(beta_check);
    rate->add_option("--n", opt.n_spec, "n list");
    rate->add_option("--grid", opt.grid, "sup-norm grid size")->check(CLI::Range(256, 1 << 22));
    rate->add_flag("--strict", opt.strict, "exit 4 if hypotheses fail");
    add_output_flags(rate);

    auto* list = app.add_subcommand("list-exemplars", "built-in test functions");
    add_output_flags(list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed()) return run_check_matrix(opt);
        if (bounds->parsed()) return run_kernel_bounds(opt);
        if (theorem->parsed()) return run_theorem(opt);
        if (rate->parsed()) return run_rate_table(opt);
        if (list->parsed()) return run_list_exemplars(opt);
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
