#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "regraph/bounds.hpp"
#include "regraph/format.hpp"
#include "regraph/regular_graph.hpp"
#include "regraph/sweep.hpp"
#include "regraph/thresholds.hpp"
#include "regraph/verify.hpp"

namespace {

using namespace regraph;

bool json_format(const std::string& format) {
    if (format == "json") return true;
    if (format == "table") return false;
    throw DomainError("unknown format '" + format + "' (use table or json)");
}

/// Accepts plain decimals plus the literals inf/+inf/infinity.
double parse_extended_real(const std::string& text, const char* what) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw DomainError(std::string(what) + " is not a number: '" + text + "'");
    }
    return value;
}

void print_spectrum(int n, const std::string& lambda_text, bool as_json) {
    const double lambda = parse_extended_real(lambda_text, "lambda");
    const LambdaSpectrum spec = lambda_spectrum({n, lambda});
    if (as_json) {
        std::cout << "{\"n\":" << n << ",\"lambda\":" << json_number(lambda)
                  << ",\"values\":" << json_array(spec.values)
                  << ",\"quotient\":" << json_number(spec.quotient) << "}\n";
    } else {
        std::cout << "lambda_{" << n << ",j}, j = 1.." << n + 2 << ", at lambda = "
                  << format_real(lambda) << ":\n"
                  << "  " << format_tuple(spec.values) << "\n"
                  << "quotient: " << format_real(spec.quotient) << "\n";
    }
}

void print_dual(int n, const std::string& w_text, bool as_json) {
    const double w = parse_extended_real(w_text, "w");
    const DualSpectrum spec = dual_spectrum(n, w);
    if (as_json) {
        std::cout << "{\"n\":" << n << ",\"w\":" << json_number(w)
                  << ",\"values\":" << json_array(spec.values)
                  << ",\"quotient\":" << json_number(spec.quotient) << "}\n";
    } else {
        std::cout << "w_{" << n << ",j}, j = 1.." << n + 2 << ", at w = "
                  << format_real(w) << ":\n"
                  << "  " << format_tuple(spec.values) << "\n"
                  << "quotient: " << format_real(spec.quotient) << "\n";
    }
}

void print_psi(int n, const std::string& lambda_text, bool as_json) {
    const double lambda = parse_extended_real(lambda_text, "lambda");
    const PsiProfile profile = psi_profile({n, lambda});
    if (as_json) {
        std::cout << "{\"n\":" << n << ",\"lambda\":" << json_number(lambda)
                  << ",\"psi_lower\":" << json_array(profile.psi_lower)
                  << ",\"psi_upper\":" << json_array(profile.psi_upper) << "}\n";
    } else {
        std::cout << "psi_lower: " << format_tuple(profile.psi_lower) << "\n"
                  << "psi_upper: " << format_tuple(profile.psi_upper) << "\n";
    }
}

void print_threshold(int n, int j, bool as_json) {
    const ThresholdResult result = classify(n, j);
    if (as_json) {
        std::cout << "{\"n\":" << n << ",\"j\":" << j << ",\"classification\":\""
                  << to_string(result.classification) << "\"";
        if (result.tilde_lambda) {
            std::cout << ",\"tilde_lambda\":" << json_number(*result.tilde_lambda)
                      << ",\"theta_root\":" << json_number(*result.theta_root);
        }
        std::cout << "}\n";
    } else {
        std::cout << "lambda_{" << n << "," << j << "} - 1/" << n << ": "
                  << to_string(result.classification) << "\n";
        if (result.tilde_lambda) {
            std::cout << "tilde_lambda: " << format_real(*result.tilde_lambda)
                      << "\ntheta_root: " << format_real(*result.theta_root)
                      << "\n";
        }
    }
}

void print_schmidt(int n, int T, bool as_json) {
    const SchmidtInterval interval = schmidt_interval(n, T);
    if (as_json) {
        std::cout << "{\"n\":" << n << ",\"T\":" << T
                  << ",\"lo\":" << json_number(interval.lo)
                  << ",\"hi\":" << json_number(interval.hi) << "}\n";
    } else {
        std::cout << "Schmidt property for (n=" << n << ", T=" << T
                  << ") certified on (" << format_real(interval.lo) << ", "
                  << format_real(interval.hi) << ")\n";
    }
}

void print_bounds(int n, const std::optional<std::string>& w_text, bool as_json) {
    std::optional<double> w;
    if (w_text) w = parse_extended_real(*w_text, "w");
    const BoundReport report = bound_report(n, w);
    if (as_json) {
        std::cout << "{\"n\":" << n;
        if (report.w) std::cout << ",\"w\":" << json_number(*report.w);
        std::cout << ",\"unconditional\":" << json_number(report.unconditional)
                  << ",\"conditional_star\":" << json_number(report.conditional_star)
                  << ",\"conditional_w\":" << json_number(report.conditional_w)
                  << ",\"asymptotic_gap\":" << json_number(report.asymptotic_gap)
                  << ",\"caveat\":" << (report.caveat ? "true" : "false") << "}\n";
    } else {
        if (report.w) {
            std::cout << "at w = " << format_real(*report.w) << ":\n";
        }
        std::cout << "unconditional (proved):      "
                  << format_real(report.unconditional) << "\n"
                  << "conditional for hw*_n:       "
                  << format_real(report.conditional_star) << "\n"
                  << "conditional for hw_n:        "
                  << format_real(report.conditional_w) << "\n"
                  << "asymptotic gap 2n - bound:   "
                  << format_real(report.asymptotic_gap) << "\n";
        if (report.caveat) {
            std::cout << "caveat: the hw*_n bound transfers to hw_n only if "
                         "w_{n-2} < w_{n-1} = w_n fails\n";
        }
    }
}

void print_constants(bool as_json) {
    const GraphConstants constants = tau_delta();
    if (as_json) {
        std::cout << "{\"tau\":" << json_number(constants.tau)
                  << ",\"delta\":" << json_number(constants.delta)
                  << ",\"theta\":" << json_number(constants.theta) << "}\n";
    } else {
        std::cout << "tau   = " << format_real(constants.tau) << "\n"
                  << "delta = " << format_real(constants.delta) << "\n"
                  << "theta = " << format_real(constants.theta) << "\n";
    }
}

void print_relations(int n, const std::string& lambda_text, bool as_json) {
    const double lambda = parse_extended_real(lambda_text, "lambda");
    const RelationReport report = relation_report({n, lambda});
    if (as_json) {
        std::cout << "{\"n\":" << n << ",\"lambda\":" << json_number(lambda)
                  << ",\"geometric_chain_residual\":"
                  << json_number(report.geometric_chain_residual)
                  << ",\"linear_form_gap\":" << json_number(report.linear_form_gap)
                  << ",\"simultaneous_gap\":" << json_number(report.simultaneous_gap)
                  << ",\"transference_upper_gap\":"
                  << json_number(report.transference_upper_gap)
                  << ",\"transference_lower_gap\":"
                  << json_number(report.transference_lower_gap);
        if (report.laurent_gap) {
            std::cout << ",\"laurent_gap\":" << json_number(*report.laurent_gap);
        }
        std::cout << "}\n";
    } else {
        std::cout << "geometric chain residual: "
                  << format_real(report.geometric_chain_residual) << "\n"
                  << "linear form gap:          "
                  << format_real(report.linear_form_gap) << "\n"
                  << "simultaneous gap:         "
                  << format_real(report.simultaneous_gap) << "\n"
                  << "transference upper gap:   "
                  << format_real(report.transference_upper_gap) << "\n"
                  << "transference lower gap:   "
                  << format_real(report.transference_lower_gap) << "\n";
        if (report.laurent_gap) {
            std::cout << "Laurent gap (n=2):        "
                      << format_real(*report.laurent_gap) << "\n";
        }
    }
}

void run_sweep(const SweepSpec& spec, Execution exec) {
    const std::string csv = sweep_csv(spec, exec);
    if (spec.output_path == "-") {
        std::cout << csv;
        return;
    }
    std::ofstream out(spec.output_path, std::ios::binary);
    if (!out) {
        throw Error("cannot open output file '" + spec.output_path + "'");
    }
    out << csv;
    if (!out) {
        throw Error("failed writing '" + spec.output_path + "'");
    }
}

int run_verify(bool quick) {
    const std::vector<CheckResult> results = run_checks(quick);
    bool all_pass = true;
    for (const CheckResult& result : results) {
        std::cout << (result.pass ? "ok   " : "FAIL ") << result.name << " — "
                  << result.detail << "\n";
        all_pass = all_pass && result.pass;
    }
    std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exponent spectra, thresholds and uniform-approximation "
                 "bounds of regular graphs"};
    app.require_subcommand(1);

    int n = 2;
    int j = 1;
    int T = 1;
    std::string lambda_text = "1";
    std::string w_text;
    std::optional<std::string> bounds_w;
    std::string format = "table";
    bool quick = false;
    SweepSpec sweep_spec{2, 0.5, 4.0, 8, "-"};
    bool serial = false;

    auto* spectrum_cmd = app.add_subcommand(
        "spectrum", "Exponents lambda_{n,1..n+2} of one regular graph");
    spectrum_cmd->add_option("--n", n, "dimension")->required();
    spectrum_cmd->add_option("--lambda", lambda_text, "parameter in [1/n, inf]")
        ->required();
    spectrum_cmd->add_option("--format", format, "table or json");

    auto* dual_cmd = app.add_subcommand(
        "dual", "Linear-form exponents w_{n,1..n+2} for a prescribed w");
    dual_cmd->add_option("--n", n, "dimension")->required();
    dual_cmd->add_option("--w", w_text, "parameter in [n, inf]")->required();
    dual_cmd->add_option("--format", format, "table or json");

    auto* psi_cmd = app.add_subcommand(
        "psi", "liminf/limsup parametric exponents psi for one graph");
    psi_cmd->add_option("--n", n, "dimension")->required();
    psi_cmd->add_option("--lambda", lambda_text, "finite parameter >= 1/n")
        ->required();
    psi_cmd->add_option("--format", format, "table or json");

    auto* threshold_cmd = app.add_subcommand(
        "threshold", "Sign classification of lambda_{n,j} - 1/n");
    threshold_cmd->add_option("--n", n, "dimension")->required();
    threshold_cmd->add_option("--j", j, "index in [1, n+2]")->required();
    threshold_cmd->add_option("--format", format, "table or json");

    auto* schmidt_cmd = app.add_subcommand(
        "schmidt-interval", "Parameter interval certifying Schmidt's property");
    schmidt_cmd->add_option("--n", n, "dimension >= 2")->required();
    schmidt_cmd->add_option("--T", T, "index in [1, floor(n/2)]")->required();
    schmidt_cmd->add_option("--format", format, "table or json");

    auto* bounds_cmd = app.add_subcommand(
        "bounds", "Upper bounds for the uniform exponents at dimension n");
    bounds_cmd->add_option("--n", n, "dimension >= 2")->required();
    bounds_cmd->add_option("--w", bounds_w, "optional prescribed w >= n");
    bounds_cmd->add_option("--format", format, "table or json");

    auto* constants_cmd =
        app.add_subcommand("constants", "The constants tau, delta and theta");
    constants_cmd->add_option("--format", format, "table or json");

    auto* relations_cmd = app.add_subcommand(
        "relations", "Exponent identities and inequalities on one graph");
    relations_cmd->add_option("--n", n, "dimension >= 2")->required();
    relations_cmd->add_option("--lambda", lambda_text, "finite parameter > 1/n")
        ->required();
    relations_cmd->add_option("--format", format, "table or json");

    auto* sweep_cmd = app.add_subcommand(
        "sweep", "CSV spectrum sweep over a lambda interval");
    sweep_cmd->add_option("--n", sweep_spec.n, "dimension")->required();
    sweep_cmd->add_option("--lambda-min", sweep_spec.lambda_min, "grid start")
        ->required();
    sweep_cmd->add_option("--lambda-max", sweep_spec.lambda_max, "grid end")
        ->required();
    sweep_cmd->add_option("--steps", sweep_spec.steps, "grid points (>= 2)")
        ->required();
    sweep_cmd->add_option("--output", sweep_spec.output_path,
                          "output file, '-' for stdout");
    sweep_cmd->add_flag("--serial", serial, "use the serial reference path");

    auto* verify_cmd = app.add_subcommand(
        "verify", "Run the invariant suite; nonzero exit on any failure");
    verify_cmd->add_flag("--quick", quick, "thin every grid about 10x");

    CLI11_PARSE(app, argc, argv);

    try {
        const bool as_json = json_format(format);
        if (spectrum_cmd->parsed()) {
            print_spectrum(n, lambda_text, as_json);
        } else if (dual_cmd->parsed()) {
            print_dual(n, w_text, as_json);
        } else if (psi_cmd->parsed()) {
            print_psi(n, lambda_text, as_json);
        } else if (threshold_cmd->parsed()) {
            print_threshold(n, j, as_json);
        } else if (schmidt_cmd->parsed()) {
            print_schmidt(n, T, as_json);
        } else if (bounds_cmd->parsed()) {
            print_bounds(n, bounds_w, as_json);
        } else if (constants_cmd->parsed()) {
            print_constants(as_json);
        } else if (relations_cmd->parsed()) {
            print_relations(n, lambda_text, as_json);
        } else if (sweep_cmd->parsed()) {
            run_sweep(sweep_spec, serial ? Execution::serial : Execution::parallel);
        } else if (verify_cmd->parsed()) {
            return run_verify(quick);
        }
    } catch (const DomainError& e) {
        std::cerr << e.token() << ": " << e.what() << "\n";
        return 2;
    } catch (const NotRepresentable& e) {
        std::cerr << e.token() << ": " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << e.token() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
