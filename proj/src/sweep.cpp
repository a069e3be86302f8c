#include "regraph/sweep.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>
#include <utility>

#include "regraph/format.hpp"

namespace regraph {

namespace {

void validate_spec(const SweepSpec& spec) {
    if (spec.n < 1) throw DomainError("dimension n must be >= 1");
    if (spec.steps < 2) throw DomainError("sweep requires steps >= 2");
    const double dirichlet = 1.0 / spec.n;
    if (!(spec.lambda_min < spec.lambda_max)) {
        throw DomainError("sweep requires lambda_min < lambda_max");
    }
    if (spec.lambda_min < dirichlet * (1.0 - 1e-15)) {
        throw DomainError("sweep requires lambda_min >= 1/n");
    }
}

double grid_point(const SweepSpec& spec, int i) {
    if (i == 0) return spec.lambda_min;
    if (i == spec.steps - 1) return spec.lambda_max;
    return spec.lambda_min +
           (spec.lambda_max - spec.lambda_min) * i / (spec.steps - 1);
}

} // namespace

std::vector<SweepRow> sweep_spectra(const SweepSpec& spec, Execution exec) {
    validate_spec(spec);
    std::vector<SweepRow> rows(static_cast<std::size_t>(spec.steps));
    const bool parallel = exec == Execution::parallel;
    std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(static) if (parallel)
    for (int i = 0; i < spec.steps; ++i) {
        try {
            const double lambda = grid_point(spec, i);
            LambdaSpectrum s = lambda_spectrum({spec.n, lambda});
            rows[static_cast<std::size_t>(i)] = {lambda, std::move(s.values)};
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }

    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::string sweep_csv(const SweepSpec& spec, Execution exec) {
    const std::vector<SweepRow> rows = sweep_spectra(spec, exec);
    std::string out = "lambda";
    for (int j = 1; j <= spec.n + 2; ++j) {
        out += ",l" + std::to_string(j);
    }
    out += "\n";
    for (const SweepRow& row : rows) {
        out += format_real(row.lambda);
        for (double v : row.values) {
            out += ",";
            out += format_real(v);
        }
        out += "\n";
    }
    return out;
}

} // namespace regraph
