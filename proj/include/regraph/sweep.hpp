#pragma once

#include <string>
#include <vector>

#include "regraph/regular_graph.hpp"

namespace regraph {

/// A uniform lambda grid for regenerating the spectrum curves over an
/// interval. `steps` is the number of grid points (both ends included).
struct SweepSpec {
    int n;
    double lambda_min;
    double lambda_max;
    int steps;
    std::string output_path;  ///< "-" for stdout
};

enum class Execution { serial, parallel };

/// One grid row: the parameter and its full spectrum.
struct SweepRow {
    double lambda;
    std::vector<double> values;
};

/// Evaluates the spectrum on the grid. The parallel path fans the grid
/// out across OpenMP threads; rows come back in grid order either way
/// and are bit-identical between the two paths.
std::vector<SweepRow> sweep_spectra(const SweepSpec& spec,
                                    Execution exec = Execution::parallel);

/// CSV rendering: header `lambda,l1,...,l{n+2}`, 12 significant digits,
/// '\n' line endings. Byte-identical across repeated calls.
std::string sweep_csv(const SweepSpec& spec,
                      Execution exec = Execution::parallel);

} // namespace regraph
