#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "crqa/measures.hpp"
#include "crqa/param_opt.hpp"
#include "crqa/render.hpp"
#include "crqa/simulator.hpp"

namespace crqa {

/// Raised for invocations that are structurally wrong (missing inputs,
/// contradictory flags); the CLI maps it to exit code 1, any other
/// failure to exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Everything one CLI invocation needs, already parsed.  Tests drive
/// dispatch() with this struct directly; the binary fills it from argv.
struct RunConfig {
    enum class Command { crqa, profile, window, ct, phi, optimize, simulate, bench };

    Command command = Command::crqa;

    // Inputs.
    std::string input1;
    std::string input2;
    int column1 = 1;
    int column2 = 1;
    SeriesKind datatype = SeriesKind::categorical;
    bool header = false;
    bool split_nonevents = false;  // recode each series' 0 to a fresh code
    long long thrshd = 0;

    // Recurrence pipeline.
    EmbeddingParams embedding;
    int mindiagline = 2;
    int minvertline = 2;
    bool whiteline = false;
    bool recpt = false;      // input1 is a precomputed plot
    bool windowed = false;   // full measure bundle per sliding window
    int windowsize = 0;
    int step = 0;

    // Profiles.
    int ws = 10;
    int lagwidth = 0;
    double radius = 0.0;

    // Categorical.
    int lag_min = 0;
    int lag_max = 0;
    int phi_k = 1;
    int table_lag = 0;
    bool dump_table = false;
    std::string table_out;

    // Parameter search.
    OptimizeConfig opt;

    // Simulation / benchmark.
    DyadParams dyad;
    std::string preset;  // "", "low", "high", "bench"
    int runs = 1;
    std::vector<int> sizes;
    int iterations = 20;
    bool compare = false;

    // Outputs.
    std::string out;         // JSON report path; empty = stdout
    std::string csv;         // optional CSV artifact
    std::string plot_path;   // optional rendered plot
    PlotFormat plot_format = PlotFormat::pgm;
    int plot_budget = 1024;
    std::string out_prefix;  // per-run CSVs of multi-run simulations
    std::string timings;     // gnuplot timing file of bench
};

/// Executes one invocation, writing the JSON report to `report_sink`
/// (used when cfg.out is empty) and any file artifacts to their
/// configured paths.  Returns 0; failures are thrown.
int dispatch(const RunConfig& cfg, std::ostream& report_sink);

}  // namespace crqa
