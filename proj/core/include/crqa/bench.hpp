#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crqa/measures.hpp"
#include "crqa/simulator.hpp"

namespace crqa {

enum class Engine { optimized, oracle };

/// One timed pipeline invocation.  elapsed_seconds covers only the
/// recurrence computation, not simulation or serialization.
struct BenchRecord {
    int size = 0;
    int iteration = 0;
    Engine engine = Engine::optimized;
    double elapsed_seconds = 0.0;
    CrqaMeasures measures;
};

struct BenchOptions {
    std::vector<int> sizes;       // default 250, 500, ..., 2750 (11 sizes)
    int iterations = 20;
    DyadParams params;            // defaults to benchmark_params()
    CrqaParams crqa;              // pipeline settings applied to every pair
    bool compare = false;         // also run the reference engine per pair

    BenchOptions();
};

std::vector<BenchRecord> run_benchmark(const BenchOptions& opts);

/// Agreement of one measure between the two engines across all runs.
struct MeasureAgreement {
    std::string name;
    double mean_abs_diff = 0.0;
    double sd_abs_diff = 0.0;
    double correlation = 0.0;
    bool constant = false;  // one of the two columns had zero variance
};

struct BenchSummary {
    std::vector<MeasureAgreement> consistency;             // empty without compare
    std::vector<std::pair<int, double>> mean_elapsed_by_size;  // optimized engine
};

BenchSummary summarize(const std::vector<BenchRecord>& records);

}  // namespace crqa
