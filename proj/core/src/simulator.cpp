#include "crqa/simulator.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace crqa {
namespace {

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(name) + " must be a probability in [0, 1]");
}

void check_params(const DyadParams& p) {
    check_probability(p.p_c, "p_c");
    check_probability(p.p_s, "p_s");
    check_probability(p.p_cc, "p_cc");
    check_probability(p.p_ss, "p_ss");
    check_probability(p.p_sc, "p_sc");
    if (p.length < 1) throw std::invalid_argument("length must be >= 1");
}

}  // namespace

DyadParams low_condition_params() {
    DyadParams p;
    p.p_c = 0.05;
    p.p_s = 0.05;
    p.p_cc = 0.2;
    p.p_ss = 0.2;
    p.p_sc = 0.25;
    return p;
}

DyadParams high_condition_params() {
    DyadParams p = low_condition_params();
    p.p_c = 0.25;
    return p;
}

DyadParams benchmark_params() {
    DyadParams p;
    p.p_c = 0.08;
    p.p_s = 0.05;
    p.p_cc = 0.05;
    p.p_ss = 0.05;
    p.p_sc = 0.33;
    return p;
}

std::pair<TimeSeries, TimeSeries> simulate_dyad(const DyadParams& params) {
    check_params(params);
    std::mt19937_64 rng(params.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto draw = [&rng, &unif] { return unif(rng); };

    TimeSeries c{{}, SeriesKind::categorical};
    TimeSeries s{{}, SeriesKind::categorical};
    c.values.reserve(static_cast<std::size_t>(params.length));
    s.values.reserve(static_cast<std::size_t>(params.length));

    // Agent variables hold the previous round's output while the current
    // round is decided; the first round sees zeros.  Every comparison
    // consumes its own fresh draw, also when the paired state test fails.
    int prev_c = 0, prev_s = 0;
    for (int t = 0; t < params.length; ++t) {
        int cur_c;
        if (draw() < params.p_c)
            cur_c = 1;
        else if (draw() < params.p_cc && prev_c == 1)
            cur_c = 1;
        else
            cur_c = 0;

        int cur_s;
        if (draw() < params.p_sc && prev_c == 1)
            cur_s = 1;
        else if (draw() < params.p_s)
            cur_s = 1;
        else if (draw() < params.p_ss && prev_s == 1)
            cur_s = 1;
        else
            cur_s = 0;

        c.values.push_back(static_cast<double>(cur_c));
        s.values.push_back(static_cast<double>(cur_s));
        prev_c = cur_c;
        prev_s = cur_s;
    }
    return {std::move(c), std::move(s)};
}

std::vector<SimulatedPair> simulate_benchmark_set(const std::vector<int>& sizes,
                                                  int iterations, DyadParams base) {
    if (sizes.empty()) throw std::invalid_argument("no sizes given");
    if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");

    std::vector<SimulatedPair> out;
    out.reserve(sizes.size() * static_cast<std::size_t>(iterations));
    std::uint64_t run = 0;
    for (int size : sizes) {
        if (size < 1) throw std::invalid_argument("sizes must be >= 1");
        for (int it = 0; it < iterations; ++it, ++run) {
            DyadParams p = base;
            p.length = size;
            p.seed = base.seed + run;  // per-run seed: base + run index
            auto [c, s] = simulate_dyad(p);
            SimulatedPair pair;
            pair.size = size;
            pair.iteration = it;
            pair.seed = p.seed;
            pair.c = std::move(c);
            pair.s = std::move(s);
            out.push_back(std::move(pair));
        }
    }
    return out;
}

}  // namespace crqa
