#include "crqa/bench.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "crqa/oracle.hpp"

namespace crqa {
namespace {

using Clock = std::chrono::steady_clock;

double measure_by_index(const CrqaMeasures& m, int idx) {
    switch (idx) {
        case 0: return m.rr;
        case 1: return m.det;
        case 2: return static_cast<double>(m.nrline);
        case 3: return static_cast<double>(m.maxline);
        case 4: return m.meanline;
        case 5: return m.entropy;
        case 6: return m.rel_entropy;
        case 7: return m.lam;
        default: return idx == 8 ? m.tt : 0.0;
    }
}

const char* kMeasureNames[9] = {"RR", "DET", "NRLINE", "Lmax", "L", "ENTR", "relENTR", "LAM", "TT"};

}  // namespace

BenchOptions::BenchOptions() {
    // Eleven sizes, 250-step ladder below 3000: with the default 20
    // iterations this is the stock 220-run protocol.
    for (int s = 250; s < 3000; s += 250) sizes.push_back(s);
    params = benchmark_params();
    crqa.embedding.delay = 1;
    crqa.embedding.embed = 1;
    crqa.embedding.radius = 0.0;  // binary series: recurrence = identical symbols
}

std::vector<BenchRecord> run_benchmark(const BenchOptions& opts) {
    auto pairs = simulate_benchmark_set(opts.sizes, opts.iterations, opts.params);
    std::vector<BenchRecord> records;
    records.reserve(pairs.size() * (opts.compare ? 2 : 1));

    // One untimed warm-up so the first record does not pay for paging.
    (void)crqa(pairs.front().c, pairs.front().s, opts.crqa);

    for (const auto& pair : pairs) {
        BenchRecord rec;
        rec.size = pair.size;
        rec.iteration = pair.iteration;
        rec.engine = Engine::optimized;
        auto t0 = Clock::now();
        rec.measures = crqa(pair.c, pair.s, opts.crqa).measures;
        auto t1 = Clock::now();
        rec.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
        if (rec.elapsed_seconds <= 0.0) rec.elapsed_seconds = 1e-9;
        records.push_back(rec);

        if (opts.compare) {
            BenchRecord ref;
            ref.size = pair.size;
            ref.iteration = pair.iteration;
            ref.engine = Engine::oracle;
            auto r0 = Clock::now();
            ref.measures = oracle::crqa_measures(pair.c, pair.s, opts.crqa);
            auto r1 = Clock::now();
            ref.elapsed_seconds = std::chrono::duration<double>(r1 - r0).count();
            if (ref.elapsed_seconds <= 0.0) ref.elapsed_seconds = 1e-9;
            records.push_back(ref);
        }
    }
    return records;
}

BenchSummary summarize(const std::vector<BenchRecord>& records) {
    BenchSummary summary;

    // Per-size mean elapsed of the fast engine, sizes ascending.
    std::map<int, std::pair<double, long long>> elapsed;
    for (const auto& rec : records) {
        if (rec.engine != Engine::optimized) continue;
        auto& [sum, n] = elapsed[rec.size];
        sum += rec.elapsed_seconds;
        ++n;
    }
    for (const auto& [size, agg] : elapsed)
        summary.mean_elapsed_by_size.emplace_back(size, agg.first / static_cast<double>(agg.second));

    // Engine agreement, matched run by run.
    std::map<std::pair<int, int>, std::pair<const BenchRecord*, const BenchRecord*>> matched;
    for (const auto& rec : records) {
        auto& slot = matched[{rec.size, rec.iteration}];
        (rec.engine == Engine::optimized ? slot.first : slot.second) = &rec;
    }
    std::vector<std::pair<const BenchRecord*, const BenchRecord*>> pairs;
    for (const auto& [key, slot] : matched) {
        (void)key;
        if (slot.first && slot.second) pairs.emplace_back(slot.first, slot.second);
    }
    if (pairs.empty()) return summary;

    long long n = static_cast<long long>(pairs.size());
    for (int idx = 0; idx < 9; ++idx) {
        MeasureAgreement agg;
        agg.name = kMeasureNames[idx];

        double sum = 0.0;
        for (const auto& [opt, orc] : pairs)
            sum += std::fabs(measure_by_index(opt->measures, idx) -
                             measure_by_index(orc->measures, idx));
        agg.mean_abs_diff = sum / static_cast<double>(n);

        double ss = 0.0;
        for (const auto& [opt, orc] : pairs) {
            double d = std::fabs(measure_by_index(opt->measures, idx) -
                                 measure_by_index(orc->measures, idx)) -
                       agg.mean_abs_diff;
            ss += d * d;
        }
        agg.sd_abs_diff = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;

        double mo = 0.0, mr = 0.0;
        for (const auto& [opt, orc] : pairs) {
            mo += measure_by_index(opt->measures, idx);
            mr += measure_by_index(orc->measures, idx);
        }
        mo /= static_cast<double>(n);
        mr /= static_cast<double>(n);
        double sxy = 0.0, sxx = 0.0, syy = 0.0;
        bool identical = true;
        for (const auto& [opt, orc] : pairs) {
            double a = measure_by_index(opt->measures, idx);
            double b = measure_by_index(orc->measures, idx);
            if (a != b) identical = false;
            sxy += (a - mo) * (b - mr);
            sxx += (a - mo) * (a - mo);
            syy += (b - mr) * (b - mr);
        }
        if (sxx == 0.0 || syy == 0.0) {
            agg.constant = true;
            agg.correlation = identical ? 1.0 : 0.0;
        } else {
            agg.correlation = sxy / std::sqrt(sxx * syy);
        }
        summary.consistency.push_back(std::move(agg));
    }
    return summary;
}

}  // namespace crqa
