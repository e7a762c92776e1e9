#include "crqa/runner.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "crqa/bench.hpp"
#include "crqa/categorical.hpp"
#include "crqa/io.hpp"
#include "crqa/report.hpp"

namespace crqa {
namespace {

const char* kind_name(SeriesKind k) {
    return k == SeriesKind::categorical ? "categorical" : "continuous";
}

const char* normalize_name(NormalizeMode m) {
    switch (m) {
        case NormalizeMode::none: return "none";
        case NormalizeMode::unit_interval: return "unit";
        default: return "zscore";
    }
}

const char* rescale_name(RescaleMode m) {
    switch (m) {
        case RescaleMode::none: return "none";
        case RescaleMode::mean_distance: return "mean";
        default: return "max";
    }
}

void echo_inputs(JsonWriter& w, const RunConfig& cfg) {
    w.key("input1").value(cfg.input1);
    w.key("input2").value(cfg.input2);
    w.key("column1").value(cfg.column1);
    w.key("column2").value(cfg.column2);
    w.key("datatype").value(kind_name(cfg.datatype));
    w.key("header").value(cfg.header);
    w.key("recode_nonevents").value(cfg.split_nonevents);
    w.key("thrshd").value(cfg.thrshd);
}

void echo_embedding(JsonWriter& w, const EmbeddingParams& e) {
    w.key("delay").value(e.delay);
    w.key("embed").value(e.embed);
    w.key("rescale").value(rescale_name(e.rescale));
    w.key("normalize").value(normalize_name(e.normalize));
    w.key("radius").value(e.radius);
}

void echo_dyad(JsonWriter& w, const DyadParams& p) {
    w.key("p_c").value(p.p_c);
    w.key("p_s").value(p.p_s);
    w.key("p_cc").value(p.p_cc);
    w.key("p_ss").value(p.p_ss);
    w.key("p_sc").value(p.p_sc);
    w.key("length").value(p.length);
    w.key("seed").value(static_cast<long long>(p.seed));
}

struct LoadedPair {
    TimeSeries a;
    TimeSeries b;
    CodeTable table;
};

LoadedPair load_pair(const RunConfig& cfg) {
    if (cfg.input1.empty() || cfg.input2.empty())
        throw UsageError("two input files are required");
    LoadedPair out;
    out.a = parse_input(cfg.input1, cfg.column1, cfg.datatype, cfg.header, &out.table);
    out.b = parse_input(cfg.input2, cfg.column2, cfg.datatype, cfg.header, &out.table);
    if (cfg.split_nonevents) {
        if (cfg.datatype != SeriesKind::categorical)
            throw UsageError("--recode-nonevents requires categorical data");
        auto [ra, rb] = recode_nonevents(out.a, out.b);
        out.a = std::move(ra);
        out.b = std::move(rb);
    }
    return out;
}

void write_code_table(JsonWriter& w, const CodeTable& table) {
    if (table.empty()) return;
    w.key("code_table").begin_object();
    for (std::size_t i = 0; i < table.labels.size(); ++i)
        w.key(table.labels[i]).value(static_cast<long long>(i));
    w.end_object();
}

std::string measures_csv_header() { return "RR,DET,NRLINE,Lmax,L,ENTR,relENTR,LAM,TT"; }

std::string measures_csv_row(const CrqaMeasures& m) {
    std::string out = format_double(m.rr);
    out += ',';
    out += format_double(m.det);
    out += ',';
    out += std::to_string(m.nrline);
    out += ',';
    out += std::to_string(m.maxline);
    out += ',';
    out += format_double(m.meanline);
    out += ',';
    out += format_double(m.entropy);
    out += ',';
    out += format_double(m.rel_entropy);
    out += ',';
    out += format_double(m.lam);
    out += ',';
    out += format_double(m.tt);
    return out;
}

std::string measures_csv(const CrqaMeasures& m) {
    return measures_csv_header() + "\n" + measures_csv_row(m) + "\n";
}

std::string windowed_csv(const std::vector<WindowedMeasures>& windows) {
    std::string out = "window_start," + measures_csv_header() + "\n";
    for (const auto& win : windows) {
        out += std::to_string(win.window_start);
        out += ',';
        out += measures_csv_row(win.measures);
        out += '\n';
    }
    return out;
}

/// Renders the kept plot and records how it was rasterized.
void maybe_render(const RunConfig& cfg, const CrqaResult& result, JsonWriter& w) {
    if (cfg.plot_path.empty()) return;
    if (!result.plot) throw std::runtime_error("no recurrence plot available to render");
    RenderInfo info = render_plot(*result.plot, cfg.plot_path, cfg.plot_format, cfg.plot_budget);
    w.key("plot").begin_object();
    w.key("path").value(cfg.plot_path);
    w.key("format").value(cfg.plot_format == PlotFormat::pgm ? "pgm" : "txt");
    w.key("rows").value(info.out_rows);
    w.key("cols").value(info.out_cols);
    w.key("block_rows").value(info.block_rows);
    w.key("block_cols").value(info.block_cols);
    w.key("pooled").value(info.pooled);
    w.end_object();
}

void write_crqa_results(const RunConfig& cfg, const CrqaResult& result, JsonWriter& w) {
    w.key("results").begin_object();
    w.key("measures");
    write_measures(w, result.measures);
    if (result.whiteline) {
        w.key("whiteline");
        write_whiteline(w, *result.whiteline);
    }
    maybe_render(cfg, result, w);
    w.end_object();
}

void run_crqa(const RunConfig& cfg, JsonWriter& w) {
    if (cfg.recpt && cfg.windowed)
        throw UsageError("--recpt cannot be combined with --window");
    if (cfg.windowed && !cfg.plot_path.empty())
        throw UsageError("--plot cannot be combined with --window");

    CrqaParams params;
    params.embedding = cfg.embedding;
    params.mindiagline = cfg.mindiagline;
    params.minvertline = cfg.minvertline;
    params.whiteline = cfg.whiteline;
    params.keep_plot = !cfg.plot_path.empty();
    params.thrshd = cfg.thrshd;

    w.begin_object();
    w.key("command").value("crqa");
    w.key("params").begin_object();
    echo_inputs(w, cfg);
    echo_embedding(w, cfg.embedding);
    w.key("mindiagline").value(cfg.mindiagline);
    w.key("minvertline").value(cfg.minvertline);
    w.key("whiteline").value(cfg.whiteline);
    w.key("recpt").value(cfg.recpt);
    w.key("windowed").value(cfg.windowed);
    w.key("windowsize").value(cfg.windowsize);
    w.key("step").value(cfg.step);
    w.end_object();

    if (cfg.recpt) {
        if (cfg.input1.empty()) throw UsageError("--recpt requires an input plot file");
        RecurrencePlot rp = parse_plot(cfg.input1);
        CrqaResult result = crqa_from_plot(rp, params);
        write_crqa_results(cfg, result, w);
        w.end_object();
        if (!cfg.csv.empty()) write_text_file(cfg.csv, measures_csv(result.measures));
        return;
    }

    LoadedPair in = load_pair(cfg);
    write_code_table(w, in.table);

    if (cfg.windowed) {
        if (cfg.windowsize <= 0 || cfg.step <= 0)
            throw UsageError("--window requires --windowsize and --step");
        std::vector<WindowedMeasures> windows =
            wincrqa(in.a, in.b, params, cfg.windowsize, cfg.step);
        w.key("results").begin_object();
        w.key("windows").begin_array();
        for (const auto& win : windows) {
            w.begin_object();
            w.key("window_start").value(win.window_start);
            w.key("measures");
            write_measures(w, win.measures);
            w.end_object();
        }
        w.end_array();
        w.end_object();
        w.end_object();
        if (!cfg.csv.empty()) write_text_file(cfg.csv, windowed_csv(windows));
        return;
    }

    CrqaResult result = crqa(in.a, in.b, params);
    write_crqa_results(cfg, result, w);
    w.end_object();
    if (!cfg.csv.empty()) write_text_file(cfg.csv, measures_csv(result.measures));
}

void run_profile(const RunConfig& cfg, JsonWriter& w) {
    w.begin_object();
    w.key("command").value("profile");
    w.key("params").begin_object();
    echo_inputs(w, cfg);
    w.key("ws").value(cfg.ws);
    w.key("radius").value(cfg.radius);
    w.end_object();

    LoadedPair in = load_pair(cfg);
    write_code_table(w, in.table);
    RecurrenceProfile p = drpdfromts(in.a, in.b, cfg.ws, cfg.radius, cfg.thrshd);
    w.key("results");
    write_profile(w, p);
    w.end_object();
    if (!cfg.csv.empty()) write_text_file(cfg.csv, profile_csv(p));
}

void run_window(const RunConfig& cfg, JsonWriter& w) {
    if (cfg.windowsize <= 0 || cfg.step <= 0)
        throw UsageError("window command requires --windowsize and --step");
    if (cfg.lagwidth < 0 || cfg.lagwidth >= cfg.windowsize)
        throw UsageError("--lagwidth must lie in [0, windowsize)");

    w.begin_object();
    w.key("command").value("window");
    w.key("params").begin_object();
    echo_inputs(w, cfg);
    w.key("step").value(cfg.step);
    w.key("windowsize").value(cfg.windowsize);
    w.key("lagwidth").value(cfg.lagwidth);
    w.key("radius").value(cfg.radius);
    w.end_object();

    LoadedPair in = load_pair(cfg);
    write_code_table(w, in.table);
    RecurrenceProfile p =
        windowdrp(in.a, in.b, cfg.step, cfg.windowsize, cfg.lagwidth, cfg.radius, cfg.thrshd);
    w.key("results");
    write_profile(w, p);
    w.end_object();
    if (!cfg.csv.empty()) write_text_file(cfg.csv, profile_csv(p));
}

void run_ct(const RunConfig& cfg, JsonWriter& w) {
    if (cfg.lag_min > cfg.lag_max)
        throw UsageError("--lag-min must not exceed --lag-max");

    w.begin_object();
    w.key("command").value("ct");
    w.key("params").begin_object();
    echo_inputs(w, cfg);
    w.key("lag_min").value(cfg.lag_min);
    w.key("lag_max").value(cfg.lag_max);
    if (cfg.dump_table) w.key("table_lag").value(cfg.table_lag);
    w.end_object();

    LoadedPair in = load_pair(cfg);
    write_code_table(w, in.table);

    std::vector<int> lags;
    for (int d = cfg.lag_min; d <= cfg.lag_max; ++d) lags.push_back(d);
    RecurrenceProfile p = ctcrqa(in.a, in.b, lags, cfg.thrshd);

    w.key("results").begin_object();
    w.key("profile");
    write_profile(w, p);
    if (cfg.dump_table) {
        ContingencyTable ct = contingency_table(in.a, in.b, cfg.table_lag, cfg.thrshd);
        w.key("table").begin_object();
        w.key("lag").value(ct.lag);
        w.key("alphabet").begin_array();
        for (int code : ct.alphabet) w.value(code);
        w.end_array();
        w.key("counts").begin_array();
        int k = static_cast<int>(ct.alphabet.size());
        for (int i = 0; i < k; ++i) {
            w.begin_array();
            for (int j = 0; j < k; ++j) w.value(ct.at(i, j));
            w.end_array();
        }
        w.end_array();
        if (!cfg.table_out.empty()) {
            write_text_file(cfg.table_out, contingency_csv(ct));
            w.key("path").value(cfg.table_out);
        }
        w.end_object();
    }
    w.end_object();
    w.end_object();
    if (!cfg.csv.empty()) write_text_file(cfg.csv, profile_csv(p));
}

void run_phi(const RunConfig& cfg, JsonWriter& w) {
    w.begin_object();
    w.key("command").value("phi");
    w.key("params").begin_object();
    echo_inputs(w, cfg);
    w.key("ws").value(cfg.ws);
    w.key("k").value(cfg.phi_k);
    w.end_object();

    LoadedPair in = load_pair(cfg);
    write_code_table(w, in.table);
    RecurrenceProfile p = calcphi(in.a, in.b, cfg.ws, cfg.phi_k, cfg.thrshd);
    w.key("results");
    write_profile(w, p);
    w.end_object();
    if (!cfg.csv.empty()) write_text_file(cfg.csv, profile_csv(p));
}

std::vector<int> effective_range(const std::vector<int>& given, int lo, int hi) {
    if (!given.empty()) return given;
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

void run_optimize(const RunConfig& cfg, JsonWriter& w) {
    const OptimizeConfig& opt = cfg.opt;

    w.begin_object();
    w.key("command").value("optimize");
    w.key("params").begin_object();
    echo_inputs(w, cfg);
    w.key("lgm").value(opt.lgm);
    w.key("steps").begin_array();
    for (int s : effective_range(opt.steps, 1, 10)) w.value(s);
    w.end_array();
    w.key("cut_del").begin_array();
    for (int d : effective_range(opt.cut_del, 1, 40)) w.value(d);
    w.end_array();
    w.key("target_rr_lo").value(opt.target_rr_lo);
    w.key("target_rr_hi").value(opt.target_rr_hi);
    w.key("max_embed").value(opt.max_embed);
    w.key("radius_grid").begin_array();
    for (double r : opt.radius_grid) w.value(r);
    w.end_array();
    w.key("radius_grid_points").value(opt.radius_grid_points);
    w.key("normalize").value(normalize_name(opt.normalize));
    w.key("rescale").value(rescale_name(opt.rescale));
    w.key("delay_closeness").value(opt.delay_closeness);
    w.key("fnn_rtol").value(opt.fnn_rtol);
    w.key("fnn_threshold").value(opt.fnn_threshold);
    w.key("fnn_improvement").value(opt.fnn_improvement);
    w.key("ami_bins").value(opt.ami_bins);
    w.end_object();

    LoadedPair in = load_pair(cfg);
    write_code_table(w, in.table);
    OptimalParams best = optimize_param(in.a, in.b, opt);

    w.key("results").begin_object();
    w.key("radius").value(best.radius);
    w.key("emddim").value(best.emddim);
    w.key("delay").value(best.delay);
    w.key("warnings").begin_array();
    for (const auto& warning : best.warnings) w.value(warning);
    w.end_array();
    w.end_object();
    w.end_object();
}

void run_simulate(const RunConfig& cfg, JsonWriter& w) {
    if (cfg.runs < 1) throw UsageError("--runs must be >= 1");
    if (cfg.iterations < 1) throw UsageError("--iterations must be >= 1");
    for (int s : cfg.sizes)
        if (s < 1) throw UsageError("--sizes entries must be >= 1");

    w.begin_object();
    w.key("command").value("simulate");
    w.key("params").begin_object();
    echo_dyad(w, cfg.dyad);
    w.key("preset").value(cfg.preset);
    w.key("runs").value(cfg.runs);
    w.key("sizes").begin_array();
    for (int s : cfg.sizes) w.value(s);
    w.end_array();
    w.key("iterations").value(cfg.iterations);
    w.end_object();

    std::vector<SimulatedPair> set;
    std::vector<std::string> paths;
    if (!cfg.sizes.empty()) {
        if (cfg.out_prefix.empty())
            throw UsageError("simulating a size grid requires --out-prefix");
        set = simulate_benchmark_set(cfg.sizes, cfg.iterations, cfg.dyad);
        for (const auto& pair : set)
            paths.push_back(cfg.out_prefix + "size" + std::to_string(pair.size) + "_run" +
                            std::to_string(pair.iteration) + ".csv");
    } else if (cfg.runs == 1 && !cfg.csv.empty()) {
        set = simulate_benchmark_set({cfg.dyad.length}, 1, cfg.dyad);
        paths.push_back(cfg.csv);
    } else {
        if (cfg.out_prefix.empty())
            throw UsageError("simulate requires --csv (single run) or --out-prefix");
        set = simulate_benchmark_set({cfg.dyad.length}, cfg.runs, cfg.dyad);
        for (const auto& pair : set)
            paths.push_back(cfg.out_prefix + "run" + std::to_string(pair.iteration) + ".csv");
    }
    for (std::size_t i = 0; i < set.size(); ++i) write_pair_csv(paths[i], set[i].c, set[i].s);

    w.key("results").begin_object();
    w.key("files").begin_array();
    for (std::size_t i = 0; i < set.size(); ++i) {
        w.begin_object();
        w.key("path").value(paths[i]);
        w.key("size").value(set[i].size);
        w.key("iteration").value(set[i].iteration);
        w.key("seed").value(static_cast<long long>(set[i].seed));
        w.end_object();
    }
    w.end_array();
    w.key("count").value(static_cast<long long>(set.size()));
    w.end_object();
    w.end_object();
}

void run_bench(const RunConfig& cfg, JsonWriter& w) {
    if (cfg.iterations < 1) throw UsageError("--iterations must be >= 1");
    for (int s : cfg.sizes)
        if (s < 1) throw UsageError("--sizes entries must be >= 1");

    BenchOptions opts;
    if (!cfg.sizes.empty()) opts.sizes = cfg.sizes;
    opts.iterations = cfg.iterations;
    opts.params = cfg.dyad;
    opts.compare = cfg.compare;

    w.begin_object();
    w.key("command").value("bench");
    w.key("params").begin_object();
    w.key("sizes").begin_array();
    for (int s : opts.sizes) w.value(s);
    w.end_array();
    w.key("iterations").value(opts.iterations);
    w.key("compare").value(opts.compare);
    echo_dyad(w, opts.params);
    w.key("delay").value(opts.crqa.embedding.delay);
    w.key("embed").value(opts.crqa.embedding.embed);
    w.key("radius").value(opts.crqa.embedding.radius);
    w.key("mindiagline").value(opts.crqa.mindiagline);
    w.key("minvertline").value(opts.crqa.minvertline);
    w.end_object();

    std::vector<BenchRecord> records = run_benchmark(opts);
    BenchSummary summary = summarize(records);

    w.key("results").begin_object();
    w.key("records").value(static_cast<long long>(records.size()));
    w.key("summary");
    write_bench_summary(w, summary);
    w.end_object();
    w.end_object();

    if (!cfg.csv.empty()) write_text_file(cfg.csv, bench_records_csv(records));
    if (!cfg.timings.empty()) write_text_file(cfg.timings, bench_timings_gnuplot(summary));
}

}  // namespace

int dispatch(const RunConfig& cfg, std::ostream& report_sink) {
    JsonWriter w;
    switch (cfg.command) {
        case RunConfig::Command::crqa: run_crqa(cfg, w); break;
        case RunConfig::Command::profile: run_profile(cfg, w); break;
        case RunConfig::Command::window: run_window(cfg, w); break;
        case RunConfig::Command::ct: run_ct(cfg, w); break;
        case RunConfig::Command::phi: run_phi(cfg, w); break;
        case RunConfig::Command::optimize: run_optimize(cfg, w); break;
        case RunConfig::Command::simulate: run_simulate(cfg, w); break;
        case RunConfig::Command::bench: run_bench(cfg, w); break;
    }
    if (cfg.out.empty())
        report_sink << w.str() << '\n';
    else
        write_text_file(cfg.out, w.str() + "\n");
    return 0;
}

}  // namespace crqa
