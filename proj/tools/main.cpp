#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "crqa/crqa.hpp"

namespace {

const std::map<std::string, crqa::SeriesKind> kKindNames{
    {"categorical", crqa::SeriesKind::categorical},
    {"continuous", crqa::SeriesKind::continuous},
};

const std::map<std::string, crqa::NormalizeMode> kNormalizeNames{
    {"none", crqa::NormalizeMode::none},
    {"unit", crqa::NormalizeMode::unit_interval},
    {"zscore", crqa::NormalizeMode::zscore},
};

const std::map<std::string, crqa::RescaleMode> kRescaleNames{
    {"none", crqa::RescaleMode::none},
    {"mean", crqa::RescaleMode::mean_distance},
    {"max", crqa::RescaleMode::max_distance},
};

const std::map<std::string, crqa::PlotFormat> kPlotFormats{
    {"pgm", crqa::PlotFormat::pgm},
    {"txt", crqa::PlotFormat::txt},
};

void add_input_options(CLI::App* sub, crqa::RunConfig& cfg, bool second_required) {
    sub->add_option("file1", cfg.input1, "first input file")->required();
    auto* f2 = sub->add_option("file2", cfg.input2, "second input file");
    if (second_required) f2->required();
    sub->add_option("--column1", cfg.column1, "1-based column of file1")->capture_default_str();
    sub->add_option("--column2", cfg.column2, "1-based column of file2")->capture_default_str();
    sub->add_option("--datatype", cfg.datatype, "how cells are interpreted")
        ->transform(CLI::CheckedTransformer(kKindNames, CLI::ignore_case));
    sub->add_flag("--header", cfg.header, "skip the first line of each file");
    sub->add_flag("--recode-nonevents", cfg.split_nonevents,
                  "give each series' 0 code a distinct fresh value");
    sub->add_option("--thrshd", cfg.thrshd, "tolerated length difference between the inputs")
        ->capture_default_str();
}

void add_report_options(CLI::App* sub, crqa::RunConfig& cfg) {
    sub->add_option("--out", cfg.out, "write the JSON report here instead of stdout");
    sub->add_option("--csv", cfg.csv, "also write the main result as CSV");
}

void add_dyad_options(CLI::App* sub, crqa::RunConfig& cfg) {
    sub->add_option("--p-c", cfg.dyad.p_c, "P(C spontaneous event)")->capture_default_str();
    sub->add_option("--p-s", cfg.dyad.p_s, "P(S spontaneous event)")->capture_default_str();
    sub->add_option("--p-cc", cfg.dyad.p_cc, "P(C repeats itself)")->capture_default_str();
    sub->add_option("--p-ss", cfg.dyad.p_ss, "P(S repeats itself)")->capture_default_str();
    sub->add_option("--p-sc", cfg.dyad.p_sc, "P(S follows C's previous event)")
        ->capture_default_str();
    sub->add_option("--seed", cfg.dyad.seed, "base RNG seed")->capture_default_str();
    sub->add_option("--preset", cfg.preset, "parameter preset: low, high or bench")
        ->check(CLI::IsMember({"low", "high", "bench"}));
}

/// Explicit probability flags win over the preset, which wins over the
/// built-in defaults.
void apply_preset(const CLI::App* sub, crqa::RunConfig& cfg) {
    if (cfg.preset.empty()) return;
    crqa::DyadParams p;
    if (cfg.preset == "low")
        p = crqa::low_condition_params();
    else if (cfg.preset == "high")
        p = crqa::high_condition_params();
    else
        p = crqa::benchmark_params();
    if (!sub->count("--p-c")) cfg.dyad.p_c = p.p_c;
    if (!sub->count("--p-s")) cfg.dyad.p_s = p.p_s;
    if (!sub->count("--p-cc")) cfg.dyad.p_cc = p.p_cc;
    if (!sub->count("--p-ss")) cfg.dyad.p_ss = p.p_ss;
    if (!sub->count("--p-sc")) cfg.dyad.p_sc = p.p_sc;
}

}  // namespace

int main(int argc, char** argv) {
    crqa::RunConfig cfg;

    CLI::App app{"Cross-recurrence quantification analysis toolkit"};
    app.require_subcommand(1);

    // crqa: the full measure bundle of one pair (or of a precomputed plot).
    auto* c_crqa = app.add_subcommand("crqa", "recurrence measures of a pair of series");
    add_input_options(c_crqa, cfg, /*second_required=*/false);
    c_crqa->add_option("--delay", cfg.embedding.delay, "embedding delay")->capture_default_str();
    c_crqa->add_option("--embed", cfg.embedding.embed, "embedding dimension")
        ->capture_default_str();
    c_crqa->add_option("--rescale", cfg.embedding.rescale,
                       "rescale distances by: none, mean or max")
        ->transform(CLI::CheckedTransformer(kRescaleNames, CLI::ignore_case));
    c_crqa->add_option("--normalize", cfg.embedding.normalize,
                       "normalize each series: none, unit or zscore")
        ->transform(CLI::CheckedTransformer(kNormalizeNames, CLI::ignore_case));
    c_crqa->add_option("--radius", cfg.embedding.radius, "recurrence radius (inclusive)")
        ->capture_default_str();
    c_crqa->add_option("--mindiagline", cfg.mindiagline, "shortest diagonal line counted")
        ->capture_default_str();
    c_crqa->add_option("--minvertline", cfg.minvertline, "shortest vertical line counted")
        ->capture_default_str();
    c_crqa->add_flag("--whiteline", cfg.whiteline, "also report white vertical line stats");
    c_crqa->add_flag("--recpt", cfg.recpt, "file1 is a precomputed 0/1 recurrence plot");
    c_crqa->add_flag("--window", cfg.windowed, "measure bundle per sliding window");
    c_crqa->add_option("--windowsize", cfg.windowsize, "sliding window length");
    c_crqa->add_option("--step", cfg.step, "sliding window step");
    c_crqa->add_option("--plot", cfg.plot_path, "render the recurrence plot to this file");
    c_crqa->add_option("--plot-format", cfg.plot_format, "plot file format: pgm or txt")
        ->transform(CLI::CheckedTransformer(kPlotFormats, CLI::ignore_case));
    c_crqa->add_option("--plot-budget", cfg.plot_budget,
                       "max pixels per plot side before max-pooling")
        ->capture_default_str();
    add_report_options(c_crqa, cfg);

    // profile: diagonal-wise recurrence profile over lags.
    auto* c_profile = app.add_subcommand("profile", "diagonal recurrence profile over lags");
    add_input_options(c_profile, cfg, true);
    c_profile->add_option("--ws", cfg.ws, "profile spans lags -ws..+ws")->capture_default_str();
    c_profile->add_option("--radius", cfg.radius, "recurrence radius (inclusive)")
        ->capture_default_str();
    add_report_options(c_profile, cfg);

    // window: windowed recurrence profile along the series.
    auto* c_window = app.add_subcommand("window", "windowed recurrence profile along time");
    add_input_options(c_window, cfg, true);
    c_window->add_option("--step", cfg.step, "window start increment");
    c_window->add_option("--windowsize", cfg.windowsize, "window length");
    c_window->add_option("--lagwidth", cfg.lagwidth, "lags -lagwidth..+lagwidth are averaged")
        ->capture_default_str();
    c_window->add_option("--radius", cfg.radius, "recurrence radius (inclusive)")
        ->capture_default_str();
    add_report_options(c_window, cfg);

    // ct: categorical recurrence through contingency tables.
    cfg.lag_min = -10;
    cfg.lag_max = 10;
    auto* c_ct = app.add_subcommand("ct", "contingency-table recurrence profile");
    add_input_options(c_ct, cfg, true);
    c_ct->add_option("--lag-min", cfg.lag_min, "first lag of the profile")->capture_default_str();
    c_ct->add_option("--lag-max", cfg.lag_max, "last lag of the profile")->capture_default_str();
    auto* table_opt =
        c_ct->add_option("--table", cfg.table_lag, "also emit the full table at this lag");
    c_ct->add_option("--table-out", cfg.table_out, "write that table as CSV here")
        ->needs(table_opt);
    add_report_options(c_ct, cfg);

    // phi: phi-coefficient profile for one target code.
    auto* c_phi = app.add_subcommand("phi", "phi coefficient profile for one code");
    add_input_options(c_phi, cfg, true);
    c_phi->add_option("--ws", cfg.ws, "profile spans lags -ws..+ws")->capture_default_str();
    c_phi->add_option("--k", cfg.phi_k, "target code")->capture_default_str();
    add_report_options(c_phi, cfg);

    // optimize: delay / dimension / radius search.
    auto* c_opt = app.add_subcommand("optimize", "pick delay, dimension and radius");
    add_input_options(c_opt, cfg, true);
    c_opt->add_option("--lgm", cfg.opt.lgm, "largest lag of the AMI scan")->capture_default_str();
    c_opt->add_option("--steps", cfg.opt.steps, "look-ahead offsets sustaining an AMI minimum")
        ->delimiter(',');
    c_opt->add_option("--cut-del", cfg.opt.cut_del, "candidate delays")->delimiter(',');
    c_opt->add_option("--target-rr-lo", cfg.opt.target_rr_lo, "recurrence band lower edge (%)")
        ->capture_default_str();
    c_opt->add_option("--target-rr-hi", cfg.opt.target_rr_hi, "recurrence band upper edge (%)")
        ->capture_default_str();
    c_opt->add_option("--max-embed", cfg.opt.max_embed, "largest embedding dimension tried")
        ->capture_default_str();
    c_opt->add_option("--radius-grid", cfg.opt.radius_grid, "explicit candidate radii")
        ->delimiter(',');
    c_opt->add_option("--radius-grid-points", cfg.opt.radius_grid_points,
                      "points of the automatic log-spaced radius grid")
        ->capture_default_str();
    c_opt->add_option("--normalize", cfg.opt.normalize, "normalization used during the search")
        ->transform(CLI::CheckedTransformer(kNormalizeNames, CLI::ignore_case));
    c_opt->add_option("--rescale", cfg.opt.rescale, "distance rescaling used during the search")
        ->transform(CLI::CheckedTransformer(kRescaleNames, CLI::ignore_case));
    c_opt->add_option("--delay-closeness", cfg.opt.delay_closeness,
                      "max distance at which per-series delays average (0 = automatic)")
        ->capture_default_str();
    c_opt->add_option("--fnn-rtol", cfg.opt.fnn_rtol, "false-neighbor growth factor")
        ->capture_default_str();
    c_opt->add_option("--fnn-threshold", cfg.opt.fnn_threshold,
                      "FNN fraction considered fully unfolded")
        ->capture_default_str();
    c_opt->add_option("--fnn-improvement", cfg.opt.fnn_improvement,
                      "smallest FNN drop still counted as progress")
        ->capture_default_str();
    c_opt->add_option("--ami-bins", cfg.opt.ami_bins, "AMI histogram bins (0 = sqrt of length)")
        ->capture_default_str();
    c_opt->add_option("--out", cfg.out, "write the JSON report here instead of stdout");

    // simulate: the coupled two-agent event generator.
    auto* c_sim = app.add_subcommand("simulate", "generate coupled binary event series");
    add_dyad_options(c_sim, cfg);
    c_sim->add_option("--length", cfg.dyad.length, "samples per series")->capture_default_str();
    c_sim->add_option("--runs", cfg.runs, "independent pairs to generate")->capture_default_str();
    c_sim->add_option("--sizes", cfg.sizes, "generate a size grid instead of --runs")
        ->delimiter(',');
    c_sim->add_option("--iterations", cfg.iterations, "pairs per size of the grid")
        ->capture_default_str();
    c_sim->add_option("--csv", cfg.csv, "output CSV of a single run");
    c_sim->add_option("--out-prefix", cfg.out_prefix, "per-run CSVs are written as <prefix>...csv");
    c_sim->add_option("--out", cfg.out, "write the JSON manifest here instead of stdout");

    // bench: the scaling / consistency harness.
    auto* c_bench = app.add_subcommand("bench", "time the pipeline over simulated corpora");
    add_dyad_options(c_bench, cfg);
    c_bench->add_option("--sizes", cfg.sizes, "series lengths (default 250,500,...,2750)")
        ->delimiter(',');
    c_bench->add_option("--iterations", cfg.iterations, "pairs per size")->capture_default_str();
    c_bench->add_flag("--compare", cfg.compare, "also run the reference engine on every pair");
    c_bench->add_option("--csv", cfg.csv, "write every timed record as CSV");
    c_bench->add_option("--timings", cfg.timings, "write a gnuplot-ready size/time table");
    c_bench->add_option("--out", cfg.out, "write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (c_crqa->parsed()) {
            cfg.command = crqa::RunConfig::Command::crqa;
        } else if (c_profile->parsed()) {
            cfg.command = crqa::RunConfig::Command::profile;
        } else if (c_window->parsed()) {
            cfg.command = crqa::RunConfig::Command::window;
        } else if (c_ct->parsed()) {
            cfg.command = crqa::RunConfig::Command::ct;
            cfg.dump_table = table_opt->count() > 0;
        } else if (c_phi->parsed()) {
            cfg.command = crqa::RunConfig::Command::phi;
        } else if (c_opt->parsed()) {
            cfg.command = crqa::RunConfig::Command::optimize;
            if (!c_opt->count("--datatype")) cfg.datatype = crqa::SeriesKind::continuous;
        } else if (c_sim->parsed()) {
            cfg.command = crqa::RunConfig::Command::simulate;
            apply_preset(c_sim, cfg);
        } else {
            cfg.command = crqa::RunConfig::Command::bench;
            if (cfg.preset.empty()) cfg.preset = "bench";  // the protocol's parameter point
            apply_preset(c_bench, cfg);
        }
        return crqa::dispatch(cfg, std::cout);
    } catch (const crqa::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
