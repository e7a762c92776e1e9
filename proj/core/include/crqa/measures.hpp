#pragma once

#include <map>
#include <optional>
#include <vector>

#include "crqa/embedding.hpp"
#include "crqa/time_series.hpp"

namespace crqa {

/// Histogram of maximal line lengths found in a recurrence plot, keyed by
/// length, restricted to lines of at least the configured minimum length.
struct LineHistogram {
    enum class Orientation { diagonal, vertical };

    Orientation orientation = Orientation::diagonal;
    std::map<int, long long> counts;

    long long total_lines() const;
    long long total_points() const;
};

/// Maximal runs of recurrent cells along diagonals (i - j constant).
LineHistogram diagonal_lines(const RecurrencePlot& rp, int mindiagline);

/// Maximal runs of recurrent cells along columns (fixed j, consecutive i).
LineHistogram vertical_lines(const RecurrencePlot& rp, int minvertline);

/// The recurrence measure bundle.
///
///   rr         recurrence rate, percent of recurrent cells
///   det        percent of recurrent points on diagonal lines >= mindiagline
///   nrline     number of qualifying diagonal lines
///   maxline    longest qualifying diagonal line, main diagonal excluded
///   meanline   mean qualifying diagonal line length (main diagonal included)
///   entropy    Shannon entropy (natural log) of the diagonal length histogram
///   rel_entropy entropy / ln(nrline) when nrline > 1, else 0
///   lam        percent of recurrent points on vertical lines >= minvertline
///   tt         mean qualifying vertical line length
///
/// An empty plot yields all zeros; no field is ever NaN.
struct CrqaMeasures {
    double rr = 0.0;
    double det = 0.0;
    long long nrline = 0;
    long long maxline = 0;
    double meanline = 0.0;
    double entropy = 0.0;
    double rel_entropy = 0.0;
    double lam = 0.0;
    double tt = 0.0;
};

/// Count and mean length of maximal all-zero vertical segments of at
/// least minvertline cells ("white" vertical lines).
struct WhitelineStats {
    long long count = 0;
    double mean_length = 0.0;
};

struct CrqaParams {
    EmbeddingParams embedding;
    int mindiagline = 2;
    int minvertline = 2;
    bool whiteline = false;
    bool keep_plot = false;
    long long thrshd = 0;  // tolerated length difference between the inputs
};

struct CrqaResult {
    CrqaMeasures measures;
    std::optional<WhitelineStats> whiteline;
    std::optional<RecurrencePlot> plot;
};

/// All nine measures of a given plot.
CrqaMeasures compute_measures(const RecurrencePlot& rp, int mindiagline, int minvertline);

WhitelineStats compute_whiteline(const RecurrencePlot& rp, int minvertline);

/// Full pipeline: normalize -> embed -> distance -> rescale -> threshold
/// -> measures.  Both inputs must have the same kind.  The plot is built
/// row by row without materializing the distance matrix.
CrqaResult crqa(const TimeSeries& ts1, const TimeSeries& ts2, const CrqaParams& params);

/// Measures of a precomputed recurrence plot (the embedding stage is
/// skipped entirely).
CrqaResult crqa_from_plot(const RecurrencePlot& rp, const CrqaParams& params);

/// One full measure bundle per sliding window.
struct WindowedMeasures {
    int window_start = 0;
    CrqaMeasures measures;
};

std::vector<WindowedMeasures> wincrqa(const TimeSeries& ts1, const TimeSeries& ts2,
                                      const CrqaParams& params, int windowsize, int step);

}  // namespace crqa
