#pragma once

#include <string>

#include "crqa/embedding.hpp"

namespace crqa {

enum class PlotFormat { pgm, txt };

/// How a plot was rasterized.  Plots larger than `budget` pixels per
/// side are max-pooled in blocks; the block shape is reported here and,
/// for PGM output, in a comment line of the file itself.
struct RenderInfo {
    int out_rows = 0;
    int out_cols = 0;
    int block_rows = 1;
    int block_cols = 1;
    bool pooled = false;
};

/// Writes the plot as plain PGM (P2, 0 = non-recurrent, max gray =
/// recurrent, row 0 at the bottom of the image) or as text ('.'/'#',
/// one line per plot row starting with row 0).
RenderInfo render_plot(const RecurrencePlot& rp, const std::string& path,
                       PlotFormat format, int budget = 1024);

}  // namespace crqa
