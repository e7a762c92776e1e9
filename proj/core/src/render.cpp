#include "crqa/render.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace crqa {
namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

bool block_any(const RecurrencePlot& rp, int i0, int i1, int j0, int j1) {
    for (int i = i0; i < i1; ++i)
        for (int j = j0; j < j1; ++j)
            if (rp.cell(i, j)) return true;
    return false;
}

}  // namespace

RenderInfo render_plot(const RecurrencePlot& rp, const std::string& path,
                       PlotFormat format, int budget) {
    if (budget < 1) throw std::invalid_argument("pixel budget must be >= 1");
    if (rp.rows() < 1 || rp.cols() < 1) throw std::invalid_argument("empty plot");

    RenderInfo info;
    info.block_rows = rp.rows() > budget ? ceil_div(rp.rows(), budget) : 1;
    info.block_cols = rp.cols() > budget ? ceil_div(rp.cols(), budget) : 1;
    info.pooled = info.block_rows > 1 || info.block_cols > 1;
    info.out_rows = ceil_div(rp.rows(), info.block_rows);
    info.out_cols = ceil_div(rp.cols(), info.block_cols);

    auto pixel = [&rp, &info](int bi, int bj) {
        int i0 = bi * info.block_rows;
        int i1 = i0 + info.block_rows;
        if (i1 > rp.rows()) i1 = rp.rows();
        int j0 = bj * info.block_cols;
        int j1 = j0 + info.block_cols;
        if (j1 > rp.cols()) j1 = rp.cols();
        return block_any(rp, i0, i1, j0, j1);
    };

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);

    if (format == PlotFormat::pgm) {
        out << "P2\n";
        if (info.pooled)
            out << "# max-pooled " << info.block_rows << "x" << info.block_cols << " from "
                << rp.rows() << "x" << rp.cols() << "\n";
        out << info.out_cols << " " << info.out_rows << "\n1\n";
        // Raster scans top-down; plot row 0 sits at the bottom.
        for (int bi = info.out_rows - 1; bi >= 0; --bi) {
            for (int bj = 0; bj < info.out_cols; ++bj) {
                if (bj) out << ' ';
                out << (pixel(bi, bj) ? 1 : 0);
            }
            out << '\n';
        }
    } else {
        // Text form lists plot row 0 first.
        for (int bi = 0; bi < info.out_rows; ++bi) {
            for (int bj = 0; bj < info.out_cols; ++bj) out << (pixel(bi, bj) ? '#' : '.');
            out << '\n';
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
    return info;
}

}  // namespace crqa
