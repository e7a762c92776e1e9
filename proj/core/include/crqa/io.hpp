#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "crqa/embedding.hpp"
#include "crqa/time_series.hpp"

namespace crqa {

/// First-seen mapping of string category labels to integer codes, shared
/// across every file of one invocation so that equal labels always get
/// equal codes.
struct CodeTable {
    std::vector<std::string> labels;           // code -> label
    std::unordered_map<std::string, int> codes;  // label -> code

    int code_for(const std::string& label);
    bool empty() const { return labels.empty(); }
};

/// Reads one column (1-based) of a CSV file as a series.  With
/// `header` the first line is skipped.  Continuous cells must parse as
/// finite reals.  Categorical cells may be non-negative integers; any
/// other cell text is treated as a label and coded through `table`
/// (required in that case).  A file mixing numeric and label cells in
/// the selected column is coded entirely through the table.
TimeSeries parse_input(const std::string& path, int column, SeriesKind kind,
                       bool header = false, CodeTable* table = nullptr);

/// Reads a precomputed recurrence plot: one row per line, cells 0/1
/// separated by commas or whitespace, row 0 first.
RecurrencePlot parse_plot(const std::string& path);

/// Writes a simulated pair as headerless two-column CSV (C, S) so it can
/// be read back with parse_input unchanged.
void write_pair_csv(const std::string& path, const TimeSeries& c, const TimeSeries& s);

}  // namespace crqa
