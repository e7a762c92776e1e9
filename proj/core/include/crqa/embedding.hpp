#pragma once

#include <cstdint>
#include <vector>

#include "crqa/time_series.hpp"

namespace crqa {

enum class NormalizeMode { none, unit_interval, zscore };
enum class RescaleMode { none, mean_distance, max_distance };

/// Parameters of the state-space reconstruction stage shared by the
/// recurrence pipeline and the parameter search.
struct EmbeddingParams {
    int delay = 1;
    int embed = 1;
    RescaleMode rescale = RescaleMode::none;
    NormalizeMode normalize = NormalizeMode::none;
    double radius = 0.0;
};

/// A delay-embedded trajectory: `size()` points of dimension `dim`,
/// stored row-major.
struct EmbeddedTrajectory {
    std::vector<double> data;
    int dim = 1;

    int size() const { return dim == 0 ? 0 : static_cast<int>(data.size()) / dim; }
    const double* point(int i) const { return data.data() + static_cast<std::size_t>(i) * dim; }
};

/// Dense rectangular distance matrix (row index = first trajectory).
struct DistanceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    double& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

/// Binary recurrence plot, bit-packed per row.  cell(i, j) is true when
/// point i of the first trajectory recurs with point j of the second.
class RecurrencePlot {
public:
    RecurrencePlot() = default;
    RecurrencePlot(int rows, int cols)
        : rows_(rows), cols_(cols),
          words_per_row_((static_cast<std::size_t>(cols) + 63) / 64),
          bits_(static_cast<std::size_t>(rows) * ((static_cast<std::size_t>(cols) + 63) / 64), 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool cell(int i, int j) const {
        return (bits_[static_cast<std::size_t>(i) * words_per_row_ + (j >> 6)] >>
                (static_cast<unsigned>(j) & 63u)) & 1u;
    }
    void set(int i, int j) {
        std::uint64_t& w = bits_[static_cast<std::size_t>(i) * words_per_row_ + (j >> 6)];
        std::uint64_t m = std::uint64_t{1} << (static_cast<unsigned>(j) & 63u);
        if (!(w & m)) {
            w |= m;
            ++recurrent_;
        }
    }

    long long recurrent_points() const { return recurrent_; }

    bool operator==(const RecurrencePlot& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
    long long recurrent_ = 0;
};

/// Rescales a series into [0,1] (unit_interval), to zero mean and unit
/// sample standard deviation (zscore), or returns it unchanged (none).
/// A constant series maps to all zeros under unit_interval; under zscore
/// it is an error ("degenerate normalization") unless T = 1.
TimeSeries normalize(const TimeSeries& ts, NormalizeMode mode);

/// Time-delay embedding: point i, coordinate d = values[i + d*delay],
/// producing T - (embed-1)*delay points.
EmbeddedTrajectory embed(const TimeSeries& ts, int delay, int embed);

/// Pairwise Euclidean distances between two equal-dimension trajectories.
DistanceMatrix distance_matrix(const EmbeddedTrajectory& a, const EmbeddedTrajectory& b);

/// Divides every entry by the mean (or maximum) of the entire matrix.
/// An all-zero matrix is returned unchanged.
DistanceMatrix rescale_matrix(const DistanceMatrix& d, RescaleMode mode);

/// Marks cell (i, j) recurrent when d(i, j) <= radius (inclusive).
RecurrencePlot threshold(const DistanceMatrix& d, double radius);

}  // namespace crqa
