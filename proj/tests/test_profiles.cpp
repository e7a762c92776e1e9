#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <vector>

#include "crqa/measures.hpp"
#include "crqa/profiles.hpp"
#include "doctest.h"

using crqa::RecurrenceProfile;
using crqa::TimeSeries;

namespace {

std::vector<double> random_codes(std::mt19937& rng, int t, int alphabet) {
    std::vector<double> v(static_cast<std::size_t>(t));
    for (auto& x : v) x = static_cast<double>(rng() % static_cast<unsigned>(alphabet));
    return v;
}

// ts2 delayed relative to ts1 by k samples: t2[i] = t1[i - k].
std::pair<TimeSeries, TimeSeries> delayed_pair(std::mt19937& rng, int t, int k) {
    auto v1 = random_codes(rng, t, 4);
    std::vector<double> v2(v1.size());
    for (int i = 0; i < t; ++i)
        v2[static_cast<std::size_t>(i)] =
            i >= k ? v1[static_cast<std::size_t>(i - k)]
                   : static_cast<double>(rng() % 4);
    return {TimeSeries::categorical(v1), TimeSeries::categorical(v2)};
}

}  // namespace

TEST_CASE("profile of a delayed copy peaks at minus the delay with rate one") {
    std::mt19937 rng(444);
    for (int k : {1, 2, 5}) {
        auto [t1, t2] = delayed_pair(rng, 60, k);
        auto p = crqa::drpdfromts(t1, t2, 10, 0.0);
        CHECK(p.maxpos == -k);
        CHECK(p.maxrec == 1.0);
    }
}

TEST_CASE("profile positions run from -ws to +ws and identical series peak at zero") {
    auto ts = TimeSeries::categorical({1, 0, 2, 2, 1, 0, 3, 1, 2, 0, 1, 3});
    auto p = crqa::drpdfromts(ts, ts, 3, 0.0);
    REQUIRE(p.positions.size() == 7);
    for (int d = -3; d <= 3; ++d) CHECK(p.positions[static_cast<std::size_t>(d + 3)] == d);
    CHECK(p.maxpos == 0);
    CHECK(p.maxrec == 1.0);
}

TEST_CASE("profile values match diagonal densities of the recurrence plot") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int t = 40;
    std::vector<double> v1(static_cast<std::size_t>(t)), v2(static_cast<std::size_t>(t));
    for (auto& v : v1) v = unif(rng);
    for (auto& v : v2) v = unif(rng);
    auto ts1 = TimeSeries::continuous(v1);
    auto ts2 = TimeSeries::continuous(v2);

    double radius = 0.3;
    crqa::CrqaParams params;
    params.embedding.radius = radius;
    params.keep_plot = true;
    auto plot = crqa::crqa(ts1, ts2, params).plot.value();
    REQUIRE(plot.rows() == t);
    REQUIRE(plot.cols() == t);

    int ws = 8;
    auto p = crqa::drpdfromts(ts1, ts2, ws, radius);
    for (int d = -ws; d <= ws; ++d) {
        // lag d pairs ts1[j + d] with ts2[j], i.e. plot cells with i - j = d
        long long hits = 0;
        for (int j = 0; j < t; ++j) {
            int i = j + d;
            if (i >= 0 && i < t && plot.cell(i, j)) ++hits;
        }
        double want = static_cast<double>(hits) / static_cast<double>(t - std::abs(d));
        CHECK(p.values[static_cast<std::size_t>(d + ws)] == want);
    }
}

TEST_CASE("profile ties resolve to the smallest lag") {
    auto t1 = TimeSeries::categorical({0, 1, 0, 1});
    auto t2 = TimeSeries::categorical({1, 0, 1, 0});
    auto p = crqa::drpdfromts(t1, t2, 1, 0.0);
    // lags -1 and +1 both have rate 1.0; the tie goes to -1
    CHECK(p.values[0] == 1.0);
    CHECK(p.values[2] == 1.0);
    CHECK(p.maxpos == -1);
}

TEST_CASE("profile argument validation") {
    auto ts = TimeSeries::categorical({1, 0, 1, 0, 1});
    CHECK_THROWS_WITH_AS(crqa::drpdfromts(ts, ts, -1, 0.0), "ws must be >= 0",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(crqa::drpdfromts(ts, ts, 3, 0.0),
                         "ws too large: 2*ws+1 must not exceed the series length",
                         std::invalid_argument);
    CHECK_THROWS_AS(crqa::drpdfromts(ts, ts, 1, -0.5), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        crqa::drpdfromts(ts, TimeSeries::continuous({1, 0, 1, 0, 1}), 1, 0.0),
        "mismatched series kinds", std::invalid_argument);
}

TEST_CASE("windowed profile equals the mean lag profile of each window slice") {
    std::mt19937 rng(55);
    auto v1 = random_codes(rng, 70, 3);
    auto v2 = random_codes(rng, 70, 3);
    auto ts1 = TimeSeries::categorical(v1);
    auto ts2 = TimeSeries::categorical(v2);

    int windowsize = 25, step = 10, lagwidth = 4;
    auto p = crqa::windowdrp(ts1, ts2, step, windowsize, lagwidth, 0.0);
    REQUIRE(p.axis == RecurrenceProfile::Axis::window_start);
    REQUIRE(p.positions == std::vector<int>{0, 10, 20, 30, 40});

    for (std::size_t w = 0; w < p.positions.size(); ++w) {
        int start = p.positions[w];
        auto s1 = TimeSeries::categorical(std::vector<double>(
            v1.begin() + start, v1.begin() + start + windowsize));
        auto s2 = TimeSeries::categorical(std::vector<double>(
            v2.begin() + start, v2.begin() + start + windowsize));
        auto sub = crqa::drpdfromts(s1, s2, lagwidth, 0.0);
        double sum = 0.0;
        for (double v : sub.values) sum += v;
        double want = sum / static_cast<double>(2 * lagwidth + 1);
        CHECK(p.values[w] == want);
    }
}

TEST_CASE("windowed profile validates lagwidth and windowsize") {
    auto ts = TimeSeries::categorical({1, 0, 1, 0, 1, 0});
    CHECK_THROWS_WITH_AS(crqa::windowdrp(ts, ts, 1, 3, 3, 0.0),
                         "lagwidth must be in [0, windowsize)", std::invalid_argument);
    CHECK_THROWS_WITH_AS(crqa::windowdrp(ts, ts, 1, 3, -1, 0.0),
                         "lagwidth must be in [0, windowsize)", std::invalid_argument);
    CHECK_THROWS_WITH_AS(crqa::windowdrp(ts, ts, 1, 9, 2, 0.0),
                         "windowsize exceeds series length", std::invalid_argument);
    CHECK_THROWS_AS(crqa::windowdrp(ts, ts, 0, 3, 1, 0.0), std::invalid_argument);
}

TEST_CASE("cross-correlation at lag zero matches a direct Pearson computation") {
    std::vector<double> xs = {1.0, 3.0, 2.0, 5.0, 4.0, 4.0, 2.0};
    std::vector<double> ys = {2.0, 2.5, 1.0, 4.0, 5.0, 3.0, 2.5};
    auto p = crqa::cross_correlation(TimeSeries::continuous(xs),
                                     TimeSeries::continuous(ys), 0);
    double sx = 0.0, sy = 0.0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        sx += xs[j];
        sy += ys[j];
    }
    double mx = sx / static_cast<double>(xs.size());
    double my = sy / static_cast<double>(ys.size());
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        sxy += (xs[j] - mx) * (ys[j] - my);
        sxx += (xs[j] - mx) * (xs[j] - mx);
        syy += (ys[j] - my) * (ys[j] - my);
    }
    REQUIRE(p.values.size() == 1);
    CHECK(p.values[0] == sxy / std::sqrt(sxx * syy));
}

TEST_CASE("cross-correlation of a delayed copy peaks at minus the delay") {
    std::mt19937 rng(321);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    int t = 80, k = 3;
    std::vector<double> v1(static_cast<std::size_t>(t)), v2(static_cast<std::size_t>(t));
    for (auto& v : v1) v = unif(rng);
    for (int i = 0; i < t; ++i)
        v2[static_cast<std::size_t>(i)] =
            i >= k ? v1[static_cast<std::size_t>(i - k)] : unif(rng);
    auto p = crqa::cross_correlation(TimeSeries::continuous(v1),
                                     TimeSeries::continuous(v2), 6);
    CHECK(p.maxpos == -k);
    CHECK(p.maxrec == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.maxrec <= 1.0);
}

TEST_CASE("perfectly opposed binary series correlate at exactly minus one") {
    auto p = crqa::cross_correlation(TimeSeries::continuous({1, 0, 1, 0}),
                                     TimeSeries::continuous({0, 1, 0, 1}), 0);
    CHECK(p.values[0] == -1.0);
}

TEST_CASE("zero-variance segments yield zero with a warning") {
    auto flat = TimeSeries::continuous({2.0, 2.0, 2.0, 2.0, 2.0, 2.0});
    auto wavy = TimeSeries::continuous({1.0, 2.0, 3.0, 1.0, 2.0, 3.0});
    auto p = crqa::cross_correlation(flat, wavy, 2);
    REQUIRE(p.values.size() == 5);
    for (double v : p.values) CHECK(v == 0.0);
    REQUIRE(p.warnings.size() == 5);
    CHECK(p.warnings[0] == "zero-variance segment at lag -2");
    CHECK(p.warnings[4] == "zero-variance segment at lag 2");
    CHECK(p.maxrec == 0.0);
    CHECK(p.maxpos == -2);  // all-tie profile resolves to the smallest lag
}

TEST_CASE("cross-correlation keeps at least three overlapping samples") {
    auto ts = TimeSeries::continuous({1, 2, 3, 4, 5});
    CHECK_THROWS_WITH_AS(crqa::cross_correlation(ts, ts, 3),
                         "maxlag too large: overlap must keep at least 3 samples",
                         std::invalid_argument);
    CHECK_NOTHROW(crqa::cross_correlation(ts, ts, 2));
}
