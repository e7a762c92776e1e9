#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "crqa/io.hpp"
#include "crqa/render.hpp"
#include "crqa/simulator.hpp"
#include "doctest.h"

using crqa::CodeTable;
using crqa::RecurrencePlot;
using crqa::SeriesKind;
using crqa::TimeSeries;

namespace {

struct TempFile {
    std::string path;

    TempFile(const char* name, const std::string& content) {
        path = (std::filesystem::temp_directory_path() /
                (std::string("crqa_io_test_") + name))
                   .string();
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
};

std::string read_all(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("continuous columns parse with column selection and header skipping") {
    TempFile f("cont.csv", "x,y\n1.5,2\n-3.25,4\n");
    auto first = crqa::parse_input(f.path, 1, SeriesKind::continuous, true);
    CHECK(first.values == std::vector<double>{1.5, -3.25});
    CHECK(first.kind == SeriesKind::continuous);
    auto second = crqa::parse_input(f.path, 2, SeriesKind::continuous, true);
    CHECK(second.values == std::vector<double>{2.0, 4.0});
}

TEST_CASE("blank lines are skipped") {
    TempFile f("blank.csv", "1\n\n2\n   \n3\n");
    auto ts = crqa::parse_input(f.path, 1, SeriesKind::continuous);
    CHECK(ts.values == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("numeric categorical codes are taken verbatim") {
    TempFile f("codes.csv", "3\n0\n7\n3\n");
    auto ts = crqa::parse_input(f.path, 1, SeriesKind::categorical);
    CHECK(ts.values == std::vector<double>{3.0, 0.0, 7.0, 3.0});
    CHECK(ts.kind == SeriesKind::categorical);
}

TEST_CASE("label columns share one code table across files") {
    TempFile fa("labels_a.csv", "a\nb\na\n");
    TempFile fb("labels_b.csv", "b\nc\n");
    CodeTable table;
    auto a = crqa::parse_input(fa.path, 1, SeriesKind::categorical, false, &table);
    auto b = crqa::parse_input(fb.path, 1, SeriesKind::categorical, false, &table);
    CHECK(a.values == std::vector<double>{0.0, 1.0, 0.0});
    CHECK(b.values == std::vector<double>{1.0, 2.0});
    CHECK(table.labels == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("a single label cell switches the whole column to label coding") {
    TempFile f("mixed.csv", "1\nx\n1\n");
    CodeTable table;
    auto ts = crqa::parse_input(f.path, 1, SeriesKind::categorical, false, &table);
    CHECK(ts.values == std::vector<double>{0.0, 1.0, 0.0});
    CHECK(table.labels == std::vector<std::string>{"1", "x"});
}

TEST_CASE("the code table hands out codes in first-seen order") {
    CodeTable table;
    CHECK(table.code_for("walk") == 0);
    CHECK(table.code_for("talk") == 1);
    CHECK(table.code_for("walk") == 0);
    CHECK(table.labels == std::vector<std::string>{"walk", "talk"});
}

TEST_CASE("input errors carry the path and the 1-based line number") {
    CHECK_THROWS_WITH_AS(
        crqa::parse_input("/nonexistent/input.csv", 1, SeriesKind::continuous),
        "cannot open /nonexistent/input.csv", std::runtime_error);

    TempFile bad("bad.csv", "1\nfoo\n");
    std::string want = bad.path + ": line 2: cannot parse 'foo' as a number";
    CHECK_THROWS_WITH_AS(crqa::parse_input(bad.path, 1, SeriesKind::continuous),
                         want.c_str(), std::runtime_error);

    TempFile narrow("narrow.csv", "1,2\n3\n");
    std::string want2 = narrow.path + ": line 2 has only 1 column(s)";
    CHECK_THROWS_WITH_AS(crqa::parse_input(narrow.path, 2, SeriesKind::continuous),
                         want2.c_str(), std::runtime_error);

    TempFile empty("empty.csv", "\n\n");
    std::string want3 = empty.path + ": no data rows";
    CHECK_THROWS_WITH_AS(crqa::parse_input(empty.path, 1, SeriesKind::continuous),
                         want3.c_str(), std::runtime_error);

    TempFile frac("frac.csv", "1\n1.5\n");
    std::string want4 = frac.path + ": line 2: categorical codes must be non-negative integers";
    CHECK_THROWS_WITH_AS(crqa::parse_input(frac.path, 1, SeriesKind::categorical),
                         want4.c_str(), std::runtime_error);

    CHECK_THROWS_AS(crqa::parse_input(frac.path, 0, SeriesKind::continuous),
                    std::invalid_argument);
}

TEST_CASE("simulated pairs survive a CSV round trip") {
    auto params = crqa::low_condition_params();
    params.length = 64;
    auto [c, s] = crqa::simulate_dyad(params);
    std::string path =
        (std::filesystem::temp_directory_path() / "crqa_io_test_pair.csv").string();
    crqa::write_pair_csv(path, c, s);
    auto rc = crqa::parse_input(path, 1, SeriesKind::categorical);
    auto rs = crqa::parse_input(path, 2, SeriesKind::categorical);
    CHECK(rc.values == c.values);
    CHECK(rs.values == s.values);
    std::filesystem::remove(path);

    TimeSeries longer = c;
    longer.values.push_back(0.0);
    CHECK_THROWS_WITH_AS(crqa::write_pair_csv(path, longer, s),
                         "pair series differ in length", std::invalid_argument);
}

TEST_CASE("plot files accept comma or whitespace separated cells") {
    TempFile commas("plot_a.txt", "0,1\n1,0\n");
    auto a = crqa::parse_plot(commas.path);
    REQUIRE(a.rows() == 2);
    REQUIRE(a.cols() == 2);
    CHECK_FALSE(a.cell(0, 0));
    CHECK(a.cell(0, 1));
    CHECK(a.cell(1, 0));
    CHECK_FALSE(a.cell(1, 1));

    TempFile spaces("plot_b.txt", "0 1\n1 0\n");
    CHECK(crqa::parse_plot(spaces.path) == a);

    TempFile mixed("plot_c.txt", " 0, 1 \n\n1 ,0\n");
    CHECK(crqa::parse_plot(mixed.path) == a);
}

TEST_CASE("plot files are validated") {
    TempFile ragged("plot_ragged.txt", "0,1\n1\n");
    std::string want = ragged.path + ": line 2: ragged plot rows";
    CHECK_THROWS_WITH_AS(crqa::parse_plot(ragged.path), want.c_str(), std::runtime_error);

    TempFile bad("plot_bad.txt", "0,2\n");
    std::string want2 = bad.path + ": line 1: plot cells must be 0 or 1";
    CHECK_THROWS_WITH_AS(crqa::parse_plot(bad.path), want2.c_str(), std::runtime_error);

    TempFile blank("plot_blank.txt", "\n  \n");
    std::string want3 = blank.path + ": empty plot";
    CHECK_THROWS_WITH_AS(crqa::parse_plot(blank.path), want3.c_str(), std::runtime_error);
}

TEST_CASE("text rendering lists plot row 0 first") {
    RecurrencePlot rp(2, 2);
    rp.set(0, 0);
    rp.set(1, 1);
    std::string path =
        (std::filesystem::temp_directory_path() / "crqa_io_test_render.txt").string();
    auto info = crqa::render_plot(rp, path, crqa::PlotFormat::txt);
    CHECK(read_all(path) == "#.\n.#\n");
    CHECK(info.out_rows == 2);
    CHECK(info.out_cols == 2);
    CHECK_FALSE(info.pooled);
    std::filesystem::remove(path);
}

TEST_CASE("PGM rendering puts plot row 0 at the bottom of the image") {
    RecurrencePlot rp(2, 3);
    rp.set(0, 2);
    std::string path =
        (std::filesystem::temp_directory_path() / "crqa_io_test_render.pgm").string();
    crqa::render_plot(rp, path, crqa::PlotFormat::pgm);
    CHECK(read_all(path) == "P2\n3 2\n1\n0 0 0\n0 0 1\n");
    std::filesystem::remove(path);
}

TEST_CASE("a saturated PGM is all max-gray") {
    RecurrencePlot rp(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rp.set(i, j);
    std::string path =
        (std::filesystem::temp_directory_path() / "crqa_io_test_ones.pgm").string();
    crqa::render_plot(rp, path, crqa::PlotFormat::pgm);
    CHECK(read_all(path) == "P2\n3 3\n1\n1 1 1\n1 1 1\n1 1 1\n");
    std::filesystem::remove(path);
}

TEST_CASE("oversized plots are max-pooled to the pixel budget") {
    std::mt19937 rng(606);
    RecurrencePlot rp(10, 7);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 7; ++j)
            if (rng() % 4 == 0) rp.set(i, j);

    std::string path =
        (std::filesystem::temp_directory_path() / "crqa_io_test_pool.txt").string();
    auto info = crqa::render_plot(rp, path, crqa::PlotFormat::txt, 5);
    CHECK(info.pooled);
    CHECK(info.block_rows == 2);
    CHECK(info.block_cols == 2);
    CHECK(info.out_rows == 5);
    CHECK(info.out_cols == 4);

    std::string want;
    for (int bi = 0; bi < 5; ++bi) {
        for (int bj = 0; bj < 4; ++bj) {
            bool any = false;
            for (int i = bi * 2; i < bi * 2 + 2 && i < 10; ++i)
                for (int j = bj * 2; j < bj * 2 + 2 && j < 7; ++j)
                    if (rp.cell(i, j)) any = true;
            want += any ? '#' : '.';
        }
        want += '\n';
    }
    CHECK(read_all(path) == want);
    std::filesystem::remove(path);
}

TEST_CASE("pooled PGM output records the block shape in a comment") {
    RecurrencePlot rp(10, 7);
    rp.set(0, 0);
    std::string path =
        (std::filesystem::temp_directory_path() / "crqa_io_test_pool.pgm").string();
    crqa::render_plot(rp, path, crqa::PlotFormat::pgm, 5);
    std::string content = read_all(path);
    CHECK(content.rfind("P2\n# max-pooled 2x2 from 10x7\n4 5\n1\n", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("a budget at least the plot size pools nothing") {
    RecurrencePlot rp(8, 8);
    rp.set(3, 4);
    std::string path =
        (std::filesystem::temp_directory_path() / "crqa_io_test_nopool.txt").string();
    auto info = crqa::render_plot(rp, path, crqa::PlotFormat::txt, 8);
    CHECK_FALSE(info.pooled);
    CHECK(info.out_rows == 8);
    CHECK(info.out_cols == 8);
    std::filesystem::remove(path);
}

TEST_CASE("rendering validates its arguments") {
    RecurrencePlot rp(2, 2);
    CHECK_THROWS_WITH_AS(crqa::render_plot(rp, "/tmp/x.txt", crqa::PlotFormat::txt, 0),
                         "pixel budget must be >= 1", std::invalid_argument);
    CHECK_THROWS_WITH_AS(crqa::render_plot(RecurrencePlot(), "/tmp/x.txt",
                                           crqa::PlotFormat::txt),
                         "empty plot", std::invalid_argument);
    CHECK_THROWS_AS(crqa::render_plot(rp, "/nonexistent/dir/x.txt", crqa::PlotFormat::txt),
                    std::runtime_error);
}
