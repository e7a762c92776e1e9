#include "crqa/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace crqa {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    cells.push_back(trim(cur));
    return cells;
}

bool parse_number(const std::string& text, double& out) {
    if (text.empty()) return false;
    const char* begin = text.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end == begin + text.size();
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

int CodeTable::code_for(const std::string& label) {
    auto it = codes.find(label);
    if (it != codes.end()) return it->second;
    int code = static_cast<int>(labels.size());
    labels.push_back(label);
    codes.emplace(label, code);
    return code;
}

TimeSeries parse_input(const std::string& path, int column, SeriesKind kind,
                       bool header, CodeTable* table) {
    if (column < 1) throw std::invalid_argument("column must be >= 1");
    auto lines = read_lines(path);

    // Collect the selected cell of every data row first; categorical
    // files switch wholesale to label coding when any cell is not a
    // plain number.
    std::vector<std::pair<std::string, std::size_t>> cells;  // text, 1-based line
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        if (header && ln == 0) continue;
        if (trim(lines[ln]).empty()) continue;
        auto row = split_csv(lines[ln]);
        if (static_cast<std::size_t>(column) > row.size())
            throw std::runtime_error(path + ": line " + std::to_string(ln + 1) + " has only " +
                                     std::to_string(row.size()) + " column(s)");
        cells.emplace_back(row[static_cast<std::size_t>(column - 1)], ln + 1);
    }
    if (cells.empty()) throw std::runtime_error(path + ": no data rows");

    TimeSeries ts{{}, kind};
    ts.values.reserve(cells.size());

    if (kind == SeriesKind::continuous) {
        for (const auto& [text, ln] : cells) {
            double v = 0.0;
            if (!parse_number(text, v))
                throw std::runtime_error(path + ": line " + std::to_string(ln) +
                                         ": cannot parse '" + text + "' as a number");
            if (!std::isfinite(v))
                throw std::runtime_error(path + ": line " + std::to_string(ln) +
                                         ": non-finite value");
            ts.values.push_back(v);
        }
        return ts;
    }

    bool all_numeric = true;
    for (const auto& [text, ln] : cells) {
        (void)ln;
        double v = 0.0;
        if (!parse_number(text, v)) {
            all_numeric = false;
            break;
        }
    }

    if (all_numeric) {
        for (const auto& [text, ln] : cells) {
            double v = 0.0;
            parse_number(text, v);
            if (!std::isfinite(v) || v < 0.0 || std::floor(v) != v)
                throw std::runtime_error(path + ": line " + std::to_string(ln) +
                                         ": categorical codes must be non-negative integers");
            ts.values.push_back(v);
        }
        return ts;
    }

    CodeTable local;
    CodeTable* t = table ? table : &local;
    for (const auto& [text, ln] : cells) {
        (void)ln;
        ts.values.push_back(static_cast<double>(t->code_for(text)));
    }
    return ts;
}

RecurrencePlot parse_plot(const std::string& path) {
    auto lines = read_lines(path);
    std::vector<std::vector<char>> rows;
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        std::string t = trim(lines[ln]);
        if (t.empty()) continue;
        std::vector<char> row;
        std::string cell;
        // Accept comma- or whitespace-separated cells.
        for (char& ch : t)
            if (ch == ',') ch = ' ';
        std::istringstream ss(t);
        while (ss >> cell) {
            if (cell == "0")
                row.push_back(0);
            else if (cell == "1")
                row.push_back(1);
            else
                throw std::runtime_error(path + ": line " + std::to_string(ln + 1) +
                                         ": plot cells must be 0 or 1");
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error(path + ": line " + std::to_string(ln + 1) +
                                     ": ragged plot rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error(path + ": empty plot");

    RecurrencePlot rp(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j]) rp.set(static_cast<int>(i), static_cast<int>(j));
    return rp;
}

void write_pair_csv(const std::string& path, const TimeSeries& c, const TimeSeries& s) {
    if (c.size() != s.size()) throw std::invalid_argument("pair series differ in length");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (std::size_t i = 0; i < c.size(); ++i)
        out << static_cast<long long>(c.values[i]) << ',' << static_cast<long long>(s.values[i])
            << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace crqa
