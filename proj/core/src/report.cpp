#include "crqa/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace crqa {
namespace {

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

const char* engine_name(Engine e) { return e == Engine::optimized ? "optimized" : "oracle"; }

}  // namespace

std::string format_double(double v) {
    if (!std::isfinite(v)) throw std::logic_error("non-finite value in report");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void JsonWriter::separator() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!has_items_.empty()) {
        if (has_items_.back()) out_ += ',';
        has_items_.back() = true;
    }
}

JsonWriter& JsonWriter::begin_object() {
    separator();
    out_ += '{';
    has_items_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    has_items_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separator();
    out_ += '[';
    has_items_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    has_items_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
    if (has_items_.back()) out_ += ',';
    has_items_.back() = true;
    out_ += '"';
    out_ += escape_json(name);
    out_ += "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    separator();
    out_ += format_double(v);
    return *this;
}

JsonWriter& JsonWriter::value(long long v) {
    separator();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(int v) { return value(static_cast<long long>(v)); }

JsonWriter& JsonWriter::value(bool v) {
    separator();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    separator();
    out_ += '"';
    out_ += escape_json(v);
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::value(const char* v) { return value(std::string(v)); }

void write_measures(JsonWriter& w, const CrqaMeasures& m) {
    w.begin_object();
    w.key("RR").value(m.rr);
    w.key("DET").value(m.det);
    w.key("NRLINE").value(m.nrline);
    w.key("Lmax").value(m.maxline);
    w.key("L").value(m.meanline);
    w.key("ENTR").value(m.entropy);
    w.key("relENTR").value(m.rel_entropy);
    w.key("LAM").value(m.lam);
    w.key("TT").value(m.tt);
    w.end_object();
}

void write_profile(JsonWriter& w, const RecurrenceProfile& p) {
    w.begin_object();
    w.key("positions").begin_array();
    for (int pos : p.positions) w.value(pos);
    w.end_array();
    w.key("values").begin_array();
    for (double v : p.values) w.value(v);
    w.end_array();
    w.key("maxrec").value(p.maxrec);
    w.key("maxpos").value(p.maxpos);
    w.key("warnings").begin_array();
    for (const auto& warning : p.warnings) w.value(warning);
    w.end_array();
    w.end_object();
}

void write_whiteline(JsonWriter& w, const WhitelineStats& s) {
    w.begin_object();
    w.key("count").value(s.count);
    w.key("mean_length").value(s.mean_length);
    w.end_object();
}

std::string profile_csv(const RecurrenceProfile& p) {
    std::string out = "position,value\n";
    for (std::size_t i = 0; i < p.positions.size(); ++i) {
        out += std::to_string(p.positions[i]);
        out += ',';
        out += format_double(p.values[i]);
        out += '\n';
    }
    return out;
}

std::string contingency_csv(const ContingencyTable& ct) {
    std::string out;
    for (int code : ct.alphabet) {
        out += ',';
        out += std::to_string(code);
    }
    out += '\n';
    int k = static_cast<int>(ct.alphabet.size());
    for (int i = 0; i < k; ++i) {
        out += std::to_string(ct.alphabet[static_cast<std::size_t>(i)]);
        for (int j = 0; j < k; ++j) {
            out += ',';
            out += std::to_string(ct.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string bench_records_csv(const std::vector<BenchRecord>& records) {
    std::string out = "size,iteration,engine,elapsed_seconds,RR,DET,NRLINE,Lmax,L,ENTR,relENTR,LAM,TT\n";
    for (const auto& r : records) {
        out += std::to_string(r.size);
        out += ',';
        out += std::to_string(r.iteration);
        out += ',';
        out += engine_name(r.engine);
        out += ',';
        out += format_double(r.elapsed_seconds);
        const CrqaMeasures& m = r.measures;
        out += ',';
        out += format_double(m.rr);
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
        out += '\n';
    }
    return out;
}

std::string bench_timings_gnuplot(const BenchSummary& summary) {
    std::string out = "# size mean_elapsed_seconds\n";
    for (const auto& [size, secs] : summary.mean_elapsed_by_size) {
        out += std::to_string(size);
        out += ' ';
        out += format_double(secs);
        out += '\n';
    }
    return out;
}

void write_bench_summary(JsonWriter& w, const BenchSummary& summary) {
    w.begin_object();
    w.key("consistency").begin_array();
    for (const auto& row : summary.consistency) {
        w.begin_object();
        w.key("measure").value(row.name);
        w.key("mean_abs_diff").value(row.mean_abs_diff);
        w.key("sd_abs_diff").value(row.sd_abs_diff);
        w.key("correlation").value(row.correlation);
        w.key("constant").value(row.constant);
        w.end_object();
    }
    w.end_array();
    w.key("mean_elapsed_by_size").begin_array();
    for (const auto& [size, secs] : summary.mean_elapsed_by_size) {
        w.begin_object();
        w.key("size").value(size);
        w.key("mean_elapsed_seconds").value(secs);
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace crqa
