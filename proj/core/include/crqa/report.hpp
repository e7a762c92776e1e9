#pragma once

#include <string>
#include <vector>

#include "crqa/bench.hpp"
#include "crqa/categorical.hpp"
#include "crqa/measures.hpp"
#include "crqa/profiles.hpp"

namespace crqa {

/// Minimal deterministic JSON emitter: keys appear in insertion order
/// and floating-point values are printed with 17 significant digits, so
/// identical inputs serialize to identical bytes.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& name);
    JsonWriter& value(double v);
    JsonWriter& value(long long v);
    JsonWriter& value(int v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v);

    const std::string& str() const { return out_; }

private:
    void separator();

    std::string out_;
    std::vector<bool> has_items_;  // per open scope
    bool pending_key_ = false;
};

/// Fixed-format float used everywhere a number leaves the library
/// (17 significant digits, shortest spelling printf's %g gives).
std::string format_double(double v);

void write_measures(JsonWriter& w, const CrqaMeasures& m);
void write_profile(JsonWriter& w, const RecurrenceProfile& p);
void write_whiteline(JsonWriter& w, const WhitelineStats& s);

std::string profile_csv(const RecurrenceProfile& p);
std::string contingency_csv(const ContingencyTable& ct);
std::string bench_records_csv(const std::vector<BenchRecord>& records);
std::string bench_timings_gnuplot(const BenchSummary& summary);
void write_bench_summary(JsonWriter& w, const BenchSummary& summary);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace crqa
