#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "braille/errors.hpp"
#include "braille/metrics.hpp"

namespace braille {

struct ReportRow {
    std::string condition; // e.g. "5%", "plain", "blur 3"
    std::string method;    // "ours" or "baseline"
    std::uint64_t seed = 0;
    Metrics metrics;
};

/// Experiment results, one row per (condition, method). `metadata` holds
/// run details that are not per-row (dictionary, table, timestamp, ...).
struct Report {
    std::string experiment; // "a" or "b"
    std::vector<ReportRow> rows;
    std::map<std::string, std::string> metadata;

    const ReportRow* find(const std::string& condition, const std::string& method) const
    {
        for (const auto& r : rows) {
            if (r.condition == condition && r.method == method) {
                return &r;
            }
        }
        return nullptr;
    }
};

inline constexpr const char* kCsvHeader =
    "experiment,condition,method,seed,tokens,avg_levenshtein,hit_rate,char_error,word_error,dict_coverage";

inline std::string format_fixed(double v, int digits = 4)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

/// CSV with the fixed `kCsvHeader` columns. Rows only; metadata is left out
/// so identical runs give identical bytes.
inline void write_csv(std::ostream& out, const Report& report)
{
    out << kCsvHeader << '\n';
    for (const auto& r : report.rows) {
        const auto& m = r.metrics;
        out << report.experiment << ',' << r.condition << ',' << r.method << ',' << r.seed << ',' << m.tokens << ','
            << format_fixed(m.avg_levenshtein) << ',' << format_fixed(m.hit_rate) << ','
            << format_fixed(m.char_error) << ',' << format_fixed(m.word_error) << ','
            << format_fixed(m.dict_coverage) << '\n';
    }
}

inline void write_csv(const std::string& path, const Report& report)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw BrailleError("cannot write report '" + path + "'");
    }
    write_csv(out, report);
}

inline void print_table(std::ostream& out, const Report& report)
{
    char line[256];
    std::snprintf(line, sizeof line, "%-12s %-9s %7s %9s %9s %9s %9s %9s\n", "condition", "method", "tokens",
                  "avg_lev", "hit%", "char_err%", "word_err%", "coverage%");
    out << line;
    for (const auto& r : report.rows) {
        const auto& m = r.metrics;
        std::snprintf(line, sizeof line, "%-12s %-9s %7zu %9.3f %9.2f %9.2f %9.2f %9.2f\n", r.condition.c_str(),
                      r.method.c_str(), m.tokens, m.avg_levenshtein, m.hit_rate, m.char_error, m.word_error,
                      m.dict_coverage);
        out << line;
    }
    for (const auto& [k, v] : report.metadata) {
        out << k << ": " << v << '\n';
    }
}

} // namespace braille
