#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hitcalc::report {

struct ReportRepresentative {
    std::string d_element;
    std::string lambda_element;
    bool cycle = false;
    std::optional<std::string> label;
};

// One checked claim. pass is expected == computed; all claims are integers.
struct VerdictReport {
    std::string claim;  // e.g. "thm2.1:t=1,s=2,u=1"
    std::size_t n = 0;
    unsigned d = 0;
    long expected = 0;
    long computed = 0;
    bool pass = false;
    std::vector<ReportRepresentative> representatives;
    double timing_ms = 0;
};

VerdictReport make_verdict(std::string claim, std::size_t n, unsigned d, long expected, long computed);

enum class Format { Json, Csv, Text };

// JSON: an array of objects with keys claim, n, d, expected, computed, pass,
// representatives [{d_element, lambda_element, cycle, label}], timing_ms in
// that order. CSV: header claim,n,d,expected,computed,pass. Text: one line
// per claim plus indented representatives.
std::string emit_report(std::span<const VerdictReport> reports, Format format);

bool all_pass(std::span<const VerdictReport> reports);

}  // namespace hitcalc::report
