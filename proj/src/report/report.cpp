#include "hitcalc/report/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace hitcalc::report {

VerdictReport make_verdict(std::string claim, std::size_t n, unsigned d, long expected, long computed)
{
    VerdictReport r;
    r.claim = std::move(claim);
    r.n = n;
    r.d = d;
    r.expected = expected;
    r.computed = computed;
    r.pass = expected == computed;
    return r;
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string emit_report(std::span<const VerdictReport> reports, Format format)
{
    switch (format) {
    case Format::Json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const VerdictReport& r : reports) {
            nlohmann::ordered_json j;
            j["claim"] = r.claim;
            j["n"] = r.n;
            j["d"] = r.d;
            j["expected"] = r.expected;
            j["computed"] = r.computed;
            j["pass"] = r.pass;
            j["representatives"] = nlohmann::ordered_json::array();
            for (const ReportRepresentative& rep : r.representatives) {
                nlohmann::ordered_json x;
                x["d_element"] = rep.d_element;
                x["lambda_element"] = rep.lambda_element;
                x["cycle"] = rep.cycle;
                x["label"] = rep.label ? nlohmann::ordered_json(*rep.label) : nlohmann::ordered_json(nullptr);
                j["representatives"].push_back(std::move(x));
            }
            j["timing_ms"] = r.timing_ms;
            arr.push_back(std::move(j));
        }
        return arr.dump(2) + "\n";
    }
    case Format::Csv: {
        std::string out = "claim,n,d,expected,computed,pass\n";
        for (const VerdictReport& r : reports)
            out += csv_field(r.claim) + "," + std::to_string(r.n) + "," + std::to_string(r.d) + "," +
                   std::to_string(r.expected) + "," + std::to_string(r.computed) + "," + (r.pass ? "true" : "false") +
                   "\n";
        return out;
    }
    case Format::Text: {
        std::string out;
        for (const VerdictReport& r : reports) {
            char ms[32];
            std::snprintf(ms, sizeof ms, "%.1f", r.timing_ms);
            out += std::string(r.pass ? "PASS " : "FAIL ") + r.claim + "  n=" + std::to_string(r.n) +
                   " d=" + std::to_string(r.d) + " expected=" + std::to_string(r.expected) +
                   " computed=" + std::to_string(r.computed) + "  (" + ms + " ms)\n";
            for (const ReportRepresentative& rep : r.representatives)
                out += "    " + rep.d_element + "  ->  " + rep.lambda_element + (rep.cycle ? "  [cycle]" : "  [NOT a cycle]") +
                       (rep.label ? "  = " + *rep.label : std::string()) + "\n";
        }
        return out;
    }
    }
    return {};
}

bool all_pass(std::span<const VerdictReport> reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const VerdictReport& r) { return r.pass; });
}

}  // namespace hitcalc::report
