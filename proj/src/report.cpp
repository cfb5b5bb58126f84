#include "hcn/report.hpp"

#include <charconv>
#include <ostream>

#include "hcn/errors.hpp"
#include "hcn/rational.hpp"

namespace hcn {

std::string to_fraction_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

Json to_json(const ReportDocument& doc) {
    Json j;
    j["command"] = doc.command;
    j["parameters"] = doc.parameters;
    j["rows"] = doc.rows;
    j["summary"] = doc.summary;
    j["tool_version"] = doc.tool_version;
    j["wall_time_seconds"] = doc.wall_time_seconds;
    return j;
}

ReportDocument report_from_json(const Json& j) {
    ReportDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.parameters = j.at("parameters");
    doc.rows = j.at("rows");
    doc.summary = j.at("summary");
    doc.tool_version = j.at("tool_version").get<std::string>();
    doc.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    return doc;
}

Json to_json(const VerificationReport& report) {
    Json j;
    j["suite"] = report.suite;
    j["parameters"] = report.parameters;
    j["checked"] = report.checked;
    j["failures"] = report.failures;
    j["max_discrepancy"] = report.max_discrepancy;
    j["witnesses"] = report.witnesses;
    return j;
}

void write_sum_csv(std::ostream& os, const ConvolutionReport& report) {
    os << "X,S_num,S_den,main,secondary,residual,residual2\n";
    for (const ConvolutionRow& row : report.rows) {
        os << row.X << ',' << numerator(row.sharp).str() << ','
           << denominator(row.sharp).str() << ',' << format_double(row.main) << ','
           << format_double(row.secondary) << ',' << format_double(row.residual) << ','
           << format_double(row.residual2) << '\n';
    }
}

} // namespace hcn
