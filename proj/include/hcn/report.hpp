#ifndef HCN_REPORT_HPP
#define HCN_REPORT_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hcn/convolution.hpp"
#include "hcn/identities.hpp"

namespace hcn {

using Json = nlohmann::ordered_json; // stable key order

/// Envelope for everything the CLI emits as JSON: command, parameters, result rows,
/// summary statistics, tool version, wall time. Round-trips losslessly.
struct ReportDocument {
    std::string command;
    Json parameters = Json::object();
    Json rows = Json::array();
    Json summary = Json::object();
    std::string tool_version;
    double wall_time_seconds = 0;
};

Json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const Json& j);

Json to_json(const VerificationReport& report);

// Shortest-round-trip decimal formatting (std::to_chars): locale-free and
// deterministic, so identical inputs give byte-identical files.
std::string format_double(double x);

// CSV schema: X,S_num,S_den,main,secondary,residual,residual2
void write_sum_csv(std::ostream& os, const ConvolutionReport& report);

} // namespace hcn

#endif
