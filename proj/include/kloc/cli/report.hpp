#ifndef KLOC_CLI_REPORT_HPP
#define KLOC_CLI_REPORT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace kloc {

struct ObstructionSummary {
    unsigned n = 0;
    std::vector<std::int64_t> invariants;
    std::string route;
    bool operator==(ObstructionSummary const &) const = default;
};

struct AnalysisReport {
    std::string field;
    std::uint64_t p = 0;
    std::uint64_t i = 0;
    std::string verdict_kind;
    unsigned verdict_level = 0;
    std::vector<ObstructionSummary> obstructions;
    std::array<bool, 4> hypotheses{};
    bool conclusion = false;
    std::vector<std::string> caveats;
    std::int64_t timing_ms = 0;
    bool operator==(AnalysisReport const &) const = default;
};

nlohmann::json to_json(AnalysisReport const & r);
/* throws ParseError on schema violations */
AnalysisReport report_from_json(nlohmann::json const & j);

} // namespace kloc

#endif
