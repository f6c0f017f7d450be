#include "kloc/cli/report.hpp"

#include "kloc/error.hpp"

namespace kloc {

using nlohmann::json;

json to_json(AnalysisReport const & r)
{
    json obs = json::array();
    for (auto const & o : r.obstructions) obs.push_back({{"n", o.n}, {"invariants", o.invariants}, {"route", o.route}});
    return json{{"field", r.field},
                {"p", r.p},
                {"i", r.i},
                {"verdict", {{"kind", r.verdict_kind}, {"level", r.verdict_level}}},
                {"obstructions", obs},
                {"jaulent", {{"hypotheses", r.hypotheses}, {"conclusion", r.conclusion}}},
                {"caveats", r.caveats},
                {"timing_ms", r.timing_ms}};
}

AnalysisReport report_from_json(json const & j)
{
    try {
        AnalysisReport r;
        r.field = j.at("field").get<std::string>();
        r.p = j.at("p").get<std::uint64_t>();
        r.i = j.at("i").get<std::uint64_t>();
        r.verdict_kind = j.at("verdict").at("kind").get<std::string>();
        r.verdict_level = j.at("verdict").at("level").get<unsigned>();
        for (auto const & o : j.at("obstructions"))
            r.obstructions.push_back({o.at("n").get<unsigned>(), o.at("invariants").get<std::vector<std::int64_t>>(),
                                      o.at("route").get<std::string>()});
        auto h = j.at("jaulent").at("hypotheses").get<std::vector<bool>>();
        if (h.size() != 4) throw Error(ErrorKind::ParseError, "expected four hypotheses");
        for (std::size_t k = 0; k < 4; ++k) r.hypotheses[k] = h[k];
        r.conclusion = j.at("jaulent").at("conclusion").get<bool>();
        r.caveats = j.at("caveats").get<std::vector<std::string>>();
        r.timing_ms = j.at("timing_ms").get<std::int64_t>();
        return r;
    } catch (json::exception const & e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

} // namespace kloc
