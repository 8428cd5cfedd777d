#include "toroidal/report_json.hpp"

#include <stdexcept>

#include <json.hpp>

namespace toroidal {

namespace {

using json = nlohmann::ordered_json;

json survivor_to_json(const Survivor& s) {
    json out;
    out["order"] = order_name(s.order);
    json slopes = json::array();
    // Canonical presentation: inf, 0, 1, then the defining slope.
    slopes.push_back("inf");
    slopes.push_back("0");
    slopes.push_back("1");
    slopes.push_back(render(normal_form_tail(s.slopes)));
    out["slopes"] = std::move(slopes);
    out["boundary_selfints"] = s.boundary_selfints;
    out["c1bar_sq"] = s.c1bar_sq;
    out["c2bar"] = s.c2bar;
    return out;
}

Survivor survivor_from_json(const json& in) {
    const auto order = order_from_name(in.at("order").get<std::string>());
    if (!order) throw std::invalid_argument("unknown order in report");
    std::vector<Slope> slopes;
    for (const auto& s : in.at("slopes")) {
        slopes.push_back(parse_slope(s.get<std::string>(), *order));
    }
    Survivor out{*order, Configuration(*order, std::move(slopes)),
                 in.at("boundary_selfints").get<std::vector<Int>>(),
                 in.at("c1bar_sq").get<Int>(), in.at("c2bar").get<Int>()};
    return out;
}

} // namespace

std::string report_to_json_string(const ClassificationReport& report, int indent) {
    json out;
    json steps = json::array();
    for (const EliminationStep& step : report.steps) {
        json s;
        s["case_id"] = step.case_id;
        s["rule"] = rule_name(step.rule);
        s["citation"] = step.citation;
        s["verdict"] = verdict_name(step.verdict);
        steps.push_back(std::move(s));
    }
    out["steps"] = std::move(steps);
    out["survivor"] = report.survivor ? survivor_to_json(*report.survivor) : json(nullptr);
    return out.dump(indent);
}

ClassificationReport report_from_json_string(const std::string& text) {
    const json in = json::parse(text);
    ClassificationReport report;
    for (const auto& s : in.at("steps")) {
        const auto rule = rule_from_name(s.at("rule").get<std::string>());
        const auto verdict = verdict_from_name(s.at("verdict").get<std::string>());
        if (!rule || !verdict) throw std::invalid_argument("unknown rule or verdict in report");
        report.steps.push_back({s.at("case_id").get<std::string>(), *rule,
                                s.at("citation").get<std::string>(), *verdict});
    }
    const json& survivor = in.at("survivor");
    if (!survivor.is_null()) report.survivor = survivor_from_json(survivor);
    return report;
}

} // namespace toroidal
