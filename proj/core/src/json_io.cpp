#include "qslice/json_io.hpp"

#include <json.hpp>

#include "qslice/errors.hpp"
#include "qslice/text.hpp"

namespace qslice {

using nlohmann::json;

std::string stem_to_json(const StemFunction& f, int indent) {
    json components = json::object();
    for (std::uint32_t bits = 0; bits < (1u << f.arity()); ++bits) {
        SubsetIndex k(bits);
        components[to_string(k)] = f.component(k).to_string();
    }
    json out{{"arity", f.arity()}, {"components", components}};
    return out.dump(indent);
}

StemFunction stem_from_json(const std::string& text) {
    json in = json::parse(text);
    if (!in.contains("arity") || !in["arity"].is_number_unsigned())
        throw Error("stem JSON needs an unsigned \"arity\" field");
    std::uint32_t arity = in["arity"].get<std::uint32_t>();
    StemFunction f(arity);
    if (in.contains("components")) {
        for (const auto& [key, value] : in["components"].items()) {
            SubsetIndex k = parse_subset(key, arity);
            f.add_component(k, parse_polynomial(value.get<std::string>(), arity));
        }
    }
    return f;
}

std::string classification_to_json(const ClassificationReport& report, int indent) {
    json vars = json::array();
    for (const VariableFlags& flags : report.per_variable) {
        json witnesses = json::array();
        for (const Witness& w : flags.witnesses)
            witnesses.push_back({{"component", to_string(w.component)}, {"reason", w.reason}});
        vars.push_back({{"h", flags.var},
                        {"slice_wrt", flags.slice_wrt},
                        {"slice_regular_wrt", flags.slice_regular_wrt},
                        {"circular_wrt", flags.circular_wrt},
                        {"witnesses", witnesses}});
    }
    json out{{"arity", report.arity},
             {"slice_regular", report.slice_regular},
             {"variables", vars}};
    return out.dump(indent);
}

std::string verification_to_json(const VerificationReport& report, int indent) {
    json out{{"theorem", report.theorem},   {"statement", report.statement},
             {"samples", report.samples},   {"max_residual", report.max_residual},
             {"tolerance", report.tolerance}, {"pass", report.pass},
             {"seed", report.seed}};
    if (report.var != 0) out["variable"] = report.var;
    return out.dump(indent);
}

std::string evaluation_to_json(const PointHn& point, const DQuat& value, int indent) {
    json pts = json::array();
    for (const DQuat& q : point) pts.push_back({q.w, q.x, q.y, q.z});
    json out{{"point", pts}, {"value", {value.w, value.x, value.y, value.z}}};
    return out.dump(indent);
}

std::string error_to_json(const std::string& type, const std::string& message, int indent) {
    json out{{"error", {{"type", type}, {"message", message}}}};
    return out.dump(indent);
}

}  // namespace qslice
