#include "ltlfmt/trace_json.hpp"

#include <json.hpp>

#include "ltlfmt/errors.hpp"

namespace ltlfmt {

std::string to_json(const Trace& trace, int indent)
{
    nlohmann::ordered_json doc;
    doc["length"] = trace.length();
    auto states = nlohmann::ordered_json::array();
    for (const auto& state : trace.states) {
        nlohmann::ordered_json s = nlohmann::ordered_json::object();
        for (const auto& [name, value] : state)
            s[name] = to_string(value);
        states.push_back(std::move(s));
    }
    doc["states"] = std::move(states);
    if (trace.model_incomplete)
        doc["model_incomplete"] = true;
    return doc.dump(indent);
}

Trace trace_from_json(std::string_view text, const Signature& sig)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("trace JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("states") || !doc["states"].is_array())
        throw Error("trace JSON: expected an object with a \"states\" array");

    Trace trace;
    for (const auto& s : doc["states"]) {
        if (!s.is_object())
            throw Error("trace JSON: state is not an object");
        State state;
        for (const auto& [name, value] : s.items()) {
            auto sort = sig.var_sort(name);
            if (!sort)
                throw Error("trace JSON: unknown variable " + name);
            if (!value.is_string())
                throw Error("trace JSON: value of " + name + " is not a string");
            auto v = parse_value(value.get<std::string>(), *sort);
            if (!v)
                throw Error("trace JSON: bad value \"" + value.get<std::string>() + "\" for " + name);
            state.emplace(name, std::move(*v));
        }
        trace.states.push_back(std::move(state));
    }
    if (doc.contains("length") && doc["length"] != trace.length())
        throw Error("trace JSON: length does not match the number of states");
    if (trace.states.empty())
        throw Error("trace JSON: a trace has at least one state");
    trace.model_incomplete = doc.value("model_incomplete", false);
    return trace;
}

} // namespace ltlfmt
