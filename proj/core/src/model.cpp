#include "ltlfmt/model.hpp"

#include "ltlfmt/encoder/ground.hpp"

namespace ltlfmt {

Trace extract_trace(smt::Session& session, const Signature& sig, std::size_t k)
{
    std::vector<std::string> symbols;
    for (std::size_t i = 0; i <= k; ++i)
        for (const auto& [name, sort] : sig.state_vars())
            symbols.push_back(stepped_name(name, i));
    auto values = session.model_values(symbols);

    Trace trace;
    trace.states.resize(k + 1);
    for (std::size_t i = 0; i <= k; ++i)
        for (const auto& [name, sort] : sig.state_vars()) {
            auto it = values.find(stepped_name(name, i));
            if (it != values.end()) {
                trace.states[i].emplace(name, it->second);
            } else {
                trace.states[i].emplace(name, default_value(sort));
                trace.model_incomplete = true;
            }
        }
    trace.interp = session.model_interpretation();
    return trace;
}

} // namespace ltlfmt
