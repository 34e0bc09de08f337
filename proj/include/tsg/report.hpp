#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace tsg {

/// One CLI invocation.  Identical configs (including seed) must produce
/// byte-identical JSON reports; wall-clock timing is therefore opt-in.
struct RunConfig {
    std::string command;            // metric | kakutani | polar | hull |
                                    // monothetic | adic (cmd_ prefix accepted)
    nlohmann::json params;
    std::string format = "json";    // json | csv
    std::uint64_t seed = 0;
    bool timing = false;
};

struct Report {
    nlohmann::json doc;             // command, inputs, seed, results, verification
    bool verified = true;           // every verification check passed
    std::string csv;                // two-column trace or key,value rows

    std::string rendered(const std::string& format) const;
};

/// Dispatch a command.  Throws invalid_argument on bad parameters,
/// budget_error on cap/budget exhaustion.
Report run_command(const RunConfig& cfg);

} // namespace tsg
