#pragma once

#include <string>
#include <vector>

#include "genschur/json_io.hpp"

namespace genschur {

// Exit statuses of the request runner.
enum : int {
    kExitOk = 0,
    kExitDomainError = 1,
    kExitSchemaError = 2,
    kExitVerifyFailed = 3,
};

struct CliOverrides {
    long seed = -1;       // -1: payload / default
    long cutoff = -1;
    long truncation = -1; // overrides basis N for named kinds
};

const std::vector<std::string>& subcommands();

/// Executes one request. `out` receives the deterministic JSON result (or an
/// error object); the return value is the process exit status.
int run_request(const std::string& subcommand, const json& payload, json& out,
                const CliOverrides& overrides = {});

/// Serialized form used everywhere: 2-space indent plus trailing newline, so
/// identical requests produce byte-identical files.
std::string dump_stable(const json& j);

/// Library operation -> owning subcommand. Every operation appears exactly once;
/// the pair list is the source of truth for the coverage test.
const std::vector<std::pair<std::string, std::string>>& operation_map();

} // namespace genschur
