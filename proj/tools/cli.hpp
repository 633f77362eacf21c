#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace latgeo::cli {

/// Runs one subcommand. The structured report goes to `out`, diagnostics to
/// `err`. Returns 0 on success, 1 on a domain error (the report then carries
/// the error code), 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct OpMapping {
    const char* operation;
    const char* subcommand;
};

/// The operation -> subcommand dispatch table; every library operation is
/// reachable from exactly one subcommand.
std::span<const OpMapping> operation_dispatch_table();

} // namespace latgeo::cli
