#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "smcstrict/parser.hpp"

namespace smc {

struct RunOptions {
    bool json = false;
    // default depth for suites and strictify-report when the command gives none
    int depth = 3;
    std::uint64_t seed = 1;
    std::uint64_t samples = 1000;
};

// Executes a resolved program. Results go to `out`, diagnostics belong to the
// caller (thrown errors). Returns 0 on success, 1 if any check or suite
// failed.
int run_program(const ResolvedProgram& rp, const RunOptions& opts, std::ostream& out);

}  // namespace smc
