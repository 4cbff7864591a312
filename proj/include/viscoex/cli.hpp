#pragma once

#include <iosfwd>
#include <string>

#include "viscoex/config.hpp"
#include "viscoex/table.hpp"

namespace viscoex::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 2;
inline constexpr int exit_numerical = 3;

// One table builder per subcommand.
Table response_table(const RunConfig& cfg);
Table maxwell_table(const RunConfig& cfg);
Table dispersion_table(const RunConfig& cfg);
Table exchange_table(const RunConfig& cfg);
Table transition_table(const RunConfig& cfg, std::string* summary = nullptr);

/**
 * Entry point: `<subcommand> --config PATH --out PATH [--format csv|json] [--seed U64]`.
 * Returns 0 on success, 2 on usage or config errors, 3 on numerical failure.
 */
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace viscoex::cli
