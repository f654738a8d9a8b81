#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace citeimpact::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one subcommand (`indicators`, `correlate`, `transform`, `synth`,
/// `report`). `args` excludes the program name. Data goes to `out` (or the
/// --out file), diagnostics to `err`. Returns 0, 1 (usage), or 2 (data).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace citeimpact::cli
