#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unfold {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitCheckFailed = 2;

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out`, diagnostics to `err`; the return value is the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Grouped listing of the DenseInStratumComponent triangles with odd k ≤ k_max,
/// distinct q_i and gcd 1, as printed by `table`.
std::string dense_table(long long k_max, unsigned workers = 0);

}  // namespace unfold
