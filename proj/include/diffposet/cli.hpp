#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace diffposet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

enum class PosetKind { Young, YoungPower, Fibonacci, File };

struct PosetSpec {
    PosetKind kind = PosetKind::Young;
    std::optional<int> r;           // young-power / fibonacci parameter
    std::optional<std::string> path;  // file kind
    int max_rank = 0;
};

/// Parses "young" | "young-power:R" | "fibonacci:R" | "file:PATH".
/// Throws std::invalid_argument on anything else.
PosetSpec parse_poset_spec(const std::string& text);

/// Runs one CLI invocation. args exclude the program name
/// (e.g. {"gaps", "--poset", "young", "--max-rank", "5"}). The report goes
/// to `out` (or --out), diagnostics to `err`. Returns the exit status:
/// 0 success, 1 failed verification/certification, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diffposet
