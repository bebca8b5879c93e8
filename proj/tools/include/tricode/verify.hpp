#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace tricode::cli {

enum class ItemStatus {
    Match,
    Mismatch,
    Skipped,
    /// Remarks that are observed, not proved; never affect the exit code.
    RemarkHeld,
    RemarkViolated,
};

std::string_view to_string(ItemStatus s) noexcept;

/// One oracle comparison.
struct VerifyItem {
    std::string suite;
    std::string name;
    std::string expected;
    std::string actual;
    ItemStatus status = ItemStatus::Match;
    std::string note;
};

struct VerifyOptions {
    int m = 0;
    std::uint64_t budget = 0;
    unsigned parallelism = 1;
    std::uint64_t seed = 1;
    /// Free-form progress messages (stderr in the CLI).
    std::function<void(const std::string&)> progress;
};

inline constexpr std::array<std::string_view, 5> kSuites{"moments", "expsum", "variety", "codewords", "dual"};

/// Runs one suite, or all of them for "all". Throws ConfigurationError for unknown suites
/// or unsupported m.
std::vector<VerifyItem> run_suite(std::string_view suite, const VerifyOptions& options);

} // namespace tricode::cli
