#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace atf {

class SuiteError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxSuiteDepth = 16;
inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct SuiteSpec {
    std::string name;
    std::optional<int> depth;  // suite default when absent
    std::uint64_t seed = kDefaultSeed;
    std::string selector = "all";  // catalog script id or "all"
};

struct SuiteReport {
    std::string name;
    int depth = 0;
    std::uint64_t seed = 0;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_counterexample;
    std::vector<std::string> lines;

    bool passed() const { return checks > 0 && failures == 0; }
    int exit_code() const { return passed() ? 0 : 1; }
};

std::vector<std::string> suite_names();
// Throws SuiteError for unknown names and depths beyond the guard.
SuiteReport run_suite(const SuiteSpec& spec);

}  // namespace atf
