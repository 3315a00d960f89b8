#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

// Invariant suites behind `antireg verify`. Each check sweeps n upward and
// stops at the first failing n.

namespace antireg {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
    std::optional<std::size_t> first_failing_n;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool passed() const;
    void print(std::ostream& os) const;
};

// Ranges where a check is more expensive than O(n^2) are capped; the cap is
// stated in the check's detail line.
inline constexpr std::size_t kDeterminantCap = 200;
inline constexpr std::size_t kNumericCap = 500;
inline constexpr std::size_t kOracleCap = 12;
inline constexpr std::size_t kCharPolyCap = 64;
inline constexpr std::size_t kProductCap = 60;
inline constexpr std::size_t kEnumerationCap = 12;

SuiteReport verify_similarity(std::size_t n_max);
SuiteReport verify_determinant(std::size_t n_max);
SuiteReport verify_spectrum(std::size_t n_max);
SuiteReport verify_degrees(std::size_t n_max);

/// "similarity" | "determinant" | "spectrum" | "degrees" | "all".
/// Throws InvalidInput for an unknown suite name or n_max = 0.
std::vector<SuiteReport> run_suites(std::string_view suite, std::size_t n_max);

}  // namespace antireg
