#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hw {

enum class VerifyLevel { Full, Sampled };

const char* to_string(VerifyLevel level) noexcept;
/// "full" or "sampled"; throws ParameterError otherwise.
VerifyLevel parse_verify_level(const std::string& text);

/// Full verification is refused above this s.
inline constexpr unsigned kFullVerifyMaxS = 4;
/// Pairwise checks are exhaustive up to this s and sampled above it.
inline constexpr unsigned kExhaustiveMaxS = 2;
/// Per-irrep checks run up to this s; above it only the counting formulas do.
inline constexpr unsigned kPerIrrepMaxS = 4;

struct CheckResult {
    std::string name;
    bool passed = true;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    bool has_residual = false;
    double max_residual = 0.0;
    std::string detail;  // first failure, if any
    double elapsed_seconds = 0.0;
};

struct VerifyReport {
    unsigned s = 1;
    VerifyLevel level = VerifyLevel::Full;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool passed() const noexcept;
};

/// Runs every check that applies at this s and level, in a fixed order.
/// Throws ParameterError for s outside 1..kMaxS, or s > kFullVerifyMaxS at
/// the full level.
VerifyReport verify(unsigned s, VerifyLevel level, std::uint64_t seed);

/// One `format_fusion_rule` line per unordered pair in enumeration order.
/// With `nontrivial_only`, pairs involving a p = 0 irrep are skipped.
std::string fusion_listing(unsigned s, bool nontrivial_only);

/// One `format_orbit` line per distinct orbit.
std::string orbit_listing(unsigned s);

namespace golden {
const std::string& fusion_hw2();
const std::string& fusion_hw4();
const std::string& orbits_hw4();
} // namespace golden

} // namespace hw
