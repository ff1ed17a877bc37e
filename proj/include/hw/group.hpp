#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hw {

inline constexpr unsigned kMaxS = 16;
inline constexpr unsigned kDefaultEnumerationCap = 10;

/// Largest s for which enumerations are materialized. Defaults to 10 and can
/// be overridden with the HW_MAX_S environment variable (clamped to kMaxS).
unsigned enumeration_cap();

/// Throws ResourceError when s is above `enumeration_cap()`.
void require_enumerable(unsigned s, const char* what);

/// The group HW_N with N = 2^s. All residues are reduced by masking.
class GroupParams {
public:
    explicit GroupParams(unsigned s);

    unsigned s() const noexcept { return s_; }
    std::uint32_t N() const noexcept { return std::uint32_t{1} << s_; }
    std::uint32_t mask() const noexcept { return N() - 1; }
    std::uint64_t order() const noexcept { return std::uint64_t{1} << (3 * s_); }

    std::uint32_t reduce(std::uint64_t x) const noexcept {
        return static_cast<std::uint32_t>(x) & mask();
    }
    std::uint32_t negate(std::uint32_t x) const noexcept { return (N() - x) & mask(); }

    friend bool operator==(const GroupParams&, const GroupParams&) = default;

private:
    unsigned s_;
};

/// 2-adic valuation of x mod 2^s, with the convention v(0) = s.
unsigned two_adic_valuation(std::uint64_t x, unsigned s) noexcept;

/// The normal form z^m x^n y^l.
struct GroupElement {
    std::uint32_t m = 0;
    std::uint32_t n = 0;
    std::uint32_t l = 0;

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity_element() noexcept;

/// Throws ParameterError if any residue is outside 0..N-1.
void validate(const GroupElement& g, const GroupParams& params);

/// (m,n,l)·(m',n',l') = (m+m'+l·n', n+n', l+l'), from yx = zxy.
GroupElement multiply(const GroupElement& a, const GroupElement& b, const GroupParams& params);
GroupElement inverse(const GroupElement& a, const GroupParams& params);
/// h·g·h⁻¹
GroupElement conjugate(const GroupElement& g, const GroupElement& h, const GroupParams& params);
GroupElement power(const GroupElement& g, std::uint64_t e, const GroupParams& params);

/// Parses "m,n,l" (decimal residues, validated against params).
GroupElement parse_element(const std::string& text, const GroupParams& params);
std::string to_string(const GroupElement& g);

/// A conjugacy class {z^α g : α a multiple of 2^k}.
struct ConjugacyClass {
    unsigned s = 1;
    GroupElement representative;  // m reduced into 0..2^k-1
    unsigned k = 0;               // min(v(n), v(l)) with v(0) = s
    std::uint64_t size = 1;       // 2^(s-k)

    std::vector<GroupElement> members() const;
    bool contains(const GroupElement& g) const noexcept;

    friend bool operator==(const ConjugacyClass&, const ConjugacyClass&) = default;
};

ConjugacyClass conjugacy_class_of(const GroupElement& g, const GroupParams& params);

/// All classes, ordered lexicographically by (k, representative).
std::vector<ConjugacyClass> enumerate_classes(const GroupParams& params);

/// Closed-form class count, evaluated exactly. Valid for 1 <= s <= 31.
std::uint64_t class_count_formula(unsigned s);

} // namespace hw
