#pragma once

#include <cstdint>
#include <vector>

#include "hw/irrep.hpp"

namespace hw {

struct FusionTerm {
    IrrepLabel label;
    std::uint64_t multiplicity = 0;

    friend bool operator==(const FusionTerm&, const FusionTerm&) = default;
};

struct FusionRow {
    IrrepLabel left;
    IrrepLabel right;
    std::vector<FusionTerm> terms;
};

struct FusionTable {
    unsigned s = 1;
    std::vector<FusionRow> rows;  // unordered pairs (i <= j) in enumeration order
};

/// Which group elements the character-sum oracle visits.
enum class BruteForceSupport {
    Restricted,  // n, l multiples of the largest of the three dimensions
    Naive,       // all 2^(3s) elements, characters taken as matrix traces
};

/// (1/2^(3s)) Σ_g χ1(g) χ2(g) χ3(g)*, computed exactly in Z[ω].
std::int64_t fusion_coeff_bruteforce(const IrrepLabel& d1, const IrrepLabel& d2, const IrrepLabel& d3,
                                     BruteForceSupport support = BruteForceSupport::Restricted);

/// Closed-form multiplicity 2^(s - t2 + t1 - t3) under the p, q, r constraints.
std::uint64_t fusion_coeff_closed(const IrrepLabel& d1, const IrrepLabel& d2, const IrrepLabel& d3);

/// Decomposition of d1 ⊗ d2, sorted in label order.
std::vector<FusionTerm> fuse(const IrrepLabel& d1, const IrrepLabel& d2);

inline constexpr unsigned kFusionTableMaxS = 4;

FusionTable fusion_table(unsigned s);

} // namespace hw
