#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hw/cyclotomic.hpp"
#include "hw/group.hpp"
#include "hw/irrep.hpp"

namespace hw {

/// scale·ω^exponent with ω = exp(2πi/modulus). Every character value of
/// HW_{2^s} has this form, so it is an exact representation.
struct CharValue {
    std::uint64_t scale = 0;
    std::uint32_t exponent = 0;
    std::uint32_t modulus = 1;

    bool is_zero() const noexcept { return scale == 0; }
    CycInt to_cyc() const;
    /// "0" or "scale*w^exponent".
    std::string to_string() const;

    friend bool operator==(const CharValue& a, const CharValue& b) noexcept {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.scale == b.scale && a.exponent == b.exponent && a.modulus == b.modulus;
    }
};

/// χ(g) via the nonzero-support closed form. The label must be canonical.
CharValue character(const IrrepLabel& label, const GroupElement& g);

/// Same closed form for any triple; valid because it is the trace of
/// `induced_matrix_for_triple`.
CharValue character_for_triple(unsigned s, std::uint32_t p, std::uint32_t q, std::uint32_t r,
                               const GroupElement& g);

/// Σ_g |χ(g)|², summed exactly over the support of χ.
std::int64_t character_norm_squared(const IrrepLabel& label);

/// True iff the two triples have equal characters on every class.
bool characters_equal(unsigned s, const LabelTriple& a, const LabelTriple& b);

struct CharacterTable {
    unsigned s = 1;
    std::vector<IrrepLabel> irreps;
    std::vector<ConjugacyClass> classes;
    std::vector<std::vector<CharValue>> values;  // [irrep][class]
};

CharacterTable character_table(unsigned s);

/// Σ_C |C| χ_i(C) χ_j(C)*, exact.
std::int64_t row_inner_product(const CharacterTable& table, std::size_t i, std::size_t j);

} // namespace hw
