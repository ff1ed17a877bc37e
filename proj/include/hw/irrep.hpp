#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hw/cyclotomic.hpp"
#include "hw/group.hpp"

namespace hw {

/// Label ((p,q),r) of an irreducible representation of HW_{2^s}.
///
/// t = v(p) with v(0) = s, u = p / 2^t (absent for p = 0), dim = 2^(s-t).
/// A label is canonical when q, r < 2^t. Only canonical labels are
/// constructed through `make_label`; `canonicalize_label` maps any triple to
/// the canonical label with the same character.
struct IrrepLabel {
    unsigned s = 1;
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    std::uint32_t r = 0;
    unsigned t = 1;
    std::optional<std::uint32_t> u;

    std::uint64_t dim() const noexcept { return std::uint64_t{1} << (s - t); }
    std::uint32_t root_modulus() const noexcept { return std::uint32_t{1} << s; }
    bool faithful() const noexcept { return t == 0; }

    friend bool operator==(const IrrepLabel& a, const IrrepLabel& b) noexcept {
        return a.s == b.s && a.p == b.p && a.q == b.q && a.r == b.r;
    }
};

/// Enumeration order: t ascending (p = 0 last), then p, q, r.
std::strong_ordering compare_labels(const IrrepLabel& a, const IrrepLabel& b) noexcept;

bool is_canonical(unsigned s, std::uint64_t p, std::uint64_t q, std::uint64_t r);

/// Throws ParameterError unless (p,q,r) is canonical for s.
IrrepLabel make_label(unsigned s, std::uint64_t p, std::uint64_t q, std::uint64_t r);

/// (p, q mod 2^t, r mod 2^t) with all residues first reduced mod 2^s.
IrrepLabel canonicalize_label(unsigned s, std::uint64_t p, std::uint64_t q, std::uint64_t r);

/// Parses "p,q,r" without canonicalizing (residues must be < 2^s).
struct LabelTriple {
    std::uint32_t p = 0, q = 0, r = 0;
};
LabelTriple parse_label_triple(const std::string& text, unsigned s);
std::string to_string(const IrrepLabel& label);

std::vector<IrrepLabel> enumerate_irreps(unsigned s);

/// 2^(s-1)(3·2^s - 1). Valid for 1 <= s <= 31.
std::uint64_t irrep_count_formula(unsigned s);

bool is_faithful(const IrrepLabel& label) noexcept;

/// Stabilizer of the H-character (p,q) inside B = <y>.
struct LittleGroupDesc {
    unsigned s = 1;
    std::uint32_t generator_exponent = 1;  // little group is <y^generator_exponent>
    std::uint32_t order = 1;

    bool contains(std::uint32_t l) const noexcept { return l % generator_exponent == 0; }
    std::uint64_t index() const noexcept { return (std::uint64_t{1} << s) / order; }
    /// Order of H ⋊ (little group), 2^(2s+t).
    std::uint64_t extended_subgroup_order() const noexcept { return (std::uint64_t{1} << (2 * s)) * order; }
};

LittleGroupDesc little_group(unsigned s, std::uint64_t p);

/// Orbit of the H-character (p,q) under y: (p,q) -> (p,p+q). Members are the
/// q-values, sorted.
struct Orbit {
    unsigned s = 1;
    std::uint32_t p = 0;
    std::uint32_t representative_q = 0;
    std::vector<std::uint32_t> members;

    friend bool operator==(const Orbit&, const Orbit&) = default;
};

Orbit orbit_of(unsigned s, std::uint64_t p, std::uint64_t q);

/// One orbit per (p, q) with p = 0, q < 2^s or p = 2^t·u, q < 2^t.
std::vector<Orbit> enumerate_distinct_orbits(unsigned s);

/// 2^(s-1)(s+2).
std::uint64_t distinct_orbit_count_formula(unsigned s);

/// Matrix with exactly one nonzero entry per row: row k holds ω^phase[k] in
/// column sigma[k], where ω = exp(2πi/root_modulus).
struct MonomialMatrix {
    std::uint32_t root_modulus = 1;
    std::vector<std::uint32_t> sigma;
    std::vector<std::uint32_t> phase;

    std::size_t dim() const noexcept { return sigma.size(); }

    static MonomialMatrix identity(std::size_t dim, std::uint32_t root_modulus);
    static MonomialMatrix scalar(std::size_t dim, std::uint32_t root_modulus, std::uint64_t exponent);

    bool is_identity() const noexcept;
    /// Exponent e such that this equals ω^e·I, if it is a scalar matrix.
    std::optional<std::uint32_t> scalar_exponent() const noexcept;
    CycInt trace() const;

    friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

MonomialMatrix monomial_multiply(const MonomialMatrix& a, const MonomialMatrix& b);
MonomialMatrix monomial_power(const MonomialMatrix& a, std::uint64_t exponent);
MonomialMatrix monomial_inverse(const MonomialMatrix& a);
CycMatrix monomial_to_dense(const MonomialMatrix& a);

/// Γ^{(p,q),r}(z^m x^n y^l). The label must be canonical.
MonomialMatrix irrep_matrix(const IrrepLabel& label, const GroupElement& g);

/// Same induced-matrix formula for an arbitrary (possibly non-canonical)
/// triple. Only for equivalence checks; matrices of equivalent triples differ.
MonomialMatrix induced_matrix_for_triple(unsigned s, std::uint32_t p, std::uint32_t q, std::uint32_t r,
                                         const GroupElement& g);

struct GeneratorMatrices {
    MonomialMatrix z;
    MonomialMatrix x;
    MonomialMatrix y;
};

/// z_D, x_D, y_D written directly from their explicit forms (scalar, diagonal,
/// twisted cyclic shift), independent of `irrep_matrix`.
GeneratorMatrices generator_matrices(const IrrepLabel& label);

} // namespace hw
