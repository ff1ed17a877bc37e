#include "hw/characters.hpp"

#include "hw/errors.hpp"

namespace hw {

CycInt CharValue::to_cyc() const {
    CycInt value(modulus);
    if (scale != 0) value.add_term(static_cast<std::int64_t>(scale), exponent);
    return value;
}

std::string CharValue::to_string() const {
    if (is_zero()) return "0";
    return std::to_string(scale) + "*w^" + std::to_string(exponent);
}

CharValue character_for_triple(unsigned s, std::uint32_t p, std::uint32_t q, std::uint32_t r,
                               const GroupElement& g) {
    const GroupParams params(s);
    validate(g, params);
    const unsigned t = two_adic_valuation(p, s);
    const std::uint64_t dim_mask = (std::uint64_t{1} << (s - t)) - 1;
    CharValue value;
    value.modulus = params.N();
    if ((g.n & dim_mask) != 0 || (g.l & dim_mask) != 0) return value;
    // n = d·v1, l = d·v2:  d · ω_{s-t}^(u·m) · ω_t^(v1·q + v2·r) = d · ω_s^(p·m + q·n + r·l).
    value.scale = dim_mask + 1;
    value.exponent = params.reduce(std::uint64_t{p} * g.m + std::uint64_t{q} * g.n + std::uint64_t{r} * g.l);
    return value;
}

CharValue character(const IrrepLabel& label, const GroupElement& g) {
    if (!is_canonical(label.s, label.p, label.q, label.r)) {
        throw ParameterError("character: label (" + to_string(label) + ") is not canonical");
    }
    return character_for_triple(label.s, label.p, label.q, label.r, g);
}

std::int64_t character_norm_squared(const IrrepLabel& label) {
    if (!is_canonical(label.s, label.p, label.q, label.r)) {
        throw ParameterError("character_norm_squared: label (" + to_string(label) + ") is not canonical");
    }
    const std::uint32_t N = label.root_modulus();
    const std::uint32_t d = static_cast<std::uint32_t>(label.dim());
    CycInt sum(N);
    for (std::uint32_t m = 0; m < N; ++m) {
        for (std::uint32_t n = 0; n < N; n += d) {
            for (std::uint32_t l = 0; l < N; l += d) {
                const CharValue chi = character(label, {m, n, l});
                sum.add_term(static_cast<std::int64_t>(chi.scale * chi.scale), chi.exponent + (N - chi.exponent));
            }
        }
    }
    return reduce_to_rational_integer(sum);
}

bool characters_equal(unsigned s, const LabelTriple& a, const LabelTriple& b) {
    const GroupParams params(s);
    for (const auto& cls : enumerate_classes(params)) {
        const auto& g = cls.representative;
        if (!(character_for_triple(s, a.p, a.q, a.r, g) == character_for_triple(s, b.p, b.q, b.r, g))) return false;
    }
    return true;
}

CharacterTable character_table(unsigned s) {
    const GroupParams params(s);
    CharacterTable table;
    table.s = s;
    table.irreps = enumerate_irreps(s);
    table.classes = enumerate_classes(params);
    if (table.irreps.size() != table.classes.size()) {
        throw ConsistencyError("character table is not square: " + std::to_string(table.irreps.size()) + " irreps vs " +
                               std::to_string(table.classes.size()) + " classes");
    }
    table.values.resize(table.irreps.size());
    for (std::size_t i = 0; i < table.irreps.size(); ++i) {
        auto& row = table.values[i];
        row.reserve(table.classes.size());
        for (const auto& cls : table.classes) row.push_back(character(table.irreps[i], cls.representative));
    }
    return table;
}

std::int64_t row_inner_product(const CharacterTable& table, std::size_t i, std::size_t j) {
    const std::uint32_t N = std::uint32_t{1} << table.s;
    CycInt sum(N);
    const auto& a = table.values.at(i);
    const auto& b = table.values.at(j);
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        if (a[c].is_zero() || b[c].is_zero()) continue;
        const auto weight = static_cast<std::int64_t>(table.classes[c].size * a[c].scale * b[c].scale);
        sum.add_term(weight, std::uint64_t{a[c].exponent} + (N - b[c].exponent));
    }
    return reduce_to_rational_integer(sum);
}

} // namespace hw
