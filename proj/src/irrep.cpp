#include "hw/irrep.hpp"

#include <algorithm>
#include <charconv>
#include <string_view>

#include "hw/errors.hpp"

namespace hw {

namespace {

IrrepLabel build_label(unsigned s, std::uint32_t p, std::uint32_t q, std::uint32_t r) {
    IrrepLabel label;
    label.s = s;
    label.p = p;
    label.q = q;
    label.r = r;
    label.t = two_adic_valuation(p, s);
    if (p != 0) label.u = p >> label.t;
    return label;
}

void require_label_s(unsigned s) {
    if (s < 1 || s > kMaxS) throw ParameterError("s must lie in 1.." + std::to_string(kMaxS));
}

void require_canonical(const IrrepLabel& label) {
    require_label_s(label.s);
    if (!is_canonical(label.s, label.p, label.q, label.r) || label.t != two_adic_valuation(label.p, label.s)) {
        const IrrepLabel c = canonicalize_label(label.s, label.p, label.q, label.r);
        throw ParameterError("label (" + std::to_string(label.p) + "," + std::to_string(label.q) + "," +
                             std::to_string(label.r) + ") is not canonical for s = " + std::to_string(label.s) +
                             "; canonical form is (" + to_string(c) + ")");
    }
}

} // namespace

std::strong_ordering compare_labels(const IrrepLabel& a, const IrrepLabel& b) noexcept {
    if (auto c = a.s <=> b.s; c != 0) return c;
    if (auto c = a.t <=> b.t; c != 0) return c;
    if (auto c = a.p <=> b.p; c != 0) return c;
    if (auto c = a.q <=> b.q; c != 0) return c;
    return a.r <=> b.r;
}

bool is_canonical(unsigned s, std::uint64_t p, std::uint64_t q, std::uint64_t r) {
    if (s < 1 || s > kMaxS) return false;
    const std::uint64_t N = std::uint64_t{1} << s;
    if (p >= N) return false;
    const std::uint64_t bound = std::uint64_t{1} << two_adic_valuation(p, s);
    return q < bound && r < bound;
}

IrrepLabel make_label(unsigned s, std::uint64_t p, std::uint64_t q, std::uint64_t r) {
    require_label_s(s);
    if (!is_canonical(s, p, q, r)) {
        throw ParameterError("label (" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) +
                             ") is not canonical for s = " + std::to_string(s));
    }
    return build_label(s, static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q),
                       static_cast<std::uint32_t>(r));
}

IrrepLabel canonicalize_label(unsigned s, std::uint64_t p, std::uint64_t q, std::uint64_t r) {
    require_label_s(s);
    const std::uint64_t mask = (std::uint64_t{1} << s) - 1;
    const std::uint64_t pr = p & mask;
    const unsigned t = two_adic_valuation(pr, s);
    const std::uint64_t low = (std::uint64_t{1} << t) - 1;
    return build_label(s, static_cast<std::uint32_t>(pr), static_cast<std::uint32_t>(q & mask & low),
                       static_cast<std::uint32_t>(r & mask & low));
}

LabelTriple parse_label_triple(const std::string& text, unsigned s) {
    require_label_s(s);
    std::uint32_t values[3];
    std::string_view rest(text);
    for (int i = 0; i < 3; ++i) {
        const auto comma = rest.find(',');
        if ((i < 2) != (comma != std::string_view::npos)) {
            throw ParameterError("malformed label '" + text + "': expected p,q,r");
        }
        const std::string_view field = rest.substr(0, comma);
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), values[i]);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw ParameterError("malformed label '" + text + "': expected p,q,r");
        }
        if (values[i] >= (std::uint64_t{1} << s)) {
            throw ParameterError("label '" + text + "' has a residue outside 0.." +
                                 std::to_string((std::uint64_t{1} << s) - 1));
        }
        if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
    }
    return {values[0], values[1], values[2]};
}

std::string to_string(const IrrepLabel& label) {
    return std::to_string(label.p) + "," + std::to_string(label.q) + "," + std::to_string(label.r);
}

std::vector<IrrepLabel> enumerate_irreps(unsigned s) {
    require_label_s(s);
    require_enumerable(s, "enumerate_irreps");
    std::vector<IrrepLabel> out;
    out.reserve(irrep_count_formula(s));
    for (unsigned t = 0; t <= s; ++t) {
        const std::uint32_t bound = std::uint32_t{1} << t;
        const std::uint32_t u_count = t == s ? 1 : (std::uint32_t{1} << (s - t - 1));
        for (std::uint32_t i = 0; i < u_count; ++i) {
            const std::uint32_t p = t == s ? 0 : ((2 * i + 1) << t);
            for (std::uint32_t q = 0; q < bound; ++q) {
                for (std::uint32_t r = 0; r < bound; ++r) out.push_back(build_label(s, p, q, r));
            }
        }
    }
    return out;
}

std::uint64_t irrep_count_formula(unsigned s) {
    if (s < 1 || s > 31) throw ParameterError("irrep_count_formula: s must lie in 1..31");
    return (std::uint64_t{1} << (s - 1)) * (3 * (std::uint64_t{1} << s) - 1);
}

bool is_faithful(const IrrepLabel& label) noexcept { return label.t == 0; }

LittleGroupDesc little_group(unsigned s, std::uint64_t p) {
    require_label_s(s);
    const unsigned t = two_adic_valuation(p, s);
    return {s, std::uint32_t{1} << (s - t), std::uint32_t{1} << t};
}

Orbit orbit_of(unsigned s, std::uint64_t p, std::uint64_t q) {
    require_label_s(s);
    const std::uint64_t mask = (std::uint64_t{1} << s) - 1;
    const std::uint64_t pr = p & mask;
    const std::uint64_t qr = q & mask;
    const std::uint64_t length = std::uint64_t{1} << (s - two_adic_valuation(pr, s));
    Orbit orbit;
    orbit.s = s;
    orbit.p = static_cast<std::uint32_t>(pr);
    orbit.representative_q = static_cast<std::uint32_t>(qr);
    for (std::uint64_t k = 0; k < length; ++k) orbit.members.push_back(static_cast<std::uint32_t>((k * pr + qr) & mask));
    std::sort(orbit.members.begin(), orbit.members.end());
    return orbit;
}

std::vector<Orbit> enumerate_distinct_orbits(unsigned s) {
    require_label_s(s);
    require_enumerable(s, "enumerate_distinct_orbits");
    std::vector<Orbit> out;
    out.reserve(distinct_orbit_count_formula(s));
    for (unsigned t = 0; t <= s; ++t) {
        const std::uint32_t q_bound = std::uint32_t{1} << t;
        const std::uint32_t u_count = t == s ? 1 : (std::uint32_t{1} << (s - t - 1));
        for (std::uint32_t i = 0; i < u_count; ++i) {
            const std::uint32_t p = t == s ? 0 : ((2 * i + 1) << t);
            for (std::uint32_t q = 0; q < q_bound; ++q) out.push_back(orbit_of(s, p, q));
        }
    }
    return out;
}

std::uint64_t distinct_orbit_count_formula(unsigned s) {
    if (s < 1 || s > 31) throw ParameterError("distinct_orbit_count_formula: s must lie in 1..31");
    return (std::uint64_t{1} << (s - 1)) * (s + 2);
}

MonomialMatrix MonomialMatrix::identity(std::size_t dim, std::uint32_t root_modulus) {
    return scalar(dim, root_modulus, 0);
}

MonomialMatrix MonomialMatrix::scalar(std::size_t dim, std::uint32_t root_modulus, std::uint64_t exponent) {
    MonomialMatrix a;
    a.root_modulus = root_modulus;
    a.sigma.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) a.sigma[k] = static_cast<std::uint32_t>(k);
    a.phase.assign(dim, static_cast<std::uint32_t>(exponent & (root_modulus - 1)));
    return a;
}

bool MonomialMatrix::is_identity() const noexcept {
    for (std::size_t k = 0; k < dim(); ++k) {
        if (sigma[k] != k || phase[k] != 0) return false;
    }
    return true;
}

std::optional<std::uint32_t> MonomialMatrix::scalar_exponent() const noexcept {
    if (dim() == 0) return std::nullopt;
    for (std::size_t k = 0; k < dim(); ++k) {
        if (sigma[k] != k || phase[k] != phase[0]) return std::nullopt;
    }
    return phase[0];
}

CycInt MonomialMatrix::trace() const {
    CycInt sum(root_modulus);
    for (std::size_t k = 0; k < dim(); ++k) {
        if (sigma[k] == k) sum.add_term(1, phase[k]);
    }
    return sum;
}

MonomialMatrix monomial_multiply(const MonomialMatrix& a, const MonomialMatrix& b) {
    if (a.dim() != b.dim()) {
        throw ParameterError("monomial_multiply: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
    }
    if (a.root_modulus != b.root_modulus) throw ParameterError("monomial_multiply: root modulus mismatch");
    MonomialMatrix c;
    c.root_modulus = a.root_modulus;
    c.sigma.resize(a.dim());
    c.phase.resize(a.dim());
    const std::uint32_t mask = a.root_modulus - 1;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        const std::uint32_t mid = a.sigma[k];
        c.sigma[k] = b.sigma[mid];
        c.phase[k] = (a.phase[k] + b.phase[mid]) & mask;
    }
    return c;
}

MonomialMatrix monomial_power(const MonomialMatrix& a, std::uint64_t exponent) {
    MonomialMatrix result = MonomialMatrix::identity(a.dim(), a.root_modulus);
    MonomialMatrix base = a;
    while (exponent != 0) {
        if (exponent & 1) result = monomial_multiply(result, base);
        base = monomial_multiply(base, base);
        exponent >>= 1;
    }
    return result;
}

MonomialMatrix monomial_inverse(const MonomialMatrix& a) {
    // Unitary: the inverse is the conjugate transpose.
    MonomialMatrix inv;
    inv.root_modulus = a.root_modulus;
    inv.sigma.resize(a.dim());
    inv.phase.resize(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) {
        inv.sigma[a.sigma[k]] = static_cast<std::uint32_t>(k);
        inv.phase[a.sigma[k]] = (a.root_modulus - a.phase[k]) & (a.root_modulus - 1);
    }
    return inv;
}

CycMatrix monomial_to_dense(const MonomialMatrix& a) {
    CycMatrix dense(a.dim(), a.root_modulus);
    for (std::size_t k = 0; k < a.dim(); ++k) dense.at(k, a.sigma[k]) = CycInt::root(a.root_modulus, a.phase[k]);
    return dense;
}

MonomialMatrix induced_matrix_for_triple(unsigned s, std::uint32_t p, std::uint32_t q, std::uint32_t r,
                                         const GroupElement& g) {
    const GroupParams params(s);
    validate(g, params);
    const unsigned t = two_adic_valuation(p, s);
    const std::uint64_t dim = std::uint64_t{1} << (s - t);
    const std::uint64_t little_mask = (std::uint64_t{1} << t) - 1;

    MonomialMatrix out;
    out.root_modulus = params.N();
    out.sigma.resize(dim);
    out.phase.resize(dim);
    // Row k is nonzero only in column j ≡ k + l (mod dim); the offset
    // k + l - j = dim·v selects the little-group element y^(dim·v).
    for (std::uint64_t k = 0; k < dim; ++k) {
        const std::uint64_t shifted = k + g.l;
        const std::uint64_t j = shifted & (dim - 1);
        const std::uint64_t v = (shifted >> (s - t)) & little_mask;
        const std::uint64_t exponent = std::uint64_t{p} * g.m + (k * p + q) * std::uint64_t{g.n} + dim * r * v;
        out.sigma[k] = static_cast<std::uint32_t>(j);
        out.phase[k] = params.reduce(exponent);
    }
    return out;
}

MonomialMatrix irrep_matrix(const IrrepLabel& label, const GroupElement& g) {
    require_canonical(label);
    return induced_matrix_for_triple(label.s, label.p, label.q, label.r, g);
}

GeneratorMatrices generator_matrices(const IrrepLabel& label) {
    require_canonical(label);
    const std::uint32_t M = label.root_modulus();
    const std::size_t d = label.dim();
    if (label.p == 0) {
        return {MonomialMatrix::identity(1, M), MonomialMatrix::scalar(1, M, label.q),
                MonomialMatrix::scalar(1, M, label.r)};
    }
    // In units of ω_s: ω_{s-t}^u = ω_s^p and ω_t^r = ω_s^(d·r).
    GeneratorMatrices gens;
    gens.z = MonomialMatrix::scalar(d, M, label.p);
    gens.x = MonomialMatrix::identity(d, M);
    for (std::size_t k = 0; k < d; ++k) gens.x.phase[k] = static_cast<std::uint32_t>((label.q + k * label.p) & (M - 1));
    gens.y = MonomialMatrix::identity(d, M);
    for (std::size_t k = 0; k < d; ++k) gens.y.sigma[k] = static_cast<std::uint32_t>((k + 1) % d);
    gens.y.phase[d - 1] = static_cast<std::uint32_t>((d * label.r) & (M - 1));
    return gens;
}

} // namespace hw
