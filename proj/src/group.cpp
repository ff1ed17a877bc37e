#include "hw/group.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <string_view>

#include "hw/errors.hpp"

namespace hw {

unsigned enumeration_cap() {
    const char* env = std::getenv("HW_MAX_S");
    if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
    unsigned value = 0;
    std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
        throw ParameterError("HW_MAX_S must be a positive integer, got '" + std::string(text) + "'");
    }
    return std::min(value, kMaxS);
}

void require_enumerable(unsigned s, const char* what) {
    const unsigned cap = enumeration_cap();
    if (s > cap) {
        throw ResourceError(std::string(what) + ": s = " + std::to_string(s) +
                            " exceeds the enumeration cap " + std::to_string(cap) +
                            " (set HW_MAX_S to raise it)");
    }
}

GroupParams::GroupParams(unsigned s) : s_(s) {
    if (s < 1 || s > kMaxS) {
        throw ParameterError("s must lie in 1.." + std::to_string(kMaxS) + ", got " + std::to_string(s));
    }
}

unsigned two_adic_valuation(std::uint64_t x, unsigned s) noexcept {
    const std::uint64_t reduced = s >= 64 ? x : (x & ((std::uint64_t{1} << s) - 1));
    if (reduced == 0) return s;
    return static_cast<unsigned>(std::countr_zero(reduced));
}

GroupElement identity_element() noexcept { return {}; }

void validate(const GroupElement& g, const GroupParams& params) {
    if (g.m >= params.N() || g.n >= params.N() || g.l >= params.N()) {
        throw ParameterError("element (" + to_string(g) + ") is not a residue triple mod " +
                             std::to_string(params.N()));
    }
}

GroupElement multiply(const GroupElement& a, const GroupElement& b, const GroupParams& params) {
    validate(a, params);
    validate(b, params);
    const std::uint64_t twist = std::uint64_t{a.l} * b.n;
    return {params.reduce(std::uint64_t{a.m} + b.m + twist), params.reduce(std::uint64_t{a.n} + b.n),
            params.reduce(std::uint64_t{a.l} + b.l)};
}

GroupElement inverse(const GroupElement& a, const GroupParams& params) {
    validate(a, params);
    const std::uint32_t ln = params.reduce(std::uint64_t{a.l} * a.n);
    return {params.reduce(std::uint64_t{params.negate(a.m)} + ln), params.negate(a.n), params.negate(a.l)};
}

GroupElement conjugate(const GroupElement& g, const GroupElement& h, const GroupParams& params) {
    return multiply(multiply(h, g, params), inverse(h, params), params);
}

GroupElement power(const GroupElement& g, std::uint64_t e, const GroupParams& params) {
    GroupElement result = identity_element();
    GroupElement base = g;
    while (e != 0) {
        if (e & 1) result = multiply(result, base, params);
        base = multiply(base, base, params);
        e >>= 1;
    }
    return result;
}

namespace {

std::vector<std::uint64_t> parse_csv_integers(const std::string& text, std::size_t expected, const char* what) {
    std::vector<std::uint64_t> values;
    std::string_view rest(text);
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view field = rest.substr(0, comma);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw ParameterError(std::string("malformed ") + what + " '" + text + "'");
        }
        values.push_back(v);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (values.size() != expected) {
        throw ParameterError(std::string("malformed ") + what + " '" + text + "': expected " +
                             std::to_string(expected) + " comma-separated integers");
    }
    return values;
}

} // namespace

GroupElement parse_element(const std::string& text, const GroupParams& params) {
    const auto v = parse_csv_integers(text, 3, "element");
    for (auto x : v) {
        if (x >= params.N()) {
            throw ParameterError("element '" + text + "' has a residue outside 0.." + std::to_string(params.N() - 1));
        }
    }
    return {static_cast<std::uint32_t>(v[0]), static_cast<std::uint32_t>(v[1]), static_cast<std::uint32_t>(v[2])};
}

std::string to_string(const GroupElement& g) {
    return std::to_string(g.m) + "," + std::to_string(g.n) + "," + std::to_string(g.l);
}

std::vector<GroupElement> ConjugacyClass::members() const {
    std::vector<GroupElement> out;
    out.reserve(size);
    const std::uint32_t N = std::uint32_t{1} << s;
    const std::uint32_t step = std::uint32_t{1} << k;
    for (std::uint64_t i = 0; i < size; ++i) {
        out.push_back({static_cast<std::uint32_t>((representative.m + i * step) & (N - 1)), representative.n,
                       representative.l});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool ConjugacyClass::contains(const GroupElement& g) const noexcept {
    if (g.n != representative.n || g.l != representative.l) return false;
    const std::uint32_t low = (std::uint32_t{1} << k) - 1;
    return (g.m & low) == representative.m;
}

ConjugacyClass conjugacy_class_of(const GroupElement& g, const GroupParams& params) {
    validate(g, params);
    const unsigned s = params.s();
    const unsigned k = std::min(two_adic_valuation(g.n, s), two_adic_valuation(g.l, s));
    ConjugacyClass cls;
    cls.s = s;
    cls.k = k;
    cls.size = std::uint64_t{1} << (s - k);
    cls.representative = {g.m & ((std::uint32_t{1} << k) - 1), g.n, g.l};
    return cls;
}

std::vector<ConjugacyClass> enumerate_classes(const GroupParams& params) {
    require_enumerable(params.s(), "enumerate_classes");
    const unsigned s = params.s();
    const std::uint32_t N = params.N();
    std::vector<ConjugacyClass> classes;
    classes.reserve(class_count_formula(s));
    for (std::uint32_t n = 0; n < N; ++n) {
        for (std::uint32_t l = 0; l < N; ++l) {
            const unsigned k = std::min(two_adic_valuation(n, s), two_adic_valuation(l, s));
            const std::uint32_t reps = std::uint32_t{1} << k;
            for (std::uint32_t m = 0; m < reps; ++m) {
                classes.push_back({s, {m, n, l}, k, std::uint64_t{1} << (s - k)});
            }
        }
    }
    std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        if (a.k != b.k) return a.k < b.k;
        return a.representative < b.representative;
    });
    return classes;
}

std::uint64_t class_count_formula(unsigned s) {
    if (s < 1 || s > 31) throw ParameterError("class_count_formula: s must lie in 1..31");
    std::uint64_t total = 0;
    for (unsigned t = 0; t < s; ++t) {
        for (unsigned tp = 0; tp < s; ++tp) {
            total += std::uint64_t{1} << (2 * s - t - tp - 2 + std::min(t, tp));
        }
    }
    return total + (std::uint64_t{1} << s) * (s + 1);
}

} // namespace hw
