#include "hw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "hw/characters.hpp"
#include "hw/errors.hpp"
#include "hw/fourier.hpp"
#include "hw/fusion.hpp"
#include "hw/group.hpp"
#include "hw/io.hpp"
#include "hw/irrep.hpp"

namespace hw {

const char* to_string(VerifyLevel level) noexcept { return level == VerifyLevel::Full ? "full" : "sampled"; }

VerifyLevel parse_verify_level(const std::string& text) {
    if (text == "full") return VerifyLevel::Full;
    if (text == "sampled") return VerifyLevel::Sampled;
    throw ParameterError("unknown verify level '" + text + "' (expected full or sampled)");
}

bool VerifyReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string fusion_listing(unsigned s, bool nontrivial_only) {
    std::vector<IrrepLabel> irreps = enumerate_irreps(s);
    if (nontrivial_only) std::erase_if(irreps, [](const IrrepLabel& L) { return L.p == 0; });
    std::string out;
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        for (std::size_t j = i; j < irreps.size(); ++j) {
            const FusionRow row{irreps[i], irreps[j], fuse(irreps[i], irreps[j])};
            out += io::format_fusion_rule(row);
            out += '\n';
        }
    }
    return out;
}

std::string orbit_listing(unsigned s) {
    std::string out;
    for (const auto& orbit : enumerate_distinct_orbits(s)) {
        out += io::format_orbit(orbit);
        out += '\n';
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

/// Accumulates one CheckResult.
class Check {
public:
    explicit Check(std::string name) : start_(Clock::now()) { result_.name = std::move(name); }

    template <typename Describe>
    void expect(bool ok, Describe&& describe) {
        ++result_.checked;
        if (ok) return;
        if (result_.failures++ == 0) result_.detail = describe();
    }

    template <typename Describe>
    void residual(double value, Describe&& describe) {
        result_.has_residual = true;
        result_.max_residual = std::max(result_.max_residual, value);
        expect(value < kFourierTolerance, std::forward<Describe>(describe));
    }

    CheckResult finish() {
        result_.passed = result_.failures == 0;
        result_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return std::move(result_);
    }

private:
    Clock::time_point start_;
    CheckResult result_;
};

class Sampler {
public:
    Sampler(std::uint64_t seed, const GroupParams& params) : engine_(seed), params_(params) {}

    std::uint32_t residue() { return static_cast<std::uint32_t>(engine_()) & params_.mask(); }
    GroupElement element() {
        const std::uint32_t m = residue();
        const std::uint32_t n = residue();
        return {m, n, residue()};
    }
    std::size_t index(std::size_t size) { return static_cast<std::size_t>(engine_() % size); }

private:
    std::mt19937_64 engine_;
    GroupParams params_;
};

std::string label_text(const IrrepLabel& L) { return "(" + to_string(L) + ")"; }

std::string pair_text(const IrrepLabel& L, const GroupElement& g, const GroupElement& h) {
    return label_text(L) + " at g=" + to_string(g) + ", h=" + to_string(h);
}

std::uint64_t pow2(unsigned e) { return std::uint64_t{1} << e; }

// Counting identities, evaluated from independent sums.

CheckResult check_irrep_count(unsigned s) {
    Check c("counting.irreps");
    // Labels per t < s: 2^(s-t-1) odd u, 2^t values each of q and r. Plus 4^s for p = 0.
    std::uint64_t sum = pow2(2 * s);
    for (unsigned t = 0; t < s; ++t) sum += pow2(s - t - 1) * pow2(2 * t);
    const std::uint64_t formula = irrep_count_formula(s);
    c.expect(sum == formula, [&] { return "formula " + std::to_string(formula) + " vs sum " + std::to_string(sum); });
    return c.finish();
}

CheckResult check_class_count(unsigned s) {
    Check c("counting.classes");
    // Pairs (n, l) with min valuation exactly k, each contributing 2^k classes.
    std::uint64_t sum = pow2(s);
    for (unsigned k = 0; k < s; ++k) sum += (pow2(2 * (s - k)) - pow2(2 * (s - k - 1))) * pow2(k);
    const std::uint64_t formula = class_count_formula(s);
    c.expect(sum == formula, [&] { return "formula " + std::to_string(formula) + " vs sum " + std::to_string(sum); });
    return c.finish();
}

CheckResult check_irreps_equal_classes(unsigned s) {
    Check c("counting.irreps_equal_classes");
    const std::uint64_t a = irrep_count_formula(s);
    const std::uint64_t b = class_count_formula(s);
    c.expect(a == b, [&] { return std::to_string(a) + " irreps vs " + std::to_string(b) + " classes"; });
    return c.finish();
}

CheckResult check_dim_squares(unsigned s) {
    Check c("counting.dim_squares");
    std::uint64_t sum = 0;
    if (s <= enumeration_cap()) {
        for (const auto& L : enumerate_irreps(s)) sum += L.dim() * L.dim();
    } else {
        sum = pow2(2 * s);
        for (unsigned t = 0; t < s; ++t) sum += pow2(s - t - 1) * pow2(2 * t) * pow2(2 * (s - t));
    }
    c.expect(sum == pow2(3 * s), [&] { return "sum of dim^2 = " + std::to_string(sum); });
    return c.finish();
}

CheckResult check_orbit_count(unsigned s) {
    Check c("counting.orbits");
    const std::uint64_t formula = distinct_orbit_count_formula(s);
    if (s <= enumeration_cap()) {
        const auto orbits = enumerate_distinct_orbits(s);
        c.expect(orbits.size() == formula, [&] {
            return std::to_string(orbits.size()) + " orbits vs formula " + std::to_string(formula);
        });
        std::uint64_t covered = 0;
        for (const auto& o : orbits) covered += o.members.size();
        c.expect(covered == pow2(2 * s), [&] { return "orbits cover " + std::to_string(covered) + " characters"; });
    } else {
        std::uint64_t sum = pow2(s);
        for (unsigned t = 0; t < s; ++t) sum += pow2(s - t - 1) * pow2(t);
        c.expect(sum == formula, [&] { return "formula " + std::to_string(formula) + " vs sum " + std::to_string(sum); });
    }
    return c.finish();
}

// Enumerations and the group itself.

CheckResult check_irrep_enumeration(unsigned s, const std::vector<IrrepLabel>& irreps) {
    Check c("enumeration.irreps");
    c.expect(irreps.size() == irrep_count_formula(s),
             [&] { return std::to_string(irreps.size()) + " labels enumerated"; });
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        const auto& L = irreps[i];
        c.expect(is_canonical(s, L.p, L.q, L.r) && L.t == two_adic_valuation(L.p, s),
                 [&] { return label_text(L) + " is not canonical"; });
        if (i > 0) {
            c.expect(compare_labels(irreps[i - 1], L) < 0, [&] { return label_text(L) + " out of order"; });
        }
    }
    return c.finish();
}

CheckResult check_class_enumeration(const GroupParams& params, const std::vector<ConjugacyClass>& classes) {
    Check c("enumeration.classes");
    c.expect(classes.size() == class_count_formula(params.s()),
             [&] { return std::to_string(classes.size()) + " classes enumerated"; });
    std::vector<char> seen(params.order(), 0);
    const std::uint64_t N = params.N();
    for (const auto& cls : classes) {
        for (const auto& g : cls.members()) {
            auto& slot = seen[(g.m * N + g.n) * N + g.l];
            c.expect(slot == 0, [&] { return to_string(g) + " lies in two classes"; });
            slot = 1;
        }
    }
    const auto missing = std::count(seen.begin(), seen.end(), 0);
    c.expect(missing == 0, [&] { return std::to_string(missing) + " elements in no class"; });
    return c.finish();
}

CheckResult check_classes_bruteforce(const GroupParams& params) {
    Check c("group.classes_bruteforce");
    const std::uint32_t N = params.N();
    for (std::uint32_t m = 0; m < N; ++m) {
        for (std::uint32_t n = 0; n < N; ++n) {
            for (std::uint32_t l = 0; l < N; ++l) {
                const GroupElement g{m, n, l};
                std::set<GroupElement> orbit;
                for (std::uint32_t a = 0; a < N; ++a) {
                    for (std::uint32_t b = 0; b < N; ++b) {
                        for (std::uint32_t e = 0; e < N; ++e) orbit.insert(conjugate(g, {a, b, e}, params));
                    }
                }
                const auto members = conjugacy_class_of(g, params).members();
                c.expect(std::equal(orbit.begin(), orbit.end(), members.begin(), members.end()),
                         [&] { return "class of " + to_string(g); });
            }
        }
    }
    return c.finish();
}

CheckResult check_group_axioms(const GroupParams& params, VerifyLevel level, std::uint64_t seed) {
    Check c("group.axioms");
    const auto test = [&](const GroupElement& a, const GroupElement& b, const GroupElement& g) {
        c.expect(multiply(multiply(a, b, params), g, params) == multiply(a, multiply(b, g, params), params),
                 [&] { return "associativity at " + to_string(a) + ", " + to_string(b) + ", " + to_string(g); });
        c.expect(multiply(a, inverse(a, params), params) == identity_element() &&
                     multiply(inverse(a, params), a, params) == identity_element(),
                 [&] { return "inverse of " + to_string(a); });
    };
    if (params.s() <= kExhaustiveMaxS) {
        std::vector<GroupElement> all;
        const std::uint32_t N = params.N();
        for (std::uint32_t m = 0; m < N; ++m)
            for (std::uint32_t n = 0; n < N; ++n)
                for (std::uint32_t l = 0; l < N; ++l) all.push_back({m, n, l});
        for (const auto& a : all)
            for (const auto& b : all)
                for (const auto& g : all) test(a, b, g);
    } else {
        Sampler rng(seed, params);
        const int samples = level == VerifyLevel::Full ? 100000 : 10000;
        for (int i = 0; i < samples; ++i) {
            const GroupElement a = rng.element();
            const GroupElement b = rng.element();
            test(a, b, rng.element());
        }
    }
    return c.finish();
}

// Representations.

CheckResult check_homomorphism(const GroupParams& params, const std::vector<IrrepLabel>& irreps, VerifyLevel level,
                               std::uint64_t seed) {
    Check c("rep.homomorphism");
    const auto test = [&](const IrrepLabel& L, const GroupElement& g, const GroupElement& h) {
        c.expect(monomial_multiply(irrep_matrix(L, g), irrep_matrix(L, h)) == irrep_matrix(L, multiply(g, h, params)),
                 [&] { return pair_text(L, g, h); });
    };
    if (params.s() <= kExhaustiveMaxS) {
        const std::uint32_t N = params.N();
        std::vector<GroupElement> all;
        for (std::uint32_t m = 0; m < N; ++m)
            for (std::uint32_t n = 0; n < N; ++n)
                for (std::uint32_t l = 0; l < N; ++l) all.push_back({m, n, l});
        for (const auto& L : irreps)
            for (const auto& g : all)
                for (const auto& h : all) test(L, g, h);
    } else {
        Sampler rng(seed, params);
        const int samples = level == VerifyLevel::Full ? 10000 : 1000;
        for (const auto& L : irreps) {
            for (int i = 0; i < samples; ++i) {
                const GroupElement g = rng.element();
                test(L, g, rng.element());
            }
        }
    }
    return c.finish();
}

CheckResult check_generators(const GroupParams& params, const std::vector<IrrepLabel>& irreps) {
    Check c("rep.generators");
    const std::uint32_t N = params.N();
    for (const auto& L : irreps) {
        const auto gens = generator_matrices(L);
        const std::size_t d = L.dim();
        c.expect(gens.z == irrep_matrix(L, {1, 0, 0}) && gens.x == irrep_matrix(L, {0, 1, 0}) &&
                     gens.y == irrep_matrix(L, {0, 0, 1}),
                 [&] { return label_text(L) + ": explicit generators differ from irrep_matrix"; });
        c.expect(monomial_multiply(gens.y, gens.x) == monomial_multiply(monomial_multiply(gens.z, gens.x), gens.y),
                 [&] { return label_text(L) + ": y x != z x y"; });
        // x^d = ω_t^q I and y^d = ω_t^r I, with ω_t = ω_s^d.
        c.expect(monomial_power(gens.x, d) == MonomialMatrix::scalar(d, N, std::uint64_t{L.q} * d),
                 [&] { return label_text(L) + ": x^dim is not w_t^q I"; });
        c.expect(monomial_power(gens.y, d) == MonomialMatrix::scalar(d, N, std::uint64_t{L.r} * d),
                 [&] { return label_text(L) + ": y^dim is not w_t^r I"; });
        c.expect(monomial_power(gens.z, N).is_identity() && monomial_power(gens.x, N).is_identity() &&
                     monomial_power(gens.y, N).is_identity(),
                 [&] { return label_text(L) + ": generator of order > 2^s"; });
    }
    return c.finish();
}

CheckResult check_commutator(const GroupParams& params, const std::vector<IrrepLabel>& irreps, VerifyLevel level,
                             std::uint64_t seed) {
    Check c("rep.commutator");
    const std::uint32_t N = params.N();
    const bool small = params.s() <= 3;
    const int samples = level == VerifyLevel::Full ? (small ? 1000 : 100) : (small ? 100 : 10);
    Sampler rng(seed, params);
    for (const auto& L : irreps) {
        if (L.p == 0) continue;
        for (int i = 0; i < samples; ++i) {
            const GroupElement g = rng.element();
            const GroupElement h = rng.element();
            const CycMatrix A = monomial_to_dense(irrep_matrix(L, g));
            const CycMatrix B = monomial_to_dense(irrep_matrix(L, h));
            // ω_{s-t}^(u·n'·l) = ω_s^(p·n'·l).
            const CycInt coeff = CycInt::root(N, params.reduce(std::uint64_t{L.p} * h.n * g.l)) -
                                 CycInt::root(N, params.reduce(std::uint64_t{L.p} * g.n * h.l));
            const GroupElement sum{params.reduce(std::uint64_t{g.m} + h.m), params.reduce(std::uint64_t{g.n} + h.n),
                                   params.reduce(std::uint64_t{g.l} + h.l)};
            const CycMatrix rhs = monomial_to_dense(irrep_matrix(L, sum)).scaled(coeff);
            c.expect(A * B - B * A == rhs, [&] { return pair_text(L, g, h); });
        }
    }
    return c.finish();
}

// Characters.

CheckResult check_character_traces(const GroupParams& params, const std::vector<IrrepLabel>& irreps,
                                   VerifyLevel level, std::uint64_t seed) {
    Check c("characters.trace");
    const auto test = [&](const IrrepLabel& L, const GroupElement& g) {
        c.expect(character(L, g).to_cyc() == irrep_matrix(L, g).trace(),
                 [&] { return label_text(L) + " at " + to_string(g); });
    };
    if (params.s() <= kExhaustiveMaxS) {
        const std::uint32_t N = params.N();
        for (const auto& L : irreps)
            for (std::uint32_t m = 0; m < N; ++m)
                for (std::uint32_t n = 0; n < N; ++n)
                    for (std::uint32_t l = 0; l < N; ++l) test(L, {m, n, l});
    } else {
        Sampler rng(seed, params);
        const int samples = level == VerifyLevel::Full ? 1000 : 100;
        for (const auto& L : irreps) {
            for (int i = 0; i < samples; ++i) test(L, rng.element());
        }
    }
    return c.finish();
}

CheckResult check_character_norms(const GroupParams& params, const std::vector<IrrepLabel>& irreps) {
    Check c("characters.norm");
    const auto order = static_cast<std::int64_t>(params.order());
    for (const auto& L : irreps) {
        const std::int64_t norm = character_norm_squared(L);
        c.expect(norm == order, [&] { return label_text(L) + ": norm " + std::to_string(norm); });
    }
    return c.finish();
}

CheckResult check_orthogonality(const GroupParams& params, VerifyLevel level, std::uint64_t seed) {
    Check c("characters.orthogonality");
    const CharacterTable table = character_table(params.s());
    const auto order = static_cast<std::int64_t>(params.order());
    const auto test = [&](std::size_t i, std::size_t j) {
        const std::int64_t value = row_inner_product(table, i, j);
        c.expect(value == (i == j ? order : 0), [&] {
            return label_text(table.irreps[i]) + " . " + label_text(table.irreps[j]) + " = " + std::to_string(value);
        });
    };
    const std::size_t n = table.irreps.size();
    if (params.s() <= 3) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) test(i, j);
    } else {
        Sampler rng(seed, params);
        const int samples = level == VerifyLevel::Full ? 20000 : 2000;
        for (int k = 0; k < samples; ++k) {
            const std::size_t i = rng.index(n);
            test(i, rng.index(n));
        }
        for (std::size_t i = 0; i < n; ++i) test(i, i);
    }
    return c.finish();
}

// Fusion.

CheckResult check_fusion_oracle(const GroupParams& params, const std::vector<IrrepLabel>& irreps, VerifyLevel level,
                                std::uint64_t seed) {
    Check c("fusion.oracle");
    const auto test = [&](const IrrepLabel& a, const IrrepLabel& b, const IrrepLabel& d, BruteForceSupport support) {
        const std::uint64_t closed = fusion_coeff_closed(a, b, d);
        const std::int64_t brute = fusion_coeff_bruteforce(a, b, d, support);
        c.expect(brute >= 0 && static_cast<std::uint64_t>(brute) == closed, [&] {
            return label_text(a) + " x " + label_text(b) + " -> " + label_text(d) + ": closed " +
                   std::to_string(closed) + ", brute force " + std::to_string(brute);
        });
    };
    const bool exhaustive = params.s() <= kExhaustiveMaxS || (params.s() == 3 && level == VerifyLevel::Full);
    if (exhaustive) {
        const bool naive = params.s() <= kExhaustiveMaxS;
        for (std::size_t i = 0; i < irreps.size(); ++i) {
            for (std::size_t j = i; j < irreps.size(); ++j) {
                for (const auto& d : irreps) {
                    test(irreps[i], irreps[j], d, BruteForceSupport::Restricted);
                    if (naive) test(irreps[i], irreps[j], d, BruteForceSupport::Naive);
                }
            }
        }
    } else {
        Sampler rng(seed, params);
        const int samples = level == VerifyLevel::Full ? 2000 : 200;
        for (int k = 0; k < samples; ++k) {
            const IrrepLabel& a = irreps[rng.index(irreps.size())];
            const IrrepLabel& b = irreps[rng.index(irreps.size())];
            for (const auto& term : fuse(a, b)) test(a, b, term.label, BruteForceSupport::Restricted);
            test(a, b, irreps[rng.index(irreps.size())], BruteForceSupport::Restricted);
        }
    }
    return c.finish();
}

CheckResult check_fusion_dimensions(unsigned s) {
    Check c("fusion.dimension");
    for (const auto& row : fusion_table(s).rows) {
        std::uint64_t total = 0;
        for (const auto& term : row.terms) total += term.multiplicity * term.label.dim();
        c.expect(total == row.left.dim() * row.right.dim(), [&] {
            return label_text(row.left) + " x " + label_text(row.right) + ": sum N*dim = " + std::to_string(total);
        });
    }
    return c.finish();
}

CheckResult check_golden(std::string name, const std::string& produced, const std::string& expected) {
    Check c(std::move(name));
    std::istringstream a(produced);
    std::istringstream b(expected);
    std::string la;
    std::string lb;
    std::size_t line = 0;
    while (true) {
        const bool more_a = static_cast<bool>(std::getline(a, la));
        const bool more_b = static_cast<bool>(std::getline(b, lb));
        if (!more_a && !more_b) break;
        ++line;
        c.expect(more_a && more_b && la == lb, [&] {
            return "line " + std::to_string(line) + ": got '" + (more_a ? la : "<eof>") + "', expected '" +
                   (more_b ? lb : "<eof>") + "'";
        });
    }
    c.expect(produced == expected, [] { return std::string("byte mismatch"); });
    return c.finish();
}

// Fourier.

void append_fourier_checks(const std::vector<IrrepLabel>& irreps, std::vector<CheckResult>& out) {
    Check unitarity("fourier.unitarity");
    std::vector<FourierReport> reports;
    for (const auto& L : irreps) {
        if (L.p == 0) continue;
        reports.push_back(verify_fourier_relations(L));
        const auto& r = reports.back();
        unitarity.residual(std::max({r.unitarity_fd, r.unitarity_std, r.unitarity_omega}),
                           [&] { return label_text(L); });
    }
    out.push_back(unitarity.finish());

    Check fourth("fourier.fourth_power");
    Check eigen("fourier.eigen");
    Check diag("fourier.diagonalization");
    Check relation("fourier.conjugation_relation");
    Check direct("fourier.conjugation_relation_direct");
    for (const auto& r : reports) {
        const auto describe = [&] { return label_text(r.label); };
        fourth.residual(r.fourth_power, describe);
        eigen.residual(r.eigen, describe);
        diag.residual(std::min(r.offdiag_forward, r.offdiag_backward), describe);
        relation.residual(r.conjugation_relation, describe);
        direct.residual(r.conjugation_relation_direct, describe);
    }
    out.push_back(fourth.finish());
    out.push_back(eigen.finish());
    out.push_back(diag.finish());
    out.push_back(relation.finish());
    out.push_back(direct.finish());
}

} // namespace

VerifyReport verify(unsigned s, VerifyLevel level, std::uint64_t seed) {
    const GroupParams params(s);
    if (level == VerifyLevel::Full && s > kFullVerifyMaxS) {
        throw ParameterError("full verification is limited to s <= " + std::to_string(kFullVerifyMaxS) +
                             "; use --verify-level sampled");
    }
    VerifyReport report;
    report.s = s;
    report.level = level;
    report.seed = seed;
    auto& out = report.checks;

    out.push_back(check_irrep_count(s));
    out.push_back(check_class_count(s));
    out.push_back(check_irreps_equal_classes(s));
    out.push_back(check_dim_squares(s));
    out.push_back(check_orbit_count(s));
    if (s > kPerIrrepMaxS) return report;

    const auto irreps = enumerate_irreps(s);
    const auto classes = enumerate_classes(params);
    out.push_back(check_irrep_enumeration(s, irreps));
    out.push_back(check_class_enumeration(params, classes));
    if (s <= 3) out.push_back(check_classes_bruteforce(params));
    out.push_back(check_group_axioms(params, level, seed));

    out.push_back(check_homomorphism(params, irreps, level, seed));
    out.push_back(check_generators(params, irreps));
    out.push_back(check_commutator(params, irreps, level, seed));

    out.push_back(check_character_traces(params, irreps, level, seed));
    out.push_back(check_character_norms(params, irreps));
    out.push_back(check_orthogonality(params, level, seed));

    out.push_back(check_fusion_oracle(params, irreps, level, seed));
    out.push_back(check_fusion_dimensions(s));
    if (s == 1) out.push_back(check_golden("golden.fusion_hw2", fusion_listing(1, false), golden::fusion_hw2()));
    if (s == 2) {
        out.push_back(check_golden("golden.fusion_hw4", fusion_listing(2, true), golden::fusion_hw4()));
        out.push_back(check_golden("golden.orbits_hw4", orbit_listing(2), golden::orbits_hw4()));
    }

    append_fourier_checks(irreps, out);
    return report;
}

} // namespace hw
