// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance        run every criterion
//   acceptance N      run criterion N only

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hw/characters.hpp"
#include "hw/fourier.hpp"
#include "hw/fusion.hpp"
#include "hw/group.hpp"
#include "hw/irrep.hpp"
#include "hw/verify.hpp"

using namespace hw;

namespace {

constexpr double kResidualTolerance = 1e-9;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
    bool passed = true;
    std::string summary;
};

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> body;
};

std::uint64_t pow2(unsigned e) { return std::uint64_t{1} << e; }

std::vector<GroupElement> all_elements(const GroupParams& params) {
    std::vector<GroupElement> out;
    const std::uint32_t N = params.N();
    for (std::uint32_t m = 0; m < N; ++m)
        for (std::uint32_t n = 0; n < N; ++n)
            for (std::uint32_t l = 0; l < N; ++l) out.push_back({m, n, l});
    return out;
}

GroupElement random_element(std::mt19937_64& rng, const GroupParams& params) {
    const std::uint32_t m = static_cast<std::uint32_t>(rng()) & params.mask();
    const std::uint32_t n = static_cast<std::uint32_t>(rng()) & params.mask();
    return {m, n, static_cast<std::uint32_t>(rng()) & params.mask()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome counting() {
    const std::vector<std::uint64_t> table{5, 22, 92, 376, 1520, 6112, 24512, 98176, 392960, 1572352};
    for (unsigned s = 1; s <= 10; ++s) {
        if (irrep_count_formula(s) != table[s - 1] || class_count_formula(s) != table[s - 1]) {
            return {false, "mismatch at s=" + std::to_string(s)};
        }
    }
    return {true, "N_s = N_C = table values for s=1..10"};
}

Outcome enumeration() {
    for (unsigned s = 1; s <= 6; ++s) {
        if (enumerate_irreps(s).size() != irrep_count_formula(s)) return {false, "irreps at s=" + std::to_string(s)};
    }
    for (unsigned s = 1; s <= 5; ++s) {
        if (enumerate_classes(GroupParams(s)).size() != class_count_formula(s)) {
            return {false, "classes at s=" + std::to_string(s)};
        }
    }
    return {true, "irreps s<=6 and classes s<=5 match the formulas"};
}

Outcome completeness() {
    for (unsigned s = 1; s <= 10; ++s) {
        std::uint64_t sum = 0;
        for (const auto& L : enumerate_irreps(s)) sum += L.dim() * L.dim();
        if (sum != pow2(3 * s)) return {false, "sum dim^2 wrong at s=" + std::to_string(s)};
    }
    return {true, "sum dim^2 = 2^(3s) for s=1..10"};
}

Outcome orbit_count() {
    for (unsigned s = 1; s <= 6; ++s) {
        if (enumerate_distinct_orbits(s).size() != pow2(s - 1) * (s + 2)) {
            return {false, "orbit count at s=" + std::to_string(s)};
        }
    }
    std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> expected{
        {1, {0, 1, 2, 3}}, {3, {0, 1, 2, 3}}, {2, {0, 2}}, {2, {1, 3}}, {0, {0}}, {0, {1}}, {0, {2}}, {0, {3}}};
    const auto orbits = enumerate_distinct_orbits(2);
    if (orbits.size() != expected.size()) return {false, "HW4 listing has " + std::to_string(orbits.size())};
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (orbits[i].p != expected[i].first || orbits[i].members != expected[i].second) {
            return {false, "HW4 orbit " + std::to_string(i) + " differs"};
        }
    }
    return {true, "2^(s-1)(s+2) for s<=6; HW4 listing exact"};
}

Outcome homomorphism() {
    std::uint64_t checked = 0;
    for (unsigned s = 1; s <= 2; ++s) {
        const GroupParams params(s);
        const auto all = all_elements(params);
        for (const auto& L : enumerate_irreps(s))
            for (const auto& g : all)
                for (const auto& h : all) {
                    ++checked;
                    if (monomial_multiply(irrep_matrix(L, g), irrep_matrix(L, h)) != irrep_matrix(L, multiply(g, h, params))) {
                        return {false, to_string(L) + " at " + to_string(g) + " * " + to_string(h)};
                    }
                }
    }
    std::mt19937_64 rng(kSeed);
    for (unsigned s = 3; s <= 4; ++s) {
        const GroupParams params(s);
        for (const auto& L : enumerate_irreps(s)) {
            for (int i = 0; i < 10000; ++i) {
                const GroupElement g = random_element(rng, params);
                const GroupElement h = random_element(rng, params);
                ++checked;
                if (monomial_multiply(irrep_matrix(L, g), irrep_matrix(L, h)) != irrep_matrix(L, multiply(g, h, params))) {
                    return {false, to_string(L) + " at " + to_string(g) + " * " + to_string(h)};
                }
            }
        }
    }
    return {true, std::to_string(checked) + " products, 0 failures"};
}

Outcome irreducibility() {
    for (unsigned s = 1; s <= 4; ++s) {
        for (const auto& L : enumerate_irreps(s)) {
            if (character_norm_squared(L) != static_cast<std::int64_t>(pow2(3 * s))) return {false, to_string(L)};
        }
    }
    return {true, "norm = 2^(3s) for every irrep, s<=4"};
}

Outcome orthogonality() {
    for (unsigned s = 1; s <= 3; ++s) {
        const auto table = character_table(s);
        const auto order = static_cast<std::int64_t>(pow2(3 * s));
        for (std::size_t i = 0; i < table.irreps.size(); ++i)
            for (std::size_t j = 0; j < table.irreps.size(); ++j) {
                if (row_inner_product(table, i, j) != (i == j ? order : 0)) {
                    return {false, "rows " + to_string(table.irreps[i]) + " / " + to_string(table.irreps[j])};
                }
            }
    }
    return {true, "exact row orthogonality s<=3 (92x92 at s=3)"};
}

Outcome fusion_oracle() {
    std::uint64_t checked = 0;
    for (unsigned s = 1; s <= 3; ++s) {
        const auto irreps = enumerate_irreps(s);
        const auto support = s <= 2 ? BruteForceSupport::Naive : BruteForceSupport::Restricted;
        for (const auto& a : irreps)
            for (const auto& b : irreps) {
                if (s == 3 && compare_labels(b, a) < 0) continue;  // unordered pairs suffice at s=3
                for (const auto& c : irreps) {
                    ++checked;
                    const auto brute = fusion_coeff_bruteforce(a, b, c, support);
                    if (brute < 0 || static_cast<std::uint64_t>(brute) != fusion_coeff_closed(a, b, c)) {
                        return {false, to_string(a) + " x " + to_string(b) + " -> " + to_string(c)};
                    }
                }
            }
    }
    return {true, std::to_string(checked) + " triples agree"};
}

Outcome golden_tables() {
    const std::string dir = HW_GOLDEN_DIR;
    if (fusion_listing(1, false) != read_file(dir + "/fusion_hw2.txt")) return {false, "HW2 table differs"};
    if (fusion_listing(2, true) != read_file(dir + "/fusion_hw4.txt")) return {false, "HW4 table differs"};
    return {true, "HW2 (15 rules) and HW4 (21 rules) byte-exact"};
}

Outcome dimension_conservation() {
    std::uint64_t rows = 0;
    for (unsigned s = 1; s <= 4; ++s) {
        const auto irreps = enumerate_irreps(s);
        for (const auto& a : irreps)
            for (const auto& b : irreps) {
                std::uint64_t total = 0;
                for (const auto& t : fuse(a, b)) total += t.multiplicity * t.label.dim();
                ++rows;
                if (total != a.dim() * b.dim()) return {false, to_string(a) + " x " + to_string(b)};
            }
    }
    return {true, std::to_string(rows) + " rows conserve dimension"};
}

Outcome algebraic_identities() {
    std::mt19937_64 rng(kSeed + 11);
    std::uint64_t commutators = 0;
    for (unsigned s = 1; s <= 3; ++s) {
        const GroupParams params(s);
        const std::uint32_t N = params.N();
        for (const auto& L : enumerate_irreps(s)) {
            const auto g = generator_matrices(L);
            const std::size_t d = L.dim();
            if (monomial_multiply(g.y, g.x) != monomial_multiply(monomial_multiply(g.z, g.x), g.y)) {
                return {false, "y x != z x y for " + to_string(L)};
            }
            if (monomial_power(g.x, d) != MonomialMatrix::scalar(d, N, std::uint64_t{L.q} * d) ||
                monomial_power(g.y, d) != MonomialMatrix::scalar(d, N, std::uint64_t{L.r} * d) ||
                !monomial_power(g.x, N).is_identity() || !monomial_power(g.y, N).is_identity() ||
                !monomial_power(g.z, N).is_identity()) {
                return {false, "periodicity fails for " + to_string(L)};
            }
            if (L.p == 0) continue;
            for (int i = 0; i < 1000; ++i) {
                const GroupElement a = random_element(rng, params);
                const GroupElement b = random_element(rng, params);
                const CycMatrix A = monomial_to_dense(irrep_matrix(L, a));
                const CycMatrix B = monomial_to_dense(irrep_matrix(L, b));
                const CycInt coeff = CycInt::root(N, params.reduce(std::uint64_t{L.p} * b.n * a.l)) -
                                     CycInt::root(N, params.reduce(std::uint64_t{L.p} * a.n * b.l));
                const GroupElement sum{params.reduce(std::uint64_t{a.m} + b.m), params.reduce(std::uint64_t{a.n} + b.n),
                                       params.reduce(std::uint64_t{a.l} + b.l)};
                ++commutators;
                if (!(A * B - B * A == monomial_to_dense(irrep_matrix(L, sum)).scaled(coeff))) {
                    return {false, "commutator fails for " + to_string(L) + " at " + to_string(a) + ", " + to_string(b)};
                }
            }
        }
    }
    return {true, "basic + periodicity for all irreps s<=3, " + std::to_string(commutators) + " commutators"};
}

Outcome fourier() {
    std::size_t labels = 0;
    std::size_t relation_failures = 0;
    double worst_relation = 0;
    std::string first_failure;
    for (unsigned s = 1; s <= 5; ++s) {
        for (const auto& L : enumerate_irreps(s)) {
            if (L.p == 0) continue;
            ++labels;
            const std::size_t d = L.dim();
            const auto F = fourier_FD(L);
            const auto Finv = F.adjoint();
            const auto Fstd = standard_fourier(d);
            const auto gens = generator_matrices(L);
            const auto y = ComplexMatrix::from_monomial(gens.y);
            if (unitarity_residual(F) >= kResidualTolerance) return {false, "F_D not unitary for " + to_string(L)};
            if ((Fstd * Fstd * Fstd * Fstd).max_abs_diff(ComplexMatrix::identity(d)) >= kResidualTolerance) {
                return {false, "F^4 != I for dim " + std::to_string(d)};
            }
            const auto eig = eigensystem_y(L);
            if (eigen_residual(L, eig) >= kResidualTolerance) return {false, "eigen residual for " + to_string(L)};

            // Orientation under which F_D diagonalizes y_D.
            const bool forward = (F * y * Finv).max_off_diagonal() < kResidualTolerance;
            const bool backward = (Finv * y * F).max_off_diagonal() < kResidualTolerance;
            if (!forward && !backward) return {false, "no diagonalizing orientation for " + to_string(L)};

            const std::uint32_t u = *L.u;
            const auto yu = ComplexMatrix::from_monomial(monomial_power(gens.y, u));
            const Complex phase = root_of_unity(L.root_modulus(), static_cast<std::int64_t>(std::uint64_t{L.r} * u) -
                                                                      static_cast<std::int64_t>(L.q));
            const auto target = ComplexMatrix::from_monomial(monomial_inverse(gens.x)) * phase;
            double residual = 1e300;
            if (forward) residual = std::min(residual, (F * yu * Finv).max_abs_diff(target));
            if (backward) residual = std::min(residual, (Finv * yu * F).max_abs_diff(target));
            worst_relation = std::max(worst_relation, residual);
            if (residual >= kResidualTolerance) {
                if (relation_failures++ == 0) first_failure = "s=" + std::to_string(s) + " (" + to_string(L) + ")";
            }
        }
    }
    if (relation_failures) {
        std::ostringstream os;
        os << "conjugation relation to w^(ru-q) x^-1 fails for " << relation_failures << "/" << labels
           << " irreps (max residual " << worst_relation << ", first " << first_failure
           << "); unitarity, F^4 and eigen residuals pass";
        return {false, os.str()};
    }
    return {true, std::to_string(labels) + " irreps, every residual < 1e-9"};
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "counting", 1.0, counting},
        {2, "enumeration consistency", 30.0, enumeration},
        {3, "completeness", 60.0, completeness},
        {4, "orbit count", 60.0, orbit_count},
        {5, "homomorphism", 60.0, homomorphism},
        {6, "irreducibility", 60.0, irreducibility},
        {7, "character orthogonality", 60.0, orthogonality},
        {8, "fusion oracle equivalence", 300.0, fusion_oracle},
        {9, "golden fusion tables", 60.0, golden_tables},
        {10, "dimension conservation", 60.0, dimension_conservation},
        {11, "algebraic identities", 60.0, algebraic_identities},
        {12, "fourier relations", 60.0, fourier},
    };
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    if (argc > 2 || (argc > 1 && (only < 1 || only > static_cast<int>(criteria.size())))) {
        std::cerr << "usage: acceptance [criterion 1.." << criteria.size() << "]\n";
        return 2;
    }

    int failed = 0;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.passed && elapsed > c.budget_seconds) {
            outcome.passed = false;
            outcome.summary += " (over time budget)";
        }
        std::printf("%s criterion %2d %-26s %s [%.2fs / %.0fs]\n", outcome.passed ? "PASS" : "FAIL", c.id, c.title,
                    outcome.summary.c_str(), elapsed, c.budget_seconds);
        if (!outcome.passed) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
