#include "hw/fusion.hpp"

#include <algorithm>
#include <utility>

#include "hw/characters.hpp"
#include "hw/errors.hpp"

namespace hw {

namespace {

void require_same_s(const IrrepLabel& a, const IrrepLabel& b) {
    if (a.s != b.s) {
        throw ParameterError("labels belong to different groups (s = " + std::to_string(a.s) + " vs " +
                             std::to_string(b.s) + ")");
    }
}

void require_canonical(const IrrepLabel& label, const char* what) {
    if (!is_canonical(label.s, label.p, label.q, label.r)) {
        throw ParameterError(std::string(what) + ": label (" + to_string(label) + ") is not canonical");
    }
}

} // namespace

std::int64_t fusion_coeff_bruteforce(const IrrepLabel& d1, const IrrepLabel& d2, const IrrepLabel& d3,
                                     BruteForceSupport support) {
    require_same_s(d1, d2);
    require_same_s(d1, d3);
    require_canonical(d1, "fusion_coeff_bruteforce");
    require_canonical(d2, "fusion_coeff_bruteforce");
    require_canonical(d3, "fusion_coeff_bruteforce");
    const unsigned s = d1.s;
    const GroupParams params(s);
    const std::uint32_t N = params.N();

    CycInt sum(N);
    if (support == BruteForceSupport::Naive) {
        for (std::uint32_t m = 0; m < N; ++m) {
            for (std::uint32_t n = 0; n < N; ++n) {
                for (std::uint32_t l = 0; l < N; ++l) {
                    const GroupElement g{m, n, l};
                    const CycInt chi1 = irrep_matrix(d1, g).trace();
                    if (chi1.is_zero()) continue;
                    const CycInt chi2 = irrep_matrix(d2, g).trace();
                    if (chi2.is_zero()) continue;
                    sum += chi1 * chi2 * conj(irrep_matrix(d3, g).trace());
                }
            }
        }
    } else {
        // The product vanishes unless n and l are multiples of every dimension.
        const auto step = static_cast<std::uint32_t>(std::max({d1.dim(), d2.dim(), d3.dim()}));
        for (std::uint32_t m = 0; m < N; ++m) {
            for (std::uint32_t n = 0; n < N; n += step) {
                for (std::uint32_t l = 0; l < N; l += step) {
                    const GroupElement g{m, n, l};
                    const CharValue a = character(d1, g);
                    const CharValue b = character(d2, g);
                    const CharValue c = character(d3, g);
                    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
                    const auto coeff = static_cast<std::int64_t>(a.scale * b.scale * c.scale);
                    sum.add_term(coeff, std::uint64_t{a.exponent} + b.exponent + (N - c.exponent));
                }
            }
        }
    }
    const auto order = static_cast<std::int64_t>(params.order());
    return reduce_to_rational_integer(sum.divided_exactly(order));
}

std::uint64_t fusion_coeff_closed(const IrrepLabel& d1, const IrrepLabel& d2, const IrrepLabel& d3) {
    require_same_s(d1, d2);
    require_same_s(d1, d3);
    require_canonical(d1, "fusion_coeff_closed");
    require_canonical(d2, "fusion_coeff_closed");
    require_canonical(d3, "fusion_coeff_closed");
    const IrrepLabel& a = d1.t <= d2.t ? d1 : d2;
    const IrrepLabel& b = d1.t <= d2.t ? d2 : d1;
    const unsigned s = d1.s;
    const std::uint64_t mask = (std::uint64_t{1} << s) - 1;
    if (((std::uint64_t{a.p} + b.p) & mask) != d3.p) return 0;
    const std::uint64_t low = (std::uint64_t{1} << a.t) - 1;
    if (((std::uint64_t{a.q} + b.q) & low) != (d3.q & low)) return 0;
    if (((std::uint64_t{a.r} + b.r) & low) != (d3.r & low)) return 0;
    const int exponent = static_cast<int>(s) - static_cast<int>(b.t) + static_cast<int>(a.t) - static_cast<int>(d3.t);
    if (exponent < 0) {
        throw ConsistencyError("closed-form fusion exponent is negative for (" + to_string(d1) + ") x (" +
                               to_string(d2) + ") -> (" + to_string(d3) + ")");
    }
    return std::uint64_t{1} << exponent;
}

std::vector<FusionTerm> fuse(const IrrepLabel& d1, const IrrepLabel& d2) {
    require_same_s(d1, d2);
    require_canonical(d1, "fuse");
    require_canonical(d2, "fuse");
    const unsigned s = d1.s;
    const std::uint64_t mask = (std::uint64_t{1} << s) - 1;
    const std::uint32_t p3 = static_cast<std::uint32_t>((std::uint64_t{d1.p} + d2.p) & mask);
    const unsigned t3 = two_adic_valuation(p3, s);
    const unsigned t_min = std::min(d1.t, d2.t);
    const std::uint32_t step = std::uint32_t{1} << t_min;
    const std::uint32_t bound = std::uint32_t{1} << t3;
    const std::uint32_t q0 = static_cast<std::uint32_t>((std::uint64_t{d1.q} + d2.q) & (step - 1));
    const std::uint32_t r0 = static_cast<std::uint32_t>((std::uint64_t{d1.r} + d2.r) & (step - 1));

    std::vector<FusionTerm> terms;
    for (std::uint32_t q3 = q0; q3 < bound; q3 += step) {
        for (std::uint32_t r3 = r0; r3 < bound; r3 += step) {
            const IrrepLabel d3 = make_label(s, p3, q3, r3);
            terms.push_back({d3, fusion_coeff_closed(d1, d2, d3)});
        }
    }
    return terms;
}

FusionTable fusion_table(unsigned s) {
    if (s > kFusionTableMaxS) {
        throw ResourceError("fusion_table: s = " + std::to_string(s) + " exceeds the fusion table cap " +
                            std::to_string(kFusionTableMaxS));
    }
    FusionTable table;
    table.s = s;
    const auto irreps = enumerate_irreps(s);
    table.rows.reserve(irreps.size() * (irreps.size() + 1) / 2);
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        for (std::size_t j = i; j < irreps.size(); ++j) {
            table.rows.push_back({irreps[i], irreps[j], fuse(irreps[i], irreps[j])});
        }
    }
    return table;
}

} // namespace hw
