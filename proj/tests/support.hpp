#pragma once

#include <vector>

#include "hw/group.hpp"

namespace hw::testing {

inline std::vector<GroupElement> all_elements(const GroupParams& params) {
    std::vector<GroupElement> out;
    out.reserve(params.order());
    const std::uint32_t N = params.N();
    for (std::uint32_t m = 0; m < N; ++m)
        for (std::uint32_t n = 0; n < N; ++n)
            for (std::uint32_t l = 0; l < N; ++l) out.push_back({m, n, l});
    return out;
}

} // namespace hw::testing
