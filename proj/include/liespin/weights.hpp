#pragma once

#include <cstddef>
#include <stdexcept>

namespace liespin {

enum class Su2RepKind { rho, sigma };

/**
 * Weight-multiplicity differences for the real irreducible su(2)
 * representations, by brute-force enumeration over sign vectors:
 *   rho_k   (so(2k+1)): N_0 - N_2 for the weight eps_1 + 2 eps_2 + ... + k eps_k,
 *   sigma_k (so(4k)):   N_0' - N_2' for (eps_1 - eps_2) + 3 (eps_3 - eps_4) + ...
 * counting weight 0 minus weight 2 (resp. weight 0 minus weight 4).
 */
inline long long su2_weight_count(Su2RepKind kind, std::size_t k) {
    if (k == 0) throw std::invalid_argument("su2_weight_count: k must be positive");
    if (kind == Su2RepKind::rho) {
        if (k > 26) throw std::invalid_argument("su2_weight_count: rho enumeration capped at k = 26");
        long long n0 = 0, n2 = 0;
        const std::size_t count = std::size_t(1) << k;
        for (std::size_t mask = 0; mask < count; ++mask) {
            long long sum = 0;
            for (std::size_t i = 1; i <= k; ++i) {
                sum += (mask >> (i - 1)) & 1 ? -static_cast<long long>(i) : static_cast<long long>(i);
            }
            if (sum == 0) ++n0;
            else if (sum == 2) ++n2;
        }
        return n0 - n2;
    }
    if (k > 13) throw std::invalid_argument("su2_weight_count: sigma enumeration capped at k = 13");
    long long n0 = 0, n2 = 0;
    const std::size_t count = std::size_t(1) << (2 * k);
    for (std::size_t mask = 0; mask < count; ++mask) {
        long long sum = 0;
        for (std::size_t r = 1; r <= k; ++r) {
            const int odd = (mask >> (2 * r - 2)) & 1 ? -1 : 1;
            const int even = (mask >> (2 * r - 1)) & 1 ? -1 : 1;
            sum += static_cast<long long>(2 * r - 1) * (odd - even);
        }
        if (sum == 0) ++n0;
        else if (sum == 4) ++n2;
    }
    return n0 - n2;
}

}  // namespace liespin
