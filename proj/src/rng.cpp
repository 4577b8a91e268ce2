#include "uavlink/rng.hpp"

#include <numeric>
#include <string>

#include "uavlink/error.hpp"

namespace uavlink {

std::vector<std::size_t> sample_without_replacement(Rng& rng, std::size_t n, std::size_t k) {
    if (k > n) {
        fail(ErrorKind::InvalidArgument,
             "cannot sample " + std::to_string(k) + " indices from " + std::to_string(n));
    }
    std::vector<std::size_t> candidates(n);
    std::iota(candidates.begin(), candidates.end(), std::size_t{0});

    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t drawn = 0; drawn < k; ++drawn) {
        const auto remaining = static_cast<double>(candidates.size());
        auto idx = static_cast<std::size_t>(rng.next_uniform() * remaining);
        // next_uniform < 1, but guard the product against rounding up to size.
        if (idx >= candidates.size()) idx = candidates.size() - 1;
        out.push_back(candidates[idx]);
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

} // namespace uavlink
