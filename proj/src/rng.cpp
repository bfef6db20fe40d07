#include "liftlab/rng.hpp"

#include <algorithm>

namespace liftlab {

std::vector<int> Rng::sample_without_replacement(int n, int k) {
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(k));
    for (int j = n - k; j < n; ++j) {
        const int t = static_cast<int>(below(static_cast<std::uint64_t>(j) + 1));
        if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
            chosen.push_back(t);
        else
            chosen.push_back(j);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace liftlab
