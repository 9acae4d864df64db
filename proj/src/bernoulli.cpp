#include "ramv/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace ramv {

namespace {
std::mutex cache_mutex;
std::vector<BigRational> cache; // cache[m] = B_m once size() > m
} // namespace

BigRational bernoulli(unsigned long m) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (cache.empty()) {
        cache.emplace_back(1);     // B_0
        cache.emplace_back(-1, 2); // B_1
    }
    while (cache.size() <= m) {
        unsigned long k = cache.size();
        if (k % 2 == 1) {
            cache.emplace_back(0);
            continue;
        }
        // B_k = -1/(k+1) * sum_{j<k} C(k+1, j) B_j
        BigRational acc(0);
        for (unsigned long j = 0; j < k; ++j) {
            if (j > 1 && j % 2 == 1) continue; // odd Bernoullis vanish
            acc += binomial(k + 1, j) * cache[j];
        }
        cache.push_back(-acc / BigRational(static_cast<long>(k) + 1));
    }
    return cache[m];
}

} // namespace ramv
