#include "jkres/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace jkres {

// B_n = -1/(n+1) * sum_{k<n} binom(n+1, k) B_k, from the defining
// identity sum_{k<=n} binom(n+1, k) B_k = 0 for n >= 1.
Rational bernoulli(unsigned n) {
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) {
        unsigned m = static_cast<unsigned>(cache.size());
        if (m > 2 && m % 2 == 1) {
            cache.emplace_back(0);
            continue;
        }
        Rational s;
        for (unsigned k = 0; k < m; ++k)
            s += binomial_rational(m + 1, k) * cache[k];
        cache.push_back(-s / Rational(m + 1));
    }
    return cache[n];
}

} // namespace jkres
