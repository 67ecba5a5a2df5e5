#include "mirror/recursion/dvv.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace mirror {

namespace {

std::mutex g_mu;
std::map<std::pair<int, std::vector<int>>, Rational> g_cache;

Rational compute(int g, std::vector<int> k);

Rational lookup(int g, std::vector<int> k) {
    int n = static_cast<int>(k.size());
    if (g < 0 || n < 1 || 2 * g - 2 + n <= 0) return 0;
    for (int x : k)
        if (x < 0) return 0;
    if (std::accumulate(k.begin(), k.end(), 0) != 3 * g - 3 + n) return 0;
    std::sort(k.begin(), k.end());
    auto key = std::make_pair(g, k);
    {
        std::lock_guard<std::mutex> lock(g_mu);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }
    Rational v = compute(g, k);
    std::lock_guard<std::mutex> lock(g_mu);
    g_cache.emplace(key, v);
    return v;
}

Rational dfact(long n) { return odd_double_factorial(n); }

// k sorted, dimension matches.
Rational compute(int g, std::vector<int> k) {
    int n = static_cast<int>(k.size());
    if (g == 0 && n == 3) return 1;
    if (g == 1 && n == 1) return frac(1, 24);
    // Recurse on the largest index: tau_{a+1} with a >= 0 (it is positive once (g,n) is not a base case).
    int a = k.back() - 1;
    std::vector<int> rest(k.begin(), k.end() - 1);
    Rational sum = 0;
    for (size_t j = 0; j < rest.size(); ++j) {
        std::vector<int> t = rest;
        int kj = t[j];
        t[j] = a + kj;
        sum += dfact(2 * a + 2 * kj + 1) / dfact(2 * kj - 1) * lookup(g, t);
    }
    Rational half = frac(1, 2);
    int m = static_cast<int>(rest.size());
    for (int b = 0; b <= a - 1; ++b) {
        int c = a - 1 - b;
        Rational w = half * dfact(2 * b + 1) * dfact(2 * c + 1);
        std::vector<int> t = rest;
        t.push_back(b);
        t.push_back(c);
        sum += w * lookup(g - 1, t);
        for (int g1 = 0; g1 <= g; ++g1)
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                std::vector<int> I{b}, J{c};
                for (int i = 0; i < m; ++i) (mask >> i & 1 ? I : J).push_back(rest[static_cast<size_t>(i)]);
                sum += w * lookup(g1, I) * lookup(g - g1, J);
            }
    }
    return sum / dfact(2 * a + 3);
}

}  // namespace

Rational dvv_intersection(int g, std::vector<int> k) {
    // With n >= 1 every unstable (g, n) has negative dimension, so only g < 0 or n = 0 is rejected.
    if (g < 0 || k.empty()) throw RecursionError("unstable (g, n)");
    return lookup(g, std::move(k));
}

}  // namespace mirror
