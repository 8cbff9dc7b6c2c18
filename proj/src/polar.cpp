#include "ordept/polar.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace ordept {

std::vector<int> polar_reliability_order(int n) {
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::invalid_argument("polar: n must be a power of two >= 2");
    std::vector<long double> z{0.5L};
    while (int(z.size()) < n) {
        std::vector<long double> next(z.size() * 2);
        for (size_t i = 0; i < z.size(); ++i) {
            next[2 * i] = 2 * z[i] - z[i] * z[i];
            next[2 * i + 1] = z[i] * z[i];
        }
        z = std::move(next);
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return z[a] < z[b]; });
    return order;
}

CodeSpec build_polar_code(int n, int k) {
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::invalid_argument("build_polar_code: n must be a power of two");
    if (k <= 0 || k >= n)
        throw std::invalid_argument("build_polar_code: need 0 < k < n");

    std::vector<int> order = polar_reliability_order(n);
    std::vector<int> info(order.begin(), order.begin() + k);
    std::vector<int> frozen(order.begin() + k, order.end());
    std::sort(info.begin(), info.end());
    std::sort(frozen.begin(), frozen.end());

    // Transform entry F[i][j] = 1 iff the bits of j are a subset of those of i.
    std::vector<BitVec> h;
    for (int f : frozen) {
        BitVec row(n);
        for (int j = 0; j < n; ++j)
            if ((f & ~j) == 0) row.set(j, true);
        h.push_back(std::move(row));
    }
    std::vector<BitVec> gen;
    for (int a : info) {
        BitVec row(n);
        for (int j = 0; j < n; ++j)
            if ((j & ~a) == 0) row.set(j, true);
        gen.push_back(std::move(row));
    }

    std::string name = "polar-" + std::to_string(n) + "-" + std::to_string(k);
    return make_code(n, k, std::move(h), std::move(gen), std::move(name));
}

}  // namespace ordept
