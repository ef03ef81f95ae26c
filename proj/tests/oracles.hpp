// Brute-force reference implementations used as test oracles. They share no
// code with the library beyond the Partition type.
#ifndef RRG_TEST_ORACLES_HPP
#define RRG_TEST_ORACLES_HPP

#include "rrg/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using rrg::Partition;

// All partitions of n, built from smallest part upward, then reported in
// descending lexicographic order.
inline std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int min_part) {
        if (rest == 0) {
            Partition p(cur.rbegin(), cur.rend());
            out.push_back(p);
            return;
        }
        for (int x = min_part; x <= rest; ++x) {
            cur.push_back(x);
            rec(rest - x, x);
            cur.pop_back();
        }
    };
    rec(n, 1);
    std::sort(out.begin(), out.end(), std::greater<Partition>());
    return out;
}

inline bool distinct(const Partition &p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] == p[i + 1]) return false;
    return true;
}

inline bool gordon(const Partition &B, int k, int a) {
    int ones = 0;
    for (std::size_t i = 0; i < B.size(); ++i) {
        if (B[i] == 1) ++ones;
        const std::size_t j = i + static_cast<std::size_t>(k) - 1;
        if (j < B.size() && B[i] - B[j] < 2) return false;
    }
    return ones <= a - 1;
}

// constrained_parity: 0 -> even values need even multiplicity, 1 -> odd values, -1 -> none.
inline bool parity(const Partition &B, int constrained_parity) {
    if (constrained_parity < 0) return true;
    std::map<int, int> m;
    for (int x : B) ++m[x];
    for (auto [v, c] : m)
        if (v % 2 == constrained_parity && c % 2 == 1) return false;
    return true;
}

inline bool family_a(const Partition &p, int k, int a) {
    const int m = 2 * k + 1;
    for (int x : p)
        if (x % m == 0 || x % m == a || x % m == m - a) return false;
    return true;
}

// family: 'A', 'B', 'W', 'w' (Wbar)
inline bool in_family(const Partition &p, char family, int k, int a) {
    switch (family) {
    case 'A': return family_a(p, k, a);
    case 'B': return gordon(p, k, a);
    case 'W': return gordon(p, k, a) && parity(p, 0);
    default: return gordon(p, k, a) && parity(p, 1);
    }
}

inline std::vector<Partition> family(char fam, int k, int a, int n) {
    std::vector<Partition> out;
    for (auto &p : partitions(n))
        if (in_family(p, fam, k, a)) out.push_back(p);
    return out;
}

inline std::vector<std::int64_t> family_counts(char fam, int k, int a, int N) {
    std::vector<std::int64_t> c;
    for (int n = 0; n <= N; ++n) c.push_back(static_cast<std::int64_t>(family(fam, k, a, n).size()));
    return c;
}

// Coefficients of prod_{j>=0} (1 + s q^{a+jm}) with s = -1 (plus) or +1 (minus),
// as a signed count of distinct partitions into parts = a mod m, parts >= a.
inline std::vector<std::int64_t> poch(bool plus, int a, int m, int N) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(N) + 1, 0);
    for (int n = 0; n <= N; ++n)
        for (auto &p : partitions(n)) {
            if (!distinct(p)) continue;
            bool ok = true;
            for (int x : p) ok = ok && x >= a && (x - a) % m == 0;
            if (ok) c[static_cast<std::size_t>(n)] += plus && p.size() % 2 == 1 ? -1 : 1;
        }
    return c;
}

inline std::vector<std::int64_t> theta(int alpha, int beta, int N) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(N) + 1, 0);
    for (long long n = -4 * N - 4; n <= 4 * N + 4; ++n) {
        const long long e = (alpha * n * n + beta * n) / 2;
        if (e >= 0 && e <= N) c[static_cast<std::size_t>(e)] += n % 2 == 0 ? 1 : -1;
    }
    return c;
}

inline std::vector<std::int64_t> product(const std::vector<std::int64_t> &x, const std::vector<std::int64_t> &y) {
    std::vector<std::int64_t> c(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; i + j < x.size(); ++j) c[i + j] += x[i] * y[j];
    return c;
}

} // namespace oracle

#endif
