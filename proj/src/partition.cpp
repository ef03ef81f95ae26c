#include "rrg/partition.hpp"

#include "rrg/errors.hpp"
#include "rrg/qseries.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace rrg {

int weight(const Partition &p) { return std::accumulate(p.begin(), p.end(), 0); }

int PartitionPair::weight() const { return rrg::weight(A) + rrg::weight(B); }

bool is_partition(const Partition &p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

bool is_strict(const Partition &p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i + 1 < p.size() && p[i] <= p[i + 1]) return false;
    }
    return true;
}

int sign_of(const Partition &signed_parts) { return signed_parts.size() % 2 == 0 ? 1 : -1; }

std::map<int, int> multiplicities(const Partition &p) {
    std::map<int, int> m;
    for (int x : p) ++m[x];
    return m;
}

Partition from_multiplicities(const std::map<int, int> &mult) {
    Partition p;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        if (it->second < 0) throw ConsistencyError("negative multiplicity");
        p.insert(p.end(), it->second, it->first);
    }
    return p;
}

Partition multiset_union(const Partition &x, const Partition &y) {
    Partition out;
    out.reserve(x.size() + y.size());
    std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out), std::greater<int>());
    return out;
}

Partition multiset_difference(const Partition &x, const Partition &y) {
    auto m = multiplicities(x);
    for (int v : y) {
        auto it = m.find(v);
        if (it == m.end() || it->second == 0)
            throw MembershipError("multiset difference: part " + std::to_string(v) + " not present");
        --it->second;
    }
    return from_multiplicities(m);
}

void check_gordon_params(int k, int a) {
    if (k < 2 || a < 1 || a > k)
        throw ParameterError("require k >= 2 and 1 <= a <= k (got k=" + std::to_string(k) +
                             ", a=" + std::to_string(a) + ")");
}

bool is_gordon_relaxed(const Partition &B, int k, int a) {
    if (!is_partition(B)) return false;
    const std::size_t w = static_cast<std::size_t>(k - 1);
    for (std::size_t i = 0; i + w < B.size(); ++i)
        if (B[i] - B[i + w] < 2) return false;
    int ones = static_cast<int>(std::count(B.begin(), B.end(), 1));
    return ones <= a - 1;
}

bool is_gordon(const Partition &B, int k, int a) {
    check_gordon_params(k, a);
    return is_gordon_relaxed(B, k, a);
}

bool satisfies_parity(const Partition &B, ParityMode mode) {
    if (mode == ParityMode::none) return true;
    const int constrained = mode == ParityMode::evenPartsEvenMultiplicity ? 0 : 1;
    for (auto [v, m] : multiplicities(B))
        if (v % 2 == constrained && m % 2 != 0) return false;
    return true;
}

ParityMode parity_mode(Family family) {
    switch (family) {
    case Family::W: return ParityMode::evenPartsEvenMultiplicity;
    case Family::Wbar: return ParityMode::oddPartsEvenMultiplicity;
    default: return ParityMode::none;
    }
}

bool in_family_a(const Partition &p, int k, int a) {
    const int m = 2 * k + 1;
    for (int x : p) {
        int r = x % m;
        if (r == 0 || r == a || r == m - a) return false;
    }
    return is_partition(p);
}

bool in_family(const Partition &p, Family family, int k, int a) {
    check_gordon_params(k, a);
    if (family == Family::A) return in_family_a(p, k, a);
    return is_gordon_relaxed(p, k, a) && satisfies_parity(p, parity_mode(family));
}

namespace {

// Depth-first generation in descending lexicographic order. `accept_part`
// prunes prefixes: it sees the prefix with the candidate already appended.
void generate(int remaining, int max_part, Partition &prefix,
              const std::function<bool(const Partition &)> &accept_prefix,
              const std::function<void(const Partition &)> &emit) {
    if (remaining == 0) {
        emit(prefix);
        return;
    }
    for (int x = std::min(remaining, max_part); x >= 1; --x) {
        prefix.push_back(x);
        if (accept_prefix(prefix)) generate(remaining - x, x, prefix, accept_prefix, emit);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw ParameterError("weight must be nonnegative");
    std::vector<Partition> out;
    Partition prefix;
    generate(n, n, prefix, [](const Partition &) { return true; },
             [&](const Partition &p) { out.push_back(p); });
    return out;
}

std::vector<Partition> enumerate_distinct(int n, bool even_only) {
    if (n < 0) throw ParameterError("weight must be nonnegative");
    std::vector<Partition> out;
    Partition prefix;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(prefix);
            return;
        }
        for (int x = std::min(remaining, max_part); x >= 1; --x) {
            if (even_only && x % 2 != 0) continue;
            prefix.push_back(x);
            rec(remaining - x, x - 1);
            prefix.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> enumerate_family(Family family, int k, int a, int n) {
    check_gordon_params(k, a);
    if (n < 0) throw ParameterError("weight must be nonnegative");
    std::vector<Partition> out;
    Partition prefix;
    const std::size_t w = static_cast<std::size_t>(k - 1);
    const int mod = 2 * k + 1;
    auto accept = [&](const Partition &p) {
        const int x = p.back();
        if (family == Family::A) {
            int r = x % mod;
            return r != 0 && r != a && r != mod - a;
        }
        if (p.size() > w && p[p.size() - 1 - w] - x < 2) return false;
        if (x == 1 && std::count(p.begin(), p.end(), 1) > a - 1) return false;
        return true;
    };
    const ParityMode mode = parity_mode(family);
    generate(n, n, prefix, accept, [&](const Partition &p) {
        if (satisfies_parity(p, mode)) out.push_back(p);
    });
    return out;
}

std::int64_t count_family(Family family, int k, int a, int n) {
    check_gordon_params(k, a);
    if (n < 0) throw ParameterError("weight must be nonnegative");
    if (family == Family::A) {
        const int m = 2 * k + 1;
        return restricted_gf({0, a % m, (m - a) % m}, m, n)[n];
    }
    return static_cast<std::int64_t>(enumerate_family(family, k, a, n).size());
}

std::string family_name(Family family) {
    switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::W: return "W";
    case Family::Wbar: return "Wbar";
    }
    return "?";
}

Family parse_family(const std::string &name) {
    if (name == "A") return Family::A;
    if (name == "B") return Family::B;
    if (name == "W") return Family::W;
    if (name == "Wbar") return Family::Wbar;
    throw ParameterError("unknown family '" + name + "'");
}

std::string to_string(const Partition &p) {
    if (p.empty()) return "()";
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ')';
    return os.str();
}

std::string to_string(const PartitionPair &pair) {
    auto body = [](const Partition &p) {
        std::ostringstream os;
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
        return os.str();
    };
    return "(" + body(pair.A) + " | " + body(pair.B) + ")";
}

} // namespace rrg
