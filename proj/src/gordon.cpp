#include "rrg/gordon.hpp"

#include "rrg/errors.hpp"

#include <algorithm>

namespace rrg {

std::string ClassLabel::to_string() const {
    switch (kind) {
    case Kind::MoveBtoA: return "MoveBtoA";
    case Kind::MoveAtoB: return "MoveAtoB";
    case Kind::U: return "U(" + std::to_string(i) + "," + std::to_string(cls) + ")";
    case Kind::Fixed: return "Fixed(" + std::to_string(family) + "," + std::to_string(n) + ")";
    case Kind::OddExchange: return "OddExchange";
    case Kind::Residual: return "Residual";
    }
    return "?";
}

namespace {

// B padded with k-a zeros; positions are 1-based as in the chain conditions.
using Padded = std::vector<int>;

void check_reduced_params(int k, int a) {
    if (k < 1 || a < 1 || a > k)
        throw ParameterError("require k >= 1 and 1 <= a <= k (got k=" + std::to_string(k) +
                             ", a=" + std::to_string(a) + ")");
}

Padded padded(const Partition &B, int k, int a) {
    Padded E = B;
    E.insert(E.end(), static_cast<std::size_t>(k - a), 0);
    return E;
}

std::optional<int> at(const Padded &E, int pos) {
    if (pos < 1 || pos > static_cast<int>(E.size())) return std::nullopt;
    return E[static_cast<std::size_t>(pos - 1)];
}

// Number of positions start, start+(k-1), ... linked by differences of exactly 2.
int lchain(const Padded &E, int start, int k) {
    if (!at(E, start)) return 0;
    int count = 1;
    for (int pos = start; at(E, pos + k - 1) && *at(E, pos) - *at(E, pos + k - 1) == 2; pos += k - 1)
        ++count;
    return count;
}

Partition strip(const Padded &E) {
    Partition p;
    for (int v : E)
        if (v != 0) p.push_back(v);
    return p;
}

bool valid_padded(const Padded &E, int k, int a) {
    for (std::size_t j = 0; j < E.size(); ++j) {
        if (E[j] < 0) return false;
        if (j + 1 < E.size() && E[j] < E[j + 1]) return false;
    }
    return is_gordon_relaxed(strip(E), k, a);
}

Padded raise_at(Padded E, int k, int first, int count) {
    for (int t = 0; t < count; ++t) {
        const int pos = first + t * (k - 1);
        if (pos > static_cast<int>(E.size())) E.resize(static_cast<std::size_t>(pos), 0);
        ++E[static_cast<std::size_t>(pos - 1)];
    }
    return E;
}

std::optional<Padded> lower_at(Padded E, int k, int first, int count) {
    for (int t = 0; t < count; ++t) {
        const int pos = first + t * (k - 1);
        if (pos < 1 || pos > static_cast<int>(E.size())) return std::nullopt;
        --E[static_cast<std::size_t>(pos - 1)];
    }
    return E;
}

PartitionPair fixed_point_relaxed(int family, int n, int k, int a) {
    if (family != 1 && family != 2) throw ParameterError("fixed-point family must be 1 or 2");
    if (n < 1) throw ParameterError("fixed-point index must be >= 1");
    PartitionPair pair;
    const int top = family == 1 ? 2 * n : 2 * n - 1;
    for (int v = top; v > top - n; --v) pair.A.push_back(v);
    for (int v = top; v >= 1; --v) pair.B.insert(pair.B.end(), static_cast<std::size_t>(v % 2 == 0 ? k - a : a - 1), v);
    return pair;
}

void require_member(const PartitionPair &pair, int k, int a) {
    if (!is_strict(pair.A) || !is_gordon_relaxed(pair.B, k, a))
        throw MembershipError("pair " + to_string(pair) + " is not in the Gordon ground set for k=" +
                              std::to_string(k) + ", a=" + std::to_string(a));
}

// True iff moving a_1 onto B keeps B Gordon; equivalent to the chain condition failing.
bool a1_fits_b(const PartitionPair &pair, int k, int a) {
    Partition B2;
    B2.reserve(pair.B.size() + 1);
    B2.push_back(pair.A.front());
    B2.insert(B2.end(), pair.B.begin(), pair.B.end());
    return is_gordon_relaxed(B2, k, a);
}

ClassLabel classify_relaxed(const PartitionPair &pair, int k, int a);

ClassParams params_relaxed(const PartitionPair &pair, int k, int a, int i) {
    const Padded E = padded(pair.B, k, a);
    ClassParams cp;
    const Partition &A = pair.A;
    cp.p = A.back();
    cp.q = 1;
    while (cp.q < static_cast<int>(A.size()) && A[static_cast<std::size_t>(cp.q - 1)] - A[static_cast<std::size_t>(cp.q)] == 1)
        ++cp.q;
    if (k >= 2) cp.r = lchain(E, k - 1, k);
    if (i >= 2 && i <= k) cp.s = lchain(E, i - 1, k);
    cp.n = std::min(cp.p, cp.q);
    if (cp.r) cp.n = std::min(cp.n, *cp.r);
    if (cp.s && i <= k - 1) cp.n = std::min(cp.n, *cp.s);
    if (cp.n < 1) throw ConsistencyError("class parameter below 1 for " + to_string(pair));
    return cp;
}

ClassLabel classify_relaxed(const PartitionPair &pair, int k, int a) {
    require_member(pair, k, a);
    if (pair.A.empty() && pair.B.empty()) return ClassLabel::fixed(0, 0);
    const int x = pair.A.empty() ? 0 : pair.A.front();
    if (!pair.B.empty() && pair.B.front() > x) return ClassLabel::move_b_to_a();
    const auto i = chain_witness(pair, k, a);
    const bool fits = a1_fits_b(pair, k, a);
    if (fits == i.has_value())
        throw ConsistencyError("chain condition and Gordon condition disagree on " + to_string(pair));
    if (!i) return ClassLabel::move_a_to_b();
    const ClassParams cp = params_relaxed(pair, k, a, *i);
    const int n = cp.n;
    int c;
    if (*i == 1)
        c = cp.p == n ? 1 : (cp.q == n ? 2 : 3);
    else if (*i == k)
        c = cp.p == n ? 1 : (cp.r == n ? 2 : 4);
    else
        c = cp.p == n ? 1 : (cp.s == n ? 2 : (cp.q == n ? 4 : 3));
    return ClassLabel::u(*i, c);
}

PartitionPair step1_relaxed(const PartitionPair &pair, const ClassLabel &label) {
    PartitionPair out;
    if (label.kind == ClassLabel::Kind::MoveBtoA) {
        out.A.push_back(pair.B.front());
        out.A.insert(out.A.end(), pair.A.begin(), pair.A.end());
        out.B.assign(pair.B.begin() + 1, pair.B.end());
    } else if (label.kind == ClassLabel::Kind::MoveAtoB) {
        out.A.assign(pair.A.begin() + 1, pair.A.end());
        out.B.push_back(pair.A.front());
        out.B.insert(out.B.end(), pair.B.begin(), pair.B.end());
    } else {
        throw ParameterError("step1_move applies only to MoveBtoA / MoveAtoB configurations, got " +
                             label.to_string());
    }
    return out;
}

InvolutionOutcome apply_relaxed(const PartitionPair &pair, int k, int a, const ClassLabel &label) {
    if (label.kind != ClassLabel::Kind::U)
        throw ParameterError("apply_map applies only to U-class configurations, got " + label.to_string());
    const int i = label.i, c = label.cls;
    const ClassParams cp = params_relaxed(pair, k, a, i);
    const int n = cp.n;
    const Partition &A = pair.A;
    const int l = static_cast<int>(A.size());
    const Padded E = padded(pair.B, k, a);

    InvolutionOutcome out;
    out.label = label;
    std::optional<PartitionPair> image;

    if (i == 1 && c == 2) {
        out.step = "alpha";
        Partition NA;
        for (int j = 0; j < l; ++j) NA.push_back(j < n ? A[static_cast<std::size_t>(j)] - 1 : A[static_cast<std::size_t>(j)]);
        NA.push_back(n);
        if (is_strict(NA)) image = PartitionPair{NA, pair.B};
    } else if (i == k && c == 1) {
        out.step = "alpha^-1";
        if (l != n) {
            Partition NA;
            for (int j = 0; j < l - 1; ++j) NA.push_back(j < n ? A[static_cast<std::size_t>(j)] + 1 : A[static_cast<std::size_t>(j)]);
            if (is_strict(NA)) image = PartitionPair{NA, pair.B};
        }
    } else if (c == 1) {
        out.step = "beta";
        Partition NA(A.begin(), A.end() - 1);
        Padded NE = raise_at(E, k, i, n);
        if (valid_padded(NE, k, a)) image = PartitionPair{NA, strip(NE)};
    } else if (c == 2) {
        out.step = "beta^-1";
        Partition NA = A;
        NA.push_back(n);
        auto NE = lower_at(E, k, i - 1, n);
        if (NE && valid_padded(*NE, k, a) && is_strict(NA)) image = PartitionPair{NA, strip(*NE)};
    } else if (c == 4) {
        out.step = "gamma";
        Partition NA{E.front()};
        for (int j = 0; j < l; ++j) NA.push_back(j < n ? A[static_cast<std::size_t>(j)] - 1 : A[static_cast<std::size_t>(j)]);
        Padded rest(E.begin() + 1, E.end());
        Padded NE = raise_at(rest, k, k - 1, n);
        if (valid_padded(NE, k, a) && is_strict(NA)) image = PartitionPair{NA, strip(NE)};
    } else if (c == 3) {
        out.step = "gamma^-1";
        if (l >= n + 1) {
            Partition NA;
            for (int j = 1; j < l; ++j) NA.push_back(j <= n ? A[static_cast<std::size_t>(j)] + 1 : A[static_cast<std::size_t>(j)]);
            auto lowered = lower_at(E, k, k - 1, n);
            if (lowered) {
                Padded NE{A.front()};
                NE.insert(NE.end(), lowered->begin(), lowered->end());
                if (valid_padded(NE, k, a) && is_strict(NA)) image = PartitionPair{NA, strip(NE)};
            }
        }
    } else {
        throw ConsistencyError("unknown class " + label.to_string());
    }

    if (image) {
        if (image->weight() != pair.weight())
            throw ConsistencyError(out.step + " changed the weight of " + to_string(pair));
        out.partner = *image;
        return out;
    }
    for (int family : {1, 2}) {
        if (fixed_point_relaxed(family, n, k, a) == pair) {
            out.fixed = true;
            out.family = family;
            out.n = n;
            return out;
        }
    }
    throw ConsistencyError(out.step + " left the ground set on " + to_string(pair) + " (k=" + std::to_string(k) +
                           ", a=" + std::to_string(a) + ") and the pair is not a fixed-point template");
}

InvolutionOutcome involute_relaxed(const PartitionPair &pair, int k, int a) {
    const ClassLabel label = classify_relaxed(pair, k, a);
    if (label.kind == ClassLabel::Kind::Fixed) {
        InvolutionOutcome out;
        out.fixed = true;
        out.label = label;
        out.step = "fixed";
        return out;
    }
    if (label.kind == ClassLabel::Kind::U) return apply_relaxed(pair, k, a, label);
    InvolutionOutcome out;
    out.label = label;
    out.step = label.kind == ClassLabel::Kind::MoveBtoA ? "move B->A" : "move A->B";
    out.partner = step1_relaxed(pair, label);
    return out;
}

} // namespace

bool in_gordon_ground_set(const PartitionPair &pair, int k, int a) {
    return is_strict(pair.A) && is_gordon(pair.B, k, a);
}

std::optional<int> chain_witness(const PartitionPair &pair, int k, int a) {
    if (pair.A.empty()) return std::nullopt;
    const int x = pair.A.front();
    if (!pair.B.empty() && pair.B.front() > x) return std::nullopt;
    const Padded E = padded(pair.B, k, a);
    for (int i = 1; i <= k; ++i) {
        bool ok = true;
        for (int j = 1; j < k && ok; ++j) {
            const auto v = at(E, j);
            ok = v && *v == (j < i ? x : x - 1);
        }
        if (ok) return i;
    }
    return std::nullopt;
}

ClassLabel classify(const PartitionPair &pair, int k, int a) {
    check_gordon_params(k, a);
    return classify_relaxed(pair, k, a);
}

PartitionPair step1_move(const PartitionPair &pair, int k, int a) {
    check_gordon_params(k, a);
    return step1_relaxed(pair, classify_relaxed(pair, k, a));
}

ClassParams compute_params(const PartitionPair &pair, int k, int a) {
    check_gordon_params(k, a);
    require_member(pair, k, a);
    const auto i = chain_witness(pair, k, a);
    if (!i) throw ParameterError("chain condition does not hold for " + to_string(pair));
    return params_relaxed(pair, k, a, *i);
}

InvolutionOutcome apply_map(const PartitionPair &pair, int k, int a) {
    check_gordon_params(k, a);
    return apply_relaxed(pair, k, a, classify_relaxed(pair, k, a));
}

InvolutionOutcome involute_gordon(const PartitionPair &pair, int k, int a) {
    check_gordon_params(k, a);
    return involute_relaxed(pair, k, a);
}

InvolutionOutcome involute_gordon_reduced(const PartitionPair &pair, int k, int a) {
    check_reduced_params(k, a);
    return involute_relaxed(pair, k, a);
}

PartitionPair gordon_fixed_point(int family, int n, int k, int a) {
    check_reduced_params(k, a);
    return fixed_point_relaxed(family, n, k, a);
}

int gordon_fixed_weight(int family, int n, int k, int a) {
    const int sq = (2 * k + 1) * n * n, lin = (2 * (k - a) + 1) * n;
    return (family == 1 ? sq + lin : sq - lin) / 2;
}

TruncatedSeries gordon_fixed_gf(int k, int a, int N) {
    check_gordon_params(k, a);
    TruncatedSeries s(N);
    s.add_term(0, 1);
    for (int n = 1; gordon_fixed_weight(2, n, k, a) <= N; ++n) {
        for (int family : {1, 2}) {
            const PartitionPair fp = fixed_point_relaxed(family, n, k, a);
            s.add_term(fp.weight(), fp.sign());
        }
    }
    return s;
}

} // namespace rrg
