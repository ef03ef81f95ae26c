#include "rrg/andrews.hpp"

#include "rrg/errors.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <tuple>

namespace rrg {

std::string pipeline_name(Pipeline pipeline) {
    switch (pipeline) {
    case Pipeline::EE: return "EE";
    case Pipeline::OO: return "OO";
    case Pipeline::OE: return "OE";
    }
    return "?";
}

Pipeline parse_pipeline(const std::string &name) {
    if (name == "EE" || name == "ee") return Pipeline::EE;
    if (name == "OO" || name == "oo") return Pipeline::OO;
    if (name == "OE" || name == "oe") return Pipeline::OE;
    throw ParameterError("unknown pipeline '" + name + "'");
}

void check_pipeline_params(Pipeline pipeline, int k, int a) {
    check_gordon_params(k, a);
    const bool k_even = k % 2 == 0, a_even = a % 2 == 0;
    bool ok = false;
    switch (pipeline) {
    case Pipeline::EE: ok = k_even && a_even; break;
    case Pipeline::OO: ok = !k_even && !a_even; break;
    case Pipeline::OE: ok = !k_even && a_even; break;
    }
    if (!ok)
        throw ParameterError(pipeline_name(pipeline) + " needs " +
                             (pipeline == Pipeline::EE   ? "k and a even"
                              : pipeline == Pipeline::OO ? "k and a odd"
                                                         : "k odd and a even") +
                             " (got k=" + std::to_string(k) + ", a=" + std::to_string(a) + ")");
}

int PartitionTriple::weight() const { return rrg::weight(A) + rrg::weight(middle) + rrg::weight(E) + rrg::weight(D); }

namespace {

using Mult = std::map<int, int>;

Family ground_family(Pipeline pipeline) { return pipeline == Pipeline::OE ? Family::Wbar : Family::W; }

// Parity of the values that may appear an odd number of times in B.
int single_parity(Pipeline pipeline) { return pipeline == Pipeline::OE ? 0 : 1; }

Partition sorted_desc(Partition p) {
    std::sort(p.begin(), p.end(), std::greater<int>());
    return p;
}

Partition doubled(const Partition &p) {
    Partition out;
    for (int v : p) out.push_back(2 * v);
    return out;
}

Partition halved(const Partition &p) {
    Partition out;
    for (int v : p) {
        if (v % 2 != 0) throw ConsistencyError("halving an odd part");
        out.push_back(v / 2);
    }
    return out;
}

// One part 2v per pair of equal parts v.
Partition merged_pairs(const Partition &B) {
    Partition C;
    for (auto it = B.begin(); it != B.end();) {
        const auto run = std::count(it, B.end(), *it);
        C.insert(C.end(), static_cast<std::size_t>(run / 2), 2 * *it);
        it += run;
    }
    return C;
}

Partition pairs_of(const Partition &B) { return halved(merged_pairs(B)); }

Partition twice_each(const Partition &G) {
    Partition out;
    for (int v : G) out.insert(out.end(), 2, v);
    return out;
}

void require_ground(const PartitionPair &pair, Pipeline pipeline, int k, int a) {
    if (!in_pipeline_ground_set(pair, pipeline, k, a))
        throw MembershipError("pair " + to_string(pair) + " is not in the " + pipeline_name(pipeline) +
                              " ground set for k=" + std::to_string(k) + ", a=" + std::to_string(a));
}

InvolutionOutcome partner_outcome(PartitionPair image, ClassLabel label, std::string step) {
    InvolutionOutcome out;
    out.partner = std::move(image);
    out.label = label;
    out.step = std::move(step);
    return out;
}

void validate_partner(const PartitionPair &pair, const InvolutionOutcome &out, Pipeline pipeline, int k, int a) {
    if (out.fixed) return;
    const auto &img = out.partner;
    if (!in_pipeline_ground_set(img, pipeline, k, a) || img.weight() != pair.weight() || img.sign() == pair.sign())
        throw ConsistencyError(pipeline_name(pipeline) + " step '" + out.step + "' mapped " + to_string(pair) +
                               " to " + to_string(img) + ", which is not a valid partner");
}

// ---------------------------------------------------------------- EE

struct EeState {
    Partition A1;   // A without the extracted odd parts
    Mult singles;   // odd parts of odd multiplicity in B not extracted (value -> 1)
    Partition G;    // one entry per pair of equal parts of B
    Partition Eodd; // odd parts in A with odd multiplicity in B
};

EeState ee_split(const PartitionPair &pair) {
    EeState st;
    const Mult m = multiplicities(pair.B);
    for (int x : pair.A) {
        auto it = m.find(x);
        if (x % 2 == 1 && it != m.end() && it->second % 2 == 1) st.Eodd.push_back(x);
        else st.A1.push_back(x);
    }
    for (auto [v, c] : m)
        if (c % 2 == 1 && std::find(st.Eodd.begin(), st.Eodd.end(), v) == st.Eodd.end()) st.singles[v] = 1;
    st.G = pairs_of(pair.B);
    return st;
}

PartitionPair ee_join(const Partition &A1, const Mult &singles, const Partition &G, const Partition &Eodd) {
    PartitionPair out;
    out.A = sorted_desc(multiset_union(sorted_desc(A1), Eodd));
    Partition B = twice_each(G);
    for (auto [v, c] : singles) B.insert(B.end(), static_cast<std::size_t>(c), v);
    B.insert(B.end(), Eodd.begin(), Eodd.end());
    out.B = sorted_desc(std::move(B));
    return out;
}

InvolutionOutcome ee_involute(const PartitionPair &pair, int k, int a) {
    const int K = k / 2, a2 = a / 2;
    EeState st = ee_split(pair);
    const int a1 = st.A1.empty() ? 0 : st.A1.front();
    const int gmax = st.G.empty() ? 0 : 2 * st.G.front();
    const int smax = st.singles.empty() ? 0 : st.singles.rbegin()->first;
    const int bmax = std::max(gmax, smax);

    if (bmax > a1) {
        Partition A1 = st.A1;
        A1.insert(A1.begin(), bmax);
        if (gmax == bmax) {
            Partition G(st.G.begin() + 1, st.G.end());
            return partner_outcome(ee_join(A1, st.singles, G, st.Eodd), ClassLabel::move_b_to_a(), "top-level move");
        }
        Mult S = st.singles;
        S.erase(bmax);
        return partner_outcome(ee_join(A1, S, st.G, st.Eodd), ClassLabel::move_b_to_a(), "top-level move");
    }
    if (!st.A1.empty()) {
        Partition A1(st.A1.begin() + 1, st.A1.end());
        if (a1 % 2 == 1) {
            Mult S = st.singles;
            S[a1] = 1;
            return partner_outcome(ee_join(A1, S, st.G, st.Eodd), ClassLabel::move_a_to_b(), "top-level move");
        }
        Partition G = sorted_desc(multiset_union(st.G, {a1 / 2}));
        if (is_gordon_relaxed(G, K, a2))
            return partner_outcome(ee_join(A1, st.singles, G, st.Eodd), ClassLabel::move_a_to_b(), "top-level move");
    }
    // Exchange of the largest odd part between A' and the singles of B'.
    int omax = smax;
    for (int x : st.A1)
        if (x % 2 == 1) omax = std::max(omax, x);
    if (omax > 0) {
        Partition A1 = st.A1;
        Mult S = st.singles;
        auto it = std::find(A1.begin(), A1.end(), omax);
        if (it != A1.end()) {
            A1.erase(it);
            S[omax] = 1;
        } else {
            S.erase(omax);
            A1 = sorted_desc(multiset_union(A1, {omax}));
        }
        return partner_outcome(ee_join(A1, S, st.G, st.Eodd), ClassLabel::odd_exchange(), "odd exchange");
    }
    const PartitionPair reduced{halved(st.A1), st.G};
    const InvolutionOutcome in = involute_gordon_reduced(reduced, K, a2);
    if (in.fixed) {
        InvolutionOutcome out;
        out.fixed = true;
        out.family = in.family;
        out.n = in.n;
        out.E = doubled(st.Eodd);
        out.label = in.label;
        out.step = "fixed";
        return out;
    }
    return partner_outcome(ee_join(doubled(in.partner.A), {}, in.partner.B, st.Eodd), in.label, "reduced " + in.step);
}

// ---------------------------------------------------------------- OO / OE

std::optional<PartitionPair> top_move(const PartitionPair &pair, int k, int a) {
    const Partition C = merged_pairs(pair.B);
    const int c1 = C.empty() ? 0 : C.front();
    const int a1 = pair.A.empty() ? 0 : pair.A.front();
    if (c1 > a1) {
        PartitionPair out;
        out.A = pair.A;
        out.A.insert(out.A.begin(), c1);
        out.B = multiset_difference(pair.B, {c1 / 2, c1 / 2});
        return out;
    }
    if (pair.A.empty()) return std::nullopt;
    Partition B = sorted_desc(multiset_union(pair.B, {a1 / 2, a1 / 2}));
    if (!is_gordon_relaxed(B, k, a)) return std::nullopt;
    return PartitionPair{Partition(pair.A.begin() + 1, pair.A.end()), B};
}

struct Encoded {
    Partition A2; // A halved
    Partition G;  // pairs kept for the reduced involution
    Mult D;       // single-parity value -> 1 or 2 copies set aside
    friend bool operator==(const Encoded &, const Encoded &) = default;
};

Encoded encode(const PartitionPair &pair, Pipeline pipeline) {
    Encoded e;
    e.A2 = halved(pair.A);
    const int par = single_parity(pipeline);
    Mult g;
    for (auto [v, m] : multiplicities(pair.B)) {
        if (v % 2 == par) {
            const int d = m % 2 == 1 ? 1 : 2;
            e.D[v] = d;
            g[v] = (m - d) / 2;
        } else {
            g[v] = m / 2;
        }
    }
    e.G = from_multiplicities(g);
    return e;
}

PartitionPair decode(const Partition &A2, const Partition &G, const Mult &D) {
    Mult m = multiplicities(twice_each(G));
    for (auto [v, d] : D) m[v] += d;
    return {doubled(A2), from_multiplicities(m)};
}

int reduced_k(int k) { return (k - 1) / 2; }
int reduced_a(Pipeline pipeline, int a) { return pipeline == Pipeline::OO ? (a - 1) / 2 : a / 2; }

struct Structured {
    std::optional<PartitionPair> image;
    ClassLabel label;
    std::string step;
};

// The deterministic part of the OO/OE involution: the top-level move, or the
// reduced Gordon involution on halved parts with the set-aside single parts
// carried along. Returns no image when the construction leaves its domain.
Structured structured(const PartitionPair &pair, Pipeline pipeline, int k, int a) {
    Structured s;
    if (auto moved = top_move(pair, k, a)) {
        s.image = moved;
        s.label = moved->A.size() > pair.A.size() ? ClassLabel::move_b_to_a() : ClassLabel::move_a_to_b();
        s.step = "top-level move";
        return s;
    }
    const int K = reduced_k(k), a2 = reduced_a(pipeline, a);
    if (pair.A.empty() || a2 < 1) return s;
    const Encoded e = encode(pair, pipeline);
    if (!is_gordon_relaxed(e.G, K, a2)) return s;
    const InvolutionOutcome in = involute_gordon_reduced({e.A2, e.G}, K, a2);
    if (in.fixed) return s;
    PartitionPair img = decode(in.partner.A, in.partner.B, e.D);
    if (!(encode(img, pipeline) == Encoded{in.partner.A, in.partner.B, e.D})) return s;
    if (!in_pipeline_ground_set(img, pipeline, k, a)) return s;
    if (top_move(img, k, a)) return s;
    s.image = std::move(img);
    s.label = in.label;
    s.step = "reduced " + in.step;
    return s;
}

// Core multiplicities of the fixed templates: even values k-a, odd values a-2.
Partition oo_oe_core_b(int family, int n, int k, int a) {
    Partition B;
    const int top = family == 1 ? 2 * n : 2 * n - 1;
    for (int v = top; v >= 1; --v) B.insert(B.end(), static_cast<std::size_t>(v % 2 == 0 ? k - a : a - 2), v);
    return B;
}

Partition oo_oe_core_a(int family, int n) {
    Partition A;
    const int top = family == 1 ? 4 * n : 4 * n - 2;
    for (int j = 0; j < n; ++j) A.push_back(top - 2 * j);
    return A;
}

bool has_templates(Pipeline pipeline, int a) { return !(pipeline == Pipeline::OO && a == 1); }

std::optional<CanonicalFixed> oo_oe_canonical(const PartitionPair &pair, Pipeline pipeline, int k, int a) {
    if (!has_templates(pipeline, a)) return std::nullopt;
    const int n = static_cast<int>(pair.A.size());
    const int par = single_parity(pipeline);
    for (int family : n == 0 ? std::vector<int>{0} : std::vector<int>{1, 2}) {
        const Partition coreA = n == 0 ? Partition{} : oo_oe_core_a(family, n);
        if (pair.A != coreA) continue;
        const Partition coreB = n == 0 ? Partition{} : oo_oe_core_b(family, n, k, a);
        Mult rest = multiplicities(pair.B);
        bool ok = true;
        for (auto [v, m] : multiplicities(coreB)) {
            rest[v] -= m;
            if (rest[v] < 0) ok = false;
        }
        if (!ok) continue;
        Partition E;
        for (auto [v, m] : rest) {
            if (m > 1 || (m == 1 && v % 2 != par)) ok = false;
            if (m == 1) E.push_back(v);
        }
        if (!ok) continue;
        CanonicalFixed cf;
        cf.family = family;
        cf.n = n;
        cf.E = sorted_desc(E);
        cf.core = {coreA, coreB};
        cf.core_triple = to_triple(cf.core, pipeline, k, a);
        return cf;
    }
    return std::nullopt;
}

// Configurations outside both the canonical fixed points and the regular
// orbits of `structured` are matched within each weight class: the sorted
// positive list is paired with the sorted negative list index by index.
// Unmatched configurations (only possible when no templates exist) are fixed.
struct ResidualTable {
    std::map<PartitionPair, std::optional<PartitionPair>> partner;
};

bool is_regular(const PartitionPair &pair, Pipeline pipeline, int k, int a, Structured *out = nullptr) {
    Structured s = structured(pair, pipeline, k, a);
    if (!s.image) return false;
    Structured back = structured(*s.image, pipeline, k, a);
    if (!back.image || *back.image != pair) return false;
    if (oo_oe_canonical(*s.image, pipeline, k, a)) return false;
    if (out) *out = std::move(s);
    return true;
}

std::shared_ptr<const ResidualTable> residual_table(Pipeline pipeline, int k, int a, int w) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int, int>, std::shared_ptr<const ResidualTable>> cache;
    const auto key = std::make_tuple(static_cast<int>(pipeline), k, a, w);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<PartitionPair> pos, neg;
    for (const auto &pair : pipeline_ground_set(pipeline, k, a, w)) {
        if (oo_oe_canonical(pair, pipeline, k, a) || is_regular(pair, pipeline, k, a)) continue;
        (pair.sign() > 0 ? pos : neg).push_back(pair);
    }
    if (pos.size() != neg.size() && has_templates(pipeline, a))
        throw ConsistencyError("unbalanced residual at weight " + std::to_string(w) + " for " +
                               pipeline_name(pipeline) + " k=" + std::to_string(k) + ", a=" + std::to_string(a));
    std::sort(pos.begin(), pos.end());
    std::sort(neg.begin(), neg.end());
    auto table = std::make_shared<ResidualTable>();
    const std::size_t m = std::min(pos.size(), neg.size());
    for (std::size_t i = 0; i < m; ++i) {
        table->partner[pos[i]] = neg[i];
        table->partner[neg[i]] = pos[i];
    }
    for (std::size_t i = m; i < pos.size(); ++i) table->partner[pos[i]] = std::nullopt;
    for (std::size_t i = m; i < neg.size(); ++i) table->partner[neg[i]] = std::nullopt;
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(table)).first->second;
}

InvolutionOutcome oo_oe_involute(const PartitionPair &pair, Pipeline pipeline, int k, int a) {
    if (auto cf = oo_oe_canonical(pair, pipeline, k, a)) {
        InvolutionOutcome out;
        out.fixed = true;
        out.family = cf->family;
        out.n = cf->n;
        out.E = cf->E;
        out.label = ClassLabel::fixed(cf->family, cf->n);
        out.step = "fixed";
        return out;
    }
    Structured s;
    if (is_regular(pair, pipeline, k, a, &s)) return partner_outcome(*s.image, s.label, s.step);
    const auto table = residual_table(pipeline, k, a, pair.weight());
    const auto it = table->partner.find(pair);
    if (it == table->partner.end())
        throw ConsistencyError("configuration " + to_string(pair) + " missing from its residual class");
    if (it->second) return partner_outcome(*it->second, ClassLabel::residual(), "residual matching");
    InvolutionOutcome out;
    out.fixed = true;
    out.n = -1;
    out.label = ClassLabel::residual();
    out.step = "residual surplus";
    return out;
}

} // namespace

bool in_pipeline_ground_set(const PartitionPair &pair, Pipeline pipeline, int k, int a) {
    check_pipeline_params(pipeline, k, a);
    if (!is_strict(pair.A)) return false;
    if (pipeline != Pipeline::EE)
        for (int x : pair.A)
            if (x % 2 != 0) return false;
    return is_gordon(pair.B, k, a) && satisfies_parity(pair.B, parity_mode(ground_family(pipeline)));
}

std::vector<PartitionPair> pipeline_ground_set(Pipeline pipeline, int k, int a, int w) {
    check_pipeline_params(pipeline, k, a);
    std::vector<PartitionPair> out;
    for (int wa = 0; wa <= w; ++wa) {
        const auto As = enumerate_distinct(wa, pipeline != Pipeline::EE);
        if (As.empty()) continue;
        const auto Bs = enumerate_family(ground_family(pipeline), k, a, w - wa);
        for (const auto &A : As)
            for (const auto &B : Bs) out.push_back({A, B});
    }
    return out;
}

PartitionTriple to_triple(const PartitionPair &pair, Pipeline pipeline, int k, int a) {
    require_ground(pair, pipeline, k, a);
    PartitionTriple t;
    if (pipeline == Pipeline::EE) {
        const EeState st = ee_split(pair);
        t.A = st.A1;
        Partition mid = doubled(st.G);
        for (auto [v, c] : st.singles) mid.insert(mid.end(), static_cast<std::size_t>(c), v);
        t.middle = sorted_desc(std::move(mid));
        t.E = doubled(st.Eodd);
        return t;
    }
    t.A = pair.A;
    t.middle = merged_pairs(pair.B);
    for (auto [v, m] : multiplicities(pair.B))
        if (m % 2 == 1) t.D.push_back(v);
    t.D = sorted_desc(t.D);
    return t;
}

PartitionPair from_triple(const PartitionTriple &triple, Pipeline pipeline) {
    PartitionPair out;
    if (pipeline == Pipeline::EE) {
        const Partition Eodd = halved(triple.E);
        out.A = sorted_desc(multiset_union(triple.A, Eodd));
        Partition B = Eodd;
        for (int x : triple.middle) {
            if (x % 2 == 0) B.insert(B.end(), 2, x / 2);
            else B.push_back(x);
        }
        out.B = sorted_desc(std::move(B));
        return out;
    }
    out.A = triple.A;
    Partition B = twice_each(halved(triple.middle));
    B.insert(B.end(), triple.D.begin(), triple.D.end());
    out.B = sorted_desc(std::move(B));
    return out;
}

bool exceptional_condition(const PartitionTriple &triple, Pipeline pipeline, int k, int a) {
    check_pipeline_params(pipeline, k, a);
    if (triple.A.empty()) return false;
    const int a1 = triple.A.front();
    if (pipeline == Pipeline::EE) {
        const int b1 = triple.middle.empty() ? 0 : triple.middle.front();
        if (b1 > a1 || a1 % 2 == 1) return false;
        Partition G;
        for (int x : triple.middle)
            if (x % 2 == 0) G.push_back(x / 2);
        G = sorted_desc(multiset_union(G, {a1 / 2}));
        return !is_gordon_relaxed(G, k / 2, a / 2);
    }
    return !top_move(from_triple(triple, pipeline), k, a).has_value();
}

PartitionTriple redistribute(const PartitionTriple &triple, Pipeline pipeline) {
    if (pipeline == Pipeline::EE) throw ParameterError("redistribute applies to the OO and OE pipelines");
    const int par = single_parity(pipeline);
    PartitionTriple out = triple;
    Mult c = multiplicities(triple.middle);
    Mult d = multiplicities(triple.D);
    for (auto &[part, m] : c) {
        const int v = part / 2;
        if (part % 2 != 0) throw ConsistencyError("middle partition has an odd part");
        if (v % 2 == par && m > 0 && d[v] == 0) {
            --m;
            d[v] += 2;
        }
    }
    out.middle = from_multiplicities(c);
    out.D = from_multiplicities(d);
    return out;
}

InvolutionOutcome involute_pipeline(const PartitionPair &pair, Pipeline pipeline, int k, int a) {
    require_ground(pair, pipeline, k, a);
    InvolutionOutcome out =
        pipeline == Pipeline::EE ? ee_involute(pair, k, a) : oo_oe_involute(pair, pipeline, k, a);
    validate_partner(pair, out, pipeline, k, a);
    return out;
}

int pipeline_fixed_weight(int family, int n, int k, int a) {
    const int sq = (k + 1) * n * n, lin = (k + 1 - a) * n;
    return family == 1 ? sq + lin : sq - lin;
}

PartitionTriple pipeline_fixed_triple(Pipeline pipeline, int family, int n, int k, int a) {
    check_pipeline_params(pipeline, k, a);
    if (family != 1 && family != 2) throw ParameterError("fixed-point family must be 1 or 2");
    if (n < 1) throw ParameterError("fixed-point index must be >= 1");
    if (pipeline == Pipeline::EE) {
        const PartitionPair g = gordon_fixed_point(family, n, k / 2, a / 2);
        return {doubled(g.A), doubled(g.B), {}, {}};
    }
    if (!has_templates(pipeline, a))
        throw ParameterError("OO with a = 1 has no fixed-point templates");
    return to_triple({oo_oe_core_a(family, n), oo_oe_core_b(family, n, k, a)}, pipeline, k, a);
}

CanonicalFixed canonicalize_fixed(const PartitionPair &pair, Pipeline pipeline, int k, int a) {
    require_ground(pair, pipeline, k, a);
    const InvolutionOutcome out = involute_pipeline(pair, pipeline, k, a);
    if (!out.fixed) throw MembershipError("configuration " + to_string(pair) + " is not a fixed point");
    CanonicalFixed cf;
    cf.family = out.family;
    cf.n = out.n;
    cf.E = out.E;
    if (pipeline == Pipeline::EE) {
        cf.core = {multiset_difference(pair.A, halved(out.E)), multiset_difference(pair.B, halved(out.E))};
        cf.core_triple = to_triple(cf.core, pipeline, k, a);
        return cf;
    }
    if (auto c = oo_oe_canonical(pair, pipeline, k, a)) return *c;
    cf.core = pair;
    cf.core_triple = to_triple(pair, pipeline, k, a);
    return cf;
}

CanonicalFixed canonicalize_fixed(const PartitionTriple &triple, Pipeline pipeline, int k, int a) {
    return canonicalize_fixed(from_triple(triple, pipeline), pipeline, k, a);
}

TruncatedSeries pipeline_e_factor(Pipeline pipeline, int N) {
    switch (pipeline) {
    case Pipeline::EE: return poch_inf(PochSign::plus, 2, 4, N);
    case Pipeline::OO: return poch_inf(PochSign::minus, 1, 2, N);
    case Pipeline::OE: return poch_inf(PochSign::minus, 2, 2, N);
    }
    throw ParameterError("unknown pipeline");
}

TruncatedSeries pipeline_fixed_gf(Pipeline pipeline, int k, int a, int N) {
    check_pipeline_params(pipeline, k, a);
    TruncatedSeries core(N);
    core.add_term(0, 1);
    for (int n = 1; pipeline_fixed_weight(2, n, k, a) <= N; ++n) {
        for (int family : {1, 2}) {
            int w;
            int sign = n % 2 == 0 ? 1 : -1;
            if (has_templates(pipeline, a)) {
                const PartitionTriple t = pipeline_fixed_triple(pipeline, family, n, k, a);
                w = t.weight();
                sign = t.A.size() % 2 == 0 ? 1 : -1;
            } else {
                w = pipeline_fixed_weight(family, n, k, a);
            }
            core.add_term(w, sign);
        }
    }
    return mul(pipeline_e_factor(pipeline, N), core);
}

} // namespace rrg
