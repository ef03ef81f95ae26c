#include "rrg/verify.hpp"

#include "rrg/errors.hpp"

#include <chrono>
#include <cstdlib>
#include <future>

namespace rrg {

std::string identity_name(IdentityId id) {
    switch (id) {
    case IdentityId::rrg_counts: return "rrg";
    case IdentityId::ebf: return "ebf";
    case IdentityId::thm13: return "thm13";
    case IdentityId::thm14: return "thm14";
    case IdentityId::thm15: return "thm15";
    case IdentityId::multisum: return "multisum";
    case IdentityId::jtp_instance: return "jtp";
    case IdentityId::prelude_ee: return "prelude-ee";
    case IdentityId::prelude_oo: return "prelude-oo";
    case IdentityId::prelude_oe: return "prelude-oe";
    }
    return "?";
}

IdentityId parse_identity(const std::string &name) {
    for (IdentityId id : {IdentityId::rrg_counts, IdentityId::ebf, IdentityId::thm13, IdentityId::thm14,
                          IdentityId::thm15, IdentityId::multisum, IdentityId::jtp_instance, IdentityId::prelude_ee,
                          IdentityId::prelude_oo, IdentityId::prelude_oe})
        if (identity_name(id) == name) return id;
    throw ParameterError("unknown identity '" + name + "'");
}

std::string scope_name(Scope scope) {
    switch (scope) {
    case Scope::gordon: return "gordon";
    case Scope::EE: return "ee";
    case Scope::OO: return "oo";
    case Scope::OE: return "oe";
    }
    return "?";
}

Scope parse_scope(const std::string &name) {
    if (name == "gordon") return Scope::gordon;
    if (name == "ee" || name == "EE") return Scope::EE;
    if (name == "oo" || name == "OO") return Scope::OO;
    if (name == "oe" || name == "OE") return Scope::OE;
    throw ParameterError("unknown scope '" + name + "'");
}

namespace {

Pipeline to_pipeline(Scope scope) {
    switch (scope) {
    case Scope::EE: return Pipeline::EE;
    case Scope::OO: return Pipeline::OO;
    case Scope::OE: return Pipeline::OE;
    default: throw ParameterError("scope has no pipeline");
    }
}

// (q^a;q^{2k+2})(q^{2k+2-a};q^{2k+2})(q^{2k+2};q^{2k+2})
TruncatedSeries even_modulus_jtp(int k, int a, int N) {
    const int m = 2 * k + 2;
    return mul(mul(poch_inf(PochSign::plus, a, m, N), poch_inf(PochSign::plus, m - a, m, N)),
               poch_inf(PochSign::plus, m, m, N));
}

TruncatedSeries P(PochSign s, int a, int m, int N) { return poch_inf(s, a, m, N); }

} // namespace

std::pair<TruncatedSeries, TruncatedSeries> identity_sides(IdentityId id, int k, int a, int N, IdentityMode mode) {
    if (N < 0) throw ParameterError("truncation must be nonnegative");
    const bool inv = mode == IdentityMode::inverted;
    constexpr auto plus = PochSign::plus;
    constexpr auto minus = PochSign::minus;
    switch (id) {
    case IdentityId::rrg_counts:
        return {family_gf(Family::A, k, a, N), family_gf(Family::B, k, a, N)};
    case IdentityId::ebf: {
        check_gordon_params(k, a);
        const auto theta = theta_sum({2 * k + 1, 2 * (k - a) + 1}, N);
        const auto b = family_gf(Family::B, k, a, N);
        if (inv) return {b, mul(theta, invert_unit(P(plus, 1, 1, N)))};
        return {mul(P(plus, 1, 1, N), b), theta};
    }
    case IdentityId::thm13: {
        check_pipeline_params(Pipeline::EE, k, a);
        const auto w = family_gf(Family::W, k, a, N);
        const auto num = mul(P(minus, 1, 2, N), even_modulus_jtp(k, a, N));
        if (inv) return {w, mul(num, invert_unit(P(plus, 2, 2, N)))};
        return {mul(w, P(plus, 2, 2, N)), num};
    }
    case IdentityId::thm14: {
        check_pipeline_params(Pipeline::OO, k, a);
        const auto w = family_gf(Family::W, k, a, N);
        const auto num = mul(P(plus, 2, 4, N), even_modulus_jtp(k, a, N));
        if (inv) return {w, mul(num, invert_unit(P(plus, 1, 1, N)))};
        return {mul(w, P(plus, 1, 1, N)), num};
    }
    case IdentityId::thm15: {
        check_pipeline_params(Pipeline::OE, k, a);
        const auto w = family_gf(Family::Wbar, k, a, N);
        const auto num = even_modulus_jtp(k, a, N);
        const auto den = mul(P(minus, 1, 2, N), P(plus, 1, 1, N));
        if (inv) return {w, mul(num, invert_unit(den))};
        return {mul(w, den), num};
    }
    case IdentityId::multisum:
        return {multisum_rrg(k, a, N), family_gf(Family::A, k, a, N)};
    case IdentityId::jtp_instance: {
        check_gordon_params(k, a);
        const int m = 2 * k + 1;
        return {theta_sum({m, 2 * (k - a) + 1}, N),
                mul(mul(P(plus, m, m, N), P(plus, a, m, N)), P(plus, m - a, m, N))};
    }
    case IdentityId::prelude_ee:
        return {mul(P(minus, 1, 2, N), P(plus, 1, 1, N)), mul(P(plus, 2, 4, N), P(plus, 2, 2, N))};
    case IdentityId::prelude_oo:
        return {mul(P(plus, 2, 4, N), invert_unit(P(plus, 1, 1, N))),
                mul(P(minus, 1, 2, N), invert_unit(P(plus, 2, 2, N)))};
    case IdentityId::prelude_oe:
        return {mul(mul(P(minus, 1, 2, N), P(plus, 1, 1, N)), P(minus, 2, 2, N)), P(plus, 2, 2, N)};
    }
    throw ParameterError("unknown identity");
}

VerificationReport check_identity(IdentityId id, int k, int a, int N, IdentityMode mode) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.identity = identity_name(id);
    r.k = k;
    r.a = a;
    r.truncation = N;
    const auto [lhs, rhs] = identity_sides(id, k, a, N, mode);
    const int e = first_difference(lhs, rhs);
    r.pass = e < 0;
    if (!r.pass) r.first_discrepancy = Discrepancy{e, lhs[e], rhs[e]};
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

int sweep_cap() {
    if (const char *env = std::getenv("RRG_MAX_SWEEP")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0 && v <= 1000) return static_cast<int>(v);
        throw ParameterError("RRG_MAX_SWEEP must be an integer in [0, 1000]");
    }
    return 30;
}

void check_scope_params(Scope scope, int k, int a) {
    if (scope == Scope::gordon) check_gordon_params(k, a);
    else check_pipeline_params(to_pipeline(scope), k, a);
}

std::vector<PartitionPair> ground_set(Scope scope, int k, int a, int w) {
    check_scope_params(scope, k, a);
    if (scope != Scope::gordon) return pipeline_ground_set(to_pipeline(scope), k, a, w);
    std::vector<PartitionPair> out;
    for (int wa = 0; wa <= w; ++wa) {
        const auto As = enumerate_distinct(wa);
        const auto Bs = enumerate_family(Family::B, k, a, w - wa);
        for (const auto &A : As)
            for (const auto &B : Bs) out.push_back({A, B});
    }
    return out;
}

bool in_ground_set(const PartitionPair &pair, Scope scope, int k, int a) {
    if (scope == Scope::gordon) return in_gordon_ground_set(pair, k, a);
    return in_pipeline_ground_set(pair, to_pipeline(scope), k, a);
}

InvolutionOutcome involute(const PartitionPair &pair, Scope scope, int k, int a) {
    if (scope == Scope::gordon) return involute_gordon(pair, k, a);
    return involute_pipeline(pair, to_pipeline(scope), k, a);
}

namespace {

struct WeightResult {
    std::int64_t total = 0;  // signed count of the ground set
    std::int64_t fixed = 0;  // signed count of fixed points
    std::int64_t configurations = 0;
    std::int64_t fixed_points = 0;
    std::int64_t residual = 0;
    std::optional<std::string> failure;
};

// Checks every law on the configurations of one weight class.
WeightResult sweep_weight(Scope scope, int k, int a, int w) {
    WeightResult r;
    try {
        for (const auto &pi : ground_set(scope, k, a, w)) {
            ++r.configurations;
            r.total += pi.sign();
            const InvolutionOutcome out = involute(pi, scope, k, a);
            if (out.fixed) {
                ++r.fixed_points;
                r.fixed += pi.sign();
                // Canonical shape: index n and free part E account for the weight and sign.
                if (out.n >= 0) {
                    int core_w = 0;
                    int core_sign = out.n % 2 == 0 ? 1 : -1;
                    if (out.n > 0)
                        core_w = scope == Scope::gordon ? gordon_fixed_weight(out.family, out.n, k, a)
                                                        : pipeline_fixed_weight(out.family, out.n, k, a);
                    if (scope == Scope::EE && out.E.size() % 2 == 1) core_sign = -core_sign;
                    if (core_w + weight(out.E) != w || core_sign != pi.sign()) {
                        r.failure = "fixed point " + to_string(pi) + " does not match its canonical form";
                        return r;
                    }
                }
                continue;
            }
            const PartitionPair &img = out.partner;
            if (out.label.kind == ClassLabel::Kind::Residual) ++r.residual;
            if (!in_ground_set(img, scope, k, a)) {
                r.failure = to_string(pi) + " maps outside the ground set to " + to_string(img);
                return r;
            }
            if (img.weight() != w) {
                r.failure = to_string(pi) + " maps to " + to_string(img) + " of different weight";
                return r;
            }
            const auto dl = static_cast<long>(img.A.size()) - static_cast<long>(pi.A.size());
            const bool flips = scope == Scope::gordon ? (dl == 1 || dl == -1) : img.sign() != pi.sign();
            if (!flips) {
                r.failure = to_string(pi) + " maps to " + to_string(img) + " without reversing the sign";
                return r;
            }
            const InvolutionOutcome back = involute(img, scope, k, a);
            if (back.fixed || back.partner != pi) {
                r.failure = to_string(pi) + " -> " + to_string(img) + " does not map back";
                return r;
            }
        }
    } catch (const std::exception &e) {
        r.failure = std::string("exception at weight ") + std::to_string(w) + ": " + e.what();
    }
    return r;
}

} // namespace

VerificationReport check_involution_laws(Scope scope, int k, int a, int N) {
    const auto t0 = std::chrono::steady_clock::now();
    check_scope_params(scope, k, a);
    if (N < 0) throw ParameterError("truncation must be nonnegative");
    if (N > sweep_cap())
        throw ParameterError("sweep weight " + std::to_string(N) + " exceeds the cap " + std::to_string(sweep_cap()) +
                             " (set RRG_MAX_SWEEP to raise it)");
    VerificationReport rep;
    rep.identity = "involution:" + scope_name(scope);
    rep.k = k;
    rep.a = a;
    rep.truncation = N;

    std::vector<std::future<WeightResult>> jobs;
    for (int w = 0; w <= N; ++w) jobs.push_back(std::async(std::launch::async, sweep_weight, scope, k, a, w));
    TruncatedSeries total(N), fixed(N);
    std::int64_t configs = 0, fixed_points = 0, residual = 0;
    for (int w = 0; w <= N; ++w) {
        const WeightResult r = jobs[static_cast<std::size_t>(w)].get();
        total.add_term(w, r.total);
        fixed.add_term(w, r.fixed);
        configs += r.configurations;
        fixed_points += r.fixed_points;
        residual += r.residual;
        if (r.failure && !rep.counterexample) rep.counterexample = r.failure;
    }
    rep.stats = {{"configurations", configs}, {"fixed_points", fixed_points}, {"residual_matched", residual}};

    TruncatedSeries expected = scope == Scope::gordon ? gordon_fixed_gf(k, a, N)
                                                      : pipeline_fixed_gf(to_pipeline(scope), k, a, N);
    TruncatedSeries theta = scope == Scope::gordon
                                ? theta_sum({2 * k + 1, 2 * (k - a) + 1}, N)
                                : mul(pipeline_e_factor(to_pipeline(scope), N), theta_sum({2 * (k + 1), 2 * (k + 1 - a)}, N));
    // Signed count of the ground set from the series side: distinct A times the B family.
    TruncatedSeries analytic =
        scope == Scope::gordon ? mul(poch_inf(PochSign::plus, 1, 1, N), family_gf(Family::B, k, a, N))
        : scope == Scope::EE   ? mul(poch_inf(PochSign::plus, 1, 1, N), family_gf(Family::W, k, a, N))
        : scope == Scope::OO   ? mul(poch_inf(PochSign::plus, 2, 2, N), family_gf(Family::W, k, a, N))
                               : mul(poch_inf(PochSign::plus, 2, 2, N), family_gf(Family::Wbar, k, a, N));

    const std::pair<const TruncatedSeries *, const TruncatedSeries *> comparisons[] = {
        {&fixed, &expected}, {&expected, &theta}, {&total, &expected}, {&total, &analytic}};
    const char *names[] = {"fixed points vs fixed-point templates", "fixed-point templates vs theta product",
                           "signed ground set vs fixed points", "signed ground set vs series product"};
    for (std::size_t i = 0; i < 4 && !rep.first_discrepancy; ++i) {
        const int e = first_difference(*comparisons[i].first, *comparisons[i].second);
        if (e >= 0) {
            rep.first_discrepancy = Discrepancy{e, (*comparisons[i].first)[e], (*comparisons[i].second)[e]};
            if (!rep.counterexample) rep.counterexample = names[i];
        }
    }
    rep.pass = !rep.counterexample && !rep.first_discrepancy;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

OrbitTrace trace_orbit(const PartitionPair &config, Scope scope, int k, int a) {
    check_scope_params(scope, k, a);
    if (!in_ground_set(config, scope, k, a))
        throw MembershipError("configuration " + to_string(config) + " is not in the " + scope_name(scope) +
                              " ground set");
    OrbitTrace t;
    t.start = config;
    auto record = [&](const InvolutionOutcome &o, const PartitionPair &from) {
        OrbitStep s;
        s.label = o.label;
        s.step = o.step;
        s.fixed = o.fixed;
        s.family = o.family;
        s.n = o.n;
        s.E = o.E;
        s.config = o.fixed ? from : o.partner;
        t.steps.push_back(s);
    };
    const InvolutionOutcome first = involute(config, scope, k, a);
    record(first, config);
    if (first.fixed) {
        t.terminal_fixed = true;
        return t;
    }
    const InvolutionOutcome second = involute(first.partner, scope, k, a);
    record(second, first.partner);
    if (second.fixed || second.partner != config)
        throw ConsistencyError("orbit of " + to_string(config) + " does not close after two steps");
    return t;
}

} // namespace rrg
