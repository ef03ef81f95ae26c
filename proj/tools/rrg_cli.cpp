// Command-line front end: count, enumerate, verify, trace, fixed-points.
#include "rrg/andrews.hpp"
#include "rrg/errors.hpp"
#include "rrg/gordon.hpp"
#include "rrg/partition.hpp"
#include "rrg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace rrg;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct Options {
    int k = 0;
    int a = 0;
    int n = -1;
    std::string family;
    std::string identity;
    std::string scope;
    std::string pair;
    std::string format = "text";
};

json to_json(const Partition &p) { return json(p); }

json to_json(const PartitionPair &pair) { return {{"A", pair.A}, {"B", pair.B}}; }

json to_json(const PartitionTriple &t, Pipeline pipeline) {
    json j = {{"A", t.A}, {"B", t.middle}, {"E", t.E}};
    if (pipeline != Pipeline::EE) j["D"] = t.D;
    return j;
}

std::string join(const Partition &p, const char *sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? sep : "") << p[i];
    return os.str();
}

std::string pair_arg(const PartitionPair &pair) { return join(pair.A, ",") + ";" + join(pair.B, ","); }

Partition parse_parts(const std::string &text) {
    Partition p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) throw ParameterError("empty part in --pair");
        const auto e = item.find_last_not_of(" \t");
        item = item.substr(b, e - b + 1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception &) {
            throw ParameterError("malformed part '" + item + "' in --pair");
        }
        if (used != item.size() || v < 1) throw ParameterError("malformed part '" + item + "' in --pair");
        p.push_back(v);
    }
    std::sort(p.begin(), p.end(), std::greater<int>());
    return p;
}

PartitionPair parse_pair(const std::string &text) {
    const auto semi = text.find(';');
    if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
        throw ParameterError("--pair must look like \"A;B\", e.g. \"6,1;5,5\"");
    return {parse_parts(text.substr(0, semi)), parse_parts(text.substr(semi + 1))};
}

void require(bool cond, const std::string &message) {
    if (!cond) throw ParameterError(message);
}

int run_count(const Options &o) {
    require(o.n >= 0, "count needs --n");
    const Family fam = parse_family(o.family);
    const TruncatedSeries s = family_gf(fam, o.k, o.a, o.n);
    if (o.format == "json") {
        std::cout << json{{"family", o.family}, {"k", o.k}, {"a", o.a}, {"truncation", o.n}, {"counts", s.coefficients()}}.dump(2)
                  << "\n";
    } else if (o.format == "csv") {
        std::cout << "n,count\n";
        for (int n = 0; n <= o.n; ++n) std::cout << n << "," << s[n] << "\n";
    } else {
        for (int n = 0; n <= o.n; ++n) std::cout << n << "\t" << s[n] << "\n";
    }
    return exit_pass;
}

int run_enumerate(const Options &o) {
    require(o.n >= 0, "enumerate needs --n");
    const Family fam = parse_family(o.family);
    std::vector<Partition> parts;
    if (fam == Family::A) {
        check_gordon_params(o.k, o.a);
        for (auto &p : enumerate_partitions(o.n))
            if (in_family_a(p, o.k, o.a)) parts.push_back(p);
    } else {
        parts = enumerate_family(fam, o.k, o.a, o.n);
    }
    if (o.format == "json") {
        std::cout << json{{"family", o.family}, {"k", o.k}, {"a", o.a}, {"n", o.n}, {"partitions", parts}}.dump(2)
                  << "\n";
    } else if (o.format == "csv") {
        std::cout << "weight,parts\n";
        for (auto &p : parts) std::cout << o.n << "," << join(p, " ") << "\n";
    } else {
        for (auto &p : parts) std::cout << to_string(p) << "\n";
        std::cout << parts.size() << " partition(s)\n";
    }
    return exit_pass;
}

void print_report(const VerificationReport &r, const Options &o, const TruncatedSeries *lhs,
                  const TruncatedSeries *rhs) {
    if (o.format == "json") {
        json j = {{"identity", r.identity}, {"k", r.k}, {"a", r.a}, {"truncation", r.truncation},
                  {"status", r.pass ? "pass" : "fail"}};
        if (r.first_discrepancy)
            j["firstDiscrepancy"] = {{"exponent", r.first_discrepancy->exponent},
                                     {"lhs", r.first_discrepancy->lhs},
                                     {"rhs", r.first_discrepancy->rhs}};
        if (r.counterexample) j["counterexample"] = *r.counterexample;
        if (!r.stats.empty()) {
            json st = json::object();
            for (auto &[name, v] : r.stats) st[name] = v;
            j["stats"] = st;
        }
        if (lhs && rhs) j["coefficients"] = {{"lhs", lhs->coefficients()}, {"rhs", rhs->coefficients()}};
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "identity,k,a,truncation,status,exponent,lhs,rhs\n";
        std::cout << r.identity << "," << r.k << "," << r.a << "," << r.truncation << "," << (r.pass ? "pass" : "fail");
        if (r.first_discrepancy)
            std::cout << "," << r.first_discrepancy->exponent << "," << r.first_discrepancy->lhs << ","
                      << r.first_discrepancy->rhs;
        else
            std::cout << ",,,";
        std::cout << "\n";
    } else {
        std::cout << r.identity << " k=" << r.k << " a=" << r.a << " N=" << r.truncation << ": "
                  << (r.pass ? "PASS" : "FAIL") << " (" << r.elapsed_ms << " ms)\n";
        for (auto &[name, v] : r.stats) std::cout << "  " << name << ": " << v << "\n";
        if (r.first_discrepancy)
            std::cout << "  first discrepancy at q^" << r.first_discrepancy->exponent << ": lhs "
                      << r.first_discrepancy->lhs << ", rhs " << r.first_discrepancy->rhs << "\n";
        if (r.counterexample) std::cout << "  counterexample: " << *r.counterexample << "\n";
        if (lhs && rhs) {
            std::cout << "  lhs = " << to_string(*lhs) << "\n";
            std::cout << "  rhs = " << to_string(*rhs) << "\n";
        }
    }
}

int run_verify(const Options &o) {
    require(o.n >= 0, "verify needs --truncate (or --n / --max-weight)");
    require(o.identity.empty() != o.scope.empty(), "verify needs exactly one of --identity or --scope");
    if (!o.identity.empty()) {
        const IdentityId id = parse_identity(o.identity);
        const VerificationReport r = check_identity(id, o.k, o.a, o.n);
        const auto sides = identity_sides(id, o.k, o.a, o.n);
        print_report(r, o, &sides.first, &sides.second);
        return r.pass ? exit_pass : exit_fail;
    }
    const VerificationReport r = check_involution_laws(parse_scope(o.scope), o.k, o.a, o.n);
    print_report(r, o, nullptr, nullptr);
    return r.pass ? exit_pass : exit_fail;
}

int run_trace(const Options &o) {
    require(!o.scope.empty(), "trace needs --scope");
    require(!o.pair.empty(), "trace needs --pair");
    const Scope scope = parse_scope(o.scope);
    check_scope_params(scope, o.k, o.a);
    const PartitionPair start = parse_pair(o.pair);
    const OrbitTrace t = trace_orbit(start, scope, o.k, o.a);
    const bool pipeline = scope != Scope::gordon;
    const Pipeline pl = pipeline ? parse_pipeline(o.scope) : Pipeline::EE;
    if (o.format == "json") {
        json steps = json::array();
        for (auto &s : t.steps) {
            json js = {{"label", s.label.to_string()}, {"map", s.step}, {"config", to_json(s.config)}};
            if (pipeline) js["triple"] = to_json(to_triple(s.config, pl, o.k, o.a), pl);
            if (s.fixed) {
                js["family"] = s.family;
                js["n"] = s.n;
                if (pipeline) js["E"] = s.E;
            }
            steps.push_back(js);
        }
        json j = {{"scope", o.scope}, {"k", o.k}, {"a", o.a}, {"start", to_json(t.start)}};
        if (pipeline) j["startTriple"] = to_json(to_triple(t.start, pl, o.k, o.a), pl);
        j["steps"] = steps;
        j["terminal"] = t.terminal_fixed ? "fixed" : "partner";
        if (!t.terminal_fixed) j["partner"] = to_json(t.steps.front().config);
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "step,label,map,A,B\n";
        std::cout << "0,start,," << join(t.start.A, " ") << "," << join(t.start.B, " ") << "\n";
        for (std::size_t i = 0; i < t.steps.size(); ++i)
            std::cout << i + 1 << "," << t.steps[i].label.to_string() << "," << t.steps[i].step << ","
                      << join(t.steps[i].config.A, " ") << "," << join(t.steps[i].config.B, " ") << "\n";
    } else {
        std::cout << "start " << to_string(t.start) << "  weight " << t.start.weight() << "\n";
        for (auto &s : t.steps)
            std::cout << "  " << s.label.to_string() << " [" << s.step << "] -> " << to_string(s.config) << "\n";
        if (t.terminal_fixed)
            std::cout << "fixed: family " << t.steps.front().family << ", n=" << t.steps.front().n << "\n";
        else
            std::cout << "partner " << pair_arg(t.steps.front().config) << "\n";
    }
    return exit_pass;
}

int run_fixed_points(const Options &o) {
    require(!o.scope.empty(), "fixed-points needs --scope");
    require(o.n >= 0, "fixed-points needs --max-weight");
    const Scope scope = parse_scope(o.scope);
    check_scope_params(scope, o.k, o.a);
    if (o.n > sweep_cap())
        throw ParameterError("--max-weight exceeds the sweep cap " + std::to_string(sweep_cap()) +
                             " (set RRG_MAX_SWEEP to raise it)");
    json list = json::array();
    if (o.format == "csv") std::cout << "weight,sign,family,n,A,B,E\n";
    for (int w = 0; w <= o.n; ++w) {
        for (const auto &pi : ground_set(scope, o.k, o.a, w)) {
            const InvolutionOutcome out = involute(pi, scope, o.k, o.a);
            if (!out.fixed) continue;
            if (o.format == "json") {
                json j = {{"weight", w}, {"sign", pi.sign()}, {"family", out.family}, {"n", out.n},
                          {"config", to_json(pi)}};
                if (scope != Scope::gordon) {
                    const Pipeline pl = parse_pipeline(o.scope);
                    const CanonicalFixed cf = canonicalize_fixed(pi, pl, o.k, o.a);
                    j["E"] = cf.E;
                    j["core"] = to_json(cf.core_triple, pl);
                }
                list.push_back(j);
            } else if (o.format == "csv") {
                std::cout << w << "," << pi.sign() << "," << out.family << "," << out.n << "," << join(pi.A, " ")
                          << "," << join(pi.B, " ") << "," << join(out.E, " ") << "\n";
            } else {
                std::cout << "weight " << w << (pi.sign() > 0 ? " + " : " - ") << to_string(pi) << "  family "
                          << out.family << " n=" << out.n;
                if (!out.E.empty()) std::cout << " E=" << to_string(out.E);
                std::cout << "\n";
            }
        }
    }
    if (o.format == "json")
        std::cout << json{{"scope", o.scope}, {"k", o.k}, {"a", o.a}, {"maxWeight", o.n}, {"fixedPoints", list}}.dump(2)
                  << "\n";
    return exit_pass;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Rogers-Ramanujan-Gordon identities: counting, series verification and involutions"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--k", o.k, "Gordon parameter k >= 2")->required();
        sub->add_option("--a", o.a, "Gordon parameter 1 <= a <= k")->required();
        sub->add_option("--n,--max-weight,--truncate", o.n, "weight / truncation bound N")->check(CLI::NonNegativeNumber);
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    };
    const std::vector<std::string> families{"A", "B", "W", "Wbar"};
    const std::vector<std::string> identities{"rrg", "ebf", "thm13", "thm14", "thm15", "multisum", "jtp",
                                              "prelude-ee", "prelude-oo", "prelude-oe"};
    const std::vector<std::string> scopes{"gordon", "ee", "oo", "oe"};

    auto *count = app.add_subcommand("count", "counts of a partition family for n = 0..N");
    add_common(count);
    count->add_option("--family", o.family)->required()->check(CLI::IsMember(families));

    auto *enumerate = app.add_subcommand("enumerate", "partitions of n in a family");
    add_common(enumerate);
    enumerate->add_option("--family", o.family)->required()->check(CLI::IsMember(families));

    auto *verify = app.add_subcommand("verify", "check an identity or the involution laws of a scope");
    add_common(verify);
    verify->add_option("--identity", o.identity)->check(CLI::IsMember(identities));
    verify->add_option("--scope", o.scope)->check(CLI::IsMember(scopes));

    auto *trace = app.add_subcommand("trace", "apply an involution to a configuration and back");
    add_common(trace);
    trace->add_option("--scope", o.scope)->required()->check(CLI::IsMember(scopes));
    trace->add_option("--pair", o.pair, "configuration \"A;B\", e.g. \"6,1;5,5\"")->required();

    auto *fixed = app.add_subcommand("fixed-points", "fixed points of an involution up to a weight");
    add_common(fixed);
    fixed->add_option("--scope", o.scope)->required()->check(CLI::IsMember(scopes));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*count) return run_count(o);
        if (*enumerate) return run_enumerate(o);
        if (*verify) return run_verify(o);
        if (*trace) return run_trace(o);
        if (*fixed) return run_fixed_points(o);
    } catch (const ParameterError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const MembershipError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "failure: " << e.what() << "\n";
        return exit_fail;
    }
    return exit_usage;
}
