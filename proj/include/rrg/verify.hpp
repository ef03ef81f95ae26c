#ifndef RRG_VERIFY_HPP
#define RRG_VERIFY_HPP

#include "rrg/andrews.hpp"
#include "rrg/gordon.hpp"
#include "rrg/qseries.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rrg {

enum class IdentityId {
    rrg_counts,   // A_{k,a}(n) = B_{k,a}(n)
    ebf,          // (q;q) * sum B = theta(2k+1, 2(k-a)+1)
    thm13,        // k, a even: W with (-q;q^2) / (q^2;q^2)
    thm14,        // k, a odd: W with (q^2;q^4) / (q;q)
    thm15,        // k odd, a even: Wbar with 1 / ((-q;q^2)(q;q))
    multisum,     // Andrews multisum = sum A
    jtp_instance, // theta(2k+1, 2(k-a)+1) = Jacobi triple product
    prelude_ee,   // (-q;q^2)(q;q) = (q^2;q^4)(q^2;q^2)
    prelude_oo,   // (q^2;q^4)/(q;q) = (-q;q^2)/(q^2;q^2), checked through series inversion
    prelude_oe,   // (-q;q^2)(q;q)(-q^2;q^2) = (q^2;q^2)
};

enum class Scope { gordon, EE, OO, OE };

// cross_multiplied compares products only; inverted divides through with
// invert_unit. The two modes share no denominators.
enum class IdentityMode { cross_multiplied, inverted };

std::string identity_name(IdentityId id);
IdentityId parse_identity(const std::string &name);
std::string scope_name(Scope scope);
Scope parse_scope(const std::string &name);

struct Discrepancy {
    int exponent;
    std::int64_t lhs;
    std::int64_t rhs;
};

struct VerificationReport {
    std::string identity; // identity name, or "involution:<scope>"
    int k = 0;
    int a = 0;
    int truncation = 0;
    bool pass = false;
    std::optional<Discrepancy> first_discrepancy;
    std::optional<std::string> counterexample; // involution sweeps: first failing configuration
    std::vector<std::pair<std::string, std::int64_t>> stats;
    double elapsed_ms = 0;
};

// Both sides of an identity as truncated series.
std::pair<TruncatedSeries, TruncatedSeries> identity_sides(IdentityId id, int k, int a, int N,
                                                           IdentityMode mode = IdentityMode::cross_multiplied);
VerificationReport check_identity(IdentityId id, int k, int a, int N,
                                  IdentityMode mode = IdentityMode::cross_multiplied);

// Largest weight accepted by exhaustive sweeps: RRG_MAX_SWEEP or 30.
int sweep_cap();

// Ground-set configurations of weight w for the scope.
std::vector<PartitionPair> ground_set(Scope scope, int k, int a, int w);
bool in_ground_set(const PartitionPair &pair, Scope scope, int k, int a);
InvolutionOutcome involute(const PartitionPair &pair, Scope scope, int k, int a);
void check_scope_params(Scope scope, int k, int a);

VerificationReport check_involution_laws(Scope scope, int k, int a, int N);

struct OrbitStep {
    ClassLabel label;
    std::string step;
    bool fixed = false;
    int family = 0;
    int n = 0;
    Partition E;
    PartitionPair config; // image (the start itself for a fixed point)
};

struct OrbitTrace {
    PartitionPair start;
    std::vector<OrbitStep> steps;
    bool terminal_fixed = false;
};

OrbitTrace trace_orbit(const PartitionPair &config, Scope scope, int k, int a);

} // namespace rrg

#endif
