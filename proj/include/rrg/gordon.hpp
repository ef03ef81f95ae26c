#ifndef RRG_GORDON_HPP
#define RRG_GORDON_HPP

#include "rrg/partition.hpp"
#include "rrg/qseries.hpp"

#include <optional>
#include <string>

namespace rrg {

struct ClassLabel {
    // OddExchange and Residual occur only in the parity-restricted involutions.
    enum class Kind { MoveBtoA, MoveAtoB, U, Fixed, OddExchange, Residual };
    Kind kind = Kind::Fixed;
    int i = 0;      // U: witness index 1..k
    int cls = 0;    // U: class 1..4
    int family = 0; // Fixed: 1 or 2 (0 for the empty configuration)
    int n = 0;      // Fixed: index

    static ClassLabel move_b_to_a() { return {Kind::MoveBtoA}; }
    static ClassLabel move_a_to_b() { return {Kind::MoveAtoB}; }
    static ClassLabel u(int i, int cls) { return {Kind::U, i, cls}; }
    static ClassLabel fixed(int family, int n) { return {Kind::Fixed, 0, 0, family, n}; }
    static ClassLabel odd_exchange() { return {Kind::OddExchange}; }
    static ClassLabel residual() { return {Kind::Residual}; }

    std::string to_string() const;
    friend bool operator==(const ClassLabel &, const ClassLabel &) = default;
};

struct ClassParams {
    int p = 0;
    int q = 0;
    std::optional<int> r; // absent only for the reduced case k = 1
    std::optional<int> s; // present for 2 <= i <= k
    int n = 0;
};

struct InvolutionOutcome {
    bool fixed = false;
    PartitionPair partner; // meaningful when !fixed
    int family = 0;        // meaningful when fixed
    int n = 0;
    Partition E;           // fixed points of the parity-restricted involutions: free part
    ClassLabel label;      // classification of the input
    std::string step;      // name of the map that was applied

    friend bool operator==(const InvolutionOutcome &, const InvolutionOutcome &) = default;
};

// Membership in the ground set of Gordon's involution: A strict, B Gordon.
bool in_gordon_ground_set(const PartitionPair &pair, int k, int a);

// Witness index i of the chain condition a_1 = b_1 = ... = b_{i-1} =
// b_i + 1 = ... = b_{k-1} + 1 on B padded with k-a zeros, if any.
std::optional<int> chain_witness(const PartitionPair &pair, int k, int a);

ClassLabel classify(const PartitionPair &pair, int k, int a);
PartitionPair step1_move(const PartitionPair &pair, int k, int a);
ClassParams compute_params(const PartitionPair &pair, int k, int a);
InvolutionOutcome apply_map(const PartitionPair &pair, int k, int a);
InvolutionOutcome involute_gordon(const PartitionPair &pair, int k, int a);

// Same involution, additionally accepting k = 1 (then a = 1, B = () and the
// map is Franklin's involution on distinct partitions). Used on the reduced
// configurations of the parity-restricted involutions.
InvolutionOutcome involute_gordon_reduced(const PartitionPair &pair, int k, int a);

PartitionPair gordon_fixed_point(int family, int n, int k, int a);
// Weight (k+1/2)n^2 +- (k-a+1/2)n of the family-1 (+) or family-2 (-) fixed point.
int gordon_fixed_weight(int family, int n, int k, int a);
TruncatedSeries gordon_fixed_gf(int k, int a, int N);

} // namespace rrg

#endif
