#ifndef RRG_PARTITION_HPP
#define RRG_PARTITION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rrg {

// A partition is a weakly decreasing list of positive parts. The same type
// holds signed (strictly decreasing) partitions; the sign is derived from the
// number of parts and never stored.
using Partition = std::vector<int>;

enum class Family { A, B, W, Wbar };

enum class ParityMode { none, evenPartsEvenMultiplicity, oddPartsEvenMultiplicity };

// Configuration (A | B): A a signed partition with distinct parts, B an
// ordinary partition.
struct PartitionPair {
    Partition A;
    Partition B;

    int weight() const;
    int sign() const { return A.size() % 2 == 0 ? 1 : -1; }
    friend bool operator==(const PartitionPair &, const PartitionPair &) = default;
    friend auto operator<=>(const PartitionPair &, const PartitionPair &) = default;
};

int weight(const Partition &p);
bool is_partition(const Partition &p);
bool is_strict(const Partition &p);
int sign_of(const Partition &signed_parts);

// Multiplicity table value -> count.
std::map<int, int> multiplicities(const Partition &p);
Partition from_multiplicities(const std::map<int, int> &mult);

// Multiset union and difference; difference throws MembershipError when the
// subtrahend is not contained in the minuend.
Partition multiset_union(const Partition &x, const Partition &y);
Partition multiset_difference(const Partition &x, const Partition &y);

// Throws ParameterError unless k >= 2 and 1 <= a <= k.
void check_gordon_params(int k, int a);

// Window condition b_i - b_{i+k-1} >= 2 and at most a-1 parts equal to 1.
bool is_gordon(const Partition &B, int k, int a);

// Same predicate without the k >= 2 requirement. With k = 1 the window
// condition rejects every nonempty partition, which is what the reduced
// Gordon involution at k = 1 (Franklin's involution) needs.
bool is_gordon_relaxed(const Partition &B, int k, int a);

bool satisfies_parity(const Partition &B, ParityMode mode);
ParityMode parity_mode(Family family);

// Parts avoid the residues 0, a, 2k+1-a modulo 2k+1.
bool in_family_a(const Partition &p, int k, int a);
bool in_family(const Partition &p, Family family, int k, int a);

// All partitions of n, largest-part-first lexicographic (descending) order.
std::vector<Partition> enumerate_partitions(int n);
// Partitions of n into distinct parts, optionally restricted to even parts.
std::vector<Partition> enumerate_distinct(int n, bool even_only = false);

// Partitions of n in the family, in descending lexicographic order.
std::vector<Partition> enumerate_family(Family family, int k, int a, int n);
std::int64_t count_family(Family family, int k, int a, int n);

std::string family_name(Family family);
Family parse_family(const std::string &name);
std::string to_string(const Partition &p);
std::string to_string(const PartitionPair &pair);

} // namespace rrg

#endif
