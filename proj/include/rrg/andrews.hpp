#ifndef RRG_ANDREWS_HPP
#define RRG_ANDREWS_HPP

#include "rrg/gordon.hpp"
#include "rrg/partition.hpp"
#include "rrg/qseries.hpp"

#include <string>
#include <vector>

namespace rrg {

// EE: k, a even, B in W.  OO: k, a odd, B in W, A even.  OE: k odd, a even,
// B in Wbar, A even.
enum class Pipeline { EE, OO, OE };

std::string pipeline_name(Pipeline pipeline);
Pipeline parse_pipeline(const std::string &name);
// Throws ParameterError unless (k, a) meet the pipeline's parity hypothesis.
void check_pipeline_params(Pipeline pipeline, int k, int a);

// EE: (A' | B' | E) with E the sign-carrying parts 2o. OO/OE: (A | C | D)
// with C the merged pairs and D the leftover single parts; E stays empty.
struct PartitionTriple {
    Partition A;
    Partition middle;
    Partition E;
    Partition D;

    int weight() const;
    friend bool operator==(const PartitionTriple &, const PartitionTriple &) = default;
};

bool in_pipeline_ground_set(const PartitionPair &pair, Pipeline pipeline, int k, int a);
// Ground-set pairs of exactly weight w, ordered by |A| then lexicographically.
std::vector<PartitionPair> pipeline_ground_set(Pipeline pipeline, int k, int a, int w);

PartitionTriple to_triple(const PartitionPair &pair, Pipeline pipeline, int k, int a);
PartitionPair from_triple(const PartitionTriple &triple, Pipeline pipeline);

// True iff the top-level largest-part move is unavailable for a nonempty A.
bool exceptional_condition(const PartitionTriple &triple, Pipeline pipeline, int k, int a);

// OO/OE: split one pair 2v of C into v,v in D whenever v has the single-part
// parity and is not already in D.
PartitionTriple redistribute(const PartitionTriple &triple, Pipeline pipeline);

InvolutionOutcome involute_pipeline(const PartitionPair &pair, Pipeline pipeline, int k, int a);

// Canonical fixed core (E empty) as a triple: EE (A' | B' | ()), OO/OE
// (A | C' | D') with D' the staircase of single parts.
PartitionTriple pipeline_fixed_triple(Pipeline pipeline, int family, int n, int k, int a);
int pipeline_fixed_weight(int family, int n, int k, int a);

struct CanonicalFixed {
    int family = 0;   // 0 for the n = 0 core, and for unclassified fixed points
    int n = 0;        // -1 for unclassified fixed points (OO with a = 1)
    Partition E;      // EE: signed parts = 2 mod 4; OO: distinct odd; OE: distinct even
    PartitionPair core;
    PartitionTriple core_triple;
};

// Accepts a fixed configuration in pair or triple form.
CanonicalFixed canonicalize_fixed(const PartitionPair &pair, Pipeline pipeline, int k, int a);
CanonicalFixed canonicalize_fixed(const PartitionTriple &triple, Pipeline pipeline, int k, int a);

// Signed generating function of the free part E.
TruncatedSeries pipeline_e_factor(Pipeline pipeline, int N);
TruncatedSeries pipeline_fixed_gf(Pipeline pipeline, int k, int a, int N);

} // namespace rrg

#endif
