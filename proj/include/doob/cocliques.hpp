#pragma once

// Cocliques (maximum independent sets, size 4) of the Shrikhande graph and
// K4 x K4, and partitions of the Shrikhande graph into four cocliques.

#include "doob/graphs.hpp"

#include <array>
#include <vector>

namespace doob {

// A coclique as a 16-bit vertex mask.
using Coclique = uint16_t;

enum class CocliqueType { Linear, Semilinear };

// A partition into 4 disjoint cocliques covering all 16 vertices,
// parts sorted by smallest member.
using CocliquePartition = std::array<Coclique, 4>;

enum class PartitionClass { a, b, c };

// All size-4 independent sets. For Shrikhande and K4^2 these are exactly the
// maximum independent sets.
std::vector<Coclique> enumerate_cocliques(const FactorGraph& g);

// Linear iff all pairwise differences have order 2. Throws if the mask is not
// a coclique of the Shrikhande graph.
CocliqueType coclique_type(Coclique c);

std::vector<CocliquePartition> enumerate_partitions(const FactorGraph& g);

// Class under the 192-element automorphism group: a = all parts linear,
// b = associated two-distance graph isomorphic to Shrikhande,
// c = associated graph isomorphic to K4^2.
PartitionClass classify_partition(const CocliquePartition& p);

// Canonical form: minimum over the automorphism group of the sorted
// sorted-part representation. Total order usable as a dictionary key.
CocliquePartition canonical_partition(const CocliquePartition& p);

CocliquePartition apply_automorphism(const CocliquePartition& p, const Automorphism& tau);

CocliquePartition make_partition(const std::array<std::array<int, 4>, 4>& parts);

// Part containing vertex v.
int part_of(const CocliquePartition& p, int v);

// Representatives for each class, one per entry of the a/b/c naming.
const CocliquePartition& partition_rep(PartitionClass cls);

} // namespace doob
