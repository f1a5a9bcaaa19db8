#pragma once

// Constructive classification pipeline: counting for k=1, the partition
// correspondence for k=2, automorphism-triple extensions for k=3, and the
// nonexistence checks that close out the remaining parameter sets.

#include "doob/cocliques.hpp"
#include "doob/codes.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace doob {

struct ReducedCode {
    int m = 0;
    int l = 0, j = 0, t = 0; // column-pattern counts, l <= j <= t, l+j+t <= m
};

struct AutomorphismTriple {
    std::array<Automorphism, 3> tau;
};

struct ClassificationResult {
    DoobParams params;
    int k = 0;
    int d = 0;
    std::vector<Code> representatives; // pairwise inequivalent
    std::vector<std::string> notes;    // nonexistence reasoning, when count is 0
    int class_count() const { return static_cast<int>(representatives.size()); }
};

// Closed formula for the number of quadruples (a,b,c,d), a+b+c+d = m,
// b <= c <= d. Exact integer arithmetic; integrality asserted.
uint64_t s_m_formula(uint64_t m);
uint64_t s_m_bruteforce(uint64_t m);

std::vector<ReducedCode> reduced_codes(int m);

// The 4-word code C^{l,j,t} on m Shrikhande plus n K4 coordinates
// (word i takes K4 value i everywhere).
Code expand_reduced(const ReducedCode& rc, int n = 0);

// Equivalence invariant of a 4-word code: (a; sorted counts of the three
// row matchings induced by semilinear columns).
std::array<int, 4> invariant_quadruple(const Code& c);

ClassificationResult classify_k1(int m, int n);

// The coclique partition of the first Shrikhande coordinate induced by a
// (2+0,4^2,3) or (1+2,4^2,3) code: complement of first-coordinate adjacency
// and image adjacency, verified to be 4 disjoint K4s.
CocliquePartition code_partition(const Code& c);

// Inverse construction: a code {(a, f(a))} from an isomorphism f of G_L onto
// Shrikhande (classes a, b) or K4 x K4 (class c).
Code partition_to_code(const CocliquePartition& p);

// Append one K4 coordinate, constant exactly on the parts of the code's
// partition (values 0..3 in order of smallest part member); lifts d from 3
// to 4.
Code extend_to_d4(const Code& c);

// The unique triple of part-preserving automorphisms at pointwise and
// pairwise distance 2; filtered from the full 192-element group.
AutomorphismTriple automorphism_triple(const CocliquePartition& p);

// The k=3, d=3 code {(tau_i(x), h(x), i)} built from a d=3, k=2 code
// {(x, h(x))} and the automorphism triple of its partition (tau_0 = id).
Code extend_k3_d3(const Code& d0);

// (2+2,4^3,4): extensions of the (2+1,4^3,3) representatives by a fourth
// distance-respecting K4 coordinate; also verifies (1+4,4^3,4) is empty.
ClassificationResult classify_224();

// Exhaustive searches behind the two nonexistence propositions. Results are
// cached; `complete` is false when the node budget was hit.
struct NonexistenceCheck {
    bool nonexistent = false;
    bool complete = false;
    uint64_t nodes_visited = 0;
    std::vector<std::string> details;
};
const NonexistenceCheck& check_304(uint64_t node_budget = 1'000'000'000);
const NonexistenceCheck& check_n6d5(uint64_t node_budget = 1'000'000'000);

// Ball-packing obstruction for (m+n, 4^{2m+n-2}, 3): true = nonexistent.
bool check_sphere_packing_d3(int m, int n);

// Reduction chain proving emptiness for 2m+n > 6 (and the 2m+n = 6 cases
// that rest on the searches). nullopt if no reduction applies.
std::optional<std::vector<std::string>> nonexistence_chain(int m, int n, int k);

// Full dispatch for any supported (m, n, k) with m >= 1 and d >= 2.
ClassificationResult classify(int m, int n, int k);

struct TheoremCheck {
    std::string name;
    bool pass = false;
    bool inconclusive = false;
    std::string detail;
};

// Reproduces every Table-entry count constructively, cross-checks the small
// parameter sets against generic search, and closes 6 < 2m+n <= max_weight
// via the reduction chains.
std::vector<TheoremCheck> verify_main_theorem(int max_weight,
                                              uint64_t node_budget = 1'000'000'000);

} // namespace doob
