#pragma once

// Code data model: MDS predicate, projections, faces, equivalence maps and
// the equivalence decision procedure.

#include "doob/graphs.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace doob {

struct Code {
    DoobParams params;
    int declared_k = 0;
    std::vector<DoobVertex> words; // sorted, duplicate-free

    bool operator==(const Code&) const = default;
};

// Validates conformance, sorts, rejects duplicate words.
Code make_code(DoobParams params, int declared_k, std::vector<DoobVertex> words);

// Minimum pairwise distance; throws if fewer than 2 words.
int min_distance(const Code& c);

// |words| = 4^k and min distance = 2m+n-k+1.
bool is_mds(const Code& c);

struct CoordSelector {
    std::vector<int> sh_indices; // 0-based, strictly increasing
    std::vector<int> k_indices;
};

Code projection(const Code& c, const CoordSelector& sel);

Code face(const Code& c, const CoordSelector& sel,
          const std::vector<Z4Pair>& sh_values, const std::vector<Z4>& k_values);

using K4Perm = std::array<uint8_t, 4>;

struct EquivalenceMap {
    // Target coordinate i takes source coordinate sh_coord_perm[i] through
    // sh_autos[i]; likewise for the K4 coordinates.
    std::vector<Automorphism> sh_autos;
    std::vector<K4Perm> k_perms;
    std::vector<int> sh_coord_perm;
    std::vector<int> k_coord_perm;
};

EquivalenceMap identity_equivalence(const DoobParams& p);
EquivalenceMap inverse_equivalence(const EquivalenceMap& e);

Code apply_equivalence(const Code& c, const EquivalenceMap& e);

// Witnessing map if one exists. Backtracks over per-coordinate maps under
// each admissible coordinate permutation, pruning with per-coordinate
// distance-distribution fingerprints and partial projection multisets.
// Throws on parameter mismatch.
std::optional<EquivalenceMap> codes_equivalent(const Code& c1, const Code& c2);

// Text format: header "m n k", one word per line, e.g. "21 03 ; 2 0".
std::string code_to_text(const Code& c);
Code code_from_text(const std::string& text);
void save_code(const Code& c, const std::string& path);
Code load_code(const std::string& path);

// JSON mirror with the same fields.
std::string code_to_json(const Code& c);
Code code_from_json(const std::string& text);

std::string word_to_string(const DoobVertex& w);

} // namespace doob
