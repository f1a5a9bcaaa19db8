#pragma once

// Generic backtracking search for MDS codes in D(m,n) with isomorph
// rejection. Serves as the independent oracle for the constructive
// classification.

#include "doob/codes.hpp"

#include <cstdint>
#include <vector>

namespace doob {

enum class SymmetryMode { None, CoordinateStabilized, FullCanonicalAugmentation };

struct SearchConfig {
    DoobParams params;
    int k = 1;
    uint64_t node_budget = 1'000'000'000;
    SymmetryMode symmetry = SymmetryMode::FullCanonicalAugmentation;
    std::vector<DoobVertex> seed_words;
    int checkpoint_interval = 4; // depths at which partial minimality is tested
    int jobs = 1;
};

enum class SearchStatus { Complete, BudgetExceeded };

struct SearchOutcome {
    SearchStatus status = SearchStatus::Complete;
    std::vector<Code> classes;
    uint64_t nodes_visited = 0;
    uint64_t raw_codes = 0; // completions before equivalence reduction
};

// Depth-first extension of partial codes in lexicographic vertex order.
// Pruning: pairwise distance, projection-injectivity counts, disjoint-ball
// volume, and (in full mode) translation-minimality at checkpoint depths
// plus a final equivalence reduction.
SearchOutcome search_mds(const SearchConfig& cfg);

// Class count from a complete full-symmetry run; throws if the budget is hit.
int count_classes(const DoobParams& params, int k, uint64_t budget = 1'000'000'000);

} // namespace doob
