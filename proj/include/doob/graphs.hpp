#pragma once

// The three factor graphs (Shrikhande, K4, K4 x K4) and Doob graph metrics.
// Neighbor sets are 16-bit masks; distances come from precomputed tables.

#include "doob/core_algebra.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace doob {

enum class FactorKind { Shrikhande, K4, K4Squared };

// Permutation of factor-graph vertices; entries beyond vertex_count unused.
using Automorphism = std::array<uint8_t, 16>;

inline Automorphism identity_perm(int n) {
    Automorphism p{};
    for (int i = 0; i < n; ++i) p[i] = static_cast<uint8_t>(i);
    return p;
}

inline Automorphism compose(const Automorphism& f, const Automorphism& g, int n) {
    // (f o g)(x) = f(g(x))
    Automorphism r{};
    for (int i = 0; i < n; ++i) r[i] = f[g[i]];
    return r;
}

inline Automorphism inverse_perm(const Automorphism& f, int n) {
    Automorphism r{};
    for (int i = 0; i < n; ++i) r[f[i]] = static_cast<uint8_t>(i);
    return r;
}

struct FactorGraph {
    FactorKind kind;
    int vertex_count;
    std::array<uint16_t, 16> adj{};                   // neighbor masks
    std::array<std::array<uint8_t, 16>, 16> dist{};   // all-pairs distances

    bool adjacent(int u, int v) const { return (adj[u] >> v) & 1; }
    int degree(int u) const { return __builtin_popcount(adj[u]); }
};

FactorGraph build_factor(FactorKind kind);

// Wrap an arbitrary adjacency-mask array (used for derived 16-vertex graphs).
FactorGraph graph_from_adjacency(const std::array<uint16_t, 16>& adj, int vertex_count);

inline int factor_distance(const FactorGraph& g, int u, int v) { return g.dist[u][v]; }

// Mask of vertices adjacent to both u and v. Throws if u == v.
uint16_t common_neighbors(const FactorGraph& g, int u, int v);

struct SrgParams {
    int v, k, lambda, mu;
    bool operator==(const SrgParams&) const = default;
};

// Exhaustive check of regularity and both co-neighbor counts.
std::optional<SrgParams> srg_params(const FactorGraph& g);

// All isomorphisms g1 -> g2 by backtracking over partial vertex maps.
// With g1 == g2 this is the automorphism group.
std::vector<Automorphism> find_isomorphisms(const FactorGraph& g1, const FactorGraph& g2,
                                            size_t limit = SIZE_MAX);

std::vector<Automorphism> automorphism_group(const FactorGraph& g);

// Lemma checks on the Shrikhande graph, scanned exhaustively.
bool verify_order_lemma(const FactorGraph& sh);
bool verify_order_preservation(const FactorGraph& sh,
                               const std::vector<Automorphism>& group);

struct DoobParams {
    int m = 0;
    int n = 0;
    bool operator==(const DoobParams&) const = default;
    int length() const { return m + n; }
    int weight() const { return 2 * m + n; }
    long vertex_total() const {
        long t = 1;
        for (int i = 0; i < m; ++i) t *= 16;
        for (int i = 0; i < n; ++i) t *= 4;
        return t;
    }
};

struct DoobVertex {
    std::vector<Z4Pair> sh;
    std::vector<Z4> k;
    bool operator==(const DoobVertex&) const = default;
    auto operator<=>(const DoobVertex&) const = default;
};

bool conforms(const DoobVertex& v, const DoobParams& p);

int doob_distance(const DoobParams& p, const DoobVertex& u, const DoobVertex& v);

// Shared distance tables, built once.
const FactorGraph& shrikhande();
const FactorGraph& k4();
const FactorGraph& k4_squared();
const std::vector<Automorphism>& shrikhande_group();

} // namespace doob
