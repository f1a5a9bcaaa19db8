#include "doob/graphs.hpp"

#include <algorithm>
#include <stdexcept>

namespace doob {

namespace {

void fill_distances(FactorGraph& g) {
    // BFS from every vertex; diameters here are at most 2.
    for (int s = 0; s < g.vertex_count; ++s) {
        auto& row = g.dist[s];
        row.fill(0xFF);
        row[s] = 0;
        uint16_t frontier = 1u << s;
        uint16_t seen = frontier;
        int d = 0;
        while (frontier) {
            ++d;
            uint16_t next = 0;
            for (int u = 0; u < g.vertex_count; ++u)
                if (frontier & (1u << u)) next |= g.adj[u];
            next &= ~seen;
            for (int u = 0; u < g.vertex_count; ++u)
                if (next & (1u << u)) row[u] = static_cast<uint8_t>(d);
            seen |= next;
            frontier = next;
        }
    }
}

} // namespace

FactorGraph build_factor(FactorKind kind) {
    FactorGraph g;
    g.kind = kind;
    switch (kind) {
    case FactorKind::Shrikhande:
        g.vertex_count = 16;
        for (int u = 0; u < 16; ++u) {
            uint16_t mask = 0;
            for (int v = 0; v < 16; ++v)
                if (classify_difference(static_cast<Z4Pair>(u), static_cast<Z4Pair>(v)) ==
                    DiffClass::A)
                    mask |= 1u << v;
            g.adj[u] = mask;
        }
        break;
    case FactorKind::K4:
        g.vertex_count = 4;
        for (int u = 0; u < 4; ++u) g.adj[u] = static_cast<uint16_t>(0xF & ~(1u << u));
        break;
    case FactorKind::K4Squared:
        g.vertex_count = 16;
        for (int u = 0; u < 16; ++u) {
            uint16_t mask = 0;
            for (int v = 0; v < 16; ++v) {
                if (u == v) continue;
                bool same_a = (u >> 2) == (v >> 2);
                bool same_b = (u & 3) == (v & 3);
                if (same_a != same_b) mask |= 1u << v; // differ in exactly one K4 digit
            }
            g.adj[u] = mask;
        }
        break;
    }
    fill_distances(g);
    return g;
}

FactorGraph graph_from_adjacency(const std::array<uint16_t, 16>& adj, int vertex_count) {
    FactorGraph g;
    g.kind = FactorKind::Shrikhande; // kind is irrelevant for derived graphs
    g.vertex_count = vertex_count;
    g.adj = adj;
    fill_distances(g);
    return g;
}

uint16_t common_neighbors(const FactorGraph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("common_neighbors: u == v");
    return g.adj[u] & g.adj[v];
}

std::optional<SrgParams> srg_params(const FactorGraph& g) {
    const int n = g.vertex_count;
    const int k = g.degree(0);
    for (int u = 1; u < n; ++u)
        if (g.degree(u) != k) return std::nullopt;
    int lambda = -1, mu = -1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int c = __builtin_popcount(g.adj[u] & g.adj[v]);
            if (g.adjacent(u, v)) {
                if (lambda < 0) lambda = c;
                else if (lambda != c) return std::nullopt;
            } else {
                if (mu < 0) mu = c;
                else if (mu != c) return std::nullopt;
            }
        }
    if (mu < 0) return std::nullopt; // complete graph: mu undefined
    return SrgParams{n, k, lambda, mu};
}

namespace {

// Vertex order for the map search: start at 0, then always pick the vertex
// with the most already-ordered neighbors, so adjacency constraints bind early.
std::vector<int> search_order(const FactorGraph& g) {
    std::vector<int> order;
    uint16_t placed = 0;
    order.push_back(0);
    placed |= 1;
    while (static_cast<int>(order.size()) < g.vertex_count) {
        int best = -1, best_links = -1;
        for (int v = 0; v < g.vertex_count; ++v) {
            if (placed & (1u << v)) continue;
            int links = __builtin_popcount(g.adj[v] & placed);
            if (links > best_links) { best_links = links; best = v; }
        }
        order.push_back(best);
        placed |= 1u << best;
    }
    return order;
}

struct IsoSearch {
    const FactorGraph& g1;
    const FactorGraph& g2;
    std::vector<int> order;
    Automorphism image{};
    uint16_t used = 0;
    std::vector<Automorphism> found;
    size_t limit;

    void run(size_t depth) {
        if (found.size() >= limit) return;
        if (depth == order.size()) {
            found.push_back(image);
            return;
        }
        int u = order[depth];
        for (int t = 0; t < g2.vertex_count; ++t) {
            if (used & (1u << t)) continue;
            bool ok = true;
            for (size_t i = 0; i < depth; ++i) {
                int w = order[i];
                if (g1.adjacent(u, w) != g2.adjacent(t, image[w])) { ok = false; break; }
            }
            if (!ok) continue;
            image[u] = static_cast<uint8_t>(t);
            used |= 1u << t;
            run(depth + 1);
            used &= ~(1u << t);
            if (found.size() >= limit) return;
        }
    }
};

} // namespace

std::vector<Automorphism> find_isomorphisms(const FactorGraph& g1, const FactorGraph& g2,
                                            size_t limit) {
    if (g1.vertex_count != g2.vertex_count) return {};
    IsoSearch s{g1, g2, search_order(g1), {}, 0, {}, limit};
    s.run(0);
    return std::move(s.found);
}

std::vector<Automorphism> automorphism_group(const FactorGraph& g) {
    return find_isomorphisms(g, g);
}

bool verify_order_lemma(const FactorGraph& sh) {
    for (int a = 0; a < 16; ++a)
        for (int b = a + 1; b < 16; ++b) {
            if (sh.adjacent(a, b)) continue;
            uint16_t cn = common_neighbors(sh, a, b);
            if (__builtin_popcount(cn) != 2) return false;
            int u = __builtin_ctz(cn);
            int w = 31 - __builtin_clz(static_cast<uint32_t>(cn));
            int ord = pair_order(pair_sub(static_cast<Z4Pair>(a), static_cast<Z4Pair>(b)));
            bool adj = sh.adjacent(u, w);
            if (ord == 2 && adj) return false;
            if (ord == 4 && !adj) return false;
        }
    return true;
}

bool verify_order_preservation(const FactorGraph& sh,
                               const std::vector<Automorphism>& group) {
    (void)sh;
    for (const auto& tau : group)
        for (int a = 0; a < 16; ++a)
            for (int b = a + 1; b < 16; ++b) {
                int o1 = pair_order(pair_sub(static_cast<Z4Pair>(a), static_cast<Z4Pair>(b)));
                int o2 = pair_order(pair_sub(tau[a], tau[b]));
                if (o1 != o2) return false;
            }
    return true;
}

bool conforms(const DoobVertex& v, const DoobParams& p) {
    if (static_cast<int>(v.sh.size()) != p.m || static_cast<int>(v.k.size()) != p.n)
        return false;
    for (auto s : v.sh)
        if (s > 15) return false;
    for (auto h : v.k)
        if (h > 3) return false;
    return true;
}

int doob_distance(const DoobParams& p, const DoobVertex& u, const DoobVertex& v) {
    if (!conforms(u, p) || !conforms(v, p))
        throw std::invalid_argument("doob_distance: dimension mismatch");
    const auto& sh = shrikhande();
    int d = 0;
    for (int i = 0; i < p.m; ++i) d += sh.dist[u.sh[i]][v.sh[i]];
    for (int j = 0; j < p.n; ++j) d += (u.k[j] != v.k[j]) ? 1 : 0;
    return d;
}

const FactorGraph& shrikhande() {
    static const FactorGraph g = build_factor(FactorKind::Shrikhande);
    return g;
}

const FactorGraph& k4() {
    static const FactorGraph g = build_factor(FactorKind::K4);
    return g;
}

const FactorGraph& k4_squared() {
    static const FactorGraph g = build_factor(FactorKind::K4Squared);
    return g;
}

const std::vector<Automorphism>& shrikhande_group() {
    static const std::vector<Automorphism> grp = automorphism_group(shrikhande());
    return grp;
}

} // namespace doob
