#include "doob/cocliques.hpp"

#include <algorithm>
#include <stdexcept>

namespace doob {

std::vector<Coclique> enumerate_cocliques(const FactorGraph& g) {
    // Branch and bound over the 16-element universe: extend an independent
    // set by vertices above its maximum, keeping a mask of still-compatible
    // vertices.
    std::vector<Coclique> out;
    const uint16_t all = static_cast<uint16_t>((1u << g.vertex_count) - 1);
    struct Frame { uint16_t set; uint16_t allowed; int count; };
    std::vector<Frame> stack{{0, all, 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.count == 4) {
            out.push_back(f.set);
            continue;
        }
        uint16_t cand = f.allowed;
        while (cand) {
            int v = __builtin_ctz(cand);
            cand &= cand - 1;
            uint16_t rest = f.allowed & ~g.adj[v] & static_cast<uint16_t>(~0u << (v + 1));
            if (f.count + 1 + __builtin_popcount(rest) < 4) continue;
            stack.push_back({static_cast<uint16_t>(f.set | (1u << v)), rest, f.count + 1});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CocliqueType coclique_type(Coclique c) {
    const auto& sh = shrikhande();
    std::array<int, 4> vs{};
    int t = 0;
    for (int v = 0; v < 16; ++v)
        if (c & (1u << v)) {
            if (t == 4) throw std::invalid_argument("coclique_type: not a 4-set");
            vs[t++] = v;
        }
    if (t != 4) throw std::invalid_argument("coclique_type: not a 4-set");
    bool linear = true;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (sh.adjacent(vs[i], vs[j]))
                throw std::invalid_argument("coclique_type: vertices adjacent");
            if (pair_order(pair_sub(static_cast<Z4Pair>(vs[i]), static_cast<Z4Pair>(vs[j]))) != 2)
                linear = false;
        }
    return linear ? CocliqueType::Linear : CocliqueType::Semilinear;
}

std::vector<CocliquePartition> enumerate_partitions(const FactorGraph& g) {
    auto cocliques = enumerate_cocliques(g);
    std::vector<CocliquePartition> out;
    // Cover vertices greedily: always extend with a coclique containing the
    // smallest uncovered vertex, so each unordered partition appears once.
    CocliquePartition parts{};
    auto rec = [&](auto&& self, uint16_t covered, int depth) -> void {
        if (depth == 4) {
            out.push_back(parts);
            return;
        }
        int pivot = __builtin_ctz(static_cast<uint16_t>(~covered));
        for (Coclique c : cocliques) {
            if (!(c & (1u << pivot)) || (c & covered)) continue;
            parts[depth] = c;
            self(self, static_cast<uint16_t>(covered | c), depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

namespace {
// Parts ordered by smallest member, matching enumerate_partitions' pivot order.
void sort_parts(CocliquePartition& p) {
    std::sort(p.begin(), p.end(),
              [](Coclique a, Coclique b) { return __builtin_ctz(a) < __builtin_ctz(b); });
}
} // namespace

CocliquePartition apply_automorphism(const CocliquePartition& p, const Automorphism& tau) {
    CocliquePartition q{};
    for (int i = 0; i < 4; ++i) {
        uint16_t img = 0;
        for (int v = 0; v < 16; ++v)
            if (p[i] & (1u << v)) img |= 1u << tau[v];
        q[i] = img;
    }
    sort_parts(q);
    return q;
}

CocliquePartition canonical_partition(const CocliquePartition& p) {
    CocliquePartition best = apply_automorphism(p, identity_perm(16));
    for (const auto& tau : shrikhande_group()) {
        CocliquePartition q = apply_automorphism(p, tau);
        if (q < best) best = q;
    }
    return best;
}

CocliquePartition make_partition(const std::array<std::array<int, 4>, 4>& parts) {
    CocliquePartition p{};
    for (int i = 0; i < 4; ++i)
        for (int v : parts[i]) p[i] |= 1u << v;
    sort_parts(p);
    return p;
}

int part_of(const CocliquePartition& p, int v) {
    for (int i = 0; i < 4; ++i)
        if (p[i] & (1u << v)) return i;
    throw std::invalid_argument("part_of: vertex not covered");
}

PartitionClass classify_partition(const CocliquePartition& p) {
    uint16_t covered = 0;
    for (auto c : p) {
        coclique_type(c); // validates
        if (covered & c) throw std::invalid_argument("classify_partition: parts overlap");
        covered |= c;
    }
    if (covered != 0xFFFF) throw std::invalid_argument("classify_partition: not a cover");

    bool all_linear = true;
    for (auto c : p)
        if (coclique_type(c) != CocliqueType::Linear) all_linear = false;
    if (all_linear) return PartitionClass::a;

    // Distinguish b from c by the graph on distance-2 cross-part pairs.
    const auto& sh = shrikhande();
    std::array<uint16_t, 16> adj{};
    for (int u = 0; u < 16; ++u)
        for (int v = 0; v < 16; ++v)
            if (u != v && sh.dist[u][v] == 2 && part_of(p, u) != part_of(p, v))
                adj[u] |= 1u << v;
    FactorGraph gl = graph_from_adjacency(adj, 16);
    if (!find_isomorphisms(gl, shrikhande(), 1).empty()) return PartitionClass::b;
    if (!find_isomorphisms(gl, k4_squared(), 1).empty()) return PartitionClass::c;
    throw std::logic_error("classify_partition: G_L is neither Sh nor K4^2");
}

const CocliquePartition& partition_rep(PartitionClass cls) {
    // a: the linear-coclique coset partition. b and c: the two semilinear
    // partitions written out in the uniqueness proof for automorphism triples.
    static const CocliquePartition rep_a = make_partition(
        {{{0x0, 0x2, 0x8, 0xA}, {0x1, 0x3, 0x9, 0xB}, {0x4, 0x6, 0xC, 0xE}, {0x5, 0x7, 0xD, 0xF}}});
    static const CocliquePartition rep_b = make_partition(
        {{{0x0, 0x2, 0x9, 0xB}, {0x1, 0x3, 0xA, 0x8}, {0x4, 0x6, 0xC, 0xE}, {0x5, 0x7, 0xD, 0xF}}});
    static const CocliquePartition rep_c = make_partition(
        {{{0x0, 0x2, 0x9, 0xB}, {0x1, 0x3, 0x8, 0xA}, {0x4, 0x6, 0xD, 0xF}, {0x5, 0x7, 0xC, 0xE}}});
    switch (cls) {
    case PartitionClass::a: return rep_a;
    case PartitionClass::b: return rep_b;
    default: return rep_c;
    }
}

} // namespace doob
