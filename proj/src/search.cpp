#include "doob/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace doob {

namespace {

// Vertices are flattened to mixed-radix indices: Shrikhande digits (base 16)
// first, K4 digits (base 4) last, most significant first. Index order then
// agrees with DoobVertex's lexicographic order.
struct FlatSpace {
    DoobParams p;
    int m = 0, n = 0, coords = 0;
    long N = 0;
    int k = 0, d = 0, total_words = 0;
    std::vector<long> place;
    std::vector<std::vector<uint8_t>> digit; // digit[i][idx]
    int ball_size = 0;                       // radius-1 ball volume

    void init(const SearchConfig& cfg) {
        p = cfg.params;
        m = p.m;
        n = p.n;
        coords = p.length();
        k = cfg.k;
        if (m < 0 || n < 0 || coords == 0) throw std::invalid_argument("empty Doob graph");
        if (p.weight() > 8) throw std::invalid_argument("search limited to 2m+n <= 8");
        if (k < 1 || p.weight() - k + 1 < 2) throw std::invalid_argument("bad dimension k");
        N = p.vertex_total();
        d = p.weight() - k + 1;
        total_words = 1;
        for (int i = 0; i < k; ++i) total_words *= 4;
        place.assign(coords, 1);
        for (int i = coords - 2; i >= 0; --i)
            place[i] = place[i + 1] * (i + 1 < m ? 16 : 4);
        digit.assign(coords, std::vector<uint8_t>(N));
        for (long idx = 0; idx < N; ++idx)
            for (int i = 0; i < coords; ++i)
                digit[i][idx] = static_cast<uint8_t>((idx / place[i]) % (i < m ? 16 : 4));
        ball_size = 3 * p.weight() + 1;
    }

    int radix(int i) const { return i < m ? 16 : 4; }

    int dist(long u, long v) const {
        const auto& sh = shrikhande();
        int t = 0;
        for (int i = 0; i < m; ++i) t += sh.dist[digit[i][u]][digit[i][v]];
        for (int i = m; i < coords; ++i) t += digit[i][u] != digit[i][v];
        return t;
    }

    long index_of(const DoobVertex& w) const {
        long idx = 0;
        for (int i = 0; i < m; ++i) idx += static_cast<long>(w.sh[i]) * place[i];
        for (int i = 0; i < n; ++i) idx += static_cast<long>(w.k[i]) * place[m + i];
        return idx;
    }

    DoobVertex vertex_of(long idx) const {
        DoobVertex w;
        w.sh.reserve(m);
        w.k.reserve(n);
        for (int i = 0; i < m; ++i) w.sh.push_back(digit[i][idx]);
        for (int i = m; i < coords; ++i) w.k.push_back(digit[i][idx]);
        return w;
    }

    // Group translation x -> x - t, componentwise.
    long translate(long x, long t) const {
        long idx = 0;
        for (int i = 0; i < coords; ++i) {
            int dv = i < m ? pair_sub(digit[i][x], digit[i][t])
                           : z4_add(digit[i][x], z4_neg(digit[i][t]));
            idx += static_cast<long>(dv) * place[i];
        }
        return idx;
    }
};

struct Bitset {
    std::vector<uint64_t> w;
    explicit Bitset(long n = 0) : w((n + 63) / 64, 0) {}
    void set(long i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
    void clear(long i) { w[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(long i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    long count() const {
        long c = 0;
        for (uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }
    void fill_all(long n) {
        w.assign((n + 63) / 64, ~uint64_t{0});
        if (n & 63) w.back() = (uint64_t{1} << (n & 63)) - 1;
    }
};

// Mutable DFS state; one instance per worker thread.
struct Worker {
    const FlatSpace* fs = nullptr;
    SymmetryMode mode = SymmetryMode::None;
    int checkpoint = 4;

    std::vector<long> chosen;
    std::vector<Bitset> cands;   // per depth
    std::vector<Bitset> covered; // per depth
    // Projection-injectivity counters: single coordinates and pairs.
    std::vector<std::array<int, 16>> count1;
    std::vector<std::array<int, 256>> count2;
    std::vector<int> cap1, cap2;
    std::vector<std::pair<int, int>> pair_coords;

    uint64_t local_nodes = 0;
    std::atomic<uint64_t>* global_nodes = nullptr;
    uint64_t node_budget = 0;
    bool budget_hit = false;

    std::vector<std::vector<long>>* sink = nullptr;
    std::mutex* sink_mutex = nullptr;

    void init(const FlatSpace& space, const SearchConfig& cfg) {
        fs = &space;
        mode = cfg.symmetry;
        checkpoint = cfg.checkpoint_interval > 0 ? cfg.checkpoint_interval : 4;
        node_budget = cfg.node_budget;
        int depth_max = fs->total_words + 1;
        cands.assign(depth_max, Bitset(fs->N));
        covered.assign(depth_max, Bitset(fs->N));
        count1.assign(fs->coords, {});
        count2.clear();
        pair_coords.clear();
        cap1.assign(fs->coords, 0);
        for (int i = 0; i < fs->coords; ++i) cap1[i] = cap_for_weight(i < fs->m ? 2 : 1);
        for (int i = 0; i < fs->coords; ++i)
            for (int j = i + 1; j < fs->coords; ++j) {
                pair_coords.emplace_back(i, j);
                cap2.push_back(cap_for_weight((i < fs->m ? 2 : 1) + (j < fs->m ? 2 : 1)));
            }
        count2.assign(pair_coords.size(), {});
        chosen.clear();
    }

    int cap_for_weight(int q) const {
        if (q >= fs->k) return 1;
        int c = 1;
        for (int i = 0; i < fs->k - q; ++i) c *= 4;
        return c;
    }

    bool over_cap(long v) const {
        for (int i = 0; i < fs->coords; ++i)
            if (count1[i][fs->digit[i][v]] >= cap1[i]) return true;
        for (size_t pi = 0; pi < pair_coords.size(); ++pi) {
            auto [i, j] = pair_coords[pi];
            if (count2[pi][fs->digit[i][v] * 16 + fs->digit[j][v]] >= cap2[pi]) return true;
        }
        return false;
    }

    void bump_counts(long v, int delta) {
        for (int i = 0; i < fs->coords; ++i) count1[i][fs->digit[i][v]] += delta;
        for (size_t pi = 0; pi < pair_coords.size(); ++pi) {
            auto [i, j] = pair_coords[pi];
            count2[pi][fs->digit[i][v] * 16 + fs->digit[j][v]] += delta;
        }
    }

    // Projection capacity: chosen plus still-available words can realize at
    // most sum_v min(cap, used_v + avail_v) words per coordinate (and per
    // injective coordinate pair); a full code needs 4^k in every projection.
    std::vector<std::array<uint16_t, 16>> avail1_scratch;
    std::vector<std::vector<uint8_t>> pair_seen_scratch; // pairs with cap 1

    bool capacity_feasible(const Bitset& cand) {
        if (avail1_scratch.empty()) {
            avail1_scratch.assign(fs->coords, {});
            pair_seen_scratch.assign(pair_coords.size(), std::vector<uint8_t>(256, 0));
        }
        for (auto& a : avail1_scratch) a.fill(0);
        std::vector<int> pair_live(pair_coords.size(), 0);
        std::vector<long> touched;
        for (size_t blk = 0; blk < cand.w.size(); ++blk) {
            uint64_t bits = cand.w[blk];
            while (bits) {
                long c = static_cast<long>(blk) * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                for (int i = 0; i < fs->coords; ++i) ++avail1_scratch[i][fs->digit[i][c]];
                for (size_t pi = 0; pi < pair_coords.size(); ++pi) {
                    if (cap2[pi] != 1) continue;
                    auto [i, j] = pair_coords[pi];
                    int pv = fs->digit[i][c] * 16 + fs->digit[j][c];
                    if (!pair_seen_scratch[pi][pv]) {
                        pair_seen_scratch[pi][pv] = 1;
                        ++pair_live[pi];
                        touched.push_back(static_cast<long>(pi) * 256 + pv);
                    }
                }
            }
        }
        for (long t : touched) pair_seen_scratch[t / 256][t % 256] = 0;

        bool ok = true;
        for (int i = 0; i < fs->coords && ok; ++i) {
            int cap = cap1[i], sum = 0;
            for (int v = 0; v < fs->radix(i); ++v)
                sum += std::min(cap, count1[i][v] + avail1_scratch[i][v]);
            ok = sum >= fs->total_words;
        }
        // With cap 1 each chosen word occupies exactly one pair slot, and
        // candidates matching an occupied slot are already removed.
        int used = static_cast<int>(chosen.size());
        for (size_t pi = 0; pi < pair_coords.size() && ok; ++pi) {
            if (cap2[pi] != 1) continue;
            ok = used + pair_live[pi] >= fs->total_words;
        }
        return ok;
    }

    void mark_ball(Bitset& cov, long v) const {
        cov.set(v);
        for (int i = 0; i < fs->coords; ++i) {
            int dv = fs->digit[i][v];
            if (i < fs->m) {
                const auto& sh = shrikhande();
                uint16_t nb = sh.adj[dv];
                while (nb) {
                    int u = __builtin_ctz(nb);
                    nb &= nb - 1;
                    cov.set(v + (static_cast<long>(u) - dv) * fs->place[i]);
                }
            } else {
                for (int u = 0; u < 4; ++u)
                    if (u != dv) cov.set(v + (static_cast<long>(u) - dv) * fs->place[i]);
            }
        }
    }

    // Push word v chosen at depth t: derive state for depth t+1.
    // Returns false if the branch is infeasible.
    bool push(int t, long v) {
        chosen.push_back(v);
        bump_counts(v, +1);
        covered[t + 1] = covered[t];
        mark_ball(covered[t + 1], v);

        Bitset& next = cands[t + 1];
        next = cands[t];
        // Drop everything <= v, conflicts with v, and saturated patterns.
        for (long blk = 0; blk <= v >> 6; ++blk) {
            if (blk < v >> 6) next.w[blk] = 0;
            else next.w[blk] &= ~((uint64_t{2} << (v & 63)) - 1);
        }
        for (size_t blk = 0; blk < next.w.size(); ++blk) {
            uint64_t bits = next.w[blk];
            while (bits) {
                long c = static_cast<long>(blk) * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                if (fs->dist(v, c) < fs->d || over_cap(c)) next.clear(c);
            }
        }

        int have = t + 1;
        int needed = fs->total_words - have;
        if (next.count() < needed) return false;
        if (!capacity_feasible(next)) return false;
        // Radius-1 balls around code words are pairwise disjoint once d >= 3.
        if (fs->d >= 3 &&
            static_cast<long>(needed) * fs->ball_size > fs->N - covered[t + 1].count())
            return false;
        if (mode == SymmetryMode::FullCanonicalAugmentation && needed > 0 &&
            have % checkpoint == 0 && !translation_minimal())
            return false;
        return true;
    }

    void pop(long v) {
        chosen.pop_back();
        bump_counts(v, -1);
    }

    // chosen (sorted ascending by construction) is lexicographically minimal
    // among its word-translates. Partial codes failing this cannot extend to
    // a minimal full code, since minimality is hereditary under removing the
    // largest element.
    bool translation_minimal() const {
        std::vector<long> tr(chosen.size());
        for (size_t wi = 1; wi < chosen.size(); ++wi) {
            long t = chosen[wi];
            for (size_t j = 0; j < chosen.size(); ++j) tr[j] = fs->translate(chosen[j], t);
            std::sort(tr.begin(), tr.end());
            if (tr < chosen) return false;
        }
        return true;
    }

    void emit() {
        std::lock_guard<std::mutex> lock(*sink_mutex);
        sink->push_back(chosen);
    }

    bool tick() {
        ++local_nodes;
        if ((local_nodes & 1023) == 0 &&
            global_nodes->fetch_add(1024, std::memory_order_relaxed) + 1024 >= node_budget) {
            budget_hit = true;
            return false;
        }
        return true;
    }

    void flush_nodes() { global_nodes->fetch_add(local_nodes & 1023, std::memory_order_relaxed); }

    void dfs(int t) {
        if (t == fs->total_words) {
            if (mode == SymmetryMode::FullCanonicalAugmentation && !translation_minimal())
                return;
            emit();
            return;
        }
        const Bitset& cur = cands[t];
        for (size_t blk = 0; blk < cur.w.size() && !budget_hit; ++blk) {
            uint64_t bits = cur.w[blk];
            while (bits) {
                long c = static_cast<long>(blk) * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                if (!tick()) return;
                if (push(t, c)) dfs(t + 1);
                pop(c);
                if (budget_hit) return;
            }
        }
    }
};

} // namespace

SearchOutcome search_mds(const SearchConfig& cfg) {
    FlatSpace fs;
    fs.init(cfg);

    std::atomic<uint64_t> nodes{0};
    std::mutex sink_mutex;
    std::vector<std::vector<long>> raw;

    Worker root;
    root.init(fs, cfg);
    root.global_nodes = &nodes;
    root.sink = &raw;
    root.sink_mutex = &sink_mutex;
    root.cands[0].fill_all(fs.N);

    // Seed words: either caller-provided or the zero word when symmetry is on.
    std::vector<long> seeds;
    for (const auto& w : cfg.seed_words) {
        if (!conforms(w, fs.p)) throw std::invalid_argument("seed word does not conform");
        seeds.push_back(fs.index_of(w));
    }
    std::sort(seeds.begin(), seeds.end());
    if (seeds.empty() && cfg.symmetry != SymmetryMode::None) seeds.push_back(0);

    int depth = 0;
    bool feasible = true;
    for (long s : seeds) {
        if (!root.cands[depth].test(s)) { feasible = false; break; }
        feasible = root.push(depth, s);
        ++depth;
        if (!feasible) break;
    }

    SearchOutcome out;
    if (feasible) {
        int jobs = std::max(1, cfg.jobs);
        if (jobs == 1) {
            root.dfs(depth);
            root.flush_nodes();
            if (root.budget_hit) out.status = SearchStatus::BudgetExceeded;
        } else {
            // Split the branches at the current depth round-robin over threads.
            std::vector<long> branches;
            const Bitset& cur = root.cands[depth];
            for (size_t blk = 0; blk < cur.w.size(); ++blk) {
                uint64_t bits = cur.w[blk];
                while (bits) {
                    branches.push_back(static_cast<long>(blk) * 64 + __builtin_ctzll(bits));
                    bits &= bits - 1;
                }
            }
            std::atomic<bool> any_budget{false};
            std::vector<std::thread> pool;
            for (int j = 0; j < jobs; ++j) {
                pool.emplace_back([&, j] {
                    Worker w = root;
                    w.global_nodes = &nodes;
                    w.sink = &raw;
                    w.sink_mutex = &sink_mutex;
                    for (size_t bi = j; bi < branches.size(); bi += jobs) {
                        long c = branches[bi];
                        if (!w.tick()) break;
                        if (w.push(depth, c)) w.dfs(depth + 1);
                        w.pop(c);
                        if (w.budget_hit) break;
                    }
                    w.flush_nodes();
                    if (w.budget_hit) any_budget = true;
                });
            }
            for (auto& t : pool) t.join();
            if (any_budget) out.status = SearchStatus::BudgetExceeded;
        }
    }

    out.nodes_visited = nodes.load();
    out.raw_codes = raw.size();
    std::sort(raw.begin(), raw.end());

    for (const auto& idxs : raw) {
        std::vector<DoobVertex> words;
        words.reserve(idxs.size());
        for (long i : idxs) words.push_back(fs.vertex_of(i));
        Code c = make_code(fs.p, fs.k, std::move(words));
        if (cfg.symmetry == SymmetryMode::FullCanonicalAugmentation) {
            bool known = false;
            for (const Code& rep : out.classes)
                if (codes_equivalent(rep, c)) { known = true; break; }
            if (!known) out.classes.push_back(std::move(c));
        } else {
            out.classes.push_back(std::move(c));
        }
    }
    return out;
}

int count_classes(const DoobParams& params, int k, uint64_t budget) {
    SearchConfig cfg;
    cfg.params = params;
    cfg.k = k;
    cfg.node_budget = budget;
    SearchOutcome out = search_mds(cfg);
    if (out.status != SearchStatus::Complete)
        throw std::runtime_error("search budget exceeded");
    return static_cast<int>(out.classes.size());
}

} // namespace doob
