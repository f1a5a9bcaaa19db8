#include "doob/codes.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace doob {

Code make_code(DoobParams params, int declared_k, std::vector<DoobVertex> words) {
    for (const auto& w : words)
        if (!conforms(w, params))
            throw std::invalid_argument("make_code: word does not conform to parameters");
    std::sort(words.begin(), words.end());
    if (std::adjacent_find(words.begin(), words.end()) != words.end())
        throw std::invalid_argument("make_code: duplicate word");
    return Code{params, declared_k, std::move(words)};
}

int min_distance(const Code& c) {
    if (c.words.size() < 2) throw std::invalid_argument("min_distance: fewer than 2 words");
    int best = INT32_MAX;
    for (size_t i = 0; i < c.words.size(); ++i)
        for (size_t j = i + 1; j < c.words.size(); ++j)
            best = std::min(best, doob_distance(c.params, c.words[i], c.words[j]));
    return best;
}

bool is_mds(const Code& c) {
    long want = 1;
    for (int i = 0; i < c.declared_k; ++i) want *= 4;
    if (static_cast<long>(c.words.size()) != want) return false;
    if (c.words.size() < 2) return true; // k = 0: a single word
    return min_distance(c) == c.params.weight() - c.declared_k + 1;
}

namespace {

void check_selector(const CoordSelector& sel, const DoobParams& p) {
    auto check = [](const std::vector<int>& idx, int bound, const char* what) {
        int prev = -1;
        for (int i : idx) {
            if (i <= prev || i >= bound)
                throw std::invalid_argument(std::string("selector out of range: ") + what);
            prev = i;
        }
    };
    check(sel.sh_indices, p.m, "sh");
    check(sel.k_indices, p.n, "k");
}

DoobVertex delete_coords(const DoobVertex& w, const CoordSelector& sel) {
    DoobVertex r;
    size_t si = 0;
    for (size_t i = 0; i < w.sh.size(); ++i) {
        if (si < sel.sh_indices.size() && sel.sh_indices[si] == static_cast<int>(i)) { ++si; continue; }
        r.sh.push_back(w.sh[i]);
    }
    size_t ki = 0;
    for (size_t i = 0; i < w.k.size(); ++i) {
        if (ki < sel.k_indices.size() && sel.k_indices[ki] == static_cast<int>(i)) { ++ki; continue; }
        r.k.push_back(w.k[i]);
    }
    return r;
}

} // namespace

Code projection(const Code& c, const CoordSelector& sel) {
    check_selector(sel, c.params);
    DoobParams p{c.params.m - static_cast<int>(sel.sh_indices.size()),
                 c.params.n - static_cast<int>(sel.k_indices.size())};
    std::vector<DoobVertex> words;
    for (const auto& w : c.words) words.push_back(delete_coords(w, sel));
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return Code{p, c.declared_k, std::move(words)};
}

Code face(const Code& c, const CoordSelector& sel,
          const std::vector<Z4Pair>& sh_values, const std::vector<Z4>& k_values) {
    check_selector(sel, c.params);
    if (sh_values.size() != sel.sh_indices.size() || k_values.size() != sel.k_indices.size())
        throw std::invalid_argument("face: value count mismatch");
    int v = static_cast<int>(sel.sh_indices.size());
    int w = static_cast<int>(sel.k_indices.size());
    if (2 * v + w > c.declared_k)
        throw std::invalid_argument("face: fixed coordinate weight exceeds k");
    std::vector<DoobVertex> words;
    for (const auto& word : c.words) {
        bool match = true;
        for (int i = 0; i < v && match; ++i)
            if (word.sh[sel.sh_indices[i]] != sh_values[i]) match = false;
        for (int i = 0; i < w && match; ++i)
            if (word.k[sel.k_indices[i]] != k_values[i]) match = false;
        if (match) words.push_back(delete_coords(word, sel));
    }
    DoobParams p{c.params.m - v, c.params.n - w};
    return make_code(p, c.declared_k - 2 * v - w, std::move(words));
}

EquivalenceMap identity_equivalence(const DoobParams& p) {
    EquivalenceMap e;
    e.sh_autos.assign(p.m, identity_perm(16));
    e.k_perms.assign(p.n, K4Perm{0, 1, 2, 3});
    e.sh_coord_perm.resize(p.m);
    std::iota(e.sh_coord_perm.begin(), e.sh_coord_perm.end(), 0);
    e.k_coord_perm.resize(p.n);
    std::iota(e.k_coord_perm.begin(), e.k_coord_perm.end(), 0);
    return e;
}

EquivalenceMap inverse_equivalence(const EquivalenceMap& e) {
    EquivalenceMap r;
    const int m = static_cast<int>(e.sh_autos.size());
    const int n = static_cast<int>(e.k_perms.size());
    r.sh_autos.resize(m);
    r.sh_coord_perm.resize(m);
    for (int i = 0; i < m; ++i) {
        int src = e.sh_coord_perm[i];
        r.sh_coord_perm[src] = i;
        r.sh_autos[src] = inverse_perm(e.sh_autos[i], 16);
    }
    r.k_perms.resize(n);
    r.k_coord_perm.resize(n);
    for (int j = 0; j < n; ++j) {
        int src = e.k_coord_perm[j];
        r.k_coord_perm[src] = j;
        K4Perm inv{};
        for (int x = 0; x < 4; ++x) inv[e.k_perms[j][x]] = static_cast<uint8_t>(x);
        r.k_perms[src] = inv;
    }
    return r;
}

Code apply_equivalence(const Code& c, const EquivalenceMap& e) {
    const int m = c.params.m, n = c.params.n;
    if (static_cast<int>(e.sh_autos.size()) != m || static_cast<int>(e.k_perms.size()) != n)
        throw std::invalid_argument("apply_equivalence: dimension mismatch");
    std::vector<DoobVertex> words;
    words.reserve(c.words.size());
    for (const auto& w : c.words) {
        DoobVertex img;
        img.sh.resize(m);
        img.k.resize(n);
        for (int i = 0; i < m; ++i) img.sh[i] = e.sh_autos[i][w.sh[e.sh_coord_perm[i]]];
        for (int j = 0; j < n; ++j) img.k[j] = e.k_perms[j][w.k[e.k_coord_perm[j]]];
        words.push_back(std::move(img));
    }
    return make_code(c.params, c.declared_k, std::move(words));
}

namespace {

const std::vector<K4Perm>& all_k4_perms() {
    static const std::vector<K4Perm> perms = [] {
        std::vector<K4Perm> out;
        K4Perm p{0, 1, 2, 3};
        do out.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return perms;
}

// Multiset of (total pair distance, this-coordinate contribution) over all
// unordered word pairs. Equal fingerprints are necessary for a coordinate to
// map onto another.
using Fingerprint = std::vector<std::pair<int, int>>;

std::vector<Fingerprint> coordinate_fingerprints(const Code& c) {
    const int m = c.params.m, n = c.params.n;
    const auto& sh = shrikhande();
    std::vector<Fingerprint> fp(m + n);
    for (size_t i = 0; i < c.words.size(); ++i)
        for (size_t j = i + 1; j < c.words.size(); ++j) {
            int total = doob_distance(c.params, c.words[i], c.words[j]);
            for (int p = 0; p < m; ++p)
                fp[p].emplace_back(total, sh.dist[c.words[i].sh[p]][c.words[j].sh[p]]);
            for (int p = 0; p < n; ++p)
                fp[m + p].emplace_back(total, c.words[i].k[p] != c.words[j].k[p] ? 1 : 0);
        }
    for (auto& f : fp) std::sort(f.begin(), f.end());
    return fp;
}

// Prefix key of a word's image under the partially-assigned map: target
// coordinates 0..depth-1, 4 bits each.
using PrefixKey = uint64_t;

struct EquivSearch {
    const Code& c1;
    const Code& c2;
    int m, n;
    std::vector<int> tau1, tau2;
    std::vector<std::vector<PrefixKey>> c2_prefix; // sorted, per depth
    std::vector<PrefixKey> partial;                // c1 image keys at current depth
    EquivalenceMap map;
    bool found = false;

    EquivSearch(const Code& a, const Code& b)
        : c1(a), c2(b), m(a.params.m), n(a.params.n) {
        const size_t nw = c2.words.size();
        c2_prefix.resize(m + n + 1);
        for (int depth = 1; depth <= m + n; ++depth) {
            auto& v = c2_prefix[depth];
            v.reserve(nw);
            for (const auto& w : c2.words) {
                PrefixKey key = 0;
                for (int p = 0; p < depth; ++p) {
                    int val = p < m ? w.sh[p] : w.k[p - m];
                    key = (key << 4) | static_cast<PrefixKey>(val);
                }
                v.push_back(key);
            }
            std::sort(v.begin(), v.end());
        }
        partial.assign(nw, 0);
        map.sh_autos.resize(m);
        map.k_perms.resize(n);
    }

    bool prefix_matches(int depth, const std::vector<PrefixKey>& keys) {
        std::vector<PrefixKey> sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        return sorted == c2_prefix[depth];
    }

    void descend(int depth) {
        if (found) return;
        if (depth == m + n) {
            found = true;
            return;
        }
        const size_t nw = c1.words.size();
        std::vector<PrefixKey> next(nw);
        if (depth < m) {
            int src = tau1[depth];
            for (const auto& theta : shrikhande_group()) {
                for (size_t w = 0; w < nw; ++w)
                    next[w] = (partial[w] << 4) | theta[c1.words[w].sh[src]];
                if (!prefix_matches(depth + 1, next)) continue;
                map.sh_autos[depth] = theta;
                std::swap(partial, next);
                descend(depth + 1);
                std::swap(partial, next);
                if (found) return;
            }
        } else {
            int src = tau2[depth - m];
            for (const auto& sigma : all_k4_perms()) {
                for (size_t w = 0; w < nw; ++w)
                    next[w] = (partial[w] << 4) | sigma[c1.words[w].k[src]];
                if (!prefix_matches(depth + 1, next)) continue;
                map.k_perms[depth - m] = sigma;
                std::swap(partial, next);
                descend(depth + 1);
                std::swap(partial, next);
                if (found) return;
            }
        }
    }
};

void foreach_admissible_perm(const std::vector<Fingerprint>& fp1,
                             const std::vector<Fingerprint>& fp2, int offset, int count,
                             const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> perm(count);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < count && ok; ++i)
            if (fp1[offset + perm[i]] != fp2[offset + i]) ok = false;
        if (ok) fn(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace

std::optional<EquivalenceMap> codes_equivalent(const Code& c1, const Code& c2) {
    if (c1.params != c2.params || c1.declared_k != c2.declared_k ||
        c1.words.size() != c2.words.size())
        throw std::invalid_argument("codes_equivalent: parameter mismatch");
    if (c1.params.length() > 16)
        throw std::invalid_argument("codes_equivalent: too many coordinates");

    auto fp1 = coordinate_fingerprints(c1);
    auto fp2 = coordinate_fingerprints(c2);
    {
        auto s1 = fp1, s2 = fp2;
        std::sort(s1.begin(), s1.begin() + c1.params.m);
        std::sort(s2.begin(), s2.begin() + c1.params.m);
        std::sort(s1.begin() + c1.params.m, s1.end());
        std::sort(s2.begin() + c1.params.m, s2.end());
        if (s1 != s2) return std::nullopt;
    }

    EquivSearch search(c1, c2);
    std::optional<EquivalenceMap> result;
    foreach_admissible_perm(fp1, fp2, 0, c1.params.m, [&](const std::vector<int>& t1) {
        if (result) return;
        foreach_admissible_perm(fp1, fp2, c1.params.m, c1.params.n,
                                [&](const std::vector<int>& t2) {
            if (result) return;
            search.tau1 = t1;
            search.tau2 = t2;
            search.found = false;
            search.descend(0);
            if (search.found) {
                EquivalenceMap e = search.map;
                e.sh_coord_perm = t1;
                e.k_coord_perm = t2;
                result = e;
            }
        });
    });
    if (result && apply_equivalence(c1, *result).words != c2.words)
        throw std::logic_error("codes_equivalent: witness failed re-verification");
    return result;
}

std::string word_to_string(const DoobVertex& w) {
    std::string out;
    for (auto s : w.sh) {
        out += pair_to_string(s);
        out += ' ';
    }
    out += ';';
    for (auto h : w.k) {
        out += ' ';
        out += z4_to_string(h);
    }
    return out;
}

std::string code_to_text(const Code& c) {
    std::ostringstream os;
    os << c.params.m << ' ' << c.params.n << ' ' << c.declared_k << '\n';
    for (const auto& w : c.words) os << word_to_string(w) << '\n';
    return os.str();
}

Code code_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
    };
    DoobParams p;
    int k = 0;
    // header
    do {
        if (!std::getline(is, line)) throw std::runtime_error("empty code file");
        ++lineno;
    } while (line.find_first_not_of(" \t\r") == std::string::npos);
    {
        std::istringstream hs(line);
        if (!(hs >> p.m >> p.n >> k) || p.m < 0 || p.n < 0 || k < 0)
            fail("bad header, expected 'm n k'");
    }
    std::vector<DoobVertex> words;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        DoobVertex w;
        std::string tok;
        for (int i = 0; i < p.m; ++i) {
            if (!(ls >> tok) || tok == ";") fail("expected " + std::to_string(p.m) + " Shrikhande tokens");
            if (tok.size() != 2) fail("Shrikhande token must have 2 digits: '" + tok + "'");
            try { w.sh.push_back(pair_from_string(tok)); }
            catch (const std::exception& e) { fail(e.what()); }
        }
        if (!(ls >> tok) || tok != ";") fail("expected ';' separator");
        for (int i = 0; i < p.n; ++i) {
            if (!(ls >> tok)) fail("expected " + std::to_string(p.n) + " K4 tokens");
            try { w.k.push_back(z4_from_string(tok)); }
            catch (const std::exception& e) { fail(e.what()); }
        }
        if (ls >> tok) fail("trailing token '" + tok + "'");
        words.push_back(std::move(w));
    }
    try {
        return make_code(p, k, std::move(words));
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("invalid code: ") + e.what());
    }
}

void save_code(const Code& c, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << code_to_text(c);
}

Code load_code(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    try {
        return code_from_text(ss.str());
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string code_to_json(const Code& c) {
    nlohmann::json j;
    j["m"] = c.params.m;
    j["n"] = c.params.n;
    j["k"] = c.declared_k;
    auto& words = j["words"] = nlohmann::json::array();
    for (const auto& w : c.words) {
        nlohmann::json jw;
        jw["sh"] = nlohmann::json::array();
        for (auto s : w.sh) jw["sh"].push_back(pair_to_string(s));
        jw["k"] = nlohmann::json::array();
        for (auto h : w.k) jw["k"].push_back(z4_to_string(h));
        words.push_back(std::move(jw));
    }
    return j.dump(2);
}

Code code_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    DoobParams p{j.at("m").get<int>(), j.at("n").get<int>()};
    int k = j.at("k").get<int>();
    std::vector<DoobVertex> words;
    for (const auto& jw : j.at("words")) {
        DoobVertex w;
        for (const auto& s : jw.at("sh")) w.sh.push_back(pair_from_string(s.get<std::string>()));
        for (const auto& h : jw.at("k")) w.k.push_back(z4_from_string(h.get<std::string>()));
        words.push_back(std::move(w));
    }
    return make_code(p, k, std::move(words));
}

} // namespace doob
