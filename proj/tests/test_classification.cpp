#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "doob/appendix.hpp"
#include "doob/classification.hpp"

#include <algorithm>
#include <set>

using namespace doob;

namespace {

const Code& table(const char* id) { return appendix_table(id).code; }

Automorphism translation(Z4Pair t) {
    Automorphism tau{};
    for (int v = 0; v < 16; ++v) tau[v] = pair_add(static_cast<Z4Pair>(v), t);
    return tau;
}

// ab -> a(a-b) + t
Automorphism reflect_then_translate(Z4Pair t) {
    Automorphism tau{};
    for (int v = 0; v < 16; ++v) {
        Z4 a = pair_a(static_cast<Z4Pair>(v)), b = pair_b(static_cast<Z4Pair>(v));
        tau[v] = pair_add(make_pair(a, z4_add(a, z4_neg(b))), t);
    }
    return tau;
}

} // namespace

TEST_CASE("S_m closed formula") {
    CHECK(s_m_formula(0) == 1);
    CHECK(s_m_formula(1) == 2);
    CHECK(s_m_formula(2) == 4);
    CHECK(s_m_formula(3) == 7);
    CHECK(s_m_formula(4) == 11);
    for (uint64_t m = 0; m <= 200; ++m) CHECK(s_m_formula(m) == s_m_bruteforce(m));
}

TEST_CASE("reduced codes") {
    CHECK_THROWS_AS(reduced_codes(0), std::invalid_argument);
    auto r1 = reduced_codes(1);
    REQUIRE(r1.size() == 2); // (0,0,0) and (0,0,1)
    CHECK(r1[0].l + r1[0].j + r1[0].t == 0);
    CHECK(r1[1].t == 1);

    for (int m = 1; m <= 8; ++m) {
        auto rs = reduced_codes(m);
        CHECK(rs.size() == s_m_formula(m));
        std::set<std::array<int, 4>> quads;
        for (const auto& rc : rs) {
            CHECK(rc.l <= rc.j);
            CHECK(rc.j <= rc.t);
            CHECK(rc.l + rc.j + rc.t <= m);
            Code c = expand_reduced(rc);
            CHECK(is_mds(c));
            CHECK(min_distance(c) == 2 * m);
            auto q = invariant_quadruple(c);
            CHECK(q == std::array<int, 4>{m - rc.l - rc.j - rc.t, rc.l, rc.j, rc.t});
            CHECK(quads.insert(q).second); // pairwise inequivalent
        }
    }
    CHECK_THROWS_AS(expand_reduced({2, 1, 0, 0}), std::invalid_argument); // l > j
}

TEST_CASE("invariant quadruple is invariant under equivalence") {
    // scrambling rows and applying coordinate maps must not change it
    ReducedCode rc{3, 0, 1, 1};
    Code c = expand_reduced(rc, 1);
    auto q = invariant_quadruple(c);
    EquivalenceMap e = identity_equivalence(c.params);
    e.sh_coord_perm = {2, 0, 1};
    for (int v = 0; v < 16; ++v)
        e.sh_autos[0][v] = pair_add(static_cast<Z4Pair>(v), make_pair(1, 2));
    e.k_perms[0] = {2, 3, 0, 1};
    CHECK(invariant_quadruple(apply_equivalence(c, e)) == q);
}

TEST_CASE("classify_k1") {
    CHECK(classify_k1(1, 0).class_count() == 2);
    CHECK(classify_k1(2, 0).class_count() == 4);
    CHECK(classify_k1(1, 1).class_count() == 2); // count independent of n
    CHECK(classify_k1(1, 4).class_count() == 2);
    auto r = classify_k1(2, 1);
    CHECK(r.d == 5);
    for (const auto& c : r.representatives) {
        CHECK(is_mds(c));
        CHECK(c.words.size() == 4);
    }
    CHECK_THROWS_AS(classify_k1(0, 3), std::invalid_argument);
}

TEST_CASE("code_partition maps the golden d=3 codes to their classes") {
    CHECK(classify_partition(code_partition(table("T2"))) == PartitionClass::a);
    CHECK(classify_partition(code_partition(table("T3"))) == PartitionClass::b);
    CHECK(classify_partition(code_partition(table("T4"))) == PartitionClass::c);
    CHECK_THROWS_AS(code_partition(table("T5")), std::invalid_argument); // d=4 input
}

TEST_CASE("partition_to_code round trip") {
    for (auto cls : {PartitionClass::a, PartitionClass::b, PartitionClass::c}) {
        const auto& rep = partition_rep(cls);
        Code c = partition_to_code(rep);
        CHECK(is_mds(c));
        CHECK(min_distance(c) == 3);
        CHECK(canonical_partition(code_partition(c)) == canonical_partition(rep));
    }
    CHECK(codes_equivalent(partition_to_code(partition_rep(PartitionClass::a)), table("T2"))
              .has_value());
    CHECK(codes_equivalent(partition_to_code(partition_rep(PartitionClass::b)), table("T3"))
              .has_value());
    CHECK(codes_equivalent(partition_to_code(partition_rep(PartitionClass::c)), table("T4"))
              .has_value());
}

TEST_CASE("distance-4 dichotomy for d=3 codes") {
    for (const char* id : {"T2", "T3", "T4"}) {
        const Code& c = table(id);
        CocliquePartition L = code_partition(c);
        for (const auto& w1 : c.words)
            for (const auto& w2 : c.words) {
                if (w1 == w2) continue;
                int dist = doob_distance(c.params, w1, w2);
                bool same_part = part_of(L, w1.sh[0]) == part_of(L, w2.sh[0]);
                CHECK(dist == (same_part ? 4 : 3));
            }
    }
}

TEST_CASE("extend_to_d4 reproduces the d=4 tables") {
    Code a = extend_to_d4(partition_to_code(partition_rep(PartitionClass::a)));
    Code b = extend_to_d4(partition_to_code(partition_rep(PartitionClass::b)));
    Code c = extend_to_d4(partition_to_code(partition_rep(PartitionClass::c)));
    CHECK(codes_equivalent(a, table("T5")).has_value());
    CHECK(codes_equivalent(b, table("T6")).has_value());
    CHECK(codes_equivalent(c, table("T7")).has_value());
    CHECK(!codes_equivalent(a, b).has_value());
    // all pairwise distances exactly 4
    for (const Code* code : {&a, &b, &c})
        for (const auto& w1 : code->words)
            for (const auto& w2 : code->words)
                if (!(w1 == w2))
                    CHECK(doob_distance(code->params, w1, w2) == 4);
}

TEST_CASE("automorphism triples: explicit formulas") {
    auto as_set = [](const AutomorphismTriple& t) {
        return std::set<Automorphism>(t.tau.begin(), t.tau.end());
    };
    // all-linear partition: the three involution translations
    auto ta = automorphism_triple(partition_rep(PartitionClass::a));
    CHECK(as_set(ta) == std::set<Automorphism>{translation(make_pair(0, 2)),
                                               translation(make_pair(2, 0)),
                                               translation(make_pair(2, 2))});
    // {00,02,21,23},{01,03,20,22},{10,12,31,33},{11,13,30,32}
    auto pc = make_partition(
        {{{0x0, 0x2, 0x9, 0xB}, {0x1, 0x3, 0x8, 0xA}, {0x4, 0x6, 0xD, 0xF}, {0x5, 0x7, 0xC, 0xE}}});
    auto tc = automorphism_triple(pc);
    CHECK(as_set(tc) == std::set<Automorphism>{translation(make_pair(0, 2)),
                                               translation(make_pair(2, 1)),
                                               translation(make_pair(2, 3))});
    // {00,02,21,23},{01,03,22,20},{10,12,30,32},{11,13,31,33}
    auto pb = make_partition(
        {{{0x0, 0x2, 0x9, 0xB}, {0x1, 0x3, 0xA, 0x8}, {0x4, 0x6, 0xC, 0xE}, {0x5, 0x7, 0xD, 0xF}}});
    auto tb = automorphism_triple(pb);
    CHECK(as_set(tb) == std::set<Automorphism>{reflect_then_translate(make_pair(2, 1)),
                                               translation(make_pair(0, 2)),
                                               reflect_then_translate(make_pair(2, 3))});
}

TEST_CASE("automorphism triple exists and is unique for every partition") {
    for (const auto& p : enumerate_partitions(shrikhande())) {
        auto t = automorphism_triple(p); // throws unless unique
        const auto& sh = shrikhande();
        for (int s = 0; s < 16; ++s) {
            for (int i = 0; i < 3; ++i) {
                CHECK(part_of(p, t.tau[i][s]) == part_of(p, s));
                CHECK(sh.dist[t.tau[i][s]][s] == 2);
            }
            CHECK(sh.dist[t.tau[0][s]][t.tau[1][s]] == 2);
            CHECK(sh.dist[t.tau[0][s]][t.tau[2][s]] == 2);
            CHECK(sh.dist[t.tau[1][s]][t.tau[2][s]] == 2);
        }
    }
}

TEST_CASE("extend_k3_d3 reproduces the k=3 tables") {
    Code a = extend_k3_d3(partition_to_code(partition_rep(PartitionClass::a)));
    Code b = extend_k3_d3(partition_to_code(partition_rep(PartitionClass::b)));
    Code c = extend_k3_d3(partition_to_code(partition_rep(PartitionClass::c)));
    CHECK(codes_equivalent(a, table("T8")).has_value());
    CHECK(codes_equivalent(b, table("T9")).has_value());
    CHECK(codes_equivalent(c, table("table1331")).has_value());
    CHECK(!codes_equivalent(a, b).has_value());
}

TEST_CASE("k=3 d=3 codes satisfy the face lemma (items i-iv)") {
    for (const char* id : {"T8", "T9", "table1331"}) {
        const Code& c = table(id);
        int n = c.params.n;
        // the four faces D_i fixing the last K4 coordinate
        std::array<Code, 4> faces = {
            face(c, {{}, {n - 1}}, {}, {0}), face(c, {{}, {n - 1}}, {}, {1}),
            face(c, {{}, {n - 1}}, {}, {2}), face(c, {{}, {n - 1}}, {}, {3})};
        // f_i: argument value -> first-coordinate value; argument is the
        // word with the first Shrikhande coordinate deleted
        std::array<std::array<int, 16>, 4> f{};
        auto arg_index = [&](const DoobVertex& w) {
            if (c.params.m == 2) return static_cast<int>(w.sh[1]);
            return (static_cast<int>(w.k[0]) << 2) | w.k[1];
        };
        for (int i = 0; i < 4; ++i) {
            CHECK(is_mds(faces[i]));
            for (const auto& w : faces[i].words) f[i][arg_index(w)] = w.sh[0];
        }
        // (i) d(f_i(a), f_j(a)) = 2
        const auto& sh = shrikhande();
        for (int a = 0; a < 16; ++a)
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) CHECK(sh.dist[f[i][a]][f[j][a]] == 2);
        // (ii) {f_k(a)} is the part of every face partition containing f_i(a)
        std::array<CocliquePartition, 4> L;
        for (int i = 0; i < 4; ++i) L[i] = code_partition(faces[i]);
        for (int a = 0; a < 16; ++a) {
            uint16_t orbit = 0;
            for (int i = 0; i < 4; ++i) orbit |= 1u << f[i][a];
            CHECK(__builtin_popcount(orbit) == 4);
            for (int i = 0; i < 4; ++i) CHECK(L[i][part_of(L[i], f[i][a])] == orbit);
        }
        // (iii) the argument-side partition R is independent of i
        auto r_parts = [&](int i) {
            std::array<uint16_t, 4> parts{};
            for (int a = 0; a < 16; ++a) parts[part_of(L[i], f[i][a])] |= 1u << a;
            std::sort(parts.begin(), parts.end(),
                      [](uint16_t x, uint16_t y) { return __builtin_ctz(x) < __builtin_ctz(y); });
            return parts;
        };
        auto r0 = r_parts(0);
        for (int i = 1; i < 4; ++i) CHECK(r_parts(i) == r0);
        // (iv) d(f_0(a), f_0(b)) = d(f_i(a), f_i(b))
        for (int a = 0; a < 16; ++a)
            for (int b = 0; b < 16; ++b)
                for (int i = 1; i < 4; ++i)
                    CHECK(sh.dist[f[0][a]][f[0][b]] == sh.dist[f[i][a]][f[i][b]]);
    }
}

TEST_CASE("classify_224 and the weight-6 k=3 cases") {
    auto r = classify_224();
    CHECK(r.class_count() == 1);
    CHECK(codes_equivalent(r.representatives.front(), table("T10")).has_value());
    CHECK(classify(1, 4, 3).class_count() == 0);
    // every pair of distinct words of the representative at distance >= 4
    const Code& rep = r.representatives.front();
    for (const auto& w1 : rep.words)
        for (const auto& w2 : rep.words)
            if (!(w1 == w2)) CHECK(doob_distance(rep.params, w1, w2) >= 4);
}

TEST_CASE("sphere packing bound") {
    CHECK(!check_sphere_packing_d3(2, 1)); // 2m+n = 5: inconclusive
    CHECK(check_sphere_packing_d3(3, 0));  // 19 > 16
    CHECK(check_sphere_packing_d3(2, 3));  // 2m+n = 7
    CHECK_THROWS_AS(check_sphere_packing_d3(0, 6), std::invalid_argument);
}

TEST_CASE("nonexistence chains cover 6 < 2m+n <= 12") {
    for (int m = 1; 2 * m <= 12; ++m)
        for (int n = 0; 2 * m + n <= 12; ++n) {
            int w = 2 * m + n;
            if (w <= 6) continue;
            for (int k = 2; k <= w - 3; ++k) {
                auto chain = nonexistence_chain(m, n, k);
                REQUIRE_MESSAGE(chain.has_value(), "(", m, ",", n, ",", k, ")");
                CHECK(!chain->empty());
            }
        }
    CHECK(!nonexistence_chain(2, 0, 2).has_value()); // weight 4: codes exist
    CHECK(!nonexistence_chain(3, 1, 1).has_value()); // k=1 codes always exist
}

TEST_CASE("classify dispatch and counts") {
    CHECK(classify(2, 0, 1).class_count() == 4);
    CHECK(classify(1, 2, 1).class_count() == 2);
    CHECK(classify(2, 0, 2).class_count() == 2);
    CHECK(classify(1, 2, 2).class_count() == 1);
    CHECK(classify(2, 1, 2).class_count() == 2);
    CHECK(classify(1, 3, 2).class_count() == 1);
    CHECK(classify(2, 1, 3).class_count() == 2);
    CHECK(classify(1, 3, 3).class_count() == 2 - 1);
    CHECK(classify(2, 2, 4).class_count() == 0);
    CHECK(classify(3, 2, 2).class_count() == 0); // weight 8, by reduction
    CHECK(!classify(4, 1, 5).notes.empty());
    for (auto [m, n, k] : {std::tuple{0, 2, 1}, {2, 0, 0}, {2, 0, 4}})
        CHECK_THROWS_AS(classify(m, n, k), std::invalid_argument);

    // representatives are pairwise inequivalent and MDS
    auto r = classify(2, 1, 3);
    CHECK(!codes_equivalent(r.representatives[0], r.representatives[1]).has_value());
    for (const auto& c : r.representatives) CHECK(is_mds(c));
}
