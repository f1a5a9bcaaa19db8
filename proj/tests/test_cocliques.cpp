#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "doob/cocliques.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace doob;

TEST_CASE("coclique census") {
    auto cs = enumerate_cocliques(shrikhande());
    CHECK(cs.size() == 16);
    // four through each vertex
    for (int v = 0; v < 16; ++v) {
        int through = 0;
        for (auto c : cs)
            if (c & (1u << v)) ++through;
        CHECK(through == 4);
    }
    // independence and maximality
    const auto& sh = shrikhande();
    for (auto c : cs) {
        CHECK(__builtin_popcount(c) == 4);
        for (int u = 0; u < 16; ++u)
            if (c & (1u << u)) CHECK((sh.adj[u] & c) == 0);
    }
}

TEST_CASE("two coclique classes under the automorphism group") {
    auto cs = enumerate_cocliques(shrikhande());
    int linear = 0;
    for (auto c : cs)
        if (coclique_type(c) == CocliqueType::Linear) ++linear;
    CHECK(linear == 4); // the cosets of the involution subgroup
    CHECK(cs.size() - linear == 12);

    // orbits under the 192-element group: exactly one per type
    std::set<Coclique> pool(cs.begin(), cs.end());
    int orbits = 0;
    while (!pool.empty()) {
        ++orbits;
        Coclique seed = *pool.begin();
        for (const auto& tau : shrikhande_group()) {
            uint16_t img = 0;
            for (int v = 0; v < 16; ++v)
                if (seed & (1u << v)) img |= 1u << tau[v];
            pool.erase(img);
        }
    }
    CHECK(orbits == 2);
    // the type is invariant under the group, so orbits align with types
    for (auto c : cs)
        for (const auto& tau : shrikhande_group()) {
            uint16_t img = 0;
            for (int v = 0; v < 16; ++v)
                if (c & (1u << v)) img |= 1u << tau[v];
            CHECK(coclique_type(img) == coclique_type(c));
        }
}

TEST_CASE("coclique_type input validation") {
    CHECK_THROWS_AS(coclique_type(0x000F), std::invalid_argument); // 00,01,02,03: adjacent
    CHECK_THROWS_AS(coclique_type(0x0007), std::invalid_argument); // not a 4-set
    CHECK_THROWS_AS(coclique_type(0xFFFF), std::invalid_argument);
}

TEST_CASE("partition census and classes") {
    auto ps = enumerate_partitions(shrikhande());
    CHECK(ps.size() == 10);
    std::map<PartitionClass, int> by_class;
    for (const auto& p : ps) {
        uint16_t covered = 0;
        for (auto c : p) {
            CHECK((covered & c) == 0);
            covered |= c;
        }
        CHECK(covered == 0xFFFF);
        ++by_class[classify_partition(p)];
    }
    CHECK(by_class[PartitionClass::a] == 1);
    CHECK(by_class.size() == 3);

    // exactly 3 classes, also via canonical forms
    std::set<CocliquePartition> canon;
    for (const auto& p : ps) canon.insert(canonical_partition(p));
    CHECK(canon.size() == 3);
}

TEST_CASE("canonical form is a class invariant") {
    auto ps = enumerate_partitions(shrikhande());
    for (const auto& p : ps) {
        auto c = canonical_partition(p);
        for (const auto& tau : shrikhande_group())
            CHECK(canonical_partition(apply_automorphism(p, tau)) == c);
    }
}

TEST_CASE("named representatives carry their classes") {
    CHECK(classify_partition(partition_rep(PartitionClass::a)) == PartitionClass::a);
    CHECK(classify_partition(partition_rep(PartitionClass::b)) == PartitionClass::b);
    CHECK(classify_partition(partition_rep(PartitionClass::c)) == PartitionClass::c);
    // the three representatives are pairwise inequivalent
    CHECK(canonical_partition(partition_rep(PartitionClass::a)) !=
          canonical_partition(partition_rep(PartitionClass::b)));
    CHECK(canonical_partition(partition_rep(PartitionClass::b)) !=
          canonical_partition(partition_rep(PartitionClass::c)));
    CHECK(canonical_partition(partition_rep(PartitionClass::a)) !=
          canonical_partition(partition_rep(PartitionClass::c)));
}

TEST_CASE("part bookkeeping") {
    const auto& p = partition_rep(PartitionClass::a);
    for (int v = 0; v < 16; ++v) {
        int i = part_of(p, v);
        CHECK((p[i] & (1u << v)) != 0);
    }
    // parts ordered by smallest member
    for (int i = 0; i + 1 < 4; ++i)
        CHECK(__builtin_ctz(p[i]) < __builtin_ctz(p[i + 1]));

    CocliquePartition holey = p;
    holey[0] = p[0] & ~1u;
    CHECK_THROWS_AS(part_of(holey, 0), std::invalid_argument);
    CHECK_THROWS_AS(classify_partition(holey), std::invalid_argument);
}

TEST_CASE("make_partition round trip") {
    auto p = make_partition(
        {{{5, 7, 0xD, 0xF}, {0, 2, 8, 0xA}, {1, 3, 9, 0xB}, {4, 6, 0xC, 0xE}}});
    CHECK(p == partition_rep(PartitionClass::a)); // reordered by smallest member
}

TEST_CASE("K4 squared cocliques") {
    auto cs = enumerate_cocliques(k4_squared());
    CHECK(cs.size() == 24); // the rows-or-columns transversals: 4! permutation matrices
    for (auto c : cs) CHECK(__builtin_popcount(c) == 4);
}
