#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "doob/appendix.hpp"
#include "doob/codes.hpp"

#include <cstdio>
#include <filesystem>

using namespace doob;

namespace {

Code table(const char* id) { return appendix_table(id).code; }

Code perturb(Code c, size_t word, int coord, Z4Pair value) {
    auto words = c.words;
    words[word].sh[coord] = value;
    return make_code(c.params, c.declared_k, std::move(words));
}

} // namespace

TEST_CASE("make_code validates") {
    DoobParams p{1, 1};
    DoobVertex a{{0x0}, {0}};
    DoobVertex b{{0x5}, {2}};
    Code c = make_code(p, 1, {b, a});
    CHECK(c.words.front() == a); // sorted
    CHECK_THROWS_AS(make_code(p, 1, {a, a}), std::invalid_argument);
    DoobVertex bad{{0x0, 0x0}, {0}};
    CHECK_THROWS_AS(make_code(p, 1, {bad}), std::invalid_argument);
}

TEST_CASE("min_distance and is_mds on golden codes") {
    CHECK(min_distance(table("T2")) == 3);
    CHECK(min_distance(table("T5")) == 4);
    CHECK(is_mds(table("T2")));
    CHECK(is_mds(table("T10")));

    Code one = make_code({1, 0}, 0, {DoobVertex{{0x0}, {}}});
    CHECK_THROWS_AS(min_distance(one), std::invalid_argument);

    // cardinality failure
    Code t2 = table("T2");
    auto words = t2.words;
    words.pop_back();
    CHECK(!is_mds(make_code(t2.params, t2.declared_k, std::move(words))));
    // distance failure: move a word next to another
    Code broken = perturb(t2, 0, 0, pair_add(t2.words[1].sh[0], make_pair(0, 2)));
    CHECK(!is_mds(broken));
}

TEST_CASE("projection") {
    Code t5 = table("T5");
    Code proj = projection(t5, {{}, {0}});
    CHECK(proj.params == DoobParams{2, 0});
    CHECK(proj.words == table("T2").words); // T5 is T2 plus a K4 column
    CHECK(projection(t5, {{}, {}}).words == t5.words);

    // Lemma 4: deleting one Shrikhande coordinate of a (2+0,4^2,3) code
    // leaves each Shrikhande vertex exactly once
    for (int coord : {0, 1}) {
        Code p1 = projection(table("T2"), {{coord}, {}});
        CHECK(p1.words.size() == 16);
        uint16_t seen = 0;
        for (const auto& w : p1.words) seen |= 1u << w.sh[0];
        CHECK(seen == 0xFFFF);
    }
    CHECK_THROWS_AS(projection(t5, {{}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(projection(t5, {{2}, {}}), std::invalid_argument);
}

TEST_CASE("face") {
    Code t8 = table("T8");
    // Lemma 5(2): fixing the K4 coordinate to 0 gives a (2+0,4^2,3) MDS code
    Code d0 = face(t8, {{}, {0}}, {}, {0});
    CHECK(d0.params == DoobParams{2, 0});
    CHECK(d0.declared_k == 2);
    CHECK(is_mds(d0));
    CHECK(min_distance(d0) == 3);

    Code t10 = table("T10");
    Code f = face(t10, {{}, {0}}, {}, {0});
    CHECK(f.params == DoobParams{2, 1});
    CHECK(is_mds(f));
    CHECK(min_distance(f) == 4);

    CHECK(face(t8, {{}, {}}, {}, {}).words == t8.words);
    // fixing one Shrikhande coordinate of T8 is still legal (2v+w = 2 <= 3)
    Code slice = face(t8, {{0}, {}}, {t8.words.front().sh[0]}, {});
    CHECK(slice.params == DoobParams{1, 1});
    CHECK(slice.declared_k == 1);
    // but fixing both coordinates of a k=2 code is not
    Code t2 = table("T2");
    CHECK_THROWS_AS(face(t2, {{0, 1}, {}}, {0x0, 0x0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(face(t8, {{}, {0}}, {}, {}), std::invalid_argument); // missing value
}

TEST_CASE("equivalence maps") {
    Code t2 = table("T2");
    EquivalenceMap id = identity_equivalence(t2.params);
    CHECK(apply_equivalence(t2, id).words == t2.words);

    // swap the two Shrikhande coordinates
    EquivalenceMap swap = id;
    swap.sh_coord_perm = {1, 0};
    Code swapped = apply_equivalence(t2, swap);
    CHECK(is_mds(swapped));
    CHECK(min_distance(swapped) == 3);

    // translate coordinate 1 by 02
    EquivalenceMap shift = id;
    for (int v = 0; v < 16; ++v)
        shift.sh_autos[1][v] = pair_add(static_cast<Z4Pair>(v), make_pair(0, 2));
    Code shifted = apply_equivalence(t2, shift);
    CHECK(min_distance(shifted) == 3);

    // inverse undoes
    CHECK(apply_equivalence(swapped, inverse_equivalence(swap)).words == t2.words);
    CHECK(apply_equivalence(shifted, inverse_equivalence(shift)).words == t2.words);

    // distances preserved pairwise
    for (size_t i = 0; i < t2.words.size(); ++i)
        for (size_t j = i + 1; j < t2.words.size(); ++j)
            CHECK(doob_distance(t2.params, t2.words[i], t2.words[j]) ==
                  doob_distance(t2.params, swapped.words[i], swapped.words[j]));
}

TEST_CASE("codes_equivalent") {
    Code t2 = table("T2"), t3 = table("T3");
    auto self = codes_equivalent(t2, t2);
    REQUIRE(self.has_value());
    CHECK(apply_equivalence(t2, *self).words == t2.words);

    CHECK(!codes_equivalent(t2, t3).has_value());
    CHECK(!codes_equivalent(table("T5"), table("T6")).has_value());

    // symmetric: a witness in one direction inverts to the other
    EquivalenceMap shift = identity_equivalence(t2.params);
    for (int v = 0; v < 16; ++v)
        shift.sh_autos[0][v] = pair_add(static_cast<Z4Pair>(v), make_pair(1, 1));
    Code moved = apply_equivalence(t2, shift);
    auto fwd = codes_equivalent(t2, moved);
    auto back = codes_equivalent(moved, t2);
    REQUIRE(fwd.has_value());
    REQUIRE(back.has_value());
    CHECK(apply_equivalence(moved, *back).words == t2.words);

    CHECK_THROWS_AS(codes_equivalent(t2, table("T5")), std::invalid_argument);
}

TEST_CASE("text format round trip") {
    for (const char* id : {"T2", "T4", "T8", "T10"}) {
        Code c = table(id);
        Code back = code_from_text(code_to_text(c));
        CHECK(back.params == c.params);
        CHECK(back.declared_k == c.declared_k);
        CHECK(back.words == c.words);
    }
    Code t4 = table("T4");
    CHECK(word_to_string(t4.words.front()).find(';') != std::string::npos);
}

TEST_CASE("text format errors carry line numbers") {
    auto expect_mention = [](const std::string& text, const char* needle) {
        try {
            code_from_text(text);
            FAIL_CHECK("expected parse failure containing '", needle, "'");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_mention("1 0\n00 ; \n", "line 1");
    expect_mention("1 0 1\n00 01 ;\n", "line 2");  // extra Shrikhande token
    expect_mention("1 0 1\n00\n", "';'");          // missing separator
    expect_mention("1 1 1\n00 ; 7\n", "line 2");   // bad K4 digit
    expect_mention("2 0 1\n00 041 ;\n", "2 digits");
    expect_mention("1 0 1\n00 ;\n00 ;\n", "invalid code"); // duplicate word
    expect_mention("", "empty");
}

TEST_CASE("json round trip") {
    for (const char* id : {"T2", "T7", "T10"}) {
        Code c = table(id);
        Code back = code_from_json(code_to_json(c));
        CHECK(back.params == c.params);
        CHECK(back.declared_k == c.declared_k);
        CHECK(back.words == c.words);
    }
    CHECK_THROWS(code_from_json("{\"m\": 1}"));
    CHECK_THROWS(code_from_json("not json"));
}

TEST_CASE("file round trip") {
    namespace fs = std::filesystem;
    auto path = (fs::temp_directory_path() / "doob_roundtrip.txt").string();
    Code c = table("T3");
    save_code(c, path);
    Code back = load_code(path);
    CHECK(back.words == c.words);
    fs::remove(path);
    CHECK_THROWS(load_code(path)); // gone
}
