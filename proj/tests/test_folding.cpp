#include "posrep/folding.hpp"
#include "test_main.hpp"

using namespace posrep;

TEST_CASE("scheme orbits") {
    auto s = folding_scheme("C2:D3");
    CHECK(s.orbits == std::vector<std::vector<int>>{{2, 3}, {1}});
    s = folding_scheme("B3:A5");
    CHECK(s.orbits == std::vector<std::vector<int>>{{3}, {2, 4}, {1, 5}});
    s = folding_scheme("G2:D4");
    CHECK(s.orbits[0].size() == 3);
    CHECK_THROWS(folding_scheme("B2:D3"));
    CHECK_THROWS(folding_scheme("B2"));
}

TEST_CASE("folded word is a reduced word of the source w0") {
    auto s = folding_scheme("F4:E6");
    Word w = fold_word(s, canonical_word(s.target));
    CHECK(w.size() == 36);
    CHECK(is_longest_word(cartan_matrix(s.source), w));
}

TEST_CASE("identity scheme") {
    auto c = fold_certify(folding_scheme("A3:A3"), {}, false);
    CHECK(c.equal);
    CHECK(c.dropped == 0);
}

TEST_CASE("rank two schemes match the direct construction") {
    for (const char* n : {"B2:A3", "C2:D3", "G2:D4"}) {
        CAPTURE(n);
        auto c = fold_certify(folding_scheme(n));
        CHECK(c.mismatches.empty());
        CHECK(c.relations.all_hold());
        CHECK(c.passed());
    }
}

TEST_CASE("C2 from D3 produces the [2]_{q_s} middle terms") {
    auto c = fold_certify(folding_scheme("C2:D3"), parse_word("1212"), false);
    CHECK(c.equal);
    CHECK(c.q_multiples >= 2);
}

TEST_CASE("both B2 words") {
    for (const char* w : {"1212", "2121"}) {
        auto c = fold_certify(folding_scheme("B2:A3"), parse_word(w), false);
        CAPTURE(w);
        CHECK(c.equal);
    }
}

TEST_CASE("rank three schemes") {
    for (const char* n : {"B3:A5", "C3:D4"}) {
        CAPTURE(n);
        CHECK(fold_certify(folding_scheme(n), {}, false).equal);
    }
}

TEST_CASE("F4 from E6 monomial equality") {
    auto c = fold_certify(folding_scheme("F4:E6"), {}, false);
    CHECK(c.equal);
}

TEST_CASE("a word of the wrong type is rejected") {
    CHECK_THROWS(fold(folding_scheme("C2:D3"), parse_word("121")));
}
