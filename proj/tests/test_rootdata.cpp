#include "posrep/rootdata.hpp"
#include "test_main.hpp"

using namespace posrep;

TEST_CASE("cartan matrices") {
    CHECK(cartan_matrix(TypeTag::parse("G2")) == Matrix{{2, -1}, {-3, 2}});
    CHECK(cartan_matrix(TypeTag::parse("A1")) == Matrix{{2}});
    CHECK(cartan_matrix(TypeTag::parse("B2")) == Matrix{{2, -2}, {-1, 2}});
    CHECK(cartan_matrix(TypeTag::parse("C3"))[1][0] == -2);
    CHECK(cartan_matrix(TypeTag::parse("F4")) == Matrix{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}});
    CHECK_THROWS(TypeTag::parse("B1"));
    CHECK_THROWS(TypeTag::parse("E7"));
    CHECK_THROWS(TypeTag::parse("Q3"));
}

TEST_CASE("cartan invariants") {
    for (auto s : {"A3", "B4", "C4", "D4", "D5", "E6", "F4", "G2"}) {
        RootDatum d = root_datum(s);
        int n = d.rank();
        for (int i = 0; i < n; ++i) {
            CHECK(d.cartan[i][i] == 2);
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                CHECK(d.cartan[i][j] <= 0);
                CHECK((d.cartan[i][j] == 0) == (d.cartan[j][i] == 0));
                if (d.cartan[i][j] != 0) CHECK(std::abs(d.n[i] - d.n[j]) == 1);
                // symmetrisable with d_i = 1/k_i
                CHECK(d.cartan[i][j] * d.k[j] == d.cartan[j][i] * d.k[i]);
            }
        }
        CHECK(d.n[0] == 1);
    }
}

TEST_CASE("q exponents") {
    CHECK(q_exponent(TypeTag::parse("B3"), 1) == Rational(1, 2));
    CHECK(q_exponent(TypeTag::parse("G2"), 2) == Rational(1, 3));
    CHECK(q_exponent(TypeTag::parse("F4"), 4) == Rational(1, 2));
    CHECK(q_exponent(TypeTag::parse("F4"), 1) == Rational(1));
    CHECK(q_exponent(TypeTag::parse("C3"), 1) == Rational(1));
}

TEST_CASE("braid moves") {
    Matrix b2 = cartan_matrix(TypeTag::parse("B2"));
    CHECK(braid_move(b2, {1, 2, 1, 2}, 0).word == Word{2, 1, 2, 1});
    Matrix a2 = cartan_matrix(TypeTag::parse("A2"));
    CHECK(braid_move(a2, {1, 2, 1}, 0).word == Word{2, 1, 2});
    Matrix a3 = cartan_matrix(TypeTag::parse("A3"));
    auto r = braid_move(a3, {1, 3, 2, 1, 3, 2}, 0);
    CHECK(r.word == Word{3, 1, 2, 1, 3, 2});
    CHECK(r.perm[0] == 1);
    CHECK_THROWS(braid_move(a3, {1, 2, 3}, 0));
    // round trip
    for (auto s : {"B2", "G2", "A3"}) {
        Matrix a = cartan_matrix(TypeTag::parse(s));
        Word w = canonical_word(TypeTag::parse(s));
        for (int p = 0; p + 1 < int(w.size()); ++p)
            if (move_applies(a, w, p)) {
                auto once = braid_move(a, w, p);
                auto twice = braid_move(a, once.word, p);
                CHECK(twice.word == w);
                for (std::size_t j = 0; j < w.size(); ++j) CHECK(twice.perm[once.perm[j]] == int(j));
            }
    }
}

TEST_CASE("canonical words") {
    CHECK(word_str(canonical_word(TypeTag::parse("B3"))) == "121232123");
    for (auto s : {"A1", "A3", "B2", "B3", "B4", "C3", "C4", "D4", "E6", "F4", "G2"}) {
        TypeTag t = TypeTag::parse(s);
        Matrix a = cartan_matrix(t);
        Word w = canonical_word(t);
        CHECK(is_longest_word(a, w));
    }
    CHECK(num_positive_roots(cartan_matrix(TypeTag::parse("F4"))) == 24);
    CHECK(num_positive_roots(cartan_matrix(TypeTag::parse("E6"))) == 36);
    CHECK(num_positive_roots(cartan_matrix(TypeTag::parse("B4"))) == 16);
    CHECK_FALSE(is_reduced(cartan_matrix(TypeTag::parse("A2")), {1, 1}));
}

TEST_CASE("langlands dual") {
    CHECK(langlands_dual(TypeTag::parse("B2")).tag == TypeTag::parse("C2"));
    CHECK(langlands_dual(TypeTag::parse("A3")).tag == TypeTag::parse("A3"));
    auto f = langlands_dual(TypeTag::parse("F4"));
    CHECK(f.node_map == std::vector<int>{4, 3, 2, 1});
    for (auto s : {"B3", "C2", "G2", "F4", "D4"}) {
        TypeTag t = TypeTag::parse(s);
        CHECK(langlands_dual(langlands_dual(t).tag).tag == t);
        // transposed Cartan matrix after relabelling
        auto d = langlands_dual(t);
        Matrix a = cartan_matrix(t), b = cartan_matrix(d.tag);
        for (int i = 0; i < t.rank; ++i)
            for (int j = 0; j < t.rank; ++j) CHECK(b[d.node_map[i] - 1][d.node_map[j] - 1] == a[j][i]);
    }
}

TEST_CASE("braid path to end") {
    for (auto s : {"B3", "C3", "F4", "D4"}) {
        TypeTag t = TypeTag::parse(s);
        Matrix a = cartan_matrix(t);
        Word w = canonical_word(t);
        for (int i = 1; i <= t.rank; ++i) {
            auto p = path_to_end(a, w, i);
            CHECK(p.words.back().back() == i);
            for (auto& x : p.words) CHECK(is_longest_word(a, x));
        }
    }
}
