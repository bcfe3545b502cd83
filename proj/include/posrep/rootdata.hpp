#pragma once
#include <string>
#include <vector>

#include "posrep/rational.hpp"

namespace posrep {

using Matrix = std::vector<std::vector<int>>;
using Word = std::vector<int>;  // 1-based node indices

struct TypeTag {
    char family = 'A';  // A B C D E F G
    int rank = 1;
    static TypeTag parse(const std::string& s);
    std::string str() const;
    friend bool operator==(const TypeTag&, const TypeTag&) = default;
};

struct RootDatum {
    TypeTag tag;
    Matrix cartan;          // a_ij, rows i
    std::vector<int> k;     // scale divisor per node: 1 long, 2 or 3 short
    int kmax = 1;
    std::vector<int> n;     // alternating node weight in {0,1}
    int rank() const { return tag.rank; }
    bool is_short(int i) const { return k[i - 1] > 1; }
    Rational q_exponent(int i) const { return Rational(1, k[i - 1]); }
};

Matrix cartan_matrix(const TypeTag& t);
RootDatum root_datum(const TypeTag& t);
RootDatum root_datum(const std::string& s);
Rational q_exponent(const TypeTag& t, int node);

// braid order m_ij of s_i s_j
int braid_order(const Matrix& a, int i, int j);
int num_positive_roots(const Matrix& a);
bool is_reduced(const Matrix& a, const Word& w);
bool is_right_descent(const Matrix& a, const Word& w, int i);
bool is_longest_word(const Matrix& a, const Word& w);

struct BraidResult {
    Word word;
    std::vector<int> perm;  // old position j -> new position perm[j]
};
// braid move on the alternating block starting at pos (0-based)
BraidResult braid_move(const Matrix& a, const Word& w, int pos);
bool move_applies(const Matrix& a, const Word& w, int pos);

Word canonical_word(const TypeTag& t);
Word parse_word(const std::string& s);
std::string word_str(const Word& w);

struct DualTag {
    TypeTag tag;
    std::vector<int> node_map;  // node i of the source corresponds to node_map[i-1] of the dual
};
DualTag langlands_dual(const TypeTag& t);

// braid moves (positions) taking w to a word ending in i, and the words along the way
struct BraidPath {
    std::vector<int> positions;
    std::vector<Word> words;  // words[0] = w, words[k+1] = move(words[k], positions[k])
};
BraidPath path_to_end(const Matrix& a, const Word& w, int i);

}  // namespace posrep
