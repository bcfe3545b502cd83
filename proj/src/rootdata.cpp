#include "posrep/rootdata.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace posrep {

TypeTag TypeTag::parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad type tag: " + s);
    TypeTag t;
    t.family = char(std::toupper(s[0]));
    try {
        std::size_t used = 0;
        t.rank = std::stoi(s.substr(1), &used);
        if (used != s.size() - 1) throw std::invalid_argument(s);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad type tag: " + s);
    }
    bool ok = false;
    switch (t.family) {
        case 'A': ok = t.rank >= 1; break;
        case 'B': case 'C': ok = t.rank >= 2; break;
        case 'D': ok = t.rank >= 3; break;
        case 'E': ok = t.rank == 6; break;
        case 'F': ok = t.rank == 4; break;
        case 'G': ok = t.rank == 2; break;
        default: break;
    }
    if (!ok) throw std::invalid_argument("invalid type: " + s);
    return t;
}

std::string TypeTag::str() const { return std::string(1, family) + std::to_string(rank); }

Matrix cartan_matrix(const TypeTag& t) {
    int n = t.rank;
    Matrix a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
    switch (t.family) {
        case 'A': case 'B': case 'C':
            for (int i = 1; i < n; ++i) link(i, i + 1);
            if (t.family == 'B') a[0][1] = -2;
            if (t.family == 'C') a[1][0] = -2;
            break;
        case 'D':
            // chain 1..n-1, node n attached to n-2
            for (int i = 1; i < n - 1; ++i) link(i, i + 1);
            link(n - 2, n);
            break;
        case 'E':
            // chain 1-2-3-4-5, node 6 attached to 3
            for (int i = 1; i < 5; ++i) link(i, i + 1);
            link(3, 6);
            break;
        case 'F':
            a = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
            break;
        case 'G':
            a = {{2, -1}, {-3, 2}};
            break;
        default:
            throw std::invalid_argument("invalid type");
    }
    return a;
}

RootDatum root_datum(const TypeTag& t) {
    RootDatum d;
    d.tag = t;
    d.cartan = cartan_matrix(t);
    int n = t.rank;
    d.k.assign(n, 1);
    switch (t.family) {
        case 'B': d.k[0] = 2; d.kmax = 2; break;
        case 'C': std::fill(d.k.begin() + 1, d.k.end(), 2); d.kmax = 2; break;
        case 'F': d.k = {1, 1, 2, 2}; d.kmax = 2; break;
        case 'G': d.k = {1, 3}; d.kmax = 3; break;
        default: break;
    }
    // 2-colouring, node 1 gets weight 1
    d.n.assign(n, -1);
    d.n[0] = 1;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (int j = 0; j < n; ++j)
            if (j != i && d.cartan[i][j] != 0 && d.n[j] < 0) {
                d.n[j] = 1 - d.n[i];
                q.push(j);
            }
    }
    return d;
}

RootDatum root_datum(const std::string& s) { return root_datum(TypeTag::parse(s)); }

Rational q_exponent(const TypeTag& t, int node) { return root_datum(t).q_exponent(node); }

int braid_order(const Matrix& a, int i, int j) {
    if (i == j) return 1;
    switch (a[i - 1][j - 1] * a[j - 1][i - 1]) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: throw std::invalid_argument("not finite type");
    }
}

namespace {
// s_j(beta) = beta - <beta, alpha_j^vee> alpha_j with <alpha_m, alpha_j^vee> = a_jm
void reflect(const Matrix& a, std::vector<int>& beta, int j) {
    int c = 0;
    for (std::size_t m = 0; m < beta.size(); ++m) c += beta[m] * a[j - 1][m];
    beta[j - 1] -= c;
}
}  // namespace

bool is_right_descent(const Matrix& a, const Word& w, int i) {
    std::vector<int> beta(a.size(), 0);
    beta[i - 1] = 1;
    for (auto it = w.rbegin(); it != w.rend(); ++it) reflect(a, beta, *it);
    return std::all_of(beta.begin(), beta.end(), [](int x) { return x <= 0; });
}

bool is_reduced(const Matrix& a, const Word& w) {
    for (std::size_t l = 0; l < w.size(); ++l) {
        if (w[l] < 1 || w[l] > int(a.size())) return false;
        if (is_right_descent(a, Word(w.begin(), w.begin() + l), w[l])) return false;
    }
    return true;
}

int num_positive_roots(const Matrix& a) {
    Word w;
    for (bool grew = true; grew;) {
        grew = false;
        for (int i = 1; i <= int(a.size()); ++i)
            if (!is_right_descent(a, w, i)) {
                w.push_back(i);
                grew = true;
                break;
            }
    }
    return int(w.size());
}

bool is_longest_word(const Matrix& a, const Word& w) {
    return int(w.size()) == num_positive_roots(a) && is_reduced(a, w);
}

bool move_applies(const Matrix& a, const Word& w, int pos) {
    if (pos < 0 || pos + 1 >= int(w.size())) return false;
    int i = w[pos], j = w[pos + 1];
    if (i == j) return false;
    int m = braid_order(a, i, j);
    if (pos + m > int(w.size())) return false;
    for (int k = 0; k < m; ++k)
        if (w[pos + k] != (k % 2 == 0 ? i : j)) return false;
    return true;
}

BraidResult braid_move(const Matrix& a, const Word& w, int pos) {
    if (!move_applies(a, w, pos))
        throw std::invalid_argument("braid move not applicable at position " + std::to_string(pos) + " of " +
                                    word_str(w));
    int i = w[pos], j = w[pos + 1];
    int m = braid_order(a, i, j);
    BraidResult r{w, {}};
    r.perm.resize(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) r.perm[k] = int(k);
    for (int k = 0; k < m; ++k) r.word[pos + k] = (k % 2 == 0 ? j : i);
    if (m == 2) std::swap(r.perm[pos], r.perm[pos + 1]);
    if (m >= 4)
        for (int k = 0; k < m; ++k) r.perm[pos + k] = pos + m - 1 - k;
    return r;
}

Word parse_word(const std::string& s) {
    Word w;
    for (char c : s) {
        if (c == ' ' || c == ',') continue;
        if (c < '0' || c > '9') throw std::invalid_argument("bad word: " + s);
        w.push_back(c - '0');
    }
    return w;
}

std::string word_str(const Word& w) {
    std::string s;
    for (int x : w) s += std::to_string(x);
    return s;
}

Word canonical_word(const TypeTag& t) {
    Matrix a = cartan_matrix(t);
    Word w;
    switch (t.family) {
        case 'B': case 'C':
            w = {1, 2, 1, 2};
            for (int k = 3; k <= t.rank; ++k) {
                for (int j = k; j >= 1; --j) w.push_back(j);
                for (int j = 2; j <= k; ++j) w.push_back(j);
            }
            return w;
        case 'F': return parse_word("323212321432312343213234");
        case 'G': return {2, 1, 2, 1, 2, 1};
        case 'A':
            for (int k = 1; k <= t.rank; ++k)
                for (int j = k; j >= 1; --j) w.push_back(j);
            return w;
        default:
            // greedy: append the smallest non-descent letter
            for (bool grew = true; grew;) {
                grew = false;
                for (int i = 1; i <= t.rank; ++i)
                    if (!is_right_descent(a, w, i)) {
                        w.push_back(i);
                        grew = true;
                        break;
                    }
            }
            return w;
    }
}

DualTag langlands_dual(const TypeTag& t) {
    DualTag d{t, {}};
    for (int i = 1; i <= t.rank; ++i) d.node_map.push_back(i);
    if (t.family == 'B') d.tag.family = 'C';
    if (t.family == 'C') d.tag.family = 'B';
    if (t.family == 'F' || t.family == 'G') std::reverse(d.node_map.begin(), d.node_map.end());
    return d;
}

namespace {
// moves the word so that it ends in i; appends the moves to path
Word make_end(const Matrix& a, Word w, int i, std::vector<int>& moves, std::vector<Word>& before) {
    if (w.back() == i) return w;
    int j = w.back();
    int m = braid_order(a, i, j);
    Word pre(w.begin(), w.end() - 1);
    Word suffix{j};
    int cur = j;
    for (int k = 1; k < m; ++k) {
        int nxt = cur == j ? i : j;
        pre = make_end(a, pre, nxt, moves, before);
        suffix.insert(suffix.begin(), nxt);
        pre.pop_back();
        cur = nxt;
    }
    Word w2 = pre;
    w2.insert(w2.end(), suffix.begin(), suffix.end());
    moves.push_back(int(pre.size()));
    before.push_back(w2);
    return braid_move(a, w2, int(pre.size())).word;
}
}  // namespace

BraidPath path_to_end(const Matrix& a, const Word& w, int i) {
    if (w.empty()) throw std::invalid_argument("empty word");
    std::vector<int> moves;
    std::vector<Word> before;
    make_end(a, w, i, moves, before);
    BraidPath p;
    p.positions = moves;
    p.words.push_back(w);
    for (int pos : moves) p.words.push_back(braid_move(a, p.words.back(), pos).word);
    if (p.words.back().back() != i) throw std::logic_error("braid path failed");
    return p;
}

}  // namespace posrep
