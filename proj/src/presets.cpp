#include <cctype>

#include "posrep/posrep.hpp"

namespace posrep {

namespace {

using Combo = std::vector<std::pair<Rational, std::string>>;  // ordered (coefficient, atom)

struct Scanner {
    const std::string& s;
    std::size_t i = 0;
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    int number() {
        ws();
        bool brace = eat('{');
        std::size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (b == i) throw std::invalid_argument("expected a number in '" + s + "'");
        int n = std::stoi(s.substr(b, i - b));
        if (brace && !eat('}')) throw std::invalid_argument("unbalanced brace in '" + s + "'");
        return n;
    }
    bool done() {
        ws();
        return i >= s.size();
    }
};

// atom text up to the next sign at depth 0
std::string read_atom(Scanner& sc) {
    sc.ws();
    std::size_t b = sc.i;
    int depth = 0;
    while (sc.i < sc.s.size()) {
        char c = sc.s[sc.i];
        if (depth == 0 && (c == '+' || c == '-' || std::isspace(static_cast<unsigned char>(c)))) break;
        if (c == '(') ++depth;
        if (c == ')') --depth;
        ++sc.i;
    }
    return sc.s.substr(b, sc.i - b);
}

Combo parse_combo(const std::string& s) {
    Combo out;
    Scanner sc{s};
    while (!sc.done()) {
        int sign = 1;
        if (sc.eat('-')) sign = -1;
        else sc.eat('+');
        sc.ws();
        int c = 1;
        if (sc.i < s.size() && std::isdigit(static_cast<unsigned char>(s[sc.i]))) c = sc.number();
        std::string atom = read_atom(sc);
        if (atom.empty()) throw std::invalid_argument("empty atom in '" + s + "'");
        out.push_back({Rational(sign * c), atom});
    }
    return out;
}

std::string norm(std::string a) {
    std::string r;
    for (char c : a)
        if (c != '{' && c != '}' && c != ' ') r += c;
    return r;
}

// resolve an atom to a symbol name, "" if the variable does not exist
std::string symbol_of(const Presentation& P, const std::string& atom) {
    Scanner sc{atom};
    char head = atom[0];
    if ((head == 'u' || head == 'p') && atom.size() > 1 && atom[1] == '_') {
        sc.i = 2;
        int i = sc.number();
        if (!sc.eat('^')) throw std::invalid_argument("bad atom " + atom);
        int k = sc.number();
        int j = P.v_index(i, k);
        if (j == 0) return "";
        return (head == 'p' ? "p_" : "") + P.var(j);
    }
    if (head == 'v') return "v" + std::to_string(std::stoi(atom.substr(1)));
    if (head == 'p') return "p_v" + std::to_string(std::stoi(atom.substr(1)));
    throw std::invalid_argument("unknown atom " + atom);
}

void accumulate(const Presentation& P, const Combo& c, const Rational& scale, const std::vector<Combo>& partial,
                std::map<std::string, Rational>& out) {
    for (auto& [coef, atom] : c) {
        if (atom[0] == 'P') {
            std::size_t open = atom.find('(');
            int n = std::stoi(norm(atom.substr(2, open == std::string::npos ? std::string::npos : open - 2)));
            if (n < 1 || n > int(partial.size())) throw std::invalid_argument("unknown partial sum " + atom);
            const Combo& full = partial[n - 1];
            std::size_t from = 0;
            if (open != std::string::npos) {
                std::string key = norm(atom.substr(open + 1, atom.size() - open - 2));
                from = full.size();
                for (std::size_t t = 0; t < full.size(); ++t)
                    if (norm(full[t].second) == key) {
                        from = t;
                        break;
                    }
                if (from == full.size()) throw std::invalid_argument("partial sum start not found: " + atom);
            }
            Combo tail(full.begin() + from, full.end());
            accumulate(P, tail, scale * coef, partial, out);
            continue;
        }
        std::string sym = symbol_of(P, atom);
        if (!sym.empty()) out[sym] += scale * coef;
    }
}

Phase short_phase(const RootDatum& d) { return Phase(0, Rational(1, d.kmax), 0); }

Scalar coef_of(const RootDatum& d, const std::string& tag) {
    if (tag == "1" || tag.empty()) return Scalar::one();
    if (tag == "2s") return phase_integer(2, short_phase(d));
    if (tag == "3s") return phase_integer(3, short_phase(d));
    if (tag == "2q") return phase_integer(2, Phase(0, 1, 0));
    throw std::invalid_argument("unknown coefficient tag " + tag);
}

}  // namespace

Expr parse_terms(const Presentation& P, const std::vector<TermSpec>& terms, const std::vector<std::string>& partial) {
    std::vector<Combo> sums;
    for (auto& s : partial) sums.push_back(parse_combo(s));
    Expr out(P.T);
    for (auto& t : terms) {
        std::map<std::string, Rational> pos, mom;
        accumulate(P, parse_combo(t.pos), 1, sums, pos);
        accumulate(P, parse_combo(t.mom), 2, sums, mom);
        std::map<std::string, Rational> plus = mom, minus = mom;
        for (auto& [n, c] : pos) {
            plus[n] += c;
            minus[n] -= c;
        }
        Scalar c = coef_of(P.datum, t.coef);
        out += Expr::monomial(P.T, make_exp(*P.T, plus), c) + Expr::monomial(P.T, make_exp(*P.T, minus), c);
    }
    return out;
}

namespace {

std::string U(int i, int k) { return "u_" + std::to_string(i) + "^{" + std::to_string(k) + "}"; }
std::string Pm(int i, int k) { return "p_" + std::to_string(i) + "^{" + std::to_string(k) + "}"; }
// sum_{l=1}^{L} (-1)^l c p_i^l, with an overall sign; letter 'u' reproduces a printed slip
std::string alt(int i, int L, int c, int sign, char letter = 'p') {
    std::string s;
    for (int l = 1; l <= L; ++l) {
        int v = sign * c * (l % 2 ? -1 : 1);
        s += (v < 0 ? " -" : " +") + (std::abs(v) == 1 ? std::string() : std::to_string(std::abs(v))) +
             (letter == 'p' ? Pm(i, l) : U(i, l));
    }
    return s;
}

std::vector<TermSpec> bn_e1(int n, bool c_type, bool raw = false) {
    std::vector<TermSpec> t;
    int two = c_type ? 2 : 1;
    std::string tw = c_type ? "2" : "";
    for (int k = 1; k <= n; ++k) t.push_back({"1", U(1, k) + " -" + tw + U(2, 2 * k - 1), "-" + Pm(1, k) + alt(2, 2 * k - 2, two, -1)});
    for (int k = 1; k < n; ++k) {
        if (c_type) {
            std::string mom = raw ? "-" + Pm(1, k) + alt(2, 2 * k, 1, -1, 'u')
                                  : "-" + Pm(1, k) + alt(2, 2 * k - 2, 2, -1) + " +" + Pm(2, 2 * k - 1) + " -" + Pm(2, 2 * k);
            t.push_back({"2s", U(2, 2 * k) + " -" + U(2, 2 * k - 1), mom});
        }
        std::string lead = raw && !c_type ? "-" + U(1, k) : "-" + Pm(1, k);
        t.push_back({"1", tw + U(2, 2 * k) + " -" + U(1, k), lead + alt(2, 2 * k, two, -1, raw && c_type ? 'u' : 'p')});
    }
    return t;
}

std::vector<TermSpec> bn_ei(int n, int i, bool raw = false) {
    std::vector<TermSpec> t;
    for (int k = 1; k <= 2 * (n - i) + 1; ++k) {
        int s1 = 2 * ((k + 1) / 2) - 1, s2 = 2 * (k / 2);
        std::string pos = k % 2 ? U(i, k) + " -" + U(i + 1, k) : U(i + 1, k) + " -" + U(i, k);
        std::string mom = alt(i, s1, 1, 1) + alt(i + 1, s2, 1, raw ? 1 : -1);
        t.push_back({"1", pos, mom});
    }
    return t;
}

const std::vector<std::string> f4_partials{
    "-p_1^3+p_1^2-p_2^4+2p_3^4-2p_3^5+2p_3^2-2p_3^3+p_2^1-p_1^1",
    "-p_2^7+p_2^6-p_1^4+p_1^3-p_2^5+2p_3^5-2p_3^6+p_2^3-p_1^2+p_1^1-p_2^2+2p_3^1-2p_3^2",
    "-p_3^9-p_2^8+p_2^7-p_2^6+p_2^5+p_3^6-p_4^3-p_3^5+p_3^3-p_2^3+p_2^2+p_3^2-p_3^4+p_4^1-p_3^1",
};

}  // namespace

bool has_preset(const RootDatum& d) {
    char f = d.tag.family;
    return (f == 'B' || f == 'C') || (f == 'F' && d.rank() == 4) || (f == 'G' && d.rank() == 2);
}


Expr preset_e(const RootDatum& d, int i) {
    if (!has_preset(d)) throw std::invalid_argument("no closed form for type " + d.tag.str());
    Presentation P = skeleton(d, canonical_word(d.tag));
    std::vector<std::string> partial;
    if (d.tag.family == 'F') partial = f4_partials;
    return parse_terms(P, preset_terms(d, i), partial);
}

std::vector<TermSpec> g2_terms(const Word& w, int i);

std::vector<TermSpec> preset_terms(const RootDatum& d, int i) {
    int n = d.rank();
    switch (d.tag.family) {
    case 'B':
    case 'C':
        return i == 1 ? bn_e1(n, d.tag.family == 'C') : bn_ei(n, i);
    case 'G': {
        Word w = canonical_word(d.tag);
        if (w.back() == i) return {{"1", "v6", "-p6"}};
        return g2_terms(w, i);
    }
    default:
        break;
    }
    // F4, corrected transcription
    switch (i) {
    case 1:
        return {{"1", "u_1^3", "P_1"},
                {"1", "u_2^4-u_1^2", "P_1(p_2^4)"},
                {"1", "u_2^3-2u_3^4", "-p_2^3+P_1(p_3^2)"},
                {"2s", "u_3^5-u_3^4", "-p_2^3+p_3^4-p_3^5+P_1(p_3^2)"},
                {"1", "2u_3^5-u_2^3", "-p_2^3+P_1(p_3^4)"},
                {"1", "u_2^2-2u_3^2", "-p_2^2+p_2^1-p_1^1"},
                {"2s", "u_3^3-u_3^2", "-p_2^2+p_3^2-p_3^3+p_2^1-p_1^1"},
                {"1", "2u_3^3-u_2^2", "-p_2^2+P_1(p_3^2)"},
                {"1", "u_1^1-u_2^1", "-p_1^1"}};
    case 2:
        return {{"1", "u_2^7", "P_2"},
                {"1", "u_1^4-u_2^6", "P_2(p_1^4)"},
                {"1", "u_2^5-u_1^3", "P_2(p_2^5)"},
                {"1", "u_2^4-2u_3^5", "p_2^3-p_2^4+P_2(p_1^2)"},
                {"2s", "u_3^6-u_3^5", "p_3^5-p_3^6-p_2^4+P_2(p_2^3)"},
                {"1", "2u_3^6-u_2^4", "-p_2^4+P_2(p_3^5)"},
                {"1", "u_1^2-u_2^3", "P_2(p_1^2)"},
                {"1", "u_2^2-u_1^1", "P_2(p_2^2)"},
                {"1", "2u_3^2-u_2^1", "-p_2^1+P_2(p_3^1)"},
                {"2s", "u_3^2-u_3^1", "p_3^1-p_3^2-p_2^1"},
                {"1", "u_2^1-2u_3^1", "-p_2^1"}};
    case 3:
        return {{"1", "u_3^9", "P_3"},
                {"1", "u_2^8-u_3^8", "-p_3^8+P_3(p_2^8)"},
                {"1", "u_3^8-u_2^7", "-p_3^8+P_3(p_2^6)"},
                {"1", "u_2^6-u_3^7", "-p_3^7+P_3(p_2^6)"},
                {"1", "u_3^7-u_2^5", "-p_3^7+P_3(p_3^6)"},
                {"1", "u_4^3-u_3^6", "P_3(p_4^3)"},
                {"1", "u_3^5+u_3^4-u_4^2", "-p_4^2+P_3(p_3^5)"},
                {"1", "u_3^5-u_3^3", "-p_4^2-p_3^5+p_3^4+P_3(p_2^3)"},
                {"1", "u_2^3-u_3^4-u_3^3", "-p_4^2+P_3(p_2^3)"},
                {"1", "u_3^4+u_3^3-u_2^2", "-p_4^2+P_3(p_3^2)"},
                {"1", "u_3^4-u_3^2", "-p_4^2+p_3^3+P_3(p_3^4)"},
                {"1", "u_4^2-u_3^3-u_3^2", "-p_4^2+p_4^1-p_3^1"},
                {"1", "u_3^1-u_4^1", "-p_3^1"}};
    case 4:
        return {{"1", "u_4^1", "-p_4^1"}};
    }
    throw std::invalid_argument("bad node");
}

std::vector<TermSpec> g2_terms(const Word& w, int i) {
    if (w == Word{2, 1, 2, 1, 2, 1} && i == 2)
        return {{"1", "v1", "-p1-p2-p3+p5+p6"},   {"1", "v2-v3", "-p2-2p3+p5+p6"},
                {"1", "v4-2v5", "-p4-p5+p6"},      {"2s", "v3-v5", "-p3-p4+p6"},
                {"1", "2v3-v4", "-2p3-p4+p5+p6"}, {"1", "v5-v6", "-p5"}};
    if (w == Word{1, 2, 1, 2, 1, 2} && i == 1)
        return {{"1", "v1", "-p1-3p2-p3+p5+3p6"},
                {"1", "3v2-v3", "-3p2-2p3+p5+3p6"},
                {"3s", "2v2-v4", "-2p2-2p3-p4+p5+3p6"},
                {"3s", "v2+v3-2v4", "-p2-2p3-2p4+p5+3p6"},
                {"3s", "v2+v4-v5", "-p2-p3-2p4+3p6"},
                {"3s", "v2-v6", "-p2-p3-p4+2p6"},
                {"1", "2v3-3v4", "-2p3-3p4+p5+3p6"},
                {"2q", "v3-v5", "-p3-3p4+3p6"},
                {"3s", "v3-v4-v6", "-p3-2p4+2p6"},
                {"1", "3v4-2v5", "-3p4-p5+3p6"},
                {"3s", "2v4-v5-v6", "-2p4-p5+2p6"},
                {"3s", "v4-2v6", "-p4-p5+p6"},
                {"1", "v5-3v6", "-p5"}};
    throw std::invalid_argument("G2 word " + word_str(w) + " has e_" + std::to_string(i) + " as a single term");
}

Expr g2_long_e(const Presentation& P, int i) { return parse_terms(P, g2_terms(P.word, i)); }

std::vector<TypoCase> typo_cases() {
    std::vector<TypoCase> out;
    out.push_back({"B_n e_1 exponent", "B3", 1, bn_e1(3, false, true), bn_e1(3, false), {}, {},
                   "second sum: e(-u_1^k - ...) read as e(-p_1^k - ...)"});
    out.push_back({"C_n e_1 exponents", "C3", 1, bn_e1(3, true, true), bn_e1(3, true), {}, {},
                   "u_2^l in the exponents read as p_2^l; middle sum carries 2 on l <= 2k-2"});
    out.push_back({"B_n e_i second sum", "B3", 2, bn_ei(3, 2, true), bn_ei(3, 2), {}, {},
                   "sum over p_{i+1}^l enters with the opposite sign"});
    RootDatum f4 = root_datum("F4");
    auto fixed = [&](int i) { return preset_terms(f4, i); };
    std::vector<std::string> raw_partials = f4_partials;
    raw_partials[1] = "-p_2^7+p_2^7-p_1^4+p_1^3-p_2^5+2p_3^5-2p_3^6+p_2^3-p_1^2+p_1^1-p_2^2+2p_3^1-2p_3^2";
    auto e1 = fixed(1);
    e1[6].pos = "p_3^3-p_3^2";
    out.push_back({"F_4 e_1 bracket", "F4", 1, e1, fixed(1), f4_partials, f4_partials,
                   "[p_3^3-p_3^2] read as [u_3^3-u_3^2]"});
    auto e2 = fixed(2);
    e2[5].pos = "2p_3^6-p_2^4";
    e2[7].pos = "p_2^2-p_1^1";
    out.push_back({"F_4 P_2 and e_2 brackets", "F4", 2, e2, fixed(2), raw_partials, f4_partials,
                   "P_2 leading -p_2^7+p_2^7 read as -p_2^7+p_2^6; p's inside brackets read as u's"});
    auto e3 = fixed(3);
    e3[1].mom = "P_3(p_2^8)";
    out.push_back({"F_4 e_3", "F4", 3, e3, fixed(3), f4_partials, f4_partials,
                   "second term gains -p_3^8; unsubscripted P read as P_3"});
    return out;
}

Expr TypoCase::build(bool corrected) const {
    RootDatum d = root_datum(type);
    Presentation P = skeleton(d, canonical_word(d.tag));
    return corrected ? parse_terms(P, fixed, fixed_partial) : parse_terms(P, raw, raw_partial);
}

}  // namespace posrep
