#include "posrep/folding.hpp"

#include <map>

namespace posrep {

namespace {

std::vector<std::vector<int>> identity_orbits(int n) {
    std::vector<std::vector<int>> o;
    for (int i = 1; i <= n; ++i) o.push_back({i});
    return o;
}

}  // namespace

FoldingScheme folding_scheme(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("scheme must read TARGET:SOURCE, got " + name);
    FoldingScheme s;
    s.name = name;
    s.target = TypeTag::parse(name.substr(0, colon));
    s.source = TypeTag::parse(name.substr(colon + 1));
    int n = s.target.rank;
    auto bad = [&] { return std::invalid_argument("unsupported folding scheme " + name); };
    if (s.target == s.source) {
        s.orbits = identity_orbits(n);
    } else if (s.target.family == 'B' && s.source.family == 'A' && s.source.rank == 2 * n - 1) {
        // node 1 -> middle node n, node j -> {n+1-j, n-1+j}
        s.orbits.push_back({n});
        for (int j = 2; j <= n; ++j) s.orbits.push_back({n + 1 - j, n - 1 + j});
    } else if (s.target.family == 'C' && s.source.family == 'D' && s.source.rank == n + 1) {
        // node 1 -> fork {n, n+1}, node j -> n+1-j
        s.orbits.push_back({n, n + 1});
        for (int j = 2; j <= n; ++j) s.orbits.push_back({n + 1 - j});
    } else if (s.target.family == 'G' && s.source.family == 'D' && s.source.rank == 4) {
        s.orbits = {{1, 3, 4}, {2}};
    } else if (s.target.family == 'F' && s.source.family == 'E' && s.source.rank == 6) {
        s.orbits = {{1, 5}, {2, 4}, {3}, {6}};
    } else {
        throw bad();
    }
    Matrix a = cartan_matrix(s.source);
    for (auto& o : s.orbits)
        for (int x : o)
            for (int y : o)
                if (x != y && a[x - 1][y - 1] != 0) throw bad();
    return s;
}

Word fold_word(const FoldingScheme& s, const Word& target_word) {
    Word w;
    for (int x : target_word) {
        if (x < 1 || x > int(s.orbits.size())) throw std::invalid_argument("letter out of range");
        w.insert(w.end(), s.orbits[x - 1].begin(), s.orbits[x - 1].end());
    }
    return w;
}

namespace {

// source symbol -> target symbol
struct SymbolMap {
    std::vector<int> target;
    std::map<int, int> size_of;  // target symbol -> block size
};

SymbolMap symbol_map(const FoldingScheme& s, const Presentation& src, const Presentation& tgt) {
    const SymbolTable& S = *src.T;
    const SymbolTable& T = *tgt.T;
    SymbolMap m{std::vector<int>(S.size(), -1), {}};
    int j = 0;
    for (int J = 1; J <= int(tgt.word.size()); ++J) {
        const auto& orbit = s.orbits[tgt.word[J - 1] - 1];
        for (std::size_t c = 0; c < orbit.size(); ++c) {
            ++j;
            int x = S.index(src.var(j)), p = S.index("p_" + src.var(j));
            m.target[x] = T.index(tgt.var(J));
            m.target[p] = T.index("p_" + tgt.var(J));
            m.size_of[m.target[x]] = m.size_of[m.target[p]] = int(orbit.size());
        }
    }
    for (int i = 1; i <= tgt.rank(); ++i)
        for (int o : s.orbits[i - 1]) {
            int l = S.index(src.lam(o));
            m.target[l] = T.index(tgt.lam(i));
            m.size_of[m.target[l]] = int(s.orbits[i - 1].size());
        }
    return m;
}

// keeps the monomials that are constant on every block, each block collapsing to its common value
Expr restrict(const Expr& x, const SymbolMap& m, const TablePtr& T, int kmax, FoldResult& r) {
    const SymbolTable& S = *x.table();
    Expr out(T);
    for (auto& [v, c] : x.terms()) {
        std::map<int, ExpEntry> acc;
        std::map<int, int> seen;
        bool ok = true;
        for (auto& en : v.entries()) {
            int t = m.target[en.sym];
            if (t < 0) throw std::logic_error("unmapped symbol " + S[en.sym].name);
            auto [it, fresh] = acc.try_emplace(t, ExpEntry{t, en.cp, en.cm});
            if (!fresh && (it->second.cp != en.cp || it->second.cm != en.cm)) ok = false;
            ++seen[t];
        }
        for (auto& [t, n] : seen)
            if (n != m.size_of.at(t)) ok = false;
        if (!ok) {
            ++r.dropped;
            continue;
        }
        std::vector<ExpEntry> e;
        for (auto& [t, en] : acc) e.push_back(en);
        Scalar sc;
        for (auto& [p, n] : c.terms()) {
            if (!p.t.is_zero()) throw std::logic_error("source phase carries a dual slot");
            sc += Scalar::monomial(Phase(p.r, p.s / Rational(kmax), Rational(0)), n);
        }
        out.add(ExpVec(std::move(e)), sc);
    }
    // coincident integer multiples become q_s-integers
    Expr q(T);
    for (auto& [v, c] : out.terms()) {
        std::int64_t h = 0;
        for (auto& t : c.terms()) h += t.second;
        if (c.terms().size() == 1 && c.terms()[0].second >= 2) {
            auto [p, n] = c.terms()[0];
            q.add(v, Scalar::monomial(p) * q_integer(int(n), Rational(1, kmax)));
            ++r.quantized;
        } else {
            q.add(v, c);
            if (h >= 2 && c == q_integer(int(h), Rational(1, kmax))) ++r.q_multiples;
        }
    }
    return q;
}

Expr orbit_product(const std::vector<Expr>& g, const std::vector<int>& orbit) {
    Expr r = g[orbit[0] - 1];
    for (std::size_t c = 1; c < orbit.size(); ++c) r = r * g[orbit[c] - 1];
    return r;
}

}  // namespace

FoldResult fold(const FoldingScheme& s, const Word& target_word) {
    RootDatum td = root_datum(s.target);
    Word tw = target_word.empty() ? canonical_word(s.target) : target_word;
    if (!is_longest_word(td.cartan, tw)) throw std::invalid_argument("not a reduced word of w0: " + word_str(tw));
    FoldResult r;
    r.source_word = fold_word(s, tw);
    RootDatum sd = root_datum(s.source);
    if (!is_longest_word(sd.cartan, r.source_word))
        throw std::invalid_argument("folded word is not a reduced word of w0: " + word_str(r.source_word));
    Presentation src = make_presentation(sd, r.source_word);
    Presentation& P = r.folded;
    P.datum = td;
    P.word = tw;
    P.T = make_table(td, tw);
    SymbolMap m = symbol_map(s, src, P);
    for (int i = 1; i <= td.rank(); ++i) {
        const auto& o = s.orbits[i - 1];
        P.e.push_back(restrict(orbit_product(src.e, o), m, P.T, td.kmax, r));
        P.f.push_back(restrict(orbit_product(src.f, o), m, P.T, td.kmax, r));
        P.K.push_back(restrict(orbit_product(src.K, o), m, P.T, td.kmax, r));
        P.Kinv.push_back(restrict(orbit_product(src.Kinv, o), m, P.T, td.kmax, r));
    }
    return r;
}

FoldCertificate fold_certify(const FoldingScheme& s, const Word& target_word, bool relations,
                             const CheckOptions& opt) {
    FoldCertificate c;
    c.scheme = s.name;
    FoldResult r = fold(s, target_word);
    c.target_word = r.folded.word;
    c.source_word = r.source_word;
    c.quantized = r.quantized;
    c.dropped = r.dropped;
    c.q_multiples = r.q_multiples;
    Presentation direct = make_presentation(r.folded.datum, r.folded.word);
    for (int i = 0; i < direct.rank(); ++i) {
        std::string n = std::to_string(i + 1);
        if (!(r.folded.e[i] == direct.e[i])) c.mismatches.push_back("e" + n);
        if (!(r.folded.f[i] == direct.f[i])) c.mismatches.push_back("f" + n);
        if (!(r.folded.K[i] == direct.K[i])) c.mismatches.push_back("K" + n);
        if (!(r.folded.Kinv[i] == direct.Kinv[i])) c.mismatches.push_back("Kinv" + n);
    }
    c.equal = c.mismatches.empty();
    if (relations) {
        c.relations_checked = true;
        c.relations = check_relations(r.folded, opt);
    }
    return c;
}

}  // namespace posrep
