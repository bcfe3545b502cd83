#include "posrep/rewrite.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace posrep {

int exchange_index(const SymbolTable& T, const ExpVec& x, int kX, const ExpVec& y) {
    Triple p = pairing(T, x, y);
    if (!(p.r / 4).is_integer() || !p.t.is_zero())
        throw UnsupportedError("unsupported conjugation: mixed exchange phase");
    Rational m = Rational(kX) * p.s / 4;
    if (!m.is_integer()) throw UnsupportedError("unsupported conjugation: exchange index " + m.str());
    return int(m.num());
}

namespace {
Expr mul_factor(const Expr& Y, const ExpVec& x, const Scalar& c) {
    Expr f = Expr::one(Y.table());
    f.add(x, c);
    return Y * f;
}
Scalar qx(int kX, int e) { return q_power(Rational(e, kX)); }
}  // namespace

Expr divide_factor(const Expr& W, const ExpVec& x, const Scalar& c) {
    const SymbolTable& T = *W.table();
    if (x.empty()) throw UnsupportedError("division by a constant factor");
    const ExpEntry& lead = x.entries().front();
    bool plus = !lead.cp.is_zero();
    Rational a0 = plus ? lead.cp : lead.cm;
    std::map<ExpVec, std::map<Rational, Scalar>> classes;
    for (auto& [y, cy] : W.terms()) {
        ExpEntry e = y.get(lead.sym);
        Rational k = (plus ? e.cp : e.cm) / a0;
        classes[y - x.scaled(k)][k] = cy;
    }
    Expr Z(W.table());
    for (auto& [y0, ws] : classes) {
        Rational k0 = ws.begin()->first, K = ws.rbegin()->first;
        if (!(K - k0).is_integer()) throw UnsupportedError("unsupported conjugation: non-polynomial quotient");
        Scalar ph = Scalar::monomial(quarter(pairing(T, y0, x))) * c;
        Scalar z;
        for (Rational k = k0; k < K; k += 1) {
            auto it = ws.find(k);
            Scalar w = it == ws.end() ? Scalar() : it->second;
            z = w - ph * z;
            Z.add(y0 + x.scaled(k), z);
        }
        Scalar rem = K > k0 ? ws.at(K) - ph * z : ws.at(K);
        if (!rem.is_zero()) throw UnsupportedError("unsupported conjugation: non-polynomial quotient");
    }
    return Z;
}

Expr ad_gstar(const Expr& Y, const ExpVec& x, int kX, bool inverse) {
    const SymbolTable& T = *Y.table();
    std::map<int, Expr> groups;
    for (auto& [y, c] : Y.terms()) {
        int m = exchange_index(T, x, kX, y);
        auto it = groups.try_emplace(m, Expr(Y.table())).first;
        it->second.add(y, c);
    }
    Expr out(Y.table());
    for (auto& [m, term] : groups) {
        bool poly = (m >= 0) != inverse;
        int n = std::abs(m);
        Expr cur = term;
        for (int l = 0; l < n; ++l) {
            int e = m >= 0 ? 2 * l + 1 : 2 * l + 1 - 2 * n;
            cur = poly ? mul_factor(cur, x, qx(kX, e)) : divide_factor(cur, x, qx(kX, e));
        }
        out += cur;
    }
    return out;
}

Expr ad_ratio(const Expr& Y, const ExpVec& xp, const ExpVec& xm, int kX, bool inverse) {
    if (!inverse) return ad_g(ad_gstar(Y, xm, kX), xp, kX);
    return ad_gstar(ad_gstar(Y, xp, kX), xm, kX, true);
}

std::pair<ExpVec, ExpVec> ratio_args(const SymbolTable& T, const std::map<std::string, Rational>& pos,
                                     const std::map<std::string, Rational>& mom) {
    std::map<std::string, Rational> m2;
    for (auto& [n, c] : mom) m2["p_" + n] = c * 2;
    ExpVec P = make_exp(T, pos), M = make_exp(T, m2);
    return {M + P, M - P};
}

const std::array<std::array<int, 4>, 4>& b2_T_matrix() {
    // old = A new on (t,u,v,w); A is its own inverse
    static const std::array<std::array<int, 4>, 4> A{{{0, 0, 1, -1}, {0, 1, 0, 0}, {1, 0, 0, 1}, {0, 0, 0, 1}}};
    return A;
}

Expr move_map(const Presentation& src, const Presentation& dst, int pos, const Expr& X) {
    const SymbolTable& Ts = *src.T;
    const SymbolTable& Td = *dst.T;
    int i = src.word[pos], j = src.word[pos + 1];
    int m = braid_order(src.datum.cartan, i, j);
    auto V = [&](int k) { return src.var(pos + k + 1); };
    auto S = [&](const std::string& n) { return Ts.index(n); };
    auto D = [&](const std::string& n) { return Td.index(n); };
    SubstMap sm;
    if (m == 2) {
        std::string a = V(0), b = V(1);
        sm[S(a)] = {{D(b), 1}};
        sm[S(b)] = {{D(a), 1}};
        sm[S("p_" + a)] = {{D("p_" + b), 1}};
        sm[S("p_" + b)] = {{D("p_" + a), 1}};
        return substitute(X, dst.T, sm);
    }
    if (m == 3) {
        std::string u = V(0), v = V(1), w = V(2);
        int k = Ts[S(u)].k;
        auto [xp, xm] = ratio_args(Ts, {{u, 1}, {v, -1}, {w, 1}}, {{u, 1}, {w, -1}});
        sm[S(u)] = {{D(w), 1}};
        sm[S(v)] = {{D(u), 1}, {D(w), 1}};
        sm[S(w)] = {{D(v), 1}, {D(w), -1}};
        sm[S("p_" + u)] = {{D("p_" + u), -1}, {D("p_" + v), 1}, {D("p_" + w), 1}};
        sm[S("p_" + v)] = {{D("p_" + u), 1}};
        sm[S("p_" + w)] = {{D("p_" + v), 1}};
        return substitute(ad_ratio(X, xp, xm, k), dst.T, sm);
    }
    if (m == 4) {
        std::vector<std::string> blk{V(0), V(1), V(2), V(3)};
        bool short_first = Ts[S(blk[0])].k > Ts[S(blk[1])].k;
        std::vector<std::string> s = blk;
        if (!short_first) std::reverse(s.begin(), s.end());
        std::vector<std::string> d(s.rbegin(), s.rend());
        const std::string &t = s[0], &u = s[1], &v = s[2], &w = s[3];
        int ks[4], kd[4];
        for (int a = 0; a < 4; ++a) {
            ks[a] = Ts[S(s[a])].k;
            kd[a] = Td[D(d[a])].k;
        }
        struct G {
            std::pair<ExpVec, ExpVec> x;
            int k;
        };
        std::vector<G> gs{
            {ratio_args(Ts, {{u, 1}, {w, 1}, {v, -2}}, {{w, 1}, {u, -1}}), ks[1]},
            {ratio_args(Ts, {{t, 1}, {v, -1}, {w, 1}}, {{v, 1}, {t, -1}, {w, 1}, {u, -1}}), ks[0]},
            {ratio_args(Ts, {{t, 2}, {w, 1}, {u, -1}}, {{v, 2}, {t, -2}, {w, 1}, {u, -1}}), ks[1]},
        };
        Expr Y = X;
        for (auto& g : gs) Y = ad_ratio(Y, g.x.first, g.x.second, g.k);
        const auto& A = b2_T_matrix();  // A^{-1} = A
        for (int a = 0; a < 4; ++a) {
            auto& pos_row = sm[S(s[a])];
            auto& mom_row = sm[S("p_" + s[a])];
            for (int b = 0; b < 4; ++b) {
                if (A[a][b] != 0) pos_row.push_back({D(d[b]), A[a][b]});
                if (A[b][a] != 0) mom_row.push_back({D("p_" + d[b]), Rational(A[b][a]) * Rational(kd[b], ks[a])});
            }
        }
        return substitute(Y, dst.T, sm);
    }
    throw UnsupportedError("no conjugation formula for a braid move of order " + std::to_string(m));
}

Presentation phi_B2(const Presentation& P) {
    if (P.datum.tag.family != 'B' && P.datum.tag.family != 'C') throw std::invalid_argument("phi_B2 needs rank 2 B/C");
    if (P.rank() != 2) throw std::invalid_argument("phi_B2 needs rank 2");
    Presentation Q = skeleton(P.datum, braid_move(P.datum.cartan, P.word, 0).word);
    for (int i = 0; i < 2; ++i) {
        Q.e[i] = move_map(P, Q, 0, P.e[i]);
        Q.f[i] = move_map(P, Q, 0, P.f[i]);
        Q.K[i] = move_map(P, Q, 0, P.K[i]);
        Q.Kinv[i] = move_map(P, Q, 0, P.Kinv[i]);
    }
    return Q;
}

Quad lusztig_phi(const Quad& x) {
    const auto& [a, b, c, d] = x;
    Rational R = a * b + a * d + c * d;
    Rational S = a * a * b + d * (a + c) * (a + c);
    if (R.is_zero() || S.is_zero()) throw std::domain_error("singular input to lusztig_phi");
    return {a * b * c / R, R * R / S, S / R, b * c * c * d / S};
}

RMatrix matmul(const RMatrix& a, const RMatrix& b) {
    std::size_t n = a.size(), m = b[0].size(), l = b.size();
    RMatrix c(n, std::vector<Rational>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < l; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

namespace {
RMatrix ident(int n) {
    RMatrix m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}
RMatrix prod(std::initializer_list<RMatrix> ms) {
    RMatrix r;
    for (auto& m : ms) r = r.empty() ? m : matmul(r, m);
    return r;
}
// SL_n pinning of the simple root between rows i, i+1 (0-based)
RMatrix xs(int n, int i, const Rational& a) { auto m = ident(n); m[i][i + 1] = a; return m; }
RMatrix ys(int n, int i, const Rational& c) { auto m = ident(n); m[i + 1][i] = c; return m; }
RMatrix chis(int n, int i, const Rational& b) { auto m = ident(n); m[i][i] = b; m[i + 1][i + 1] = Rational(1) / b; return m; }
}  // namespace

RMatrix sp4_x(bool long_root, const Rational& t) {
    RMatrix m = ident(4);
    if (long_root) {
        m[1][2] = t;
    } else {
        m[0][1] = t;
        m[2][3] = -t;
    }
    return m;
}

RMatrix g2_x(int node, const Rational& t) {
    RMatrix m = ident(7);
    if (node == 1) {
        m[1][2] = t;
        m[4][5] = t;
    } else {
        m[0][1] = -t;
        m[2][3] = -t;
        m[2][4] = -t * t;
        m[3][4] = t * 2;
        m[5][6] = t;
    }
    return m;
}

PinningReport pinning_check(int samples, unsigned seed) {
    std::mt19937 g(seed);
    std::uniform_int_distribution<int> num(1, 9), den(1, 5);
    auto r = [&] { return Rational(num(g), den(g)); };
    PinningReport rep;
    for (int s = 0; s < samples; ++s) {
        Rational a = r(), b = r(), c = r(), d = r();
        // SL2
        rep.ek = rep.ek && matmul(chis(2, 0, b), xs(2, 0, a)) == matmul(xs(2, 0, b * b * a), chis(2, 0, b));
        Rational D = a * c + b * b;
        rep.ekf = rep.ekf && prod({xs(2, 0, a), chis(2, 0, b), ys(2, 0, c)}) ==
                                 prod({ys(2, 0, c / D), chis(2, 0, D / b), xs(2, 0, a / D)});
        // SL3, adjacent roots 0 and 1
        rep.ef = rep.ef && matmul(xs(3, 0, a), ys(3, 1, c)) == matmul(ys(3, 1, c), xs(3, 0, a)) &&
                 matmul(xs(3, 1, a), ys(3, 0, c)) == matmul(ys(3, 0, c), xs(3, 1, a));
        rep.ek2 = rep.ek2 && matmul(chis(3, 0, b), xs(3, 1, a)) == matmul(xs(3, 1, a / b), chis(3, 0, b));
        rep.r121 = rep.r121 && prod({xs(3, 0, a), xs(3, 1, b), xs(3, 0, c)}) ==
                                   prod({xs(3, 1, b * c / (a + c)), xs(3, 0, a + c), xs(3, 1, a * b / (a + c))});
        // Sp(4): x_s(a) x_l(b) x_s(c) x_l(d) = x_l(d') x_s(c') x_l(b') x_s(a')
        Quad p = lusztig_phi({a, b, c, d});
        rep.sp4 = rep.sp4 && prod({sp4_x(false, a), sp4_x(true, b), sp4_x(false, c), sp4_x(true, d)}) ==
                                 prod({sp4_x(true, p[3]), sp4_x(false, p[2]), sp4_x(true, p[1]), sp4_x(false, p[0])});
        // G2 one-parameter subgroups, unipotent upper triangular
        for (int node : {1, 2}) {
            RMatrix m = g2_x(node, a);
            rep.g2 = rep.g2 && matmul(m, g2_x(node, b)) == g2_x(node, a + b) && g2_x(node, 0) == ident(7);
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j <= i; ++j) rep.g2 = rep.g2 && m[i][j] == Rational(i == j ? 1 : 0);
        }
    }
    return rep;
}

}  // namespace posrep
