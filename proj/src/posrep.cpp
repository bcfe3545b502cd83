#include "posrep/posrep.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <chrono>
#include <functional>
#include <thread>

namespace posrep {

int Presentation::v_index(int i, int k) const {
    int seen = 0;
    for (int j = int(word.size()) - 1; j >= 0; --j)
        if (word[j] == i && ++seen == k) return j + 1;
    return 0;
}

TablePtr make_table(const RootDatum& d, const Word& w) {
    auto T = std::make_shared<SymbolTable>(d.kmax);
    for (std::size_t j = 0; j < w.size(); ++j) T->add_position("v" + std::to_string(j + 1), d.k[w[j] - 1]);
    for (int i = 1; i <= d.rank(); ++i) T->add_parameter("l" + std::to_string(i), d.k[i - 1]);
    return T;
}

Expr build_f(const Presentation& P, int i) {
    Expr out(P.T);
    const Matrix& a = P.datum.cartan;
    for (std::size_t j = 0; j < P.word.size(); ++j) {
        if (P.word[j] != i) continue;
        std::map<std::string, Rational> pos{{P.lam(i), -2}, {P.var(j + 1), 1}};
        for (std::size_t jj = 0; jj < j; ++jj) pos[P.var(jj + 1)] += a[P.word[jj] - 1][i - 1];
        out += bracket(P.T, pos, {{P.var(j + 1), 1}});
    }
    return out;
}

Expr build_K(const Presentation& P, int i, int sign) {
    std::map<std::string, Rational> c{{P.lam(i), 2 * sign}};
    for (std::size_t j = 0; j < P.word.size(); ++j)
        c[P.var(j + 1)] += Rational(-sign * P.datum.cartan[P.word[j] - 1][i - 1]);
    return Expr::monomial(P.T, make_exp(*P.T, c));
}

Presentation skeleton(const RootDatum& d, const Word& w) {
    if (!is_longest_word(d.cartan, w))
        throw std::invalid_argument("not a reduced word of w0: " + word_str(w));
    Presentation P{d, w, make_table(d, w), {}, {}, {}, {}};
    for (int i = 1; i <= d.rank(); ++i) {
        P.e.push_back(Expr(P.T));
        P.f.push_back(build_f(P, i));
        P.K.push_back(build_K(P, i, 1));
        P.Kinv.push_back(build_K(P, i, -1));
    }
    return P;
}

Presentation make_presentation(const RootDatum& d, const Word& w) {
    Presentation P = skeleton(d, w);
    for (int i = 1; i <= d.rank(); ++i) P.e[i - 1] = build_e(d, w, i);
    return P;
}

Presentation make_presentation(const std::string& type, const std::string& word) {
    RootDatum d = root_datum(type);
    return make_presentation(d, word.empty() ? canonical_word(d.tag) : parse_word(word));
}

bool RelationReport::all_hold() const { return failures() == 0; }
std::size_t RelationReport::failures() const {
    std::size_t n = 0;
    for (auto& e : entries) n += !e.holds;
    return n;
}

Scalar diagonal_constant(const Phase& qi) {
    return Scalar::monomial(qi) - Scalar::monomial(qi.inverse());
}

void run_parallel(std::vector<std::function<void()>>& tasks, int jobs) {
    if (jobs <= 0) jobs = int(std::max(1u, std::thread::hardware_concurrency()));
    jobs = std::min<int>(jobs, int(tasks.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex mu;
    for (int t = 0; t < std::max(jobs, 1); ++t)
        pool.emplace_back([&] {
            for (std::size_t k; (k = next++) < tasks.size();) {
                try {
                    tasks[k]();
                } catch (...) {
                    std::lock_guard<std::mutex> g(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

namespace {

RelationEntry judge(const std::string& name, const Expr& residual, double secs, std::size_t mono) {
    RelationEntry r;
    r.name = name;
    r.holds = residual.is_zero();
    r.residual_terms = residual.size();
    r.seconds = secs;
    r.monomials = mono;
    if (!r.holds) {
        std::string s = residual.str();
        r.residual = s.size() > 400 ? s.substr(0, 400) + "..." : s;
    }
    return r;
}
}  // namespace

RelationReport check_relations(const std::vector<Expr>& e, const std::vector<Expr>& f, const std::vector<Expr>& K,
                               const std::vector<Expr>& Kinv, const RelationData& data, const CheckOptions& opt) {
    int n = int(data.cartan.size());
    std::vector<std::pair<std::string, std::function<std::pair<Expr, std::size_t>()>>> jobs;
    auto pw = [](const Phase& p, int a) { return Scalar::monomial(scaled_phase({p.r, p.s, p.t}, Rational(a))); };
    for (int i = 1; i <= n; ++i) {
        const Phase qi = data.q[i - 1];
        if (opt.k)
            jobs.push_back({"KK(" + std::to_string(i) + ")", [&, i] {
                                Expr one = Expr::one(K[i - 1].table());
                                return std::make_pair(K[i - 1] * Kinv[i - 1] - one, std::size_t(1));
                            }});
        for (int j = 1; j <= n; ++j) {
            int a = data.cartan[i - 1][j - 1];
            std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (opt.k) {
                jobs.push_back({"KE" + ij, [&, i, j, a, qi] {
                                    Expr r = K[i - 1] * e[j - 1] - (e[j - 1] * K[i - 1]) * pw(qi, a);
                                    return std::make_pair(r, e[j - 1].size());
                                }});
                jobs.push_back({"KF" + ij, [&, i, j, a, qi] {
                                    Expr r = K[i - 1] * f[j - 1] - (f[j - 1] * K[i - 1]) * pw(qi, -a);
                                    return std::make_pair(r, f[j - 1].size());
                                }});
            }
            if (opt.ef)
                jobs.push_back({"EF" + ij, [&, i, j, qi] {
                                    Expr ef = e[i - 1] * f[j - 1];
                                    std::size_t m = ef.size();
                                    Expr r = ef - f[j - 1] * e[i - 1];
                                    if (i == j) r -= (Kinv[i - 1] - K[i - 1]) * diagonal_constant(qi);
                                    return std::make_pair(r, m);
                                }});
            bool want = opt.serre && i != j && a != 0;
            if (want && !opt.serre_pairs.empty())
                want = std::find(opt.serre_pairs.begin(), opt.serre_pairs.end(), std::make_pair(i, j)) !=
                       opt.serre_pairs.end();
            if (want) {
                jobs.push_back({"SE" + ij, [&, i, j, a, qi] {
                                    std::size_t peak = 0;
                                    Expr r = serre_sum(e[i - 1], e[j - 1], a, qi, &peak);
                                    return std::make_pair(r, peak);
                                }});
                jobs.push_back({"SF" + ij, [&, i, j, a, qi] {
                                    std::size_t peak = 0;
                                    Expr r = serre_sum(f[i - 1], f[j - 1], a, qi, &peak);
                                    return std::make_pair(r, peak);
                                }});
            }
        }
    }
    RelationReport rep;
    rep.entries.resize(jobs.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t k = 0; k < jobs.size(); ++k)
        tasks.push_back([&, k] {
            auto t0 = std::chrono::steady_clock::now();
            auto [r, m] = jobs[k].second();
            double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            rep.entries[k] = judge(jobs[k].first, r, s, m);
        });
    run_parallel(tasks, opt.jobs);
    return rep;
}

RelationReport check_relations(const Presentation& P, const CheckOptions& opt) {
    RelationData d{P.datum.cartan, {}};
    for (int i = 1; i <= P.rank(); ++i) d.q.push_back(P.q_phase(i));
    return check_relations(P.e, P.f, P.K, P.Kinv, d, opt);
}

namespace {
Scalar qint_signed(int n) { return n >= 0 ? q_integer(n, 1) : -q_integer(-n, 1); }

Scalar qse_value(int a12, int a23, int a31, int b1, int b2, int b3, int first = 2) {
    auto Q = qint_signed;
    return Q(first + b1) * (Q(a12 + b2) * Q(a23 - a31 + b3) + Q(2 - a31 + b3) * Q(a12 - a23 + b2)) +
           Q(2 + b2) * (Q(a23 + b3) * Q(a31 - a12 + b1) + Q(2 - a12 + b1) * Q(a23 - a31 + b3)) +
           Q(2 + b3) * (Q(a31 + b1) * Q(a12 - a23 + b2) + Q(2 - a23 + b2) * Q(a31 - a12 + b1));
}

// assignments realised by term positions x_1..x_3 of F_i and y of F_j
std::vector<std::vector<int>> qse_assignments() {
    std::set<std::vector<int>> out;
    for (int x1 = 0; x1 < 4; ++x1)
        for (int x2 = 0; x2 < 4; ++x2)
            for (int x3 = 0; x3 < 4; ++x3)
                for (int y = 0; y < 4; ++y) {
                    int xs[3] = {2 * x1, 2 * x2, 2 * x3};
                    int yy = 2 * y + 1;
                    auto a = [&](int m, int n) { return xs[m] < xs[n] ? 2 : (xs[m] == xs[n] ? 1 : 0); };
                    std::vector<int> v{a(0, 1), a(1, 2), a(2, 0)};
                    for (int x : xs) v.push_back(yy < x ? -2 : 0);
                    out.insert(v);
                }
    return {out.begin(), out.end()};
}
}  // namespace

std::vector<QseCase> qse_identity_check() {
    std::vector<QseCase> out;
    for (auto& v : qse_assignments()) {
        bool z = qse_value(v[0], v[1], v[2], v[3], v[4], v[5]).is_zero();
        out.push_back({{v[0], v[1], v[2]}, {v[3], v[4], v[5]}, z});
    }
    return out;
}

bool qse_perturbed_vanishes() {
    for (auto& v : qse_assignments())
        if (!qse_value(v[0], v[1], v[2], v[3], v[4], v[5], 3).is_zero()) return false;
    return true;
}

}  // namespace posrep
