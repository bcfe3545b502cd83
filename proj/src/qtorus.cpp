#include "posrep/qtorus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace posrep {

int SymbolTable::add_position(const std::string& name, int k) {
    if (by_name_.count(name)) throw std::invalid_argument("duplicate symbol " + name);
    int x = int(syms_.size());
    syms_.push_back({name, SymKind::Position, k, x + 1});
    syms_.push_back({"p_" + name, SymKind::Momentum, k, x});
    by_name_[name] = x;
    by_name_["p_" + name] = x + 1;
    return x;
}

int SymbolTable::add_parameter(const std::string& name, int k) {
    if (by_name_.count(name)) throw std::invalid_argument("duplicate symbol " + name);
    int x = int(syms_.size());
    syms_.push_back({name, SymKind::Parameter, k, -1});
    by_name_[name] = x;
    return x;
}

int SymbolTable::index(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw std::invalid_argument("unknown symbol " + name);
    return it->second;
}

std::vector<std::string> SymbolTable::positions() const {
    std::vector<std::string> out;
    for (auto& s : syms_)
        if (s.kind == SymKind::Position) out.push_back(s.name);
    return out;
}

std::shared_ptr<SymbolTable> SymbolTable::dual() const {
    auto d = std::make_shared<SymbolTable>(*this);
    for (auto& s : d->syms_) s.k = kmax_ / s.k;
    return d;
}

bool SymbolTable::same_as(const SymbolTable& o) const {
    if (kmax_ != o.kmax_ || syms_.size() != o.syms_.size()) return false;
    for (std::size_t i = 0; i < syms_.size(); ++i)
        if (syms_[i].name != o.syms_[i].name || syms_[i].k != o.syms_[i].k || syms_[i].kind != o.syms_[i].kind)
            return false;
    return true;
}

ExpVec::ExpVec(std::vector<ExpEntry> e) {
    std::sort(e.begin(), e.end(), [](const ExpEntry& a, const ExpEntry& b) { return a.sym < b.sym; });
    for (auto& x : e) {
        if (!e_.empty() && e_.back().sym == x.sym) {
            e_.back().cp += x.cp;
            e_.back().cm += x.cm;
        } else {
            e_.push_back(x);
        }
    }
    std::erase_if(e_, [](const ExpEntry& x) { return x.cp.is_zero() && x.cm.is_zero(); });
}

ExpEntry ExpVec::get(int sym) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), sym, [](const ExpEntry& a, int s) { return a.sym < s; });
    if (it != e_.end() && it->sym == sym) return *it;
    return {sym, 0, 0};
}

ExpVec ExpVec::operator+(const ExpVec& o) const {
    ExpVec r;
    r.e_.reserve(e_.size() + o.e_.size());
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
        if (b == o.e_.end() || (a != e_.end() && a->sym < b->sym)) {
            r.e_.push_back(*a++);
        } else if (a == e_.end() || b->sym < a->sym) {
            r.e_.push_back(*b++);
        } else {
            ExpEntry x{a->sym, a->cp + b->cp, a->cm + b->cm};
            if (!x.cp.is_zero() || !x.cm.is_zero()) r.e_.push_back(x);
            ++a;
            ++b;
        }
    }
    return r;
}

ExpVec ExpVec::operator-() const {
    ExpVec r = *this;
    for (auto& x : r.e_) {
        x.cp = -x.cp;
        x.cm = -x.cm;
    }
    return r;
}

ExpVec ExpVec::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    ExpVec r = *this;
    for (auto& x : r.e_) {
        x.cp *= c;
        x.cm *= c;
    }
    return r;
}

ExpVec ExpVec::swapped() const {
    ExpVec r = *this;
    for (auto& x : r.e_) std::swap(x.cp, x.cm);
    return r;
}

bool ExpVec::has_minus() const {
    return std::any_of(e_.begin(), e_.end(), [](const ExpEntry& x) { return !x.cm.is_zero(); });
}
bool ExpVec::has_plus() const {
    return std::any_of(e_.begin(), e_.end(), [](const ExpEntry& x) { return !x.cp.is_zero(); });
}

std::size_t ExpVec::hash() const {
    std::size_t h = 1469598103934665603ull;
    std::hash<Rational> hr;
    for (auto& x : e_) {
        h = (h ^ std::size_t(x.sym)) * 1099511628211ull;
        h = (h ^ hr(x.cp)) * 1099511628211ull;
        h = (h ^ hr(x.cm)) * 1099511628211ull;
    }
    return h;
}

Triple pairing(const SymbolTable& T, const ExpVec& v, const ExpVec& w) {
    Rational r, s, t;
    for (auto& a : v.entries()) {
        const Symbol& sa = T[a.sym];
        if (sa.partner < 0) continue;
        ExpEntry b = w.get(sa.partner);
        if (b.cp.is_zero() && b.cm.is_zero()) continue;
        Rational sign = sa.kind == SymKind::Position ? Rational(1) : Rational(-1);
        s += sign * a.cp * b.cp / Rational(sa.k);
        t += sign * a.cm * b.cm * Rational(sa.k, T.kmax());
        r += sign * (a.cp * b.cm + a.cm * b.cp);
    }
    return {r, s, t};
}

Expr Expr::one(TablePtr T) { return monomial(std::move(T), ExpVec{}); }

Expr Expr::monomial(TablePtr T, const ExpVec& v, const Scalar& c) {
    Expr e(std::move(T));
    e.add(v, c);
    return e;
}

void Expr::add(const ExpVec& v, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = m_.find(v);
    if (it == m_.end()) {
        m_.emplace(v, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) m_.erase(it);
}

namespace {
const TablePtr& pick(const Expr& a, const Expr& b) {
    if (!a.table()) return b.table();
    if (b.table() && a.table() != b.table() && !a.table()->same_as(*b.table()))
        throw std::invalid_argument("mismatched symbol tables");
    return a.table();
}
}  // namespace

Expr Expr::operator-() const {
    Expr r = *this;
    for (auto& [k, v] : r.m_) v = -v;
    return r;
}

Expr& Expr::operator+=(const Expr& o) {
    T_ = pick(*this, o);
    for (auto& [k, v] : o.m_) add(k, v);
    return *this;
}

Expr operator*(const Expr& a, const Expr& b) {
    Expr r(pick(a, b));
    if (!r.T_) return r;
    const SymbolTable& T = *r.T_;
    r.m_.reserve(a.m_.size() * b.m_.size());
    for (auto& [ka, va] : a.m_)
        for (auto& [kb, vb] : b.m_) r.add(ka + kb, (va * vb).times_phase(quarter(pairing(T, ka, kb))));
    return r;
}

Expr operator*(const Expr& a, const Scalar& c) {
    Expr r(a.T_);
    for (auto& [k, v] : a.m_) r.add(k, v * c);
    return r;
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.m_.size() != b.m_.size()) return false;
    for (auto& [k, v] : a.m_) {
        auto it = b.m_.find(k);
        if (it == b.m_.end() || !(it->second == v)) return false;
    }
    return true;
}

std::pair<ExpVec, Scalar> Expr::single() const {
    if (m_.size() != 1) throw std::logic_error("expression is not a single monomial");
    return *m_.begin();
}

std::vector<std::pair<ExpVec, Scalar>> Expr::sorted() const {
    std::vector<std::pair<ExpVec, Scalar>> v(m_.begin(), m_.end());
    std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.first < y.first; });
    return v;
}

std::string Expr::str() const {
    if (m_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : sorted()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ")E[";
        bool f2 = true;
        for (auto& e : k.entries()) {
            if (!f2) os << ",";
            f2 = false;
            os << (*T_)[e.sym].name << ":" << e.cp.str();
            if (!e.cm.is_zero()) os << "|" << e.cm.str();
        }
        os << "]";
    }
    return os.str();
}

Expr Expr::with_table(TablePtr T) const {
    Expr r = *this;
    r.T_ = std::move(T);
    return r;
}

Expr commutator(const Expr& a, const Expr& b) { return a * b - b * a; }

Expr q_commutator(const Expr& a, const Expr& b, const Scalar& qq) { return a * b - (b * a) * qq.bar(); }

Expr power(const Expr& a, int n) {
    Expr r = Expr::one(a.table());
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

Scalar phase_integer(int n, const Phase& qi) {
    Scalar out;
    for (int j = 0; j < n; ++j) {
        Rational e(n - 1 - 2 * j);
        out += Scalar::monomial(Phase(qi.r * e, qi.s * e, qi.t * e));
    }
    return out;
}

Scalar phase_binomial(int n, int k, const Phase& qi) {
    if (k < 0 || k > n) return {};
    if (k == 0 || k == n) return Scalar::one();
    auto pw = [&](int e) { return Scalar::monomial(Phase(qi.r * e, qi.s * e, qi.t * e)); };
    return pw(-k) * phase_binomial(n - 1, k, qi) + pw(n - k) * phase_binomial(n - 1, k - 1, qi);
}

Expr serre_sum(const Expr& Ei, const Expr& Ej, int a, const Phase& qi, std::size_t* peak) {
    int N = 1 - a;
    std::vector<Expr> pw{Expr::one(Ei.table())};
    for (int n = 1; n <= N; ++n) pw.push_back(pw.back() * Ei);
    Expr out(Ei.table());
    for (int n = 0; n <= N; ++n) {
        Scalar c = phase_binomial(N, n, qi);
        if (n % 2) c = -c;
        Expr t = pw[N - n] * Ej * pw[n];
        if (peak) *peak = std::max({*peak, t.size(), out.size()});
        out += t * c;
    }
    return out;
}

ExpVec star(const ExpVec& v) { return v.swapped(); }

Expr substitute_b_inverse(const Expr& x, const TablePtr& dual) {
    Expr r(dual);
    for (auto& [k, v] : x.terms()) r.add(k.swapped(), v.swap_slots());
    return r;
}

ExpVec make_exp(const SymbolTable& T, const std::map<std::string, Rational>& cplus,
                const std::map<std::string, Rational>& cminus) {
    std::vector<ExpEntry> e;
    for (auto& [n, c] : cplus) e.push_back({T.index(n), c, 0});
    for (auto& [n, c] : cminus) e.push_back({T.index(n), 0, c});
    return ExpVec(std::move(e));
}

Expr bracket(const TablePtr& T, const std::map<std::string, Rational>& pos,
             const std::map<std::string, Rational>& mom, const Scalar& c) {
    std::vector<ExpEntry> a, b;
    for (auto& [n, x] : mom) {
        int p = T->index("p_" + n);
        a.push_back({p, x * 2, 0});
        b.push_back({p, x * 2, 0});
    }
    for (auto& [n, x] : pos) {
        int s = T->index(n);
        a.push_back({s, x, 0});
        b.push_back({s, -x, 0});
    }
    Expr r(T);
    r.add(ExpVec(a), c);
    r.add(ExpVec(b), c);
    return r;
}

Expr substitute(const Expr& x, const TablePtr& target, const SubstMap& m) {
    const SymbolTable& S = *x.table();
    Expr r(target);
    for (auto& [k, v] : x.terms()) {
        std::vector<ExpEntry> out;
        for (auto& e : k.entries()) {
            auto it = m.find(e.sym);
            if (it == m.end()) {
                int j = target->index(S[e.sym].name);
                Rational f((*target)[j].k == S[e.sym].k ? 1 : 0);
                if (f.is_zero()) {
                    // unmapped symbol whose scale changes: keep sigma-content
                    out.push_back({j, e.cp, e.cm * Rational(S[e.sym].k, (*target)[j].k)});
                } else {
                    out.push_back({j, e.cp, e.cm});
                }
                continue;
            }
            for (auto& [j, f] : it->second)
                out.push_back({j, e.cp * f, e.cm * f * Rational(S[e.sym].k, (*target)[j].k)});
        }
        r.add(ExpVec(std::move(out)), v);
    }
    return r;
}

}  // namespace posrep
