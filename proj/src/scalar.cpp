#include "posrep/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace posrep {

Phase::Phase(Rational r_, Rational s_, Rational t_) : r(r_.mod(2)), s(s_), t(t_) {}

Scalar Scalar::monomial(const Phase& p, std::int64_t c) {
    Scalar out;
    if (c != 0) out.terms_.push_back({p, c});
    return out;
}

bool Scalar::is_one() const {
    return terms_.size() == 1 && terms_[0].second == 1 && terms_[0].first == Phase{};
}

void Scalar::normalize() {
    // e^{i pi (r+1)} = -e^{i pi r}: keep r in [0,1)
    for (auto& t : terms_)
        if (t.first.r >= Rational(1)) {
            t.first.r -= 1;
            t.second = -t.second;
        }
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) {
            if (__builtin_add_overflow(out.back().second, t.second, &out.back().second))
                throw std::overflow_error("scalar overflow");
        } else {
            out.push_back(t);
        }
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

Scalar Scalar::operator-() const {
    Scalar o = *this;
    for (auto& t : o.terms_) t.second = -t.second;
    return o;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.terms_.empty()) return *this;
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (auto& [pa, ca] : a.terms_)
        for (auto& [pb, cb] : b.terms_) {
            std::int64_t c;
            if (__builtin_mul_overflow(ca, cb, &c)) throw std::overflow_error("scalar overflow");
            out.terms_.push_back({pa * pb, c});
        }
    out.normalize();
    return out;
}

Scalar Scalar::times_phase(const Phase& p) const {
    Scalar o = *this;
    for (auto& t : o.terms_) t.first = t.first * p;
    o.normalize();
    return o;
}

Scalar Scalar::swap_slots() const {
    Scalar o = *this;
    for (auto& t : o.terms_) t.first = Phase(t.first.r, t.first.t, t.first.s);
    o.normalize();
    return o;
}

Scalar Scalar::bar() const {
    Scalar o = *this;
    for (auto& t : o.terms_) t.first = t.first.inverse();
    o.normalize();
    return o;
}

std::size_t Scalar::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    std::hash<Rational> hr;
    for (auto& [p, c] : terms_) {
        h ^= hr(p.r) + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= hr(p.s) * 31 + hr(p.t) * 131 + std::size_t(c) * 7919;
    }
    return h;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        std::int64_t a = c < 0 ? -c : c;
        std::vector<std::string> parts;
        if (!p.r.is_zero()) parts.push_back("e^{iπ·" + p.r.str() + "}");
        if (!p.s.is_zero()) parts.push_back("q^{" + p.s.str() + "}");
        if (!p.t.is_zero()) parts.push_back("q̃^{" + p.t.str() + "}");
        if (a != 1 || parts.empty()) parts.insert(parts.begin(), std::to_string(a));
        for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "·" : "") << parts[i];
    }
    return os.str();
}

Scalar q_power(const Rational& s, const Rational& t) { return Scalar::monomial(Phase(0, s, t)); }

Scalar q_integer(int n, const Rational& qdeg) {
    Scalar out;
    for (int j = 0; j < n; ++j) out += q_power(Rational(n - 1 - 2 * j) * qdeg);
    return out;
}

Scalar qt_integer(int n, const Rational& qdeg) { return q_integer(n, qdeg).swap_slots(); }

Scalar q_factorial(int n, const Rational& qdeg) {
    Scalar out = Scalar::one();
    for (int j = 2; j <= n; ++j) out *= q_integer(j, qdeg);
    return out;
}

Scalar q_binomial(int n, int k, const Rational& qdeg) {
    if (k < 0 || k > n) return Scalar{};
    if (k == 0 || k == n) return Scalar::one();
    // [n,k] = q^{-k}[n-1,k] + q^{n-k}[n-1,k-1]
    return q_power(Rational(-k) * qdeg) * q_binomial(n - 1, k, qdeg) +
           q_power(Rational(n - k) * qdeg) * q_binomial(n - 1, k - 1, qdeg);
}

}  // namespace posrep
