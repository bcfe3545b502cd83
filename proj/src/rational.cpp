#include "posrep/rational.hpp"

namespace posrep {

namespace {
std::int64_t chk_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
}
std::int64_t chk_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
}
}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    std::int64_t g = std::gcd(n, d);
    if (g == 0) g = 1;
    n_ = n / g;
    d_ = d / g;
}

Rational Rational::operator-() const { return Rational(chk_mul(n_, -1), d_); }

Rational& Rational::operator+=(const Rational& o) {
    if (d_ == o.d_) return *this = Rational(chk_add(n_, o.n_), d_);
    std::int64_t g = std::gcd(d_, o.d_);
    std::int64_t a = chk_mul(n_, o.d_ / g), b = chk_mul(o.n_, d_ / g);
    return *this = Rational(chk_add(a, b), chk_mul(d_ / g, o.d_));
}
Rational& Rational::operator-=(const Rational& o) { return *this += -o; }
Rational& Rational::operator*=(const Rational& o) {
    std::int64_t g1 = std::gcd(n_, o.d_), g2 = std::gcd(o.n_, d_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return *this = Rational(chk_mul(n_ / g1, o.n_ / g2), chk_mul(d_ / g2, o.d_ / g1));
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.n_ == 0) throw std::domain_error("division by zero");
    return *this *= Rational(o.d_, o.n_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // __int128 avoids overflow in cross multiplication
    __int128 l = (__int128)a.n_ * b.d_, r = (__int128)b.n_ * a.d_;
    return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::int64_t Rational::floor() const {
    std::int64_t q = n_ / d_;
    if (n_ % d_ != 0 && n_ < 0) --q;
    return q;
}
Rational Rational::mod(std::int64_t m) const {
    Rational q = *this / Rational(m);
    return *this - Rational(m) * Rational(q.floor());
}

std::string Rational::str() const {
    return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
}
Rational Rational::parse(const std::string& s) {
    auto p = s.find('/');
    try {
        if (p == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, p)), std::stoll(s.substr(p + 1)));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad rational: " + s);
    }
}

}  // namespace posrep
