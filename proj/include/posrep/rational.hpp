#pragma once
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace posrep {

// Exact rational on checked 64-bit integers; overflow throws.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : n_(n), d_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return n_; }
    std::int64_t den() const { return d_; }
    bool is_zero() const { return n_ == 0; }
    bool is_integer() const { return d_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // floor division helpers
    std::int64_t floor() const;
    Rational mod(std::int64_t m) const;  // value in [0, m)
    double to_double() const { return double(n_) / double(d_); }

    std::string str() const;  // "n" or "n/d"
    static Rational parse(const std::string& s);

private:
    std::int64_t n_ = 0, d_ = 1;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

}  // namespace posrep

template <>
struct std::hash<posrep::Rational> {
    std::size_t operator()(const posrep::Rational& r) const noexcept {
        return std::hash<std::int64_t>()(r.num()) * 1000003u ^ std::hash<std::int64_t>()(r.den());
    }
};
