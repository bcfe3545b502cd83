#pragma once
#include <string>
#include <utility>
#include <vector>

#include "posrep/rational.hpp"

namespace posrep {

// e^{pi i (r + s b^2 + t b_s^{-2})}, r taken mod 2
struct Phase {
    Rational r, s, t;
    Phase() = default;
    Phase(Rational r_, Rational s_, Rational t_);
    Phase operator*(const Phase& o) const { return Phase(r + o.r, s + o.s, t + o.t); }
    Phase inverse() const { return Phase(-r, -s, -t); }
    friend bool operator==(const Phase&, const Phase&) = default;
    friend auto operator<=>(const Phase&, const Phase&) = default;
};

class Scalar {
public:
    using Term = std::pair<Phase, std::int64_t>;

    Scalar() = default;
    static Scalar one() { return monomial(Phase{}); }
    static Scalar monomial(const Phase& p, std::int64_t c = 1);
    static Scalar integer(std::int64_t c) { return monomial(Phase{}, c); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o) { return *this += -o; }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar times_phase(const Phase& p) const;
    // q <-> q~ exchange of the s and t slots
    Scalar swap_slots() const;
    // p -> p^{-1} on every phase (bar involution)
    Scalar bar() const;

    friend bool operator==(const Scalar&, const Scalar&) = default;
    std::size_t hash() const;
    std::string str() const;

private:
    void normalize();
    std::vector<Term> terms_;  // sorted by phase, nonzero coefficients
};

// q^s q~^t
Scalar q_power(const Rational& s, const Rational& t = Rational(0));
// [n] at q^{qdeg}: sum_{j<n} q^{(n-1-2j) qdeg}
Scalar q_integer(int n, const Rational& qdeg);
Scalar q_factorial(int n, const Rational& qdeg);
// symmetric q-binomial at q^{qdeg}
Scalar q_binomial(int n, int k, const Rational& qdeg);
// same family in the q~ slot
Scalar qt_integer(int n, const Rational& qdeg);

}  // namespace posrep
