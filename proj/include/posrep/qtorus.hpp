#pragma once
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "posrep/rational.hpp"
#include "posrep/scalar.hpp"

namespace posrep {

enum class SymKind { Position, Momentum, Parameter };

struct Symbol {
    std::string name;
    SymKind kind;
    int k = 1;         // scale divisor
    int partner = -1;  // conjugate symbol index, -1 for parameters
};

// Positions x_j and their momenta p_j, plus parameters; scales k in {1,2,3}.
class SymbolTable {
public:
    SymbolTable(int kmax) : kmax_(kmax) {}
    // adds x and p_x, returns index of x
    int add_position(const std::string& name, int k);
    int add_parameter(const std::string& name, int k);
    int index(const std::string& name) const;
    bool has(const std::string& name) const { return by_name_.count(name) > 0; }
    const Symbol& operator[](int i) const { return syms_[i]; }
    int size() const { return int(syms_.size()); }
    int kmax() const { return kmax_; }
    std::vector<std::string> positions() const;
    // star table: same names, k -> kmax/k
    std::shared_ptr<SymbolTable> dual() const;
    bool same_as(const SymbolTable& o) const;

private:
    int kmax_;
    std::vector<Symbol> syms_;
    std::map<std::string, int> by_name_;
};
using TablePtr = std::shared_ptr<const SymbolTable>;

struct ExpEntry {
    int sym;
    Rational cp, cm;  // coefficients of sigma and sigma^{-1}
    friend bool operator==(const ExpEntry&, const ExpEntry&) = default;
    friend auto operator<=>(const ExpEntry&, const ExpEntry&) = default;
};

// exponent of exp(pi sum (cp sigma + cm sigma^{-1}) x), sigma = b/sqrt(k)
class ExpVec {
public:
    ExpVec() = default;
    explicit ExpVec(std::vector<ExpEntry> e);
    const std::vector<ExpEntry>& entries() const { return e_; }
    bool empty() const { return e_.empty(); }
    ExpEntry get(int sym) const;
    ExpVec operator+(const ExpVec& o) const;
    ExpVec operator-() const;
    ExpVec operator-(const ExpVec& o) const { return *this + (-o); }
    ExpVec scaled(const Rational& c) const;
    ExpVec swapped() const;  // cp <-> cm
    bool has_minus() const;
    bool has_plus() const;
    friend bool operator==(const ExpVec&, const ExpVec&) = default;
    friend auto operator<=>(const ExpVec&, const ExpVec&) = default;
    std::size_t hash() const;

private:
    std::vector<ExpEntry> e_;  // sorted by sym, no zero entries
};

struct ExpVecHash {
    std::size_t operator()(const ExpVec& v) const { return v.hash(); }
};

// raw (r, s, t); E[v]E[w] = chi(P/4) E[v+w]
struct Triple {
    Rational r, s, t;
    friend bool operator==(const Triple&, const Triple&) = default;
};
Triple pairing(const SymbolTable& T, const ExpVec& v, const ExpVec& w);
inline Phase scaled_phase(const Triple& p, const Rational& c) { return Phase(p.r * c, p.s * c, p.t * c); }
inline Phase quarter(const Triple& p) { return scaled_phase(p, Rational(1, 4)); }

class Expr {
public:
    using Map = std::unordered_map<ExpVec, Scalar, ExpVecHash>;
    Expr() = default;
    explicit Expr(TablePtr T) : T_(std::move(T)) {}
    static Expr one(TablePtr T);
    static Expr monomial(TablePtr T, const ExpVec& v, const Scalar& c = Scalar::one());

    const TablePtr& table() const { return T_; }
    const Map& terms() const { return m_; }
    std::size_t size() const { return m_.size(); }
    bool is_zero() const { return m_.empty(); }
    void add(const ExpVec& v, const Scalar& c);

    Expr operator-() const;
    Expr& operator+=(const Expr& o);
    Expr& operator-=(const Expr& o) { return *this += -o; }
    friend Expr operator+(Expr a, const Expr& b) { return a += b; }
    friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Scalar& c);
    friend Expr operator*(const Scalar& c, const Expr& a) { return a * c; }
    friend bool operator==(const Expr& a, const Expr& b);

    // single term access; throws unless size()==1
    std::pair<ExpVec, Scalar> single() const;
    std::vector<std::pair<ExpVec, Scalar>> sorted() const;
    std::string str() const;
    Expr with_table(TablePtr T) const;  // reinterpret under a compatible table

private:
    TablePtr T_;
    Map m_;
};

Expr commutator(const Expr& a, const Expr& b);
// ab - qq^{-1} ba
Expr q_commutator(const Expr& a, const Expr& b, const Scalar& qq);
Expr power(const Expr& a, int n);
// sum (-1)^n [1-a choose n]_{q_i} Ei^{1-a-n} Ej Ei^n; qi is the phase of q_i
// peak, if given, receives the largest intermediate size
Expr serre_sum(const Expr& Ei, const Expr& Ej, int a, const Phase& qi, std::size_t* peak = nullptr);
// [n] and binomials at an arbitrary phase
Scalar phase_integer(int n, const Phase& qi);
Scalar phase_binomial(int n, int k, const Phase& qi);

// (.)_*: cp <-> cm, (r,s,t) -> (r,t,s); result lives on the dual table
Expr substitute_b_inverse(const Expr& x, const TablePtr& dual);
ExpVec star(const ExpVec& v);

// builders by symbol name; momentum of x is written "p_x"
ExpVec make_exp(const SymbolTable& T, const std::map<std::string, Rational>& cplus,
                const std::map<std::string, Rational>& cminus = {});
// [pos]e(mom) = E[pos + 2 mom] + E[-pos + 2 mom]; mom keyed by position names
Expr bracket(const TablePtr& T, const std::map<std::string, Rational>& pos,
             const std::map<std::string, Rational>& mom, const Scalar& c = Scalar::one());

// linear relabelling: old symbol -> list of (new symbol, factor on cp); cm gets factor*k_old/k_new
using SubstMap = std::map<int, std::vector<std::pair<int, Rational>>>;
Expr substitute(const Expr& x, const TablePtr& target, const SubstMap& m);

}  // namespace posrep
