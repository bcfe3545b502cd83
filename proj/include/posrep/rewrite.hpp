#pragma once
#include <array>
#include <vector>

#include "posrep/posrep.hpp"

namespace posrep {

// Thrown when a conjugation or power falls outside the supported patterns.
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exchange index m with X Y = q_X^{2m} Y X, q_X = q^{1/kX}
int exchange_index(const SymbolTable& T, const ExpVec& x, int kX, const ExpVec& y);

// g(X)^* Y g(X); inverse gives g(X) Y g(X)^*
Expr ad_gstar(const Expr& Y, const ExpVec& x, int kX, bool inverse = false);
inline Expr ad_g(const Expr& Y, const ExpVec& x, int kX) { return ad_gstar(Y, x, kX, true); }
// G Y G^{-1} for G = g(X+)/g(X-); inverse gives G^{-1} Y G
Expr ad_ratio(const Expr& Y, const ExpVec& xp, const ExpVec& xm, int kX, bool inverse = false);

// exact right division W = Z (1 + c X); throws UnsupportedError if not polynomial
Expr divide_factor(const Expr& W, const ExpVec& x, const Scalar& c);

// X+ and X- for [pos]e(mom)
std::pair<ExpVec, ExpVec> ratio_args(const SymbolTable& T, const std::map<std::string, Rational>& pos,
                                     const std::map<std::string, Rational>& mom);

// map an expression of the source presentation across the braid move at pos
Expr move_map(const Presentation& src, const Presentation& dst, int pos, const Expr& X);

// B2 change of word 1212 -> 2121 (and back)
Presentation phi_B2(const Presentation& P);

// the B2 variable substitution T in "old = A new" form
const std::array<std::array<int, 4>, 4>& b2_T_matrix();

using Quad = std::array<Rational, 4>;
Quad lusztig_phi(const Quad& x);

struct PinningReport {
    bool ek = true, ef = true, ekf = true, ek2 = true, r121 = true, sp4 = true, g2 = true;
    bool all() const { return ek && ef && ekf && ek2 && r121 && sp4 && g2; }
};
// exact matrix identities at `samples` random rational points
PinningReport pinning_check(int samples, unsigned seed = 1);

using RMatrix = std::vector<std::vector<Rational>>;
RMatrix sp4_x(bool long_root, const Rational& t);
RMatrix g2_x(int node, const Rational& t);
RMatrix matmul(const RMatrix& a, const RMatrix& b);

}  // namespace posrep
