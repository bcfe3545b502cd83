#pragma once
#include <string>
#include <vector>

#include "posrep/rewrite.hpp"

namespace posrep {

Matrix transpose(const Matrix& a);

// generators living in the b^{-1} slots of the original table
struct TildeSet {
    std::vector<Expr> e, f, K, Kinv;
    RelationData data;  // transposed Cartan, q~_i
};
Phase q_tilde(const RootDatum& d, int i);

// defined by substitution: the dual-type presentation on the node-mapped word, starred back
TildeSet tilde_generators(const Presentation& P);
RelationReport check_langlands_dual(const Presentation& P, const CheckOptions& opt = {});

// x^{1/b_i^2} of each monomial separately (cp_j -> cm_j = cp_j k_i / k_j)
Expr monomial_power(const Expr& x, int ki);
// chain / squared-chain power; throws UnsupportedError outside those patterns
Expr transcendental_power(const Expr& x, int ki);

struct ConsistencyEntry {
    std::string name;
    bool supported = false;
    bool equal = false;
    std::string note;
};
std::vector<ConsistencyEntry> check_transcendental_consistency(const Presentation& P, bool with_e = true);

// B2: power of e_1 on 1212 against the starred e_2 of 2121 under (t,u,v,w) <-> (w,v,u,t)
bool b2_power_matches_relabelled();

struct ModifiedPresentation {
    std::vector<int> n;
    std::vector<Phase> qq, qqt;  // frak q_i and its tilde
    std::vector<Expr> E, F, K, Et, Ft, Kt;
};
ModifiedPresentation build_modified(const Presentation& P);
ModifiedPresentation build_modified(const Presentation& P, const TildeSet& t);
RelationReport check_modular_double(const Presentation& P, const ModifiedPresentation& M, int jobs = 0);

// columns b_k with A b_k = e_k
std::vector<std::vector<Rational>> commutant_weights(const Matrix& a);
RelationReport check_commutant(const Presentation& P, const ModifiedPresentation& M);

struct ToriReport {
    int s = 0, l = 0;
    bool integral = true;
    std::vector<std::string> plan;
    std::vector<std::string> offenders;
    std::size_t monomials = 0;
};
ToriReport tori_embedding(const Presentation& P, const ModifiedPresentation& M);

}  // namespace posrep
