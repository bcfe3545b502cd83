#pragma once
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posrep/qtorus.hpp"
#include "posrep/rootdata.hpp"

namespace posrep {

struct Presentation {
    RootDatum datum;
    Word word;
    TablePtr T;
    std::vector<Expr> e, f, K, Kinv;  // node i at index i-1

    int rank() const { return datum.rank(); }
    std::string var(int j) const { return "v" + std::to_string(j); }  // 1-based
    std::string lam(int i) const { return "l" + std::to_string(i); }
    // 1-based index j with u_i^k = v_j (k-th occurrence of i counted from the right); 0 if absent
    int v_index(int i, int k) const;
    Phase q_phase(int i) const { return Phase(0, datum.q_exponent(i), 0); }
};

TablePtr make_table(const RootDatum& d, const Word& w);
// f, K, K^{-1} filled in, e left empty
Presentation skeleton(const RootDatum& d, const Word& w);
Presentation make_presentation(const RootDatum& d, const Word& w);
Presentation make_presentation(const std::string& type, const std::string& word);

Expr build_f(const Presentation& P, int i);
Expr build_K(const Presentation& P, int i, int sign = 1);
// braid pullback; word must be a reduced word of w0
Expr build_e(const RootDatum& d, const Word& w, int i);
// closed forms for the canonical word
Expr preset_e(const RootDatum& d, int i);
bool has_preset(const RootDatum& d);
// G2: e_i on a word not ending in i (the 6- and 13-term forms)
Expr g2_long_e(const Presentation& P, int i);
// closed-form term list: coefficient tag ("1", "2s", "3s", "2q"), position and momentum sums
struct TermSpec {
    std::string coef, pos, mom;
};
// atoms: u_i^k, p_i^k, v<j>, p<j>, P_n, P_n(atom); `partial` holds the P_n sums
Expr parse_terms(const Presentation& P, const std::vector<TermSpec>& terms,
                 const std::vector<std::string>& partial = {});
std::vector<TermSpec> preset_terms(const RootDatum& d, int i);

// a printed closed form next to its corrected reading
struct TypoCase {
    std::string name, type;
    int node;
    std::vector<TermSpec> raw, fixed;
    std::vector<std::string> raw_partial, fixed_partial;
    std::string note;
    Expr build(bool corrected) const;
};
std::vector<TypoCase> typo_cases();

struct RelationEntry {
    std::string name;  // e.g. "EF(1,2)"
    bool holds = true;
    std::size_t residual_terms = 0;
    std::string residual;  // rendered, truncated
    double seconds = 0;
    std::size_t monomials = 0;  // largest intermediate expression size
};

struct RelationReport {
    std::vector<RelationEntry> entries;
    bool all_hold() const;
    std::size_t failures() const;
};

struct CheckOptions {
    bool serre = true;
    bool ef = true;
    bool k = true;
    int jobs = 0;  // 0: hardware concurrency
    // restrict Serre checks to these ordered pairs when non-empty
    std::vector<std::pair<int, int>> serre_pairs;
};

// rescaled relations; cartan and q phases may be overridden (dual checks)
RelationReport check_relations(const Presentation& P, const CheckOptions& opt = {});
struct RelationData {
    Matrix cartan;
    std::vector<Phase> q;  // q_i
};
RelationReport check_relations(const std::vector<Expr>& e, const std::vector<Expr>& f, const std::vector<Expr>& K,
                               const std::vector<Expr>& Kinv, const RelationData& data, const CheckOptions& opt = {});

// runs tasks on up to `jobs` threads (0: hardware concurrency); rethrows the first error
void run_parallel(std::vector<std::function<void()>>& tasks, int jobs);

// the identity used for the diagonal relation: e_i f_i - f_i e_i = (q_i - q_i^{-1})(K_i^{-1} - K_i)
Scalar diagonal_constant(const Phase& qi);

struct QseCase {
    std::vector<int> a;  // a_{m n}
    std::vector<int> b;  // b_n
    bool vanishes;
};
std::vector<QseCase> qse_identity_check();
// with one [2+b_1] factor replaced by [3+b_1]
bool qse_perturbed_vanishes();

}  // namespace posrep
