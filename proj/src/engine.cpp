#include "posrep/rewrite.hpp"

namespace posrep {

namespace {
Expr last_letter_e(const Presentation& P) {
    std::string v = P.var(int(P.word.size()));
    return bracket(P.T, {{v, 1}}, {{v, -1}});
}
}  // namespace

Expr build_e(const RootDatum& d, const Word& w, int i) {
    if (w.empty() || i < 1 || i > d.rank()) throw std::invalid_argument("bad node for build_e");
    if (w.back() == i) return last_letter_e(skeleton(d, w));
    if (d.tag.family == 'G') return g2_long_e(skeleton(d, w), i);
    BraidPath path = path_to_end(d.cartan, w, i);
    std::vector<Presentation> Ps;
    for (auto& word : path.words) Ps.push_back(skeleton(d, word));
    Expr e = last_letter_e(Ps.back());
    for (int k = int(path.positions.size()) - 1; k >= 0; --k) e = move_map(Ps[k + 1], Ps[k], path.positions[k], e);
    return e;
}

}  // namespace posrep
