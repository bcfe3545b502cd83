#include "posrep/serialize.hpp"

#include <algorithm>

namespace posrep {

namespace {

const char* kind_name(SymKind k) {
    switch (k) {
        case SymKind::Position: return "position";
        case SymKind::Momentum: return "momentum";
        case SymKind::Parameter: return "parameter";
    }
    return "?";
}

Rational rat(const json& j, const char* key) {
    if (!j.contains(key)) return Rational(0);
    const json& v = j.at(key);
    if (!v.is_string()) throw SerializeError(std::string("field ") + key + " must be a rational string");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
        throw SerializeError(e.what());
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SerializeError(std::string("missing field ") + key);
    return j.at(key);
}

}  // namespace

json phase_json(const Phase& p) {
    json j = json::object();
    if (!p.r.is_zero()) j["r"] = p.r.str();
    if (!p.s.is_zero()) j["s"] = p.s.str();
    if (!p.t.is_zero()) j["t"] = p.t.str();
    return j;
}

json scalar_json(const Scalar& c) {
    json a = json::array();
    for (auto& [p, n] : c.terms()) {
        json t = phase_json(p);
        t["n"] = n;
        a.push_back(t);
    }
    return a;
}

Scalar scalar_from_json(const json& j) {
    if (!j.is_array()) throw SerializeError("coefficient must be an array");
    Scalar s;
    for (auto& t : j) {
        const json& n = field(t, "n");
        if (!n.is_number_integer()) throw SerializeError("coefficient multiplicity must be an integer");
        s += Scalar::monomial(Phase(rat(t, "r"), rat(t, "s"), rat(t, "t")), n.get<std::int64_t>());
    }
    return s;
}

json expr_json(const Expr& x) {
    const SymbolTable& T = *x.table();
    json a = json::array();
    for (auto& [v, c] : x.sorted()) {
        json e = json::array();
        for (auto& en : v.entries()) {
            json m = {{"sym", T[en.sym].name}, {"cp", en.cp.str()}};
            if (!en.cm.is_zero()) m["cm"] = en.cm.str();
            e.push_back(m);
        }
        a.push_back({{"coef", scalar_json(c)}, {"exp", e}});
    }
    return a;
}

Expr expr_from_json(const json& j, const TablePtr& T) {
    if (!j.is_array()) throw SerializeError("expression must be an array of terms");
    Expr x(T);
    for (auto& t : j) {
        std::vector<ExpEntry> e;
        for (auto& m : field(t, "exp")) {
            std::string name = field(m, "sym").get<std::string>();
            if (!T->has(name)) throw SerializeError("unknown symbol " + name);
            e.push_back({T->index(name), rat(m, "cp"), rat(m, "cm")});
        }
        std::sort(e.begin(), e.end());
        x.add(ExpVec(std::move(e)), scalar_from_json(field(t, "coef")));
    }
    return x;
}

json presentation_json(const Presentation& P) {
    const SymbolTable& T = *P.T;
    json syms = json::array();
    for (int i = 0; i < T.size(); ++i) syms.push_back({{"name", T[i].name}, {"kind", kind_name(T[i].kind)}, {"k", T[i].k}});
    json gens = json::object();
    for (int i = 0; i < P.rank(); ++i) {
        std::string n = std::to_string(i + 1);
        gens["e" + n] = expr_json(P.e[i]);
        gens["f" + n] = expr_json(P.f[i]);
        gens["K" + n] = expr_json(P.K[i]);
        gens["Kinv" + n] = expr_json(P.Kinv[i]);
    }
    return {{"schema", kSchema},
            {"type", P.datum.tag.str()},
            {"word", word_str(P.word)},
            {"kmax", P.datum.kmax},
            {"symbols", syms},
            {"generators", gens}};
}

Presentation presentation_from_json(const json& j) {
    if (field(j, "schema") != kSchema) throw SerializeError("unsupported schema " + j.at("schema").dump());
    Presentation P;
    try {
        P.datum = root_datum(field(j, "type").get<std::string>());
        P.word = parse_word(field(j, "word").get<std::string>());
    } catch (const SerializeError&) {
        throw;
    } catch (const std::exception& e) {
        throw SerializeError(e.what());
    }
    if (!is_longest_word(P.datum.cartan, P.word)) throw SerializeError("word is not a reduced word of w0");
    P.T = make_table(P.datum, P.word);
    const json& syms = field(j, "symbols");
    if (!syms.is_array() || int(syms.size()) != P.T->size()) throw SerializeError("symbol table size mismatch");
    for (int i = 0; i < P.T->size(); ++i) {
        const Symbol& s = (*P.T)[i];
        if (field(syms[i], "name") != s.name || field(syms[i], "k") != s.k || field(syms[i], "kind") != kind_name(s.kind))
            throw SerializeError("symbol table mismatch at " + s.name);
    }
    const json& gens = field(j, "generators");
    for (int i = 1; i <= P.rank(); ++i) {
        std::string n = std::to_string(i);
        P.e.push_back(expr_from_json(field(gens, ("e" + n).c_str()), P.T));
        P.f.push_back(expr_from_json(field(gens, ("f" + n).c_str()), P.T));
        P.K.push_back(expr_from_json(field(gens, ("K" + n).c_str()), P.T));
        P.Kinv.push_back(expr_from_json(field(gens, ("Kinv" + n).c_str()), P.T));
    }
    return P;
}

json report_json(const RelationReport& r, bool timings) {
    json a = json::array();
    for (auto& e : r.entries) {
        json x = {{"name", e.name}, {"holds", e.holds}, {"residual_terms", e.residual_terms}, {"monomials", e.monomials}};
        if (!e.holds) x["residual"] = e.residual;
        if (timings) x["seconds"] = e.seconds;
        a.push_back(x);
    }
    return {{"passed", r.all_hold()}, {"failures", r.failures()}, {"entries", a}};
}

}  // namespace posrep
