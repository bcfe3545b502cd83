#include "posrep/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "posrep/dilog.hpp"
#include "posrep/duality.hpp"
#include "posrep/folding.hpp"
#include "posrep/rewrite.hpp"
#include "posrep/serialize.hpp"

namespace posrep {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Outcome {
    json doc;
    std::string text;
    bool passed = true;
};

struct Common {
    std::string type, word, format = "text", out, input;
    int jobs = 0;
    double timeout = 0;
    bool timings = false;
};

void add_common(CLI::App* c, Common& o, bool with_type = true) {
    if (with_type) {
        c->add_option("type,--type", o.type, "root system, e.g. B2, G2, F4");
        c->add_option("word,--word", o.word, "reduced word of w0, e.g. 1212 (default: canonical)");
    }
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--out", o.out, "write the report to FILE");
    c->add_option("--jobs", o.jobs, "worker threads (0: all cores)")->envname("POSREP_JOBS")->check(CLI::NonNegativeNumber);
    c->add_option("--timeout", o.timeout, "seconds before giving up (0: none)")->check(CLI::NonNegativeNumber);
    c->add_flag("--timings", o.timings, "include wall-clock seconds in JSON reports");
}

json header(const std::string& command) { return {{"schema", kSchema}, {"command", command}}; }

std::string normalize_word(std::string w) {
    auto arrow = w.find("->");
    if (arrow != std::string::npos) w = w.substr(0, arrow);
    return w;
}

Presentation load(const Common& o) {
    if (o.type.empty()) throw UsageError("missing type");
    RootDatum d;
    Word w;
    try {
        d = root_datum(o.type);
        w = o.word.empty() ? canonical_word(d.tag) : parse_word(normalize_word(o.word));
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (!is_longest_word(d.cartan, w)) throw UsageError("not a reduced word of w0 for " + o.type + ": " + word_str(w));
    return make_presentation(d, w);
}

void append_report(Outcome& r, const std::string& label, const RelationReport& rep, bool timings) {
    r.doc[label] = report_json(rep, timings);
    std::ostringstream os;
    os << label << ": " << (rep.all_hold() ? "pass" : "FAIL") << " (" << rep.entries.size() - rep.failures() << "/"
       << rep.entries.size() << ")\n";
    for (auto& e : rep.entries) {
        if (e.holds && !timings) continue;
        os << "  " << e.name << (e.holds ? " ok" : " FAIL");
        if (timings) os << " " << e.seconds << "s, " << e.monomials << " monomials";
        os << "\n";
        if (!e.holds) os << "    residual (" << e.residual_terms << " terms): " << e.residual << "\n";
    }
    r.text += os.str();
    r.passed = r.passed && rep.all_hold();
}

std::string default_scheme(const TypeTag& t) {
    switch (t.family) {
        case 'B': return t.str() + ":A" + std::to_string(2 * t.rank - 1);
        case 'C': return t.str() + ":D" + std::to_string(t.rank + 1);
        case 'G': return "G2:D4";
        case 'F': return "F4:E6";
        default: return t.str() + ":" + t.str();
    }
}

json word_json(const Word& w) { return word_str(w); }

void run_dual(Outcome& r, const Presentation& P, const CheckOptions& opt, bool timings) {
    append_report(r, "dual", check_langlands_dual(P, opt), timings);
    json cons = json::array();
    std::string txt;
    for (auto& c : check_transcendental_consistency(P)) {
        cons.push_back({{"name", c.name}, {"supported", c.supported}, {"equal", c.equal}, {"note", c.note}});
        if (c.supported && !c.equal) {
            r.passed = false;
            txt += "  " + c.name + " FAIL\n";
        }
        if (!c.supported) txt += "  " + c.name + " unsupported: " + c.note + "\n";
    }
    r.doc["transcendental"] = cons;
    r.text += "transcendental consistency\n" + txt;
    if (P.datum.tag == TypeTag{'B', 2}) {
        bool ok = b2_power_matches_relabelled();
        r.doc["b2_relabel"] = ok;
        r.text += std::string("B2 power of e1 against relabelled dual: ") + (ok ? "pass" : "FAIL") + "\n";
        r.passed = r.passed && ok;
    }
}

void run_double(Outcome& r, const Presentation& P, const CheckOptions& opt, bool timings) {
    ModifiedPresentation M = build_modified(P);
    append_report(r, "double", check_modular_double(P, M, opt.jobs), timings);
    append_report(r, "commutant", check_commutant(P, M), timings);
}

void run_tori(Outcome& r, const Presentation& P) {
    ToriReport t = tori_embedding(P, build_modified(P));
    r.doc["tori"] = {{"s", t.s}, {"l", t.l}, {"integral", t.integral}, {"plan", t.plan}, {"offenders", t.offenders},
                     {"monomials", t.monomials}};
    std::ostringstream os;
    os << "tori: (s,l) = (" << t.s << "," << t.l << "), " << (t.integral ? "integral" : "NOT integral") << ", "
       << t.monomials << " monomials\n";
    for (auto& p : t.plan) os << "  " << p << "\n";
    for (auto& x : t.offenders) os << "  offender " << x << "\n";
    r.text += os.str();
    r.passed = r.passed && t.integral;
}

void run_fold(Outcome& r, const std::string& scheme, const Word& w, bool relations, const CheckOptions& opt,
              bool timings) {
    FoldingScheme s;
    try {
        s = folding_scheme(scheme);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    FoldCertificate c = fold_certify(s, w, relations, opt);
    json d = {{"scheme", c.scheme},        {"target_word", word_json(c.target_word)},
              {"source_word", word_json(c.source_word)}, {"equal", c.equal},
              {"mismatches", c.mismatches}, {"q_multiples", c.q_multiples},
              {"quantized", c.quantized},   {"dropped", c.dropped}};
    if (c.relations_checked) d["relations"] = report_json(c.relations, timings);
    d["passed"] = c.passed();
    r.doc["fold"] = d;
    std::ostringstream os;
    os << "fold " << c.scheme << ": " << word_str(c.target_word) << " <- " << word_str(c.source_word) << "\n"
       << "  monomial equality: " << (c.equal ? "pass" : "FAIL") << "\n"
       << "  [m]_{q_s} coefficients: " << c.q_multiples << ", dropped product monomials: " << c.dropped << "\n";
    for (auto& m : c.mismatches) os << "  mismatch " << m << "\n";
    if (c.relations_checked)
        os << "  relations: " << (c.relations.all_hold() ? "pass" : "FAIL") << " ("
           << c.relations.entries.size() - c.relations.failures() << "/" << c.relations.entries.size() << ")\n";
    r.text += os.str();
    r.passed = r.passed && c.passed();
}

const std::vector<std::string> kSuites = {"relations", "serre", "dual", "double", "tori", "fold", "all"};

Outcome cmd_verify(const Common& o, const std::vector<std::string>& suites) {
    Outcome r{header("verify"), "", true};
    CheckOptions base;
    base.jobs = o.jobs;
    auto want = [&](const std::string& s) {
        return std::find(suites.begin(), suites.end(), s) != suites.end() ||
               std::find(suites.begin(), suites.end(), "all") != suites.end();
    };
    Presentation P;
    if (!o.input.empty()) {
        std::ifstream in(o.input);
        if (!in) throw UsageError("cannot read " + o.input);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw UsageError(std::string("bad JSON: ") + e.what());
        }
        P = presentation_from_json(j);
        for (auto& s : suites)
            if (s != "relations" && s != "serre")
                throw UsageError("suite " + s + " needs a constructed presentation, not --input");
    } else {
        P = load(o);
    }
    r.doc["type"] = P.datum.tag.str();
    r.doc["word"] = word_str(P.word);
    r.text = "verify " + P.datum.tag.str() + " " + word_str(P.word) + "\n";
    if (want("relations") && want("serre")) {
        append_report(r, "relations", check_relations(P, base), o.timings);
    } else if (want("relations")) {
        CheckOptions c = base;
        c.serre = false;
        append_report(r, "relations", check_relations(P, c), o.timings);
    } else if (want("serre")) {
        CheckOptions c = base;
        c.ef = c.k = false;
        append_report(r, "serre", check_relations(P, c), o.timings);
    }
    if (want("dual")) run_dual(r, P, base, o.timings);
    if (want("double")) run_double(r, P, base, o.timings);
    if (want("tori")) run_tori(r, P);
    if (want("fold")) {
        CheckOptions c = base;
        // rank >= 4: relation spot-checks without the Serre sums
        c.serre = P.rank() < 4;
        run_fold(r, default_scheme(P.datum.tag), P.word, true, c, o.timings);
    }
    r.doc["passed"] = r.passed;
    r.text += std::string("result: ") + (r.passed ? "pass" : "FAIL") + "\n";
    return r;
}

Outcome cmd_construct(const Common& o) {
    Presentation P = load(o);
    Outcome r{presentation_json(P), "", true};
    std::ostringstream os;
    os << P.datum.tag.str() << " " << word_str(P.word) << "\n";
    for (int i = 0; i < P.rank(); ++i) {
        os << "e" << i + 1 << " = " << P.e[i].str() << "\n";
        os << "f" << i + 1 << " = " << P.f[i].str() << "\n";
        os << "K" << i + 1 << " = " << P.K[i].str() << "\n";
    }
    r.text = os.str();
    return r;
}

Outcome cmd_transform(const Common& o) {
    Presentation P = load(o);
    if (!(P.datum.tag == TypeTag{'B', 2})) throw UsageError("transform supports B2 only");
    Presentation R = phi_B2(P);
    Presentation direct = make_presentation(R.datum, R.word);
    Presentation back = phi_B2(R);
    std::vector<std::string> mism;
    bool involution = true;
    for (int i = 0; i < 2; ++i) {
        std::string n = std::to_string(i + 1);
        if (!(R.e[i] == direct.e[i])) mism.push_back("e" + n);
        if (!(R.f[i] == direct.f[i])) mism.push_back("f" + n);
        if (!(R.K[i] == direct.K[i])) mism.push_back("K" + n);
        involution = involution && back.e[i] == P.e[i] && back.f[i] == P.f[i] && back.K[i] == P.K[i];
    }
    Outcome r{header("transform"), "", mism.empty() && involution};
    r.doc["from"] = word_str(P.word);
    r.doc["to"] = word_str(R.word);
    r.doc["matches_direct"] = mism.empty();
    r.doc["mismatches"] = mism;
    r.doc["involution"] = involution;
    r.doc["presentation"] = presentation_json(R);
    r.doc["passed"] = r.passed;
    std::ostringstream os;
    os << "transform B2 " << word_str(P.word) << " -> " << word_str(R.word) << "\n";
    for (int i = 0; i < 2; ++i) os << "e" << i + 1 << " = " << R.e[i].str() << "\n";
    os << "matches direct construction: " << (mism.empty() ? "yes" : "NO") << "\n"
       << "applied twice is the identity: " << (involution ? "yes" : "NO") << "\n";
    r.text = os.str();
    return r;
}

Outcome cmd_simple(const std::string& name, const Common& o) {
    Presentation P = load(o);
    Outcome r{header(name), name + " " + P.datum.tag.str() + " " + word_str(P.word) + "\n", true};
    r.doc["type"] = P.datum.tag.str();
    r.doc["word"] = word_str(P.word);
    CheckOptions c;
    c.jobs = o.jobs;
    if (name == "dual") run_dual(r, P, c, o.timings);
    if (name == "double") run_double(r, P, c, o.timings);
    if (name == "tori") run_tori(r, P);
    r.doc["passed"] = r.passed;
    r.text += std::string("result: ") + (r.passed ? "pass" : "FAIL") + "\n";
    return r;
}

struct DilogOpts {
    double b = 0.5, tol = 1e-12;
    std::string scheme = "gk";
    std::vector<std::string> eval, check;
};

Quadrature scheme_of(const std::string& s) {
    if (s == "gk") return Quadrature::GaussKronrod;
    if (s == "ts") return Quadrature::TanhSinh;
    return Quadrature::Trapezoid;
}

json cplx_json(cplx z) { return {z.real(), z.imag()}; }

Outcome cmd_dilog(const DilogOpts& d) {
    if (!(d.b > 0 && d.b < 1)) throw UsageError("--b must lie in (0, 1)");
    DilogParams p;
    p.b = d.b;
    p.tol = d.tol;
    p.scheme = scheme_of(d.scheme);
    Outcome r{header("dilog"), "", true};
    r.doc["b"] = d.b;
    r.doc["Q"] = p.Q();
    r.doc["tol"] = d.tol;
    r.doc["scheme"] = d.scheme;
    std::ostringstream os;
    os.precision(15);
    os << "b = " << d.b << ", Q = " << p.Q() << ", scheme " << d.scheme << "\n";
    json evals = json::array();
    for (auto& e : d.eval) {
        auto colon = e.find(':');
        if (colon == std::string::npos) throw UsageError("--eval expects gb:X or Gb:RE[,IM], got " + e);
        std::string fn = e.substr(0, colon), arg = e.substr(colon + 1);
        double re = 0, im = 0;
        try {
            auto comma = arg.find(',');
            re = std::stod(arg.substr(0, comma));
            if (comma != std::string::npos) im = std::stod(arg.substr(comma + 1));
        } catch (const std::exception&) {
            throw UsageError("bad number in --eval " + e);
        }
        cplx v;
        if (fn == "gb") v = g_b(p, re);
        else if (fn == "Gb") v = G_b(p, cplx(re, im));
        else throw UsageError("unknown function " + fn + " (gb or Gb)");
        evals.push_back({{"f", fn}, {"arg", cplx_json(cplx(re, im))}, {"value", cplx_json(v)}, {"abs", std::abs(v)}});
        os << fn << "(" << arg << ") = " << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag())
           << "i  |.| = " << std::abs(v) << "\n";
    }
    r.doc["eval"] = evals;
    json checks = json::object();
    for (auto& c : d.check) {
        if (c == "unitarity") {
            double worst = 0;
            for (auto& s : unitarity_scan(p, 1e-3, 1e3, 61)) worst = std::max(worst, std::abs(s.modulus - 1));
            bool ok = worst < 1e-8;
            checks["unitarity"] = {{"points", 61}, {"max_deviation", worst}, {"passed", ok}};
            os << "unitarity on [1e-3, 1e3]: max | |g_b| - 1 | = " << worst << (ok ? " pass" : " FAIL") << "\n";
            r.passed = r.passed && ok;
        } else if (c == "quadrature") {
            DilogParams gk = p, ts = p;
            gk.scheme = Quadrature::GaussKronrod;
            ts.scheme = Quadrature::TanhSinh;
            double worst = 0;
            for (double fr : {0.1, 0.3, 0.5, 0.7, 0.9})
                for (double im : {-1.0, 0.0, 0.5, 2.0}) {
                    cplx z(fr * p.Q(), im);
                    worst = std::max(worst, std::abs(dilog_exponent(gk, z) - dilog_exponent(ts, z)));
                }
            double mid = std::abs(G_b(gk, p.Q() / 2) - G_b(ts, p.Q() / 2));
            bool ok = worst < 1e-10 && mid < 1e-10;
            checks["quadrature"] = {{"grid_max_exponent_diff", worst}, {"center_diff", mid}, {"passed", ok}};
            os << "Gauss-Kronrod vs tanh-sinh: grid " << worst << ", G_b(Q/2) " << mid << (ok ? " pass" : " FAIL")
               << "\n";
            r.passed = r.passed && ok;
        } else {
            throw UsageError("unknown check " + c + " (unitarity or quadrature)");
        }
    }
    r.doc["checks"] = checks;
    r.doc["passed"] = r.passed;
    r.text = os.str();
    return r;
}

// runs f under the deadline; past it, the report is a timeout and the process ends
Outcome with_timeout(double seconds, std::function<Outcome()> f, std::ostream& out, std::ostream& err) {
    if (seconds <= 0) return f();
    auto task = std::make_shared<std::packaged_task<Outcome()>>(std::move(f));
    auto fut = task->get_future();
    std::thread([task] { (*task)(); }).detach();
    if (fut.wait_for(std::chrono::duration<double>(seconds)) == std::future_status::ready) return fut.get();
    err << "timeout after " << seconds << " s\n";
    out.flush();
    err.flush();
    std::_Exit(1);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Positive representations of split real quantum groups: construct and verify"};
    app.require_subcommand(1);
    Common o;
    std::vector<std::string> suites = {"all"};
    std::string scheme;
    bool no_relations = false;
    DilogOpts d;

    auto* construct = app.add_subcommand("construct", "build a presentation");
    add_common(construct, o);
    auto* verify = app.add_subcommand("verify", "check identities");
    add_common(verify, o);
    verify->add_option("--suite", suites, "relations, serre, dual, double, tori, fold or all")
        ->check(CLI::IsMember(kSuites))
        ->delimiter(',');
    verify->add_option("--input", o.input, "presentation JSON to verify instead of constructing one");
    auto* transform = app.add_subcommand("transform", "B2 change of word 1212 <-> 2121");
    add_common(transform, o);
    auto* fold = app.add_subcommand("fold", "fold a simply-laced presentation");
    fold->add_option("scheme,--scheme", scheme, "TARGET:SOURCE, e.g. G2:D4")->required();
    fold->add_option("word,--word", o.word, "target word (default: canonical)");
    fold->add_flag("--no-relations", no_relations, "skip the relation suite on the folded presentation");
    add_common(fold, o, false);
    auto* dual = app.add_subcommand("dual", "tilde presentation against the dual type");
    add_common(dual, o);
    auto* dbl = app.add_subcommand("double", "modular double commutation and commutant");
    add_common(dbl, o);
    auto* tori = app.add_subcommand("tori", "q-tori embedding");
    add_common(tori, o);
    auto* dilog = app.add_subcommand("dilog", "quantum dilogarithm numerics");
    dilog->add_option("--b", d.b, "0 < b < 1");
    dilog->add_option("--eval", d.eval, "gb:X or Gb:RE[,IM]");
    dilog->add_option("--check", d.check, "unitarity or quadrature");
    dilog->add_option("--tol", d.tol, "quadrature tolerance")->check(CLI::PositiveNumber);
    dilog->add_option("--scheme", d.scheme, "gk, ts or trap")->check(CLI::IsMember({"gk", "ts", "trap"}));
    add_common(dilog, o, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    auto run = [&]() -> Outcome {
        if (*construct) return cmd_construct(o);
        if (*verify) return cmd_verify(o, suites);
        if (*transform) return cmd_transform(o);
        if (*fold) {
            Word w;
            try {
                w = o.word.empty() ? Word{} : parse_word(o.word);
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
            Outcome r{header("fold"), "", true};
            CheckOptions c;
            c.jobs = o.jobs;
            FoldingScheme s;
            try {
                s = folding_scheme(scheme);
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
            c.serre = s.target.rank < 4;
            run_fold(r, scheme, w, !no_relations, c, o.timings);
            r.doc["passed"] = r.passed;
            return r;
        }
        if (*dual) return cmd_simple("dual", o);
        if (*dbl) return cmd_simple("double", o);
        if (*tori) return cmd_simple("tori", o);
        return cmd_dilog(d);
    };

    Outcome r;
    try {
        r = with_timeout(o.timeout, run, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SerializeError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DilogError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "failed: " << e.what() << "\n";
        return 1;
    }

    std::string body = o.format == "json" ? r.doc.dump(2) + "\n" : r.text;
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) {
            err << "error: cannot write " << o.out << "\n";
            return 2;
        }
        f << body;
    } else {
        out << body;
    }
    return r.passed ? 0 : 1;
}

}  // namespace posrep
