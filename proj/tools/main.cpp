// Command-line front end over the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hardy/c_api.h"

using nlohmann::json;

namespace {

// Exit status for a failed call: domain problems give 1, malformed input gives 2.
struct Failure {
    int code;
    std::string message;
};

void check(int rc) {
    if (rc == HARDY_OK) return;
    const int exit_code = (rc == HARDY_E_DOMAIN || rc == HARDY_E_INTERNAL) ? 1 : 2;
    throw Failure{exit_code, hardy_what()};
}

std::string take(char* s) {
    std::string out = s ? s : "";
    hardy_string_free(s);
    return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { Free(p); }
    T** out() { return &p; }
    T* get() const { return p; }
};
using Spec = Handle<hardy_spec, hardy_spec_free>;
using Ser = Handle<hardy_series, hardy_series_free>;
using Eq = Handle<hardy_equation, hardy_equation_free>;

struct Globals {
    bool json_out = false;
    std::size_t enum_cap = 10000;
    std::string truncation;
};

void load_spec(Spec& s, const std::string& path) { check(hardy_spec_load(path.c_str(), s.out())); }

void parse_series(Ser& s, const std::string& text, const Spec& spec) {
    check(hardy_series_parse(text.c_str(), hardy_spec_rank(spec.get()), s.out()));
}

std::string series_text(const hardy_series* s, const Globals& g) {
    if (!g.truncation.empty()) {
        Ser t;
        check(hardy_series_truncate(s, g.truncation.c_str(), t.out()));
        char* out = nullptr;
        check(hardy_series_str(t.get(), &out));
        return take(out);
    }
    char* out = nullptr;
    check(hardy_series_str(s, &out));
    return take(out);
}

std::string valuation_text(const hardy_series* s) {
    char* out = nullptr;
    check(hardy_series_valuation(s, &out));
    return take(out);
}

std::string trace_text(const json& trace) {
    std::string s;
    for (const auto& t : trace)
        s += " (" + std::to_string(t.at("length").get<std::size_t>()) + "," +
             (t.at("value").is_null() ? std::string("inf") : t.at("value").get<std::string>()) + ")";
    return s;
}

void print_constants(const json& j) {
    std::cout << "rank " << j.at("rank") << ", k0 = " << j.at("k0") << "\n";
    std::cout << "k  d_k                tau                theta              tilde_k\n";
    for (const auto& c : j.at("classes")) {
        std::printf("%-2zu %-18s %-18s %-18s %s\n", c.at("k").get<std::size_t>(), c.at("d").get<std::string>().c_str(),
                    c.at("tau").get<std::string>().c_str(), c.at("theta").get<std::string>().c_str(),
                    c.at("tilde_k").is_null() ? "-" : std::to_string(c.at("tilde_k").get<std::size_t>()).c_str());
    }
    std::fflush(stdout);
    const char* axioms[] = {"HD2", "HD3", "TAU-MATRIX", "VAL-DK"};
    for (const char* a : axioms) {
        std::string detail;
        for (const auto& v : j.at("violations"))
            if (v.at("axiom") == a) detail += (detail.empty() ? "" : "; ") + v.at("detail").get<std::string>();
        std::cout << a << ": " << (detail.empty() ? "pass" : "FAIL  " + detail) << "\n";
    }
}

void print_equation_and_bound(const std::string& eq_json, const std::string& bound_json, const Globals& g,
                              const std::string& out_path) {
    json eq = json::parse(eq_json), bound = json::parse(bound_json);
    if (!out_path.empty()) {
        std::ofstream(out_path) << eq.dump(2) << "\n";
    }
    if (g.json_out) {
        std::cout << json{{"equation", eq}, {"support_bound", bound}}.dump(2) << "\n";
        return;
    }
    std::cout << "order " << eq.at("order") << ", derivation D_" << eq.at("derivation") << "\n";
    for (const auto& c : eq.at("coefficients")) {
        std::string idx;
        for (const auto& i : c.at("index")) idx += (idx.empty() ? "" : ",") + std::to_string(i.get<unsigned>());
        std::cout << "  [" << idx << "]  " << c.at("series").get<std::string>() << "\n";
    }
    std::cout << "support bound: " << bound.at("text").get<std::string>() << "\n";
}

void print_outcomes(const json& os) {
    std::size_t n = 0;
    for (const auto& o : os) {
        std::cout << "[" << ++n << "] " << o.at("variant").get<std::string>() << "  " << o.at("prefix").get<std::string>()
                  << "\n";
        std::cout << "    trace:" << trace_text(o.at("valuation_trace")) << "\n";
        if (!o.at("stabilized_value").is_null())
            std::cout << "    stabilized at " << o.at("stabilized_value").get<std::string>() << " ("
                      << o.at("tested_extensions").size() << " extensions tested)\n";
        for (const auto& r : o.at("resonances"))
            std::cout << "    resonance at " << r.at("exponent").get<std::string>() << ": "
                      << r.at("note").get<std::string>() << "\n";
        std::cout << "    R = " << o.at("support_bound").at("text").get<std::string>()
                  << (o.at("containment_verified").get<bool>() ? "  (prefix contained)" : "") << "\n";
        if (!o.at("shift").is_null()) std::cout << "    support shifted by " << o.at("shift").get<std::string>() << "\n";
        if (!o.at("stop_reason").get<std::string>().empty())
            std::cout << "    reason: " << o.at("stop_reason").get<std::string>() << "\n";
        for (const auto& w : o.at("warnings")) std::cout << "    warning: " << w.get<std::string>() << "\n";
    }
    if (!n) std::cout << "no outcome\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for algebraic differential equations over generalized power series"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json_out, "Structured JSON output");
    app.add_option("--enum-cap", g.enum_cap, "Cap on enumerations and search nodes")->check(CLI::PositiveNumber);
    app.add_option("--truncation", g.truncation, "Truncate printed series at this exponent");

    std::string spec_path, eq_path, series, by, out_path, prov_path, set_text, member, below, translate, sum_with,
        policy = "zero", leading;
    std::size_t k = 0, times = 1, to = 1, terms = 8, branches = 64, reductions = 8;
    unsigned order = 0, qorder = 5;
    bool semigroup = false;

    auto add_spec = [&](CLI::App* c) { c->add_option("--spec", spec_path, "Derivation spec JSON")->required(); };
    auto add_eq = [&](CLI::App* c) { c->add_option("--equation", eq_path, "Equation JSON")->required(); };

    auto* validate = app.add_subcommand("validate", "Constants table and axiom checks");
    add_spec(validate);
    auto* derive = app.add_subcommand("derive", "Apply D_k^i to a series");
    add_spec(derive);
    derive->add_option("--series", series, "Series text")->required();
    derive->add_option("--k", k, "Derivation class (0 = base derivation)");
    derive->add_option("--times", times, "Number of applications");
    auto* eval = app.add_subcommand("eval", "Evaluate an equation at a series");
    add_spec(eval);
    add_eq(eval);
    eval->add_option("--series", series, "Series text")->required();
    auto* cadd = app.add_subcommand("conjugate-add", "Additive conjugation y = a + z");
    add_spec(cadd);
    add_eq(cadd);
    cadd->add_option("--by", by, "Series a")->required();
    cadd->add_option("--out", out_path, "Write the transformed equation here");
    auto* cmul = app.add_subcommand("conjugate-mul", "Multiplicative conjugation y = m z");
    add_spec(cmul);
    add_eq(cmul);
    cmul->add_option("--by", by, "Single term m")->required();
    cmul->add_option("--out", out_path, "Write the transformed equation here");
    auto* chg = app.add_subcommand("change-deriv", "Rewrite the equation in D_l");
    add_spec(chg);
    add_eq(chg);
    chg->add_option("--to", to, "Target class l")->required();
    chg->add_option("--out", out_path, "Write the transformed equation here");
    auto* ind = app.add_subcommand("indicial", "Indicial polynomial of a Weierstrass-order-1 equation");
    add_spec(ind);
    add_eq(ind);
    auto* slv = app.add_subcommand("solve", "Search for solution prefixes");
    add_spec(slv);
    add_eq(slv);
    slv->add_option("--budget-terms", terms, "Maximum prefix length");
    slv->add_option("--budget-branches", branches, "Maximum number of explored branches");
    slv->add_option("--budget-reductions", reductions, "Maximum Weierstrass reductions per branch");
    slv->add_option("--resonance-policy", policy, "zero | value:<q> | report");
    slv->add_option("--leading", leading, "Known leading term m0*t^mu0 with mu0 <= alpha0");
    auto* sb = app.add_subcommand("support-bound", "Replay a provenance file into R");
    add_spec(sb);
    sb->add_option("--provenance", prov_path, "Provenance or solve-output JSON")->required();
    sb->add_option("--order", order, "Order of the equation")->required();
    auto* gs = app.add_subcommand("gridset", "Operations on grid-based sets");
    gs->add_option("--set", set_text, "Set text { (o; g1, ...) , ... } exact|approx")->required();
    gs->add_option("--member", member, "Membership test for an exponent");
    gs->add_option("--enumerate-below", below, "List elements below this exponent");
    gs->add_flag("--semigroup", semigroup, "Generated monoid");
    gs->add_option("--translate", translate, "Superset of (X)_{>=beta} - beta");
    gs->add_option("--sum", sum_with, "Minkowski sum with another set");
    auto* qt = app.add_subcommand("qtable", "Symbolic q_{j,i} coefficients");
    qt->add_option("--order", qorder, "Largest i")->check(CLI::Range(1, 12));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*validate) {
            Spec s;
            load_spec(s, spec_path);
            char* rep = nullptr;
            const int rc = hardy_spec_validate(s.get(), &rep);
            if (rc != HARDY_OK && rc != HARDY_E_DOMAIN) check(rc);
            const json j = json::parse(take(rep));
            if (g.json_out)
                std::cout << j.dump(2) << "\n";
            else
                print_constants(j);
            return j.at("valid").get<bool>() ? 0 : 1;
        }
        if (*derive) {
            Spec s;
            load_spec(s, spec_path);
            Ser a, d;
            parse_series(a, series, s);
            check(hardy_derive(s.get(), a.get(), k, static_cast<unsigned>(times), d.out()));
            if (g.json_out)
                std::cout << json{{"result", series_text(d.get(), g)}, {"valuation", valuation_text(d.get())}}.dump(2)
                          << "\n";
            else
                std::cout << series_text(d.get(), g) << "\n";
            return 0;
        }
        if (*eval) {
            Spec s;
            Eq e;
            Ser y, r;
            load_spec(s, spec_path);
            check(hardy_equation_load(s.get(), eq_path.c_str(), e.out()));
            parse_series(y, series, s);
            check(hardy_eval(s.get(), e.get(), y.get(), r.out()));
            if (g.json_out)
                std::cout << json{{"result", series_text(r.get(), g)}, {"valuation", valuation_text(r.get())}}.dump(2)
                          << "\n";
            else
                std::cout << series_text(r.get(), g) << "\n";
            return 0;
        }
        if (*cadd || *cmul || *chg) {
            Spec s;
            Eq e, t;
            Ser b;
            load_spec(s, spec_path);
            check(hardy_equation_load(s.get(), eq_path.c_str(), e.out()));
            char* bound = nullptr;
            if (*chg) {
                check(hardy_change_derivation(s.get(), e.get(), to, t.out(), &bound));
            } else {
                parse_series(b, by, s);
                check(*cadd ? hardy_conjugate_add(s.get(), e.get(), b.get(), t.out(), &bound)
                            : hardy_conjugate_mul(s.get(), e.get(), b.get(), t.out(), &bound));
            }
            std::string bound_json = take(bound);
            char* ej = nullptr;
            check(hardy_equation_to_json(t.get(), &ej));
            print_equation_and_bound(take(ej), bound_json, g, out_path);
            return 0;
        }
        if (*ind) {
            Spec s;
            Eq e;
            load_spec(s, spec_path);
            check(hardy_equation_load(s.get(), eq_path.c_str(), e.out()));
            char* out = nullptr;
            check(hardy_indicial(e.get(), &out));
            const json j = json::parse(take(out));
            if (g.json_out) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "A:";
                for (const auto& w : j.at("witnesses")) std::cout << " " << w.get<std::string>();
                std::cout << "\npi coefficients (degree 0 up):";
                for (const auto& c : j.at("pi")) std::cout << " " << c.get<std::string>();
                std::cout << "\npositive rational roots:";
                for (const auto& c : j.at("roots")) std::cout << " " << c.get<std::string>();
                std::cout << (j.at("irrational_root").get<bool>() ? "\nwarning: irrational positive root present" : "")
                          << "\n";
            }
            return 0;
        }
        if (*slv) {
            Spec s;
            Eq e;
            load_spec(s, spec_path);
            check(hardy_equation_load(s.get(), eq_path.c_str(), e.out()));
            json opts{{"max_terms", terms},
                      {"max_branches", branches},
                      {"max_reduction_depth", reductions},
                      {"enum_cap", g.enum_cap},
                      {"resonance_policy", policy}};
            if (!leading.empty()) opts["leading"] = leading;
            char* out = nullptr;
            check(hardy_solve(s.get(), e.get(), opts.dump().c_str(), &out));
            const json os = json::parse(take(out));
            if (g.json_out)
                std::cout << os.dump(2) << "\n";
            else
                print_outcomes(os);
            return 0;
        }
        if (*sb) {
            Spec s;
            load_spec(s, spec_path);
            std::ifstream in(prov_path);
            if (!in) throw Failure{1, "cannot open " + prov_path};
            std::stringstream buf;
            buf << in.rdbuf();
            char* out = nullptr;
            check(hardy_support_bound(s.get(), buf.str().c_str(), order, &out));
            const json j = json::parse(take(out));
            std::cout << (g.json_out ? j.dump(2) : j.at("text").get<std::string>()) << "\n";
            return 0;
        }
        if (*gs) {
            char* out = nullptr;
            if (!member.empty()) {
                int m = 0;
                check(hardy_gridset_member(set_text.c_str(), member.c_str(), g.enum_cap, &m));
                const char* word = m == 1 ? "yes" : m == 0 ? "no" : "unknown";
                if (g.json_out)
                    std::cout << json{{"member", word}}.dump() << "\n";
                else
                    std::cout << word << "\n";
                return 0;
            }
            if (!below.empty()) {
                check(hardy_gridset_enumerate(set_text.c_str(), below.c_str(), g.enum_cap, &out));
                const json pts = json::parse(take(out));
                if (g.json_out) {
                    std::cout << pts.dump(2) << "\n";
                } else {
                    for (const auto& p : pts) std::cout << p.get<std::string>() << "\n";
                }
                return 0;
            }
            if (semigroup)
                check(hardy_gridset_semigroup(set_text.c_str(), &out));
            else if (!translate.empty())
                check(hardy_gridset_translate(set_text.c_str(), translate.c_str(), g.enum_cap, &out));
            else if (!sum_with.empty())
                check(hardy_gridset_sum(set_text.c_str(), sum_with.c_str(), &out));
            else
                check(hardy_gridset_normalize(set_text.c_str(), &out));
            const json j = json::parse(take(out));
            std::cout << (g.json_out ? j.dump(2) : j.at("text").get<std::string>()) << "\n";
            return 0;
        }
        if (*qt) {
            char* out = nullptr;
            check(hardy_qtable(qorder, &out));
            const json rows = json::parse(take(out));
            if (g.json_out) {
                std::cout << rows.dump(2) << "\n";
            } else {
                for (const auto& r : rows)
                    std::cout << "q_{" << r.at("j") << "," << r.at("i") << "} = " << r.at("q").get<std::string>() << "\n";
            }
            return 0;
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
