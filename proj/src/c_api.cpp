#include "hardy/c_api.h"

#include <cstring>
#include <functional>
#include <new>

#include "hardy/io.hpp"

using namespace hardy;
using nlohmann::json;

struct hardy_spec {
    DerivationSpec s;
};
struct hardy_series {
    Series s;
};
struct hardy_equation {
    DiffPoly e;
};

namespace {

thread_local std::string g_what;

template <class F>
int guard(F&& f) {
    try {
        f();
        g_what.clear();
        return HARDY_OK;
    } catch (const ParseError& e) {
        g_what = e.what();
        return HARDY_E_PARSE;
    } catch (const DomainError& e) {
        g_what = e.what();
        return HARDY_E_DOMAIN;
    } catch (const json::exception& e) {
        g_what = std::string("json: ") + e.what();
        return HARDY_E_PARSE;
    } catch (const std::invalid_argument& e) {
        g_what = std::string("invalid argument: ") + e.what();
        return HARDY_E_ARG;
    } catch (const std::exception& e) {
        g_what = std::string("internal: ") + e.what();
        return HARDY_E_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p) throw std::invalid_argument(std::string(what) + " is NULL");
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put(char** out, const std::string& s) {
    if (out) *out = dup(s);
}

SolveOptions options_from_json(const json& j, std::size_t rank) {
    SolveOptions o;
    if (j.is_null()) return o;
    if (j.contains("max_terms")) o.budget.maxTerms = j.at("max_terms").get<std::size_t>();
    if (j.contains("max_branches")) o.budget.maxBranches = j.at("max_branches").get<std::size_t>();
    if (j.contains("max_reduction_depth")) o.budget.maxReductionDepth = j.at("max_reduction_depth").get<std::size_t>();
    if (j.contains("enum_cap")) o.budget.enumerationCap = j.at("enum_cap").get<std::size_t>();
    if (j.contains("resonance_policy")) o.policy = ResonancePolicy::parse(j.at("resonance_policy").get<std::string>());
    if (j.contains("leading") && !j.at("leading").is_null()) {
        Series l = Series::parse(j.at("leading").get<std::string>(), rank);
        if (!l.is_term()) throw DomainError("leading must be a single term");
        o.leading = l.leading();
    }
    return o;
}

int transformed(const hardy_spec* spec, const hardy_equation* e, hardy_equation** out, char** bound,
                const std::function<Transformed()>& f) {
    return guard([&] {
        need(spec, "spec");
        need(e, "equation");
        need(out, "out");
        auto t = f();
        std::string b = io::gridset_to_json(t.bound()).dump();
        *out = new hardy_equation{std::move(t.poly)};
        put(bound, b);
    });
}

}  // namespace

extern "C" {

const char* hardy_what(void) { return g_what.c_str(); }
const char* hardy_version(void) { return "1.0.0"; }
void hardy_string_free(char* s) { std::free(s); }

int hardy_spec_from_json(const char* json_text, hardy_spec** out) {
    return guard([&] {
        need(json_text, "json_text");
        need(out, "out");
        *out = new hardy_spec{io::spec_from_json(json::parse(json_text))};
    });
}

int hardy_spec_load(const char* path, hardy_spec** out) {
    return guard([&] {
        need(path, "path");
        need(out, "out");
        *out = new hardy_spec{io::spec_from_json(io::read_json_file(path))};
    });
}

void hardy_spec_free(hardy_spec* s) { delete s; }
size_t hardy_spec_rank(const hardy_spec* s) { return s ? s->s.rank() : 0; }

int hardy_spec_validate(const hardy_spec* s, char** report_json) {
    bool valid = true;
    int rc = guard([&] {
        need(s, "spec");
        json j = io::constants_to_json(s->s);
        valid = j.at("valid").get<bool>();
        put(report_json, j.dump());
        if (!valid) g_what = s->s.validate().summary();
    });
    if (rc != HARDY_OK) return rc;
    if (!valid) {
        g_what = s->s.validate().summary();
        return HARDY_E_DOMAIN;
    }
    return HARDY_OK;
}

int hardy_series_parse(const char* text, size_t rank, hardy_series** out) {
    return guard([&] {
        need(text, "text");
        need(out, "out");
        if (rank == 0) throw std::invalid_argument("rank must be positive");
        *out = new hardy_series{Series::parse(text, rank)};
    });
}

void hardy_series_free(hardy_series* s) { delete s; }

int hardy_series_str(const hardy_series* s, char** out) {
    return guard([&] {
        need(s, "series");
        need(out, "out");
        put(out, s->s.str());
    });
}

int hardy_series_truncate(const hardy_series* s, const char* beta, hardy_series** out) {
    return guard([&] {
        need(s, "series");
        need(beta, "beta");
        need(out, "out");
        Exponent b = Exponent::parse(beta);
        require_same_rank(b, Exponent::zero(s->s.rank()));
        *out = new hardy_series{s->s.truncate(b)};
    });
}

int hardy_series_valuation(const hardy_series* s, char** out) {
    return guard([&] {
        need(s, "series");
        need(out, "out");
        auto v = s->s.valuation();
        put(out, v.infinite() ? std::string("inf") : v.value->str());
    });
}

int hardy_derive(const hardy_spec* spec, const hardy_series* a, size_t k, unsigned i, hardy_series** out) {
    return guard([&] {
        need(spec, "spec");
        need(a, "series");
        need(out, "out");
        if (k > spec->s.rank()) throw DomainError("class index out of range");
        *out = new hardy_series{spec->s.derive(a->s, k, i)};
    });
}

int hardy_equation_from_json(const hardy_spec* spec, const char* json_text, hardy_equation** out) {
    return guard([&] {
        need(spec, "spec");
        need(json_text, "json_text");
        need(out, "out");
        *out = new hardy_equation{io::equation_from_json(json::parse(json_text), spec->s.rank())};
    });
}

int hardy_equation_load(const hardy_spec* spec, const char* path, hardy_equation** out) {
    return guard([&] {
        need(spec, "spec");
        need(path, "path");
        need(out, "out");
        *out = new hardy_equation{io::equation_from_json(io::read_json_file(path), spec->s.rank())};
    });
}

void hardy_equation_free(hardy_equation* e) { delete e; }

int hardy_equation_to_json(const hardy_equation* e, char** out) {
    return guard([&] {
        need(e, "equation");
        need(out, "out");
        put(out, io::equation_to_json(e->e).dump());
    });
}

int hardy_eval(const hardy_spec* spec, const hardy_equation* e, const hardy_series* y, hardy_series** out) {
    return guard([&] {
        need(spec, "spec");
        need(e, "equation");
        need(y, "series");
        need(out, "out");
        *out = new hardy_series{evaluate(e->e, y->s, spec->s)};
    });
}

int hardy_indicial(const hardy_equation* e, char** out_json) {
    return guard([&] {
        need(e, "equation");
        need(out_json, "out");
        auto d = indicial_data(e->e);
        json w = json::array(), pi = json::array(), roots = json::array();
        for (const auto& I : d.witnesses) w.push_back(I.str());
        for (const auto& c : d.pi) pi.push_back(to_string(c));
        for (const auto& c : d.rational_roots) roots.push_back(to_string(c));
        put(out_json, json{{"witnesses", w}, {"pi", pi}, {"roots", roots}, {"irrational_root", d.irrational_root}}.dump());
    });
}

int hardy_conjugate_add(const hardy_spec* spec, const hardy_equation* e, const hardy_series* by,
                        hardy_equation** out, char** bound_json) {
    return transformed(spec, e, out, bound_json, [&] {
        need(by, "series");
        return additive_conjugate(e->e, by->s, spec->s);
    });
}

int hardy_conjugate_mul(const hardy_spec* spec, const hardy_equation* e, const hardy_series* term,
                        hardy_equation** out, char** bound_json) {
    return transformed(spec, e, out, bound_json, [&] {
        need(term, "series");
        if (!term->s.is_term()) throw DomainError("multiplicative conjugation needs a single term");
        return multiplicative_conjugate(e->e, term->s.leading(), spec->s);
    });
}

int hardy_change_derivation(const hardy_spec* spec, const hardy_equation* e, size_t l, hardy_equation** out,
                            char** bound_json) {
    return transformed(spec, e, out, bound_json, [&] { return change_derivation(e->e, l, spec->s); });
}

int hardy_qtable(unsigned n, char** out_json) {
    return guard([&] {
        need(out_json, "out");
        if (n == 0 || n > 12) throw std::invalid_argument("q-table order must be in 1..12");
        auto q = qji_symbolic(n);
        json rows = json::array();
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= i; ++j) rows.push_back({{"j", j}, {"i", i}, {"q", mpoly_str(q[i][j])}});
        put(out_json, rows.dump());
    });
}

int hardy_solve(const hardy_spec* spec, const hardy_equation* e, const char* options_json, char** outcomes_json) {
    return guard([&] {
        need(spec, "spec");
        need(e, "equation");
        need(outcomes_json, "out");
        json opts = options_json && *options_json ? json::parse(options_json) : json(nullptr);
        auto os = solve(e->e, spec->s, options_from_json(opts, spec->s.rank()));
        put(outcomes_json, io::outcomes_to_json(os).dump());
    });
}

int hardy_support_bound(const hardy_spec* spec, const char* provenance_json, unsigned order, char** gridset_json) {
    return guard([&] {
        need(spec, "spec");
        need(provenance_json, "provenance_json");
        need(gridset_json, "out");
        json j = json::parse(provenance_json);
        // Accept a bare provenance list, one outcome, or a list of outcomes (first one replayed).
        if (j.is_array() && !j.empty() && j.front().contains("provenance")) j = j.front();
        if (j.is_object()) j = j.at("provenance");
        auto R = support_bound_R(io::provenance_from_json(j), spec->s, order);
        put(gridset_json, io::gridset_to_json(R).dump());
    });
}

int hardy_gridset_normalize(const char* text, char** out_json) {
    return guard([&] {
        need(text, "text");
        need(out_json, "out");
        put(out_json, io::gridset_to_json(GridSet::parse(text)).dump());
    });
}

int hardy_gridset_member(const char* text, const char* exponent, size_t cap, int* membership) {
    return guard([&] {
        need(text, "text");
        need(exponent, "exponent");
        need(membership, "membership");
        auto m = gs_member(GridSet::parse(text), Exponent::parse(exponent), cap ? cap : kDefaultEnumCap);
        *membership = m == Membership::Yes ? 1 : m == Membership::No ? 0 : -1;
    });
}

int hardy_gridset_enumerate(const char* text, const char* bound, size_t cap, char** out_json) {
    return guard([&] {
        need(text, "text");
        need(bound, "bound");
        need(out_json, "out");
        json pts = json::array();
        for (const auto& e : gs_enumerate_below(GridSet::parse(text), Exponent::parse(bound), cap ? cap : kDefaultEnumCap))
            pts.push_back(e.str());
        put(out_json, pts.dump());
    });
}

int hardy_gridset_semigroup(const char* text, char** out_json) {
    return guard([&] {
        need(text, "text");
        need(out_json, "out");
        put(out_json, io::gridset_to_json(gs_semigroup(GridSet::parse(text))).dump());
    });
}

int hardy_gridset_sum(const char* a, const char* b, char** out_json) {
    return guard([&] {
        need(a, "a");
        need(b, "b");
        need(out_json, "out");
        put(out_json, io::gridset_to_json(gs_sum(GridSet::parse(a), GridSet::parse(b))).dump());
    });
}

int hardy_gridset_translate(const char* text, const char* beta, size_t cap, char** out_json) {
    return guard([&] {
        need(text, "text");
        need(beta, "beta");
        need(out_json, "out");
        auto g = gs_translate_neg(GridSet::parse(text), Exponent::parse(beta), cap ? cap : kDefaultEnumCap);
        put(out_json, io::gridset_to_json(g).dump());
    });
}

}  // extern "C"
