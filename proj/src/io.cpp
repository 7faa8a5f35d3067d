#include "hardy/io.hpp"

#include <fstream>

namespace hardy::io {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError(path + ": " + e.what());
    }
}

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const json::type_error&) {
        throw DomainError(std::string("field '") + key + "' has the wrong type");
    }
}

json opt_exponent(const std::optional<Exponent>& e) { return e ? json(e->str()) : json(nullptr); }

std::optional<Exponent> opt_exponent(const json& j) {
    if (j.is_null()) return std::nullopt;
    return Exponent::parse(j.get<std::string>());
}

}  // namespace

DerivationSpec spec_from_json(const json& j) {
    const auto r = get<std::size_t>(j, "rank");
    if (r == 0) throw DomainError("rank must be positive");
    std::vector<Series> logd;
    for (const auto& s : field(j, "log_derivatives")) logd.push_back(Series::parse(s.get<std::string>(), r));
    if (logd.size() != r) throw DomainError("expected " + std::to_string(r) + " log_derivatives");
    return DerivationSpec(r, std::move(logd));
}

json spec_to_json(const DerivationSpec& spec) {
    json l = json::array();
    for (const auto& s : spec.log_derivatives()) l.push_back(s.str());
    return {{"rank", spec.rank()}, {"log_derivatives", l}};
}

DiffPoly equation_from_json(const json& j, std::size_t rank) {
    if (j.contains("rank") && j.at("rank").get<std::size_t>() != rank)
        throw DomainError("equation rank differs from the spec rank");
    const auto n = get<unsigned>(j, "order");
    const auto k = j.contains("derivation") ? j.at("derivation").get<std::size_t>() : 0;
    if (k > rank) throw DomainError("derivation index exceeds the rank");
    DiffPoly F(rank, n, k);
    for (const auto& c : field(j, "coefficients")) {
        auto idx = get<std::vector<unsigned>>(c, "index");
        if (idx.size() != n + 1) throw DomainError("index length must be order + 1");
        F.add(MultiIndex(idx), Series::parse(get<std::string>(c, "series"), rank));
    }
    return F;
}

json equation_to_json(const DiffPoly& F) {
    json cs = json::array();
    for (const auto& [I, s] : F.coeffs()) {
        std::vector<unsigned> idx(I.size());
        for (std::size_t a = 0; a < I.size(); ++a) idx[a] = I[a];
        cs.push_back({{"index", idx}, {"series", s.str()}});
    }
    return {{"rank", F.rank()}, {"order", F.order()}, {"derivation", F.derivation()}, {"coefficients", cs}};
}

json gridset_to_json(const GridSet& g) {
    json cs = json::array();
    for (const auto& c : g.cosets()) {
        json gens = json::array();
        for (const auto& e : c.generators) gens.push_back(e.str());
        cs.push_back({{"offset", c.offset.str()}, {"generators", gens}});
    }
    return {{"rank", g.rank()}, {"cosets", cs}, {"exact", g.exact()}, {"text", g.str()}};
}

GridSet gridset_from_json(const json& j) {
    GridSet g(get<std::size_t>(j, "rank"), get<bool>(j, "exact"));
    for (const auto& c : field(j, "cosets")) {
        std::vector<Exponent> gens;
        for (const auto& e : field(c, "generators")) gens.push_back(Exponent::parse(e.get<std::string>()));
        g.add_coset(Coset{Exponent::parse(get<std::string>(c, "offset")), std::move(gens)});
    }
    return g;
}

json provenance_to_json(const std::vector<ProvenanceEntry>& prov) {
    json out = json::array();
    for (const auto& e : prov) {
        json params = json::array();
        for (const auto& [k, v] : e.params) params.push_back({k, v});
        out.push_back({{"kind", e.kind}, {"params", params}, {"bound", gridset_to_json(e.bound)}});
    }
    return out;
}

std::vector<ProvenanceEntry> provenance_from_json(const json& j) {
    std::vector<ProvenanceEntry> out;
    for (const auto& e : j) {
        ProvenanceEntry pe{get<std::string>(e, "kind"), {}, gridset_from_json(field(e, "bound"))};
        for (const auto& p : field(e, "params")) pe.params.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
        out.push_back(std::move(pe));
    }
    return out;
}

json outcome_to_json(const SolveOutcome& o) {
    json trace = json::array();
    for (const auto& t : o.valuationTrace) trace.push_back({{"length", t.length}, {"value", opt_exponent(t.value)}});
    json res = json::array();
    for (const auto& r : o.resonances) res.push_back({{"exponent", r.exponent.str()}, {"note", r.note}});
    json tested = json::array();
    for (const auto& e : o.testedExtensions) tested.push_back(e.str());
    return {{"variant", to_string(o.kind)},
            {"prefix", o.prefix.str()},
            {"valuation_trace", trace},
            {"resonances", res},
            {"support_bound", gridset_to_json(o.supportBound)},
            {"provenance", provenance_to_json(o.provenance)},
            {"warnings", o.warnings},
            {"stop_reason", o.stopReason},
            {"stabilized_value", opt_exponent(o.stabilizedValue)},
            {"tested_extensions", tested},
            {"shift", opt_exponent(o.shift)},
            {"containment_verified", o.containmentVerified}};
}

SolveOutcome outcome_from_json(const json& j, std::size_t rank) {
    SolveOutcome o;
    const auto v = get<std::string>(j, "variant");
    if (v == "SolutionPrefix")
        o.kind = OutcomeKind::SolutionPrefix;
    else if (v == "Stabilized")
        o.kind = OutcomeKind::Stabilized;
    else if (v == "BudgetExhausted")
        o.kind = OutcomeKind::BudgetExhausted;
    else
        throw DomainError("unknown outcome variant '" + v + "'");
    o.prefix = Series::parse(get<std::string>(j, "prefix"), rank);
    for (const auto& t : field(j, "valuation_trace"))
        o.valuationTrace.push_back({get<std::size_t>(t, "length"), opt_exponent(field(t, "value"))});
    for (const auto& r : field(j, "resonances"))
        o.resonances.push_back({Exponent::parse(get<std::string>(r, "exponent")), get<std::string>(r, "note")});
    o.supportBound = gridset_from_json(field(j, "support_bound"));
    o.provenance = provenance_from_json(field(j, "provenance"));
    o.warnings = get<std::vector<std::string>>(j, "warnings");
    o.stopReason = get<std::string>(j, "stop_reason");
    o.stabilizedValue = opt_exponent(field(j, "stabilized_value"));
    for (const auto& e : field(j, "tested_extensions")) o.testedExtensions.push_back(Exponent::parse(e.get<std::string>()));
    o.shift = opt_exponent(field(j, "shift"));
    o.containmentVerified = get<bool>(j, "containment_verified");
    return o;
}

json outcomes_to_json(const std::vector<SolveOutcome>& os) {
    json out = json::array();
    for (const auto& o : os) out.push_back(outcome_to_json(o));
    return out;
}

json constants_to_json(const DerivationSpec& spec) {
    json cls = json::array();
    for (std::size_t k = 1; k <= spec.rank(); ++k) {
        const auto& c = spec.cls(k);
        cls.push_back({{"k", k},
                       {"d", Series::monomial(c.d.exp, c.d.coef).str()},
                       {"tau", c.tau.str()},
                       {"theta", c.theta.str()},
                       {"tilde_k", c.tilde_k ? json(*c.tilde_k) : json(nullptr)}});
    }
    auto rep = spec.validate();
    json viol = json::array();
    for (const auto& v : rep.violations) viol.push_back({{"axiom", v.axiom}, {"detail", v.detail}});
    return {{"rank", spec.rank()}, {"k0", spec.k0()}, {"classes", cls}, {"valid", rep.ok()}, {"violations", viol}};
}

}  // namespace hardy::io
