#include "hardy/solver.hpp"

#include <algorithm>
#include <set>

namespace hardy {

std::string to_string(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::SolutionPrefix: return "SolutionPrefix";
        case OutcomeKind::Stabilized: return "Stabilized";
        case OutcomeKind::BudgetExhausted: return "BudgetExhausted";
    }
    return "?";
}

std::string to_string(CandidateKind k) {
    switch (k) {
        case CandidateKind::Newton: return "newton";
        case CandidateKind::Corner: return "corner";
        case CandidateKind::Resonance: return "resonance";
        case CandidateKind::Descent: return "descent";
    }
    return "?";
}

ResonancePolicy ResonancePolicy::parse(std::string_view text) {
    ResonancePolicy p;
    if (text == "zero") return p;
    if (text == "report") {
        p.kind = Kind::Report;
        return p;
    }
    if (text.substr(0, 6) == "value:") {
        p.kind = Kind::Value;
        p.value = parse_rational(text.substr(6));
        return p;
    }
    throw ParseError("unknown resonance policy '" + std::string(text) + "' (zero | value:q | report)", 0);
}

std::string ResonancePolicy::str() const {
    switch (kind) {
        case Kind::Zero: return "zero";
        case Kind::Report: return "report";
        case Kind::Value: return "value:" + to_string(value);
    }
    return "?";
}

Exponent alpha0(const DerivationSpec& spec, unsigned n) { return spec.alpha0(n); }

namespace {

// The equation rewritten for class-k analysis: y = t^pre z, derivation D_k.
struct ClassForm {
    std::size_t k;
    bool available = false;
    std::string why;
    DiffPoly poly{1, 0, 0};
    Exponent pre;
    std::vector<ProvenanceEntry> provenance;
};

ClassForm make_class_form(const DiffPoly& P, std::size_t k, const DerivationSpec& spec, std::size_t cap) {
    const std::size_t r = P.rank(), j = P.derivation();
    const unsigned n = P.order();
    ClassForm f;
    f.k = k;
    f.pre = Exponent::zero(r);
    try {
        if (j != 0) {
            if (k < j) {
                f.why = "class below the equation's derivation index";
                return f;
            }
            auto t = change_derivation(P, k, spec, cap);
            f.poly = std::move(t.poly);
            f.provenance = std::move(t.provenance);
        } else if (n == 0) {
            f.poly = P.with_derivation(k);
        } else {
            const std::size_t k0 = spec.k0();
            std::size_t via = (spec.theta(k).negative() && k > k0) ? k0 : k;
            auto t = change_derivation(P, via, spec, cap);
            if (spec.theta(via).negative()) f.pre = -(Rational(n) * spec.theta(via));
            f.provenance = std::move(t.provenance);
            if (via != k) {
                auto u = change_derivation(t.poly, k, spec, cap);
                f.provenance.insert(f.provenance.end(), u.provenance.begin(), u.provenance.end());
                t.poly = std::move(u.poly);
            }
            f.poly = std::move(t.poly);
        }
        f.available = true;
    } catch (const DomainError& e) {
        f.why = e.what();
    }
    return f;
}

// Minimal valuation per length d and the leading polynomial pi_d(X) = sum lead(c_I) X^{||I||}.
struct Levels {
    std::vector<std::optional<Exponent>> v;
    std::vector<std::vector<Rational>> pi;

    bool has(std::size_t d) const { return d < v.size() && v[d].has_value(); }
};

Levels levels_of(const DiffPoly& G) {
    Levels L;
    const std::size_t top = G.max_length();
    L.v.assign(top + 1, std::nullopt);
    L.pi.assign(top + 1, {});
    for (const auto& [I, c] : G.coeffs()) {
        if (c.empty()) continue;
        const std::size_t d = I.length();
        const Exponent& val = c.v();
        if (!L.v[d] || val < *L.v[d]) {
            L.v[d] = val;
            L.pi[d].clear();
        }
        if (val == *L.v[d]) {
            if (L.pi[d].size() <= I.weight()) L.pi[d].resize(I.weight() + 1, Rational(0));
            L.pi[d][I.weight()] += c.leading().coef;
        }
    }
    return L;
}

// Nonzero rational roots of a univariate polynomial, plus an irrational-real-root flag.
std::pair<std::vector<Rational>, bool> nonzero_roots(const std::vector<Rational>& p) {
    auto [pos, irr1] = positive_roots(p);
    std::vector<Rational> q = p;
    for (std::size_t i = 1; i < q.size(); i += 2) q[i] = -q[i];
    auto [neg, irr2] = positive_roots(q);
    std::vector<Rational> out;
    for (auto it = neg.rbegin(); it != neg.rend(); ++it) out.push_back(-*it);
    out.insert(out.end(), pos.begin(), pos.end());
    return {out, irr1 || irr2};
}

bool all_zero(const std::vector<Rational>& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return sgn(c) == 0; });
}

struct CornerHit {
    Exponent nu;
    std::vector<std::size_t> attaining;
    std::vector<Rational> phi;  // coefficients in the unknown coefficient, index = degree
};

// Exponents nu of class cls where at least two levels tie for the minimum of v_d + d nu.
std::vector<CornerHit> corners(const Levels& L, std::size_t cls, const std::optional<Exponent>& above) {
    std::vector<CornerHit> out;
    std::set<Exponent> seen;
    const std::size_t top = L.v.size();
    for (std::size_t d1 = 0; d1 < top; ++d1) {
        if (!L.has(d1)) continue;
        for (std::size_t d2 = d1 + 1; d2 < top; ++d2) {
            if (!L.has(d2)) continue;
            Exponent nu = Rational(1, d2 - d1) * (*L.v[d1] - *L.v[d2]);
            if (nu.leading_class() != cls || (above && !(nu > *above)) || !seen.insert(nu).second) continue;
            std::optional<Exponent> best;
            for (std::size_t d = 0; d < top; ++d)
                if (L.has(d)) {
                    Exponent val = *L.v[d] + Rational(d) * nu;
                    if (!best || val < *best) best = val;
                }
            CornerHit hit{nu, {}, std::vector<Rational>(top, Rational(0))};
            for (std::size_t d = 0; d < top; ++d)
                if (L.has(d) && *L.v[d] + Rational(d) * nu == *best) {
                    hit.attaining.push_back(d);
                    hit.phi[d] = eval_poly(L.pi[d], nu[cls - 1]);
                }
            if (hit.attaining.size() >= 2) out.push_back(std::move(hit));
        }
    }
    return out;
}

}  // namespace

namespace {

struct NodeCandidate {
    Candidate c;
    std::size_t form;   // index into the class forms
    Exponent s;         // normalization shift at this node
    Series pz;          // prefix in the class variable
    DiffPoly normalized{1, 0, 0};
};

struct ClassAnalysis {
    std::size_t form;
    Exponent bound_z;
    Exponent s;
    unsigned w = ~0u;
    Levels levels;
    std::vector<NodeCandidate> cands;
    std::vector<std::string> warnings;
};

Exponent scaled_unit(std::size_t r, std::size_t k, const Rational& q) { return q * Exponent::unit(r, k); }

ClassAnalysis analyze(const std::vector<ClassForm>& forms, std::size_t fi, const Series& p, const Exponent& bound_y,
                      const DerivationSpec& spec, std::size_t cap) {
    const ClassForm& f = forms[fi];
    const std::size_t r = spec.rank(), k = f.k;
    ClassAnalysis A;
    A.form = fi;
    A.bound_z = bound_y - f.pre;
    Series pz = p.shift(-f.pre);
    DiffPoly G = additive_conjugate(f.poly, pz, spec, cap).poly;
    if (G.is_zero()) {
        A.warnings.push_back("equation vanishes identically after conjugation");
        return A;
    }
    Normalized N = weierstrass_normalize(G);
    A.s = N.shift;
    A.w = N.w;
    A.levels = levels_of(N.poly);
    const Levels& L = A.levels;

    auto push = [&](Exponent nu, CandidateKind kind, std::optional<Rational> coef, bool viable) {
        NodeCandidate nc{Candidate{nu + f.pre, kind, std::move(coef), k, N.w, viable}, fi, N.shift, pz, N.poly};
        A.cands.push_back(std::move(nc));
    };

    for (auto& hit : corners(L, k, A.bound_z)) {
        if (all_zero(hit.phi)) {
            push(hit.nu, CandidateKind::Corner, std::nullopt, true);
            continue;
        }
        auto [roots, irr] = nonzero_roots(hit.phi);
        if (irr) A.warnings.push_back("irrational coefficient at " + (hit.nu + f.pre).str());
        const bool newton = N.w == 1 && hit.attaining == std::vector<std::size_t>{0, 1};
        for (const auto& c : roots) push(hit.nu, newton ? CandidateKind::Newton : CandidateKind::Corner, c, true);
    }

    // Single-level resonances and their one-level descent into deeper classes.
    for (std::size_t d = 1; d < L.v.size(); ++d) {
        if (!L.has(d)) continue;
        auto [rhos, irr] = positive_roots(L.pi[d]);
        if (irr) A.warnings.push_back("irrational resonance of level " + std::to_string(d) + " in class " +
                                      std::to_string(k));
        for (const auto& rho : rhos) {
            Exponent nu = scaled_unit(r, k, rho);
            if (nu > A.bound_z) {
                Exponent val = *L.v[d] + Rational(d) * nu;
                bool viable = !L.has(0) || val < *L.v[0];
                for (std::size_t e = 1; e < L.v.size() && viable; ++e)
                    if (e != d && L.has(e) && !(val < *L.v[e] + Rational(e) * nu)) viable = false;
                push(nu, CandidateKind::Resonance, std::nullopt, viable);
            }
            if (k >= r) continue;
            try {
                DiffPoly H = multiplicative_conjugate(N.poly, Term{nu, 1}, spec, cap).poly;
                for (std::size_t l = k + 1; l <= r; ++l) {
                    Normalized Hl = weierstrass_normalize(change_derivation(H, l, spec, cap).poly);
                    Levels Ll = levels_of(Hl.poly);
                    for (auto& hit : corners(Ll, l, std::nullopt)) {
                        Exponent sigma = nu + hit.nu;
                        if (!(sigma > A.bound_z) || all_zero(hit.phi)) continue;
                        auto [roots, irr2] = nonzero_roots(hit.phi);
                        if (irr2) A.warnings.push_back("irrational coefficient at " + (sigma + f.pre).str());
                        for (const auto& c : roots) push(sigma, CandidateKind::Descent, c, true);
                    }
                }
            } catch (const DomainError& e) {
                A.warnings.push_back(std::string("resonance descent skipped: ") + e.what());
            }
        }
    }
    return A;
}

Exponent lower_limit(const Series& p, const Exponent& a0) { return p.empty() ? a0 : p.terms().back().exp; }

std::vector<ClassForm> class_forms(const DiffPoly& P, const DerivationSpec& spec, std::size_t cap) {
    std::vector<ClassForm> forms;
    for (std::size_t k = 1; k <= spec.rank(); ++k) forms.push_back(make_class_form(P, k, spec, cap));
    return forms;
}

std::vector<ClassAnalysis> analyze_all(const std::vector<ClassForm>& forms, const Series& p, const Exponent& bound_y,
                                       const DerivationSpec& spec, std::size_t cap) {
    std::vector<ClassAnalysis> out;
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (forms[i].available) out.push_back(analyze(forms, i, p, bound_y, spec, cap));
    return out;
}

bool candidate_less(const Candidate& a, const Candidate& b) {
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    if (a.coef.has_value() != b.coef.has_value()) return a.coef.has_value();
    if (a.coef && *a.coef != *b.coef) return *a.coef < *b.coef;
    return a.cls < b.cls;
}

// Merged, deduplicated and sorted candidates of all classes.
std::vector<NodeCandidate> merged(std::vector<ClassAnalysis>& as) {
    std::vector<NodeCandidate> all;
    for (auto& a : as)
        for (auto& c : a.cands) all.push_back(c);
    std::stable_sort(all.begin(), all.end(),
                     [](const NodeCandidate& a, const NodeCandidate& b) { return candidate_less(a.c, b.c); });
    std::vector<NodeCandidate> out;
    for (auto& c : all) {
        bool dup = !out.empty() && out.back().c.exponent == c.c.exponent && out.back().c.coef == c.c.coef;
        if (dup) {
            out.back().c.viable = out.back().c.viable || c.c.viable;
            continue;
        }
        out.push_back(std::move(c));
    }
    return out;
}

Exponent default_alpha0(const DiffPoly& P, const DerivationSpec& spec) {
    return P.derivation() == 0 ? spec.alpha0(P.order()) : Exponent::zero(P.rank());
}

}  // namespace

std::vector<Candidate> next_candidates(const DiffPoly& P, const Series& p, const DerivationSpec& spec,
                                       std::size_t cap) {
    auto forms = class_forms(P, spec, cap);
    auto as = analyze_all(forms, p, lower_limit(p, default_alpha0(P, spec)), spec, cap);
    std::vector<Candidate> out;
    for (auto& c : merged(as)) out.push_back(c.c);
    return out;
}

StepResult solve_w1_step(const DiffPoly& P, const Series& p, const Exponent& mu, const DerivationSpec& spec,
                         std::size_t cap) {
    for (const auto& c : next_candidates(P, p, spec, cap)) {
        if (c.exponent != mu) continue;
        if (!c.coef) {
            if (!c.viable) continue;
            return {std::nullopt, p};
        }
        return {c.coef, p + Series::monomial(mu, *c.coef)};
    }
    throw DomainError("candidate " + mu.str() + " discarded: no cancellation of the leading part at that exponent");
}

WeierstrassStep reduce_weierstrass(const DiffPoly& normalized, const Exponent& mu, const Rational& m,
                                   const DerivationSpec& spec, std::size_t cap) {
    Normalized before = weierstrass_normalize(normalized);
    DiffPoly a = additive_conjugate(normalized, Series::monomial(mu, m), spec, cap).poly;
    DiffPoly b = multiplicative_conjugate(a, Term{mu, 1}, spec, cap).poly;
    if (b.is_zero()) return {before.w, 0, b};
    Normalized after = weierstrass_normalize(b);
    return {before.w, after.w, std::move(after.poly)};
}

Reduced reduce_to_positive(const DiffPoly& P, const Term& leading, const DerivationSpec& spec, std::size_t cap) {
    const Exponent a0 = default_alpha0(P, spec);
    if (sgn(leading.coef) == 0) throw DomainError("leading coefficient must be nonzero");
    if (leading.exp > a0) return {P, Exponent::zero(P.rank()), {}};
    auto add = additive_conjugate(P, Series::monomial(leading.exp, leading.coef), spec, cap);
    Exponent shift = leading.exp - a0;
    auto mul = multiplicative_conjugate(add.poly, Term{shift, 1}, spec, cap);
    Reduced out{std::move(mul.poly), shift, {}};
    out.provenance.insert(out.provenance.end(), add.provenance.begin(), add.provenance.end());
    out.provenance.insert(out.provenance.end(), mul.provenance.begin(), mul.provenance.end());
    ProvenanceEntry pe{"reduce-to-positive",
                       {{"leading", Series::monomial(leading.exp, leading.coef).str()}, {"shift", shift.str()}},
                       GridSet(P.rank())};
    if (a0.positive()) pe.params.emplace_back("generator", a0.str());
    out.provenance.push_back(std::move(pe));
    return out;
}

GridSet support_bound_R(const std::vector<ProvenanceEntry>& provenance, const DerivationSpec& spec, unsigned order,
                        std::size_t cap) {
    const std::size_t r = spec.rank();
    GridSet acc(r);
    std::vector<Exponent> gens;
    std::set<std::size_t> classes;
    for (const auto& e : provenance) {
        if (e.kind != "step" && e.kind != "reduce-to-positive" && e.kind != "resonance") continue;
        if (e.kind == "step") acc.unite(e.bound);
        for (const auto& [key, val] : e.params) {
            if (key == "generator") gens.push_back(Exponent::parse(val));
            if (key == "script-T") classes.insert(std::stoul(val));
        }
    }
    acc.unite(GridSet::points(r, gens));
    GridSet R = gs_semigroup(acc);
    for (std::size_t k : classes) R = gs_sum(R, compute_script_T(spec, k, order, cap));
    return R;
}

namespace {

struct PathState {
    Series p;
    std::vector<TracePoint> trace;
    std::vector<ResonanceNote> notes;
    std::vector<ProvenanceEntry> provenance;
    std::vector<std::string> warnings;
    std::set<std::size_t> forms_logged;
    std::size_t reductions = 0;
};

class Search {
public:
    Search(const DiffPoly& P, const DerivationSpec& spec, const SolveOptions& opts)
        : P_(P), spec_(spec), opts_(opts), cap_(opts.budget.enumerationCap), a0_(default_alpha0(P, spec)) {}

    void set_seed(Term seed, Exponent shift, DiffPoly reduced, std::vector<ProvenanceEntry> prov) {
        seed_ = std::move(seed);
        shift_ = std::move(shift);
        P_ = std::move(reduced);
        base_prov_ = std::move(prov);
    }

    std::vector<SolveOutcome> run() {
        forms_ = class_forms(P_, spec_, cap_);
        PathState root{Series(P_.rank()), {}, {}, base_prov_, {}, {}, 0};
        for (const auto& f : forms_)
            if (!f.available) root.warnings.push_back("class " + std::to_string(f.k) + " skipped: " + f.why);
        node(root);
        return std::move(out_);
    }

private:
    DiffPoly P_;
    const DerivationSpec& spec_;
    const SolveOptions& opts_;
    std::size_t cap_;
    Exponent a0_;
    std::optional<Term> seed_;
    std::optional<Exponent> shift_;
    std::vector<ProvenanceEntry> base_prov_;
    std::vector<ClassForm> forms_;
    std::vector<SolveOutcome> out_;
    std::size_t branches_ = 0;

    void emit(OutcomeKind kind, const PathState& st, std::string reason = {}, std::optional<Exponent> stab = {},
              std::vector<Exponent> tested = {}) {
        SolveOutcome o{kind, st.p, st.trace, st.notes, GridSet(P_.rank()), st.provenance, st.warnings,
                       std::move(reason), std::move(stab), std::move(tested), shift_, false};
        if (seed_) o.prefix = Series::monomial(seed_->exp, seed_->coef) + st.p.shift(*shift_);
        try {
            o.supportBound = support_bound_R(st.provenance, spec_, P_.order(), cap_);
            bool ok = true;
            for (const auto& t : st.p.terms())
                if (gs_member(o.supportBound, t.exp, cap_) != Membership::Yes) {
                    ok = false;
                    o.warnings.push_back("prefix exponent " + t.exp.str() + " not certified in R");
                }
            if (seed_ && gs_member(o.supportBound, a0_, cap_) != Membership::Yes) {
                ok = false;
                o.warnings.push_back("alpha0 not certified in R");
            }
            o.containmentVerified = ok;
        } catch (const DomainError& e) {
            o.supportBound.set_exact(false);
            o.warnings.push_back(std::string("support bound unavailable: ") + e.what());
        }
        out_.push_back(std::move(o));
    }

    void stabilize(const PathState& st, const Exponent& vF, const std::vector<ClassAnalysis>& as,
                   const std::vector<NodeCandidate>& cands) {
        std::vector<Exponent> tests;
        auto want = [&](const Exponent& mu) {
            if (std::find(tests.begin(), tests.end(), mu) == tests.end()) tests.push_back(mu);
        };
        for (const auto& A : as) {
            const ClassForm& f = forms_[A.form];
            const Levels& L = A.levels;
            if (!L.has(0)) continue;
            Exponent base = A.bound_z;
            for (std::size_t d = 1; d < L.v.size(); ++d)
                if (L.has(d)) base = std::max(base, Rational(1, d) * (*L.v[0] - *L.v[d]));
            const std::size_t bc = base.leading_class();
            if (bc != 0 && bc < f.k) continue;
            for (unsigned j = 1; j <= 3; ++j) want(base + scaled_unit(spec_.rank(), f.k, j) + f.pre);
        }
        for (const auto& c : cands) want(c.c.exponent);
        for (const auto& mu : tests) {
            Series Fe = evaluate(P_, st.p + Series::monomial(mu), spec_, cap_);
            if (Fe.empty() || Fe.v() > vF) {
                emit(OutcomeKind::BudgetExhausted, st, "stabilization not certified: extension by t^" + mu.str() +
                                                           " raises the valuation");
                return;
            }
        }
        if (tests.size() < 3) {
            emit(OutcomeKind::BudgetExhausted, st, "stabilization not certified: too few extensions to test");
            return;
        }
        emit(OutcomeKind::Stabilized, st, "no candidate cancels the leading part", vF, tests);
    }

    ProvenanceEntry step_entry(const NodeCandidate& nc, const Rational& coef) {
        const ClassForm& f = forms_[nc.form];
        const std::size_t r = P_.rank();
        ProvenanceEntry pe{"step",
                           {{"class", std::to_string(f.k)},
                            {"exponent", nc.c.exponent.str()},
                            {"coefficient", to_string(coef)},
                            {"candidate", to_string(nc.c.kind)},
                            {"w", std::to_string(nc.c.w)},
                            {"shift", nc.s.str()},
                            {"script-T", std::to_string(f.k)}},
                           GridSet(r)};
        bool covered = false;
        if (nc.c.kind == CandidateKind::Newton) {
            try {
                std::vector<Exponent> ys;
                std::size_t ycls = f.k;
                for (const auto& t : nc.pz.terms()) {
                    ys.push_back(t.exp);
                    ycls = std::min(ycls, t.exp.leading_class());
                }
                GridSet B = evaluation_support_bound(f.poly, ycls, GridSet::points(r, ys), spec_, cap_);
                GridSet piece = gs_translate_neg(B, nc.s, cap_);
                if (gs_member(piece, nc.c.exponent - f.pre, cap_) == Membership::Yes) {
                    pe.bound = std::move(piece);
                    covered = true;
                }
            } catch (const DomainError&) {
            }
        }
        if (!covered) pe.params.emplace_back("generator", nc.c.exponent.str());
        if (f.pre.positive()) pe.params.emplace_back("generator", f.pre.str());
        return pe;
    }

    ProvenanceEntry resonance_entry(const Exponent& mu) const {
        return {"resonance", {{"exponent", mu.str()}, {"generator", mu.str()}}, GridSet(P_.rank())};
    }

    void node(PathState st) {
        Series F = evaluate(P_, st.p, spec_, cap_);
        const bool zeroF = F.empty();
        st.trace.push_back({st.p.terms().size(), zeroF ? std::nullopt : std::optional<Exponent>(F.v())});

        auto as = analyze_all(forms_, st.p, lower_limit(st.p, a0_), spec_, cap_);
        for (const auto& A : as)
            for (const auto& w : A.warnings)
                if (std::find(st.warnings.begin(), st.warnings.end(), w) == st.warnings.end()) st.warnings.push_back(w);
        auto cands = merged(as);

        std::vector<NodeCandidate> determined, inert;
        bool report = false, valued = false;
        std::optional<Exponent> reported;
        const auto& pol = opts_.policy;
        for (auto& c : cands) {
            if (c.c.coef && c.c.viable) {
                determined.push_back(c);
            } else if (!c.c.coef && c.c.viable) {
                if (pol.kind == ResonancePolicy::Kind::Report) {
                    report = true;
                    if (!reported) reported = c.c.exponent;
                    st.notes.push_back({c.c.exponent, "free coefficient reported"});
                    st.provenance.push_back(resonance_entry(c.c.exponent));
                } else if (pol.kind == ResonancePolicy::Kind::Value && sgn(pol.value) != 0) {
                    valued = true;
                    auto d = c;
                    d.c.coef = pol.value;
                    determined.push_back(d);
                } else {
                    st.notes.push_back({c.c.exponent, "free coefficient; policy zero keeps 0"});
                    st.provenance.push_back(resonance_entry(c.c.exponent));
                }
            } else {
                inert.push_back(c);
            }
        }
        std::stable_sort(determined.begin(), determined.end(),
                         [](const NodeCandidate& a, const NodeCandidate& b) { return candidate_less(a.c, b.c); });

        if (zeroF && !valued) emit(OutcomeKind::SolutionPrefix, st);
        if (report) {
            if (!zeroF) emit(OutcomeKind::BudgetExhausted, st, "resonance reported at " + reported->str());
            return;
        }
        if (st.p.terms().size() >= opts_.budget.maxTerms) {
            if (!zeroF) emit(OutcomeKind::BudgetExhausted, st, "term budget exhausted");
            return;
        }
        if (determined.empty()) {
            if (!zeroF) stabilize(st, F.v(), as, inert);
            return;
        }
        for (const auto& nc : determined) {
            if (branches_ >= opts_.budget.maxBranches) {
                emit(OutcomeKind::BudgetExhausted, st, "branch budget exhausted");
                return;
            }
            ++branches_;
            PathState child = st;
            const Rational coef = *nc.c.coef;
            if (child.forms_logged.insert(nc.form).second) {
                const auto& fp = forms_[nc.form].provenance;
                child.provenance.insert(child.provenance.end(), fp.begin(), fp.end());
            }
            child.provenance.push_back(step_entry(nc, coef));
            if (nc.c.w > 1 && nc.c.w != ~0u) {
                const ClassForm& f = forms_[nc.form];
                auto red = reduce_weierstrass(nc.normalized, nc.c.exponent - f.pre, coef, spec_, cap_);
                child.provenance.push_back(ProvenanceEntry{"weierstrass-reduction",
                                                           {{"w", std::to_string(red.w_before)},
                                                            {"class", std::to_string(f.k)},
                                                            {"w'", std::to_string(red.w_after)},
                                                            {"class'", std::to_string(f.k)}},
                                                           GridSet(P_.rank())});
                if (red.w_after >= red.w_before)
                    child.warnings.push_back("Weierstrass order did not drop at " + nc.c.exponent.str() +
                                             " (root of multiplicity " + std::to_string(red.w_after) + ")");
                if (++child.reductions > opts_.budget.maxReductionDepth) {
                    child.p += Series::monomial(nc.c.exponent, coef);
                    emit(OutcomeKind::BudgetExhausted, child, "reduction depth exhausted");
                    continue;
                }
            }
            child.p += Series::monomial(nc.c.exponent, coef);
            node(std::move(child));
        }
    }
};

}  // namespace

std::vector<SolveOutcome> solve(const DiffPoly& P, const DerivationSpec& spec, const SolveOptions& opts) {
    if (P.is_zero()) throw DomainError("the zero equation has every series as a solution");
    if (P.rank() != spec.rank()) throw DomainError("equation rank differs from the derivation rank");
    Search s(P, spec, opts);
    if (opts.leading) {
        auto red = reduce_to_positive(P, *opts.leading, spec, opts.budget.enumerationCap);
        if (red.provenance.empty())
            throw DomainError("leading exponent " + opts.leading->exp.str() + " exceeds alpha0 = " +
                              default_alpha0(P, spec).str() + "; solve without --leading");
        s.set_seed(*opts.leading, red.shift, std::move(red.poly), std::move(red.provenance));
    }
    return s.run();
}

}  // namespace hardy
