#include "hardy/conjugation.hpp"

namespace hardy {

namespace {

std::vector<Exponent> exps(const Series& s) {
    std::vector<Exponent> out;
    for (const auto& t : s.terms()) out.push_back(t.exp);
    return out;
}

std::size_t min_class(const Series& s) {
    std::size_t c = s.rank() + 1;
    for (const auto& t : s.terms()) c = std::min(c, t.exp.leading_class() ? t.exp.leading_class() : s.rank() + 1);
    return c;
}

std::size_t max_class(const Series& s) {
    std::size_t c = 0;
    for (const auto& t : s.terms()) c = std::max(c, t.exp.leading_class());
    return c;
}

GridSet additive_bound(const DiffPoly& F, const Series& a, const DerivationSpec& spec, std::size_t cap) {
    const std::size_t r = F.rank(), k = F.derivation();
    const unsigned n = F.order();
    GridSet base = support_set(F);
    if (a.is_zero()) return base;
    if (a.truncated()) throw DomainError("support bound needs an exact conjugating series");
    GridSet sa = GridSet::points(r, exps(a));
    if (k >= 1 && min_class(a) >= k)
        return gs_sum(gs_sum(base, compute_script_T(spec, k, n, cap)), gs_semigroup(sa));
    if (k == 0 && min_class(a) == max_class(a)) {
        const std::size_t l = min_class(a);
        const std::size_t kk = l < spec.k0() ? l : spec.k0();
        GridSet shifted(r);
        for (unsigned i = 0; i <= n; ++i) shifted.unite(gs_sum(sa, GridSet::points(r, {Rational(i) * spec.theta(kk)})));
        return gs_sum(gs_sum(base, compute_script_T(spec, kk, n, cap)), gs_semigroup(shifted));
    }
    // Every new coefficient is a sum of c_I times products of derivatives of a.
    GridSet gens(r);
    for (const auto& s : derivative_tower(a, spec, k, n, cap)) gens.unite(GridSet::points(r, exps(s)));
    return gs_sum(base, gs_semigroup(gens));
}

GridSet multiplicative_bound(const DiffPoly& F, const Exponent& lam, const DerivationSpec& spec, std::size_t cap) {
    const std::size_t r = F.rank(), k = F.derivation();
    const unsigned n = F.order();
    GridSet base = support_set(F);
    if (lam.is_zero()) return base;
    const std::size_t c = lam.leading_class();
    auto per_index = [&](std::size_t kk, bool with_theta) {
        GridSet g(r);
        for (const auto& [I, s] : F.coeffs()) {
            unsigned jmax = with_theta ? I.weight() : 0;
            for (unsigned j = 0; j <= jmax; ++j) {
                Exponent sh = Rational(I.length()) * lam + Rational(j) * spec.theta(kk);
                g.unite(GridSet::points(r, exps(s.shift(sh))));
            }
        }
        return gs_sum(g, compute_script_T(spec, kk, n, cap));
    };
    if (k >= 1) {
        if (c < k) throw DomainError("multiplier outside the derivation's classes");
        if (lam.positive()) return gs_sum(gs_add_generator(base, lam), compute_script_T(spec, k, n, cap));
        return per_index(k, false);
    }
    if (c < spec.k0()) {
        GridSet acc = gs_sum(base, compute_script_T(spec, c, n, cap));
        for (unsigned i = 0; i <= n; ++i) acc = gs_add_generator(acc, lam + Rational(i) * spec.theta(c));
        return acc;
    }
    return per_index(spec.k0(), true);
}

GridSet change_bound(const DiffPoly& F, std::size_t l, const DerivationSpec& spec, std::size_t cap) {
    const std::size_t k = F.derivation();
    const unsigned n = F.order();
    GridSet base = support_set(F);
    if (k == l) return base;
    if (k >= 1) return gs_sum(base, compute_script_T(spec, k, n, cap));
    const Exponent& th = spec.theta(l);
    if (th.negative()) return gs_sum(gs_add_generator(base, -th), compute_script_T(spec, l, n, cap));
    const std::size_t kk = l < spec.k0() ? l : spec.k0();
    GridSet acc = gs_sum(base, compute_script_T(spec, kk, n, cap));
    if (!spec.theta(kk).is_zero()) acc = gs_add_generator(acc, spec.theta(kk));
    return acc;
}

}  // namespace

GridSet transform_support_bound(const TransformDescriptor& t, const DiffPoly& F, const DerivationSpec& spec,
                                std::size_t cap) {
    switch (t.kind) {
        case TransformKind::Additive:
            return additive_bound(F, t.by, spec, cap);
        case TransformKind::Multiplicative:
            if (!t.by.is_term()) throw DomainError("multiplicative bound needs a single term");
            return multiplicative_bound(F, t.by.leading().exp, spec, cap);
        case TransformKind::ChangeDerivation:
            return change_bound(F, t.target, spec, cap);
    }
    throw DomainError("unknown transformation");
}

}  // namespace hardy
