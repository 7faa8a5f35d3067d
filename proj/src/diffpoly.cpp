#include "hardy/diffpoly.hpp"

#include <set>

namespace hardy {

void DiffPoly::add(const MultiIndex& I, const Series& s) {
    if (I.size() != order_ + 1) throw DomainError("multi-index length must be order+1");
    if (s.rank() != rank_) throw DomainError("coefficient rank mismatch");
    auto it = coeffs_.find(I);
    if (it == coeffs_.end()) {
        if (!s.is_zero()) coeffs_.emplace(I, s);
        return;
    }
    it->second += s;
    if (it->second.is_zero()) coeffs_.erase(it);
}

const Series* DiffPoly::coefficient(const MultiIndex& I) const {
    auto it = coeffs_.find(I);
    return it == coeffs_.end() ? nullptr : &it->second;
}

Series DiffPoly::coefficient_or_zero(const MultiIndex& I) const {
    const Series* s = coefficient(I);
    return s ? *s : Series(rank_);
}

DiffPoly DiffPoly::with_derivation(std::size_t k) const {
    DiffPoly r = *this;
    r.deriv_ = k;
    return r;
}

DiffPoly DiffPoly::shift(const Exponent& e, const Rational& c) const {
    DiffPoly r(rank_, order_, deriv_);
    for (const auto& [I, s] : coeffs_) r.add(I, s.shift(e, c));
    return r;
}

DiffPoly DiffPoly::truncate(const Exponent& beta) const {
    DiffPoly r(rank_, order_, deriv_);
    for (const auto& [I, s] : coeffs_) r.add(I, s.truncate(beta));
    return r;
}

std::vector<Exponent> DiffPoly::support() const {
    std::set<Exponent> all;
    for (const auto& [I, s] : coeffs_)
        for (const auto& t : s.terms()) all.insert(t.exp);
    return {all.begin(), all.end()};
}

Exponent DiffPoly::min_support() const {
    std::optional<Exponent> best;
    for (const auto& [I, s] : coeffs_) best = min_bound(best, s.lower_bound());
    if (!best) throw DomainError("min Supp F of the zero polynomial");
    for (const auto& [I, s] : coeffs_)
        if (s.empty() && s.truncation() == best) throw DomainError("truncation hides min Supp F at " + best->str());
    return *best;
}

unsigned DiffPoly::max_length() const {
    unsigned m = 0;
    for (const auto& [I, s] : coeffs_) m = std::max(m, I.length());
    return m;
}

std::vector<Series> derivative_tower(const Series& y, const DerivationSpec& spec, std::size_t k, unsigned n,
                                     std::size_t cap) {
    std::vector<Series> tower{y};
    for (unsigned j = 1; j <= n; ++j) tower.push_back(derive_Dk(tower.back(), spec, k, 1, cap));
    return tower;
}

Series monomial_value(const MultiIndex& I, const std::vector<Series>& tower, std::size_t cap) {
    Series acc = Series::constant(tower.front().rank(), 1);
    for (std::size_t j = 0; j < I.size(); ++j)
        if (I[j]) acc = acc.mul(tower.at(j).pow(I[j], cap), cap);
    return acc;
}

Series evaluate(const DiffPoly& F, const Series& y, const DerivationSpec& spec, std::size_t cap) {
    if (y.rank() != F.rank()) throw DomainError("series rank differs from equation rank");
    auto tower = derivative_tower(y, spec, F.derivation(), F.order(), cap);
    Series out(F.rank());
    for (const auto& [I, c] : F.coeffs()) out += c.mul(monomial_value(I, tower, cap), cap);
    return out;
}

DiffPoly partial_derivative(const DiffPoly& F, const MultiIndex& I) {
    DiffPoly r(F.rank(), F.order(), F.derivation());
    for (const auto& [J, c] : F.coeffs()) {
        if (!I.divides(J)) continue;
        MultiIndex K = J - I;
        // J!/(J-I)!
        Natural f = J.factorial() / K.factorial();
        r.add(K, c * Rational(f));
    }
    return r;
}

Series taylor_check(const DiffPoly& F, const Series& p, const Series& q, const DerivationSpec& spec,
                    std::size_t cap) {
    Series lhs = evaluate(F, p + q, spec, cap);
    std::set<MultiIndex> js;
    for (const auto& [I, c] : F.coeffs()) {
        // every J <= I componentwise
        MultiIndex J(F.order());
        auto rec = [&](auto&& self, std::size_t pos) -> void {
            if (pos == I.size()) {
                js.insert(J);
                return;
            }
            for (unsigned v = 0; v <= I[pos]; ++v) {
                J[pos] = v;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
    }
    auto qt = derivative_tower(q, spec, F.derivation(), F.order(), cap);
    Series rhs(F.rank());
    for (const auto& J : js) {
        Series fj = evaluate(partial_derivative(F, J), p, spec, cap);
        rhs += fj.mul(monomial_value(J, qt, cap), cap) * (Rational(1) / Rational(J.factorial()));
    }
    return lhs - rhs;
}

Normalized weierstrass_normalize(const DiffPoly& F) {
    Exponent s = F.min_support();
    DiffPoly G = F.shift(-s);
    unsigned w = ~0u;
    for (const auto& [I, c] : G.coeffs())
        if (!c.empty() && c.v().is_zero()) w = std::min(w, I.length());
    return {std::move(G), w, std::move(s)};
}

GridSet support_set(const DiffPoly& F) { return GridSet::points(F.rank(), F.support()); }

GridSet evaluation_support_bound(const DiffPoly& F, std::size_t y_class, const GridSet& y_support,
                                 const DerivationSpec& spec, std::size_t cap) {
    const std::size_t r = F.rank();
    GridSet base = support_set(F);
    const std::size_t l = F.derivation();
    if (l != 0) {
        if (y_class < l) throw DomainError("evaluation bound needs y in classes >= the derivation index");
        return gs_sum(gs_sum(base, compute_script_T(spec, l, F.order(), cap)), gs_semigroup(y_support));
    }
    const std::size_t kk = y_class < spec.k0() ? y_class : spec.k0();
    GridSet shifted(r);
    for (unsigned i = 0; i <= F.order(); ++i)
        shifted.unite(gs_sum(y_support, GridSet::points(r, {Rational(i) * spec.theta(kk)})));
    return gs_sum(gs_sum(base, compute_script_T(spec, kk, F.order(), cap)), gs_semigroup(shifted));
}

}  // namespace hardy
