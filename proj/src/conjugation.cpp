#include "hardy/conjugation.hpp"

#include <set>

namespace hardy {

std::string ProvenanceEntry::param(const std::string& key) const {
    for (const auto& [k, v] : params)
        if (k == key) return v;
    return {};
}

namespace detail {

// Replaces each factor D^j y of F by the linear form sum_i L[j][i] D'^i z and collects.
DiffPoly substitute(const DiffPoly& F, const std::vector<std::vector<Series>>& L, std::size_t new_deriv,
                    std::size_t cap) {
    const unsigned n = F.order();
    DiffPoly out(F.rank(), n, new_deriv);
    for (const auto& [I, c] : F.coeffs()) {
        std::map<MultiIndex, Series> acc{{MultiIndex(n), c}};
        for (unsigned j = 0; j <= n; ++j) {
            for (unsigned rep = 0; rep < I[j]; ++rep) {
                std::map<MultiIndex, Series> next;
                for (const auto& [K, s] : acc) {
                    for (unsigned i = 0; i < L[j].size(); ++i) {
                        if (L[j][i].is_zero()) continue;
                        MultiIndex K2 = K;
                        K2[i] += 1;
                        auto prod = s.mul(L[j][i], cap);
                        auto it = next.find(K2);
                        if (it == next.end())
                            next.emplace(K2, std::move(prod));
                        else
                            it->second += prod;
                    }
                }
                acc = std::move(next);
            }
        }
        for (const auto& [K, s] : acc) out.add(K, s);
    }
    return out;
}

GridSet computed_support(const DiffPoly& G) { return support_set(G); }

}  // namespace detail

using detail::substitute;

Transformed additive_conjugate(const DiffPoly& F, const Series& a, const DerivationSpec& spec, std::size_t cap) {
    DiffPoly out(F.rank(), F.order(), F.derivation());
    std::set<MultiIndex> js;
    for (const auto& [I, c] : F.coeffs()) {
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
    for (const auto& J : js) {
        Series v = evaluate(partial_derivative(F, J), a, spec, cap);
        out.add(J, v * (Rational(1) / Rational(J.factorial())));
    }
    ProvenanceEntry pe{"additive", {{"by", a.str()}}, GridSet(F.rank())};
    try {
        pe.bound = transform_support_bound({TransformKind::Additive, a, 0}, F, spec, cap);
    } catch (const DomainError&) {
        pe.bound = detail::computed_support(out);
        pe.params.emplace_back("bound", "computed");
    }
    return {std::move(out), {std::move(pe)}};
}

Transformed multiplicative_conjugate(const DiffPoly& F, const Term& m, const DerivationSpec& spec, std::size_t cap) {
    if (sgn(m.coef) == 0) throw DomainError("multiplicative conjugation by zero");
    const unsigned n = F.order();
    Series ms = Series::monomial(m.exp, m.coef);
    auto mt = derivative_tower(ms, spec, F.derivation(), n, cap);
    std::vector<std::vector<Series>> L(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        Natural binom = 1;
        for (unsigned i = 0; i <= j; ++i) {
            L[j].push_back(mt[j - i] * Rational(binom));
            binom = binom * (j - i) / (i + 1);
        }
    }
    DiffPoly out = substitute(F, L, F.derivation(), cap);
    ProvenanceEntry pe{"multiplicative", {{"by", ms.str()}}, GridSet(F.rank())};
    try {
        pe.bound = transform_support_bound({TransformKind::Multiplicative, ms, 0}, F, spec, cap);
    } catch (const DomainError&) {
        pe.bound = detail::computed_support(out);
        pe.params.emplace_back("bound", "computed");
    }
    return {std::move(out), {std::move(pe)}};
}

}  // namespace hardy
