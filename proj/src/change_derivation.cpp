#include <sstream>

#include "hardy/conjugation.hpp"

namespace hardy {

namespace detail {
DiffPoly substitute(const DiffPoly& F, const std::vector<std::vector<Series>>& L, std::size_t new_deriv,
                    std::size_t cap);
GridSet computed_support(const DiffPoly& G);
}  // namespace detail

QMatrix qji_coefficients(const DerivationSpec& spec, std::size_t k, std::size_t l, unsigned n, std::size_t cap) {
    if (l < 1 || l > spec.rank() || k > spec.rank()) throw DomainError("class index out of range");
    const std::size_t r = spec.rank();
    Series m = Series::monomial(spec.d(l).exp, spec.d(l).coef);
    if (k) m = m.divide_by_term(spec.d(k));
    QMatrix Q{k, l, n, m, {}};
    Q.q.assign(n + 1, {});
    for (unsigned i = 1; i <= n; ++i) {
        Q.q[i].assign(i + 1, Series(r));
        for (unsigned j = 1; j <= i; ++j) {
            if (i == 1) {
                Q.q[1][1] = m;
                continue;
            }
            Series v(r);
            if (j <= i - 1) v += derive_Dk(Q.q[i - 1][j], spec, k, 1, cap);
            if (j >= 2) v += Q.q[i - 1][j - 1].mul(m, cap);
            Q.q[i][j] = std::move(v);
        }
    }
    return Q;
}

namespace {

void mpoly_add(MPoly& p, std::vector<unsigned> key, const Natural& c) {
    while (!key.empty() && key.back() == 0) key.pop_back();
    p[key] += c;
}

MPoly mpoly_derive(const MPoly& p) {
    MPoly out;
    for (const auto& [e, c] : p)
        for (std::size_t a = 0; a < e.size(); ++a) {
            if (!e[a]) continue;
            auto f = e;
            f[a] -= 1;
            if (f.size() <= a + 1) f.resize(a + 2, 0);
            f[a + 1] += 1;
            mpoly_add(out, f, c * e[a]);
        }
    return out;
}

MPoly mpoly_times_m(const MPoly& p) {
    MPoly out;
    for (const auto& [e, c] : p) {
        auto f = e;
        if (f.empty()) f.push_back(0);
        f[0] += 1;
        mpoly_add(out, f, c);
    }
    return out;
}

}  // namespace

std::vector<std::vector<MPoly>> qji_symbolic(unsigned n) {
    std::vector<std::vector<MPoly>> q(n + 1);
    for (unsigned i = 1; i <= n; ++i) {
        q[i].assign(i + 1, MPoly{});
        for (unsigned j = 1; j <= i; ++j) {
            if (i == 1) {
                q[1][1][{1}] = 1;
                continue;
            }
            MPoly v;
            if (j <= i - 1)
                for (const auto& [e, c] : mpoly_derive(q[i - 1][j])) mpoly_add(v, e, c);
            if (j >= 2)
                for (const auto& [e, c] : mpoly_times_m(q[i - 1][j - 1])) mpoly_add(v, e, c);
            q[i][j] = std::move(v);
        }
    }
    return q;
}

std::string mpoly_str(const MPoly& p) {
    std::ostringstream os;
    bool first = true;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const auto& [e, c] = *it;
        os << (first ? "" : " + ");
        first = false;
        if (c != 1) os << c.get_str() << '*';
        bool firstf = true;
        for (std::size_t a = 0; a < e.size(); ++a) {
            if (!e[a]) continue;
            os << (firstf ? "" : "*");
            firstf = false;
            std::string f = a == 0 ? "m" : a == 1 ? "Dm" : "D^" + std::to_string(a) + "m";
            if (e[a] == 1)
                os << f;
            else if (a == 0)
                os << f << '^' << e[a];
            else
                os << '(' << f << ")^" << e[a];
        }
    }
    return first ? "0" : os.str();
}

Transformed change_derivation(const DiffPoly& F, std::size_t l, const DerivationSpec& spec, std::size_t cap) {
    const std::size_t k = F.derivation();
    const unsigned n = F.order();
    if (l == k) return {F, {ProvenanceEntry{"change-derivation", {{"from", std::to_string(k)}, {"to", std::to_string(l)}},
                                            support_set(F)}}};
    if (l < 1 || l > spec.rank() || (k != 0 && l < k))
        throw DomainError("change of derivation " + std::to_string(k) + "->" + std::to_string(l) +
                          " is only defined towards a larger class index");
    std::vector<ProvenanceEntry> trail;
    DiffPoly src = F;
    if (k == 0 && spec.theta(l).negative()) {
        if (l > spec.k0())
            throw DomainError("change of derivation 0->" + std::to_string(l) +
                              " refused: v(d_l) < 0 and l > k0, so derivatives of infinitesimal solutions are not "
                              "infinitesimal");
        Exponent lam = -(Rational(n) * spec.theta(l));
        auto pre = multiplicative_conjugate(src, Term{lam, 1}, spec, cap);
        pre.provenance.back().params.emplace_back("pre-step", "y = t^" + lam.str() + " z");
        trail.push_back(pre.provenance.back());
        src = std::move(pre.poly);
    }
    QMatrix Q = qji_coefficients(spec, k, l, n, cap);
    std::vector<std::vector<Series>> L(n + 1);
    L[0] = {Series::constant(F.rank(), 1)};
    for (unsigned i = 1; i <= n; ++i) {
        L[i].push_back(Series(F.rank()));
        for (unsigned j = 1; j <= i; ++j) L[i].push_back(Q.at(j, i));
    }
    DiffPoly out = detail::substitute(src, L, l, cap);
    ProvenanceEntry pe{"change-derivation", {{"from", std::to_string(k)}, {"to", std::to_string(l)}}, GridSet(F.rank())};
    try {
        pe.bound = transform_support_bound({TransformKind::ChangeDerivation, Series(F.rank()), l}, F, spec, cap);
    } catch (const DomainError&) {
        pe.bound = detail::computed_support(out);
        pe.params.emplace_back("bound", "computed");
    }
    trail.push_back(std::move(pe));
    return {std::move(out), std::move(trail)};
}

}  // namespace hardy
