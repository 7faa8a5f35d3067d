#include "hardy/derivation.hpp"

#include <sstream>

namespace hardy {

bool SpecReport::has(std::string_view axiom) const {
    for (const auto& v : violations)
        if (v.axiom == axiom) return true;
    return false;
}

std::string SpecReport::summary() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i)
        os << (i ? "; " : "") << violations[i].axiom << ": " << violations[i].detail;
    return os.str();
}

DerivationSpec::DerivationSpec(std::size_t rank, std::vector<Series> log_derivatives)
    : rank_(rank), logd_(std::move(log_derivatives)) {
    if (rank_ == 0) throw DomainError("rank must be positive");
    if (logd_.size() != rank_)
        throw DomainError("expected " + std::to_string(rank_) + " logarithmic derivatives, got " +
                          std::to_string(logd_.size()));
    for (std::size_t k = 1; k <= rank_; ++k) {
        const Series& L = logd_[k - 1];
        if (L.rank() != rank_) throw DomainError("logarithmic derivative rank mismatch at k=" + std::to_string(k));
        if (L.empty()) throw DomainError("HD0: t_" + std::to_string(k) + "'/t_" + std::to_string(k) + " has no leading term");
        ClassConstants c{L.leading(), L.v() + Exponent::unit(rank_, k), L.v(), std::nullopt};
        if (auto tk = c.theta.leading_class()) c.tilde_k = tk;
        consts_.push_back(std::move(c));
    }
    k0_ = rank_;
    for (std::size_t k = 1; k <= rank_; ++k)
        if (consts_[k - 1].tilde_k == k) {
            k0_ = k;
            break;
        }
}

DerivationSpec DerivationSpec::validated(std::size_t rank, std::vector<Series> log_derivatives) {
    DerivationSpec s(rank, std::move(log_derivatives));
    auto rep = s.validate();
    if (!rep.ok()) throw DomainError("invalid derivation spec: " + rep.summary());
    return s;
}

SpecReport DerivationSpec::validate() const {
    SpecReport rep;
    auto at = [](std::size_t k, std::size_t l) {
        return "k=" + std::to_string(k) + "->" + std::to_string(l);
    };
    for (std::size_t k = 1; k < rank_; ++k) {
        if (!(tau(k) > tau(k + 1)))
            rep.violations.push_back({"HD2", at(k, k + 1) + ": v(t_k')=" + tau(k).str() + " is not > v(t_{k+1}')=" +
                                                 tau(k + 1).str()});
        if (!(theta(k) < theta(k + 1)))
            rep.violations.push_back({"HD3", at(k, k + 1) + ": v(t_k'/t_k)=" + theta(k).str() +
                                                 " is not < v(t_{k+1}'/t_{k+1})=" + theta(k + 1).str()});
        // Conditions on the matrix of tau coordinates.
        const Exponent &a = tau(k), &b = tau(k + 1);
        for (std::size_t j = 1; j < k; ++j)
            if (a[j - 1] != b[j - 1])
                rep.violations.push_back({"TAU-MATRIX", at(k, k + 1) + ": coordinate " + std::to_string(j) +
                                                            " of tau differs"});
        if (b[k - 1] != a[k - 1] - 1)
            rep.violations.push_back({"TAU-MATRIX", at(k, k + 1) + ": tau^(k+1)_k must equal tau^(k)_k - 1"});
        Exponent lhs(rank_), rhs(rank_);
        for (std::size_t j = k + 1; j <= rank_; ++j) {
            lhs[j - 1] = b[j - 1] - (j == k + 1 ? 1 : 0);
            rhs[j - 1] = a[j - 1];
        }
        if (!(lhs > rhs))
            rep.violations.push_back({"TAU-MATRIX", at(k, k + 1) + ": tail inequality fails"});
    }
    for (std::size_t k = 2; k <= rank_; ++k)
        for (std::size_t l = 1; l < k; ++l) {
            Exponent diff = theta(k) - theta(l);
            std::size_t m = diff.leading_class();
            if (m == 0 || m < l || sgn(diff[m - 1]) <= 0)
                rep.violations.push_back({"VAL-DK", "k=" + std::to_string(k) + ",l=" + std::to_string(l) +
                                                        ": v(d_k/d_l)=" + diff.str() +
                                                        " lacks a positive leading coordinate at m>=l"});
        }
    return rep;
}

Series derive_D0(const Series& a, const DerivationSpec& spec, std::size_t cap) {
    if (a.rank() != spec.rank()) throw DomainError("series rank differs from spec rank");
    Series out(a.rank());
    if (a.truncated()) {
        // Unknown terms t^alpha with alpha >= beta differentiate to valuations >= beta + min theta.
        Exponent lowest = spec.theta(1);
        for (std::size_t k = 2; k <= spec.rank(); ++k) lowest = std::min(lowest, spec.theta(k));
        out = Series::big_o(*a.truncation() + lowest);
    }
    for (std::size_t k = 1; k <= spec.rank(); ++k) {
        std::vector<Term> weighted;
        for (const auto& t : a.terms())
            if (sgn(t.exp[k - 1]) != 0) weighted.push_back(Term{t.exp, t.coef * t.exp[k - 1]});
        if (weighted.empty()) continue;
        out += Series(a.rank(), std::move(weighted)).mul(spec.log_derivatives()[k - 1], cap);
    }
    return out;
}

Series derive_Dk(const Series& a, const DerivationSpec& spec, std::size_t k, unsigned i, std::size_t cap) {
    if (k > spec.rank()) throw DomainError("derivation index out of range");
    Series cur = a;
    for (unsigned j = 0; j < i; ++j) {
        cur = derive_D0(cur, spec, cap);
        if (k) cur = cur.divide_by_term(spec.d(k));
    }
    return cur;
}

Series DerivationSpec::derive(const Series& a, std::size_t k, unsigned i, std::size_t cap) const {
    return derive_Dk(a, *this, k, i, cap);
}

Exponent DerivationSpec::alpha0(unsigned n) const {
    Exponent cand = -(Rational(n) * theta(k0_));
    return std::max(Exponent::zero(rank_), cand);
}

PredictedValuation predicted_dk_derivative_valuation(const DerivationSpec& spec, std::size_t k, unsigned i) {
    if (i == 0) throw DomainError("predicted valuation requires i >= 1");
    const auto& c = spec.cls(k);
    if (c.theta.is_zero()) return ZeroDerivative{};
    const std::size_t k0 = spec.k0();
    const Exponent& th0 = spec.theta(k0);
    const Rational ri(i);
    if (k >= k0) return ExactValuation{c.theta + ri * th0};
    const std::size_t kt = *c.tilde_k;
    if (kt < k0) return ExactValuation{c.theta + ri * spec.theta(kt)};
    if (kt > k0) return ExactValuation{c.theta + spec.theta(kt) + Rational(i - 1) * th0};
    // tilde k == k0: resonant when theta^(k)_{k0} = -j theta^(k0)_{k0} for a positive integer j.
    Rational j = -c.theta[k0 - 1] / th0[k0 - 1];
    bool resonant = sgn(j) > 0 && j.get_den() == 1;
    if (!resonant || Rational(i) <= j) return ExactValuation{c.theta + ri * th0};
    CandidateValuations out;
    for (std::size_t kh = k0 + 1; kh <= spec.rank(); ++kh)
        out.values.push_back(c.theta + spec.theta(kh) + Rational(i - 1) * th0);
    return out;
}

GridSet compute_script_T(const DerivationSpec& spec, std::size_t k, unsigned n, std::size_t cap) {
    if (k < 1 || k > spec.rank()) throw DomainError("script T needs a class index in 1..r");
    const std::size_t r = spec.rank();
    GridSet acc = GridSet::zero(r);
    for (unsigned i = 1; i <= n; ++i) {
        for (std::size_t l = k; l <= r; ++l) {
            Series tl = Series::monomial(Exponent::unit(r, l));
            Series q = derive_Dk(tl, spec, k, i, cap).shift(-Exponent::unit(r, l));
            if (q.truncated())
                throw DomainError("truncation too coarse to determine Supp D_k^i(t_l)/t_l");
            std::vector<Exponent> supp;
            for (const auto& t : q.terms()) supp.push_back(t.exp);
            acc = gs_sum(acc, gs_semigroup(GridSet::points(r, supp)));
        }
    }
    return acc;
}

}  // namespace hardy
