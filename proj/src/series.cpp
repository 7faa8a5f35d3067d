#include "hardy/series.hpp"

#include <algorithm>
#include <map>

namespace hardy {

std::optional<Exponent> min_bound(const std::optional<Exponent>& a, const std::optional<Exponent>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

Series::Series(std::size_t rank, std::vector<Term> terms, std::optional<Exponent> truncation)
    : rank_(rank), terms_(std::move(terms)), trunc_(std::move(truncation)) {
    normalize();
}

Series Series::constant(std::size_t rank, const Rational& c) {
    return Series(rank, {Term{Exponent::zero(rank), c}});
}

Series Series::monomial(const Exponent& e, const Rational& c) { return Series(e.rank(), {Term{e, c}}); }

Series Series::big_o(const Exponent& beta) { return Series(beta.rank(), {}, beta); }

void Series::normalize() {
    for (const auto& t : terms_)
        if (t.exp.rank() != rank_) throw DomainError("term rank differs from series rank");
    if (trunc_ && trunc_->rank() != rank_) throw DomainError("truncation rank differs from series rank");
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().exp == t.exp)
            merged.back().coef += t.coef;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [&](const Term& t) { return sgn(t.coef) == 0 || (trunc_ && t.exp >= *trunc_); });
    terms_ = std::move(merged);
}

ValuationResult Series::valuation() const {
    if (!terms_.empty()) return {terms_.front().exp, terms_.front().coef};
    if (trunc_) throw DomainError("valuation undetermined below " + trunc_->str());
    return {};
}

const Exponent& Series::v() const { return leading().exp; }

const Term& Series::leading() const {
    if (terms_.empty()) {
        if (trunc_) throw DomainError("valuation undetermined below " + trunc_->str());
        throw DomainError("valuation of the zero series is infinite");
    }
    return terms_.front();
}

std::optional<Exponent> Series::lower_bound() const {
    if (!terms_.empty()) return terms_.front().exp;
    return trunc_;
}

Rational Series::coefficient(const Exponent& e) const {
    if (trunc_ && e >= *trunc_) throw DomainError("coefficient at " + e.str() + " is beyond the truncation");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& x) { return t.exp < x; });
    return (it != terms_.end() && it->exp == e) ? it->coef : Rational(0);
}

Series Series::truncate(const Exponent& beta) const {
    return Series(rank_, terms_, min_bound(trunc_, beta));
}

Series Series::without_truncation() const { return Series(rank_, terms_); }

Series Series::operator-() const {
    Series r(*this);
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Series& Series::operator+=(const Series& o) {
    if (o.rank_ != rank_) throw DomainError("rank mismatch in series addition");
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    trunc_ = min_bound(trunc_, o.trunc_);
    normalize();
    return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series& Series::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coef *= c;
    return *this;
}

Series Series::mul(const Series& o, std::size_t cap) const {
    if (o.rank_ != rank_) throw DomainError("rank mismatch in series product");
    if (is_zero() || o.is_zero()) return Series(rank_);
    std::optional<Exponent> beta;
    if (trunc_) beta = min_bound(beta, *trunc_ + *o.lower_bound());
    if (o.trunc_) beta = min_bound(beta, *o.trunc_ + *lower_bound());
    std::map<Exponent, Rational> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Exponent e = a.exp + b.exp;
            if (beta && e >= *beta) break;  // o's terms are sorted
            acc[e] += a.coef * b.coef;
            if (acc.size() > cap) throw DomainError("non-accessible truncation: product exceeds enumeration cap");
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc) out.push_back(Term{e, c});
    return Series(rank_, std::move(out), beta);
}

Series Series::pow(unsigned k, std::size_t cap) const {
    Series r = constant(rank_, 1);
    Series base = *this;
    while (k) {
        if (k & 1u) r = r.mul(base, cap);
        k >>= 1u;
        if (k) base = base.mul(base, cap);
    }
    return r;
}

Series Series::shift(const Exponent& e, const Rational& c) const {
    if (sgn(c) == 0) return Series(rank_);
    Series r(*this);
    for (auto& t : r.terms_) {
        t.exp += e;
        t.coef *= c;
    }
    if (r.trunc_) *r.trunc_ += e;
    return r;
}

Series Series::divide_by_term(const Term& t) const {
    if (sgn(t.coef) == 0) throw DomainError("division by a zero term");
    return shift(-t.exp, Rational(1) / t.coef);
}

bool operator==(const Series& a, const Series& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_ && a.trunc_ == b.trunc_;
}

Series invert_unit(const Series& a, const Exponent& beta, std::size_t cap) {
    const Term& lead = a.leading();
    if (!lead.exp.is_zero()) throw DomainError("invert_unit requires v(a) = 0, got " + lead.exp.str());
    Rational c_inv = Rational(1) / lead.coef;
    Series u = a * c_inv - Series::constant(a.rank(), 1);
    Series result = Series::constant(a.rank(), 1).truncate(beta);
    if (u.is_zero() || !beta.positive()) return (result * c_inv);
    if (auto lb = u.lower_bound(); lb && !u.empty() && lb->leading_class() > beta.leading_class())
        throw DomainError("non-accessible truncation: powers of " + lb->str() + " never reach " + beta.str());
    Series power = Series::constant(a.rank(), 1);
    Series minus_u = -u;
    for (std::size_t j = 1;; ++j) {
        if (j > cap) throw DomainError("non-accessible truncation: inversion exceeds enumeration cap");
        power = power.mul(minus_u, cap).truncate(beta);
        if (power.empty()) {
            result = result.truncate(*power.truncation());
            break;
        }
        result += power;
    }
    return result * c_inv;
}

std::vector<Series> decompose_by_class(const Series& a) {
    if (!a.empty() && !a.v().positive())
        throw DomainError("decompose_by_class requires v(a) > 0, got " + a.v().str());
    std::vector<std::vector<Term>> parts(a.rank());
    for (const auto& t : a.terms()) parts[t.exp.leading_class() - 1].push_back(t);
    std::vector<Series> out;
    for (auto& p : parts) out.emplace_back(a.rank(), std::move(p));
    return out;
}

bool asymptotic(const Series& a, const Series& b) {
    auto va = a.valuation(), vb = b.valuation();
    return va.value == vb.value;
}

bool equivalent(const Series& a, const Series& b) {
    auto va = a.valuation(), vb = b.valuation();
    if (va.infinite() || vb.infinite()) return va.infinite() && vb.infinite();
    auto vd = (a - b).valuation();
    return vd.infinite() || *vd.value > std::min(*va.value, *vb.value);
}

}  // namespace hardy
