#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/exponent.hpp"

namespace hardy {

struct Term {
    Exponent exp;
    Rational coef;
    friend bool operator==(const Term&, const Term&) = default;
};

// v(a) and the leading coefficient; an empty value encodes v(0) = infinity.
struct ValuationResult {
    std::optional<Exponent> value;
    std::optional<Rational> leadingCoefficient;
    bool infinite() const { return !value.has_value(); }
};

// Finite sum of terms, exact below an optional truncation beta and unknown at and above it.
class Series {
public:
    explicit Series(std::size_t rank = 1) : rank_(rank) {}
    Series(std::size_t rank, std::vector<Term> terms, std::optional<Exponent> truncation = std::nullopt);

    static Series constant(std::size_t rank, const Rational& c);
    static Series monomial(const Exponent& e, const Rational& c = 1);
    // Unknown everywhere at and above beta.
    static Series big_o(const Exponent& beta);

    std::size_t rank() const { return rank_; }
    const std::vector<Term>& terms() const { return terms_; }
    const std::optional<Exponent>& truncation() const { return trunc_; }
    bool truncated() const { return trunc_.has_value(); }
    // No known terms (exact zero, or zero below the truncation).
    bool empty() const { return terms_.empty(); }
    // Exactly zero: no terms and no truncation.
    bool is_zero() const { return terms_.empty() && !trunc_; }
    bool is_term() const { return terms_.size() == 1 && !trunc_; }

    ValuationResult valuation() const;
    // Throws on the zero series; "valuation undetermined" when only O(beta) is left.
    const Exponent& v() const;
    const Term& leading() const;
    // Smallest exponent that may carry a nonzero coefficient: first term, else beta.
    std::optional<Exponent> lower_bound() const;
    Rational coefficient(const Exponent& e) const;

    Series truncate(const Exponent& beta) const;
    Series without_truncation() const;
    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Rational& c);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Rational& c) { return a *= c; }
    friend Series operator*(const Rational& c, Series a) { return a *= c; }

    Series mul(const Series& o, std::size_t cap = kDefaultEnumCap) const;
    friend Series operator*(const Series& a, const Series& b) { return a.mul(b); }
    Series pow(unsigned k, std::size_t cap = kDefaultEnumCap) const;
    // Multiplication by c * t^e, exact.
    Series shift(const Exponent& e, const Rational& c = 1) const;
    // Division by a single nonzero term.
    Series divide_by_term(const Term& t) const;

    // Exact equality of terms and truncation.
    friend bool operator==(const Series& a, const Series& b);

    std::string str() const;
    static Series parse(std::string_view text, std::size_t rank);

private:
    void normalize();
    std::size_t rank_;
    std::vector<Term> terms_;
    std::optional<Exponent> trunc_;
};

// Minimum of two optional bounds where nullopt means +infinity.
std::optional<Exponent> min_bound(const std::optional<Exponent>& a, const std::optional<Exponent>& b);

// 1/a to truncation beta for v(a) = 0.
Series invert_unit(const Series& a, const Exponent& beta, std::size_t cap = kDefaultEnumCap);

// Components a_1..a_r by leading class of each exponent; requires v(a) > 0.
std::vector<Series> decompose_by_class(const Series& a);

// a ~ b (equivalent) and a asymp b (same valuation).
bool asymptotic(const Series& a, const Series& b);
bool equivalent(const Series& a, const Series& b);

}  // namespace hardy
