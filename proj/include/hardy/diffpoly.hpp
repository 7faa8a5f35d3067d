#pragma once

#include <map>
#include <vector>

#include "hardy/derivation.hpp"
#include "hardy/multiindex.hpp"

namespace hardy {

// F = sum_I c_I y^{i0} (D y)^{i1} ... (D^n y)^{in}, with D = D_k (k = 0 is the base derivation).
class DiffPoly {
public:
    using Coeffs = std::map<MultiIndex, Series>;

    DiffPoly(std::size_t rank, unsigned order, std::size_t derivation)
        : rank_(rank), order_(order), deriv_(derivation) {}

    std::size_t rank() const { return rank_; }
    unsigned order() const { return order_; }
    std::size_t derivation() const { return deriv_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Adds s to the coefficient of I; drops coefficients that become exactly zero.
    void add(const MultiIndex& I, const Series& s);
    const Series* coefficient(const MultiIndex& I) const;
    Series coefficient_or_zero(const MultiIndex& I) const;

    DiffPoly with_derivation(std::size_t k) const;
    // Every coefficient multiplied by c t^e.
    DiffPoly shift(const Exponent& e, const Rational& c = 1) const;
    DiffPoly truncate(const Exponent& beta) const;
    // Exponents of all known coefficient terms, sorted, unique.
    std::vector<Exponent> support() const;
    // Smallest exponent carrying a coefficient term; throws if a truncation hides it.
    Exponent min_support() const;
    unsigned max_length() const;

    friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

private:
    std::size_t rank_;
    unsigned order_;
    std::size_t deriv_;
    Coeffs coeffs_;
};

// D^0 y .. D^n y under the polynomial's derivation.
std::vector<Series> derivative_tower(const Series& y, const DerivationSpec& spec, std::size_t k, unsigned n,
                                     std::size_t cap = kDefaultEnumCap);
// prod_j (tower[j])^{I_j}.
Series monomial_value(const MultiIndex& I, const std::vector<Series>& tower, std::size_t cap = kDefaultEnumCap);

Series evaluate(const DiffPoly& F, const Series& y, const DerivationSpec& spec, std::size_t cap = kDefaultEnumCap);
DiffPoly partial_derivative(const DiffPoly& F, const MultiIndex& I);
Series taylor_check(const DiffPoly& F, const Series& p, const Series& q, const DerivationSpec& spec,
                    std::size_t cap = kDefaultEnumCap);

struct Normalized {
    DiffPoly poly;
    unsigned w;
    Exponent shift;
};
Normalized weierstrass_normalize(const DiffPoly& F);

struct IndicialData {
    std::vector<MultiIndex> witnesses;       // A
    std::vector<Rational> pi;                // coefficients of pi, index = degree
    std::vector<Rational> rational_roots;    // positive, sorted, distinct
    bool irrational_root = false;            // a positive irrational root exists
};
IndicialData indicial_data(const DiffPoly& F);
// pi evaluated at x.
Rational eval_poly(const std::vector<Rational>& p, const Rational& x);
// Positive rational roots and an irrational-root flag for a univariate polynomial.
std::pair<std::vector<Rational>, bool> positive_roots(std::vector<Rational> p);

// Superset of Supp F(y) for y with terms in classes >= y_class.
GridSet evaluation_support_bound(const DiffPoly& F, std::size_t y_class, const GridSet& y_support,
                                 const DerivationSpec& spec, std::size_t cap = kDefaultEnumCap);
GridSet support_set(const DiffPoly& F);

}  // namespace hardy
