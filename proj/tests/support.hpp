#pragma once

#include <random>
#include <string>
#include <vector>

#include "hardy/solver.hpp"

namespace testing_support {

using namespace hardy;

inline DerivationSpec spec_A() { return DerivationSpec::validated(1, {Series::parse("-1*t1^1", 1)}); }
inline DerivationSpec spec_B() {
    return DerivationSpec::validated(3, {Series::parse("-1", 3), Series::parse("-1*t2^1", 3),
                                         Series::parse("-1*t2^1*t3^1", 3)});
}
inline DerivationSpec spec_C() {
    return DerivationSpec::validated(2, {Series::parse("1*t2^-2", 2), Series::parse("1*t2^-1", 2)});
}
inline DerivationSpec spec_D() {
    return DerivationSpec::validated(2, {Series::parse("-1*t1^1", 2), Series::parse("-1*t1^1*t2^1", 2)});
}
inline std::vector<DerivationSpec> reference_specs() { return {spec_A(), spec_B(), spec_C()}; }

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational small_rational(int lo, int hi, bool nonzero = false) {
        for (;;) {
            Rational q(uniform(lo * 2, hi * 2), 2);
            q.canonicalize();
            if (!nonzero || sgn(q) != 0) return q;
        }
    }

    Exponent exponent(std::size_t r, int lo = -2, int hi = 3) {
        Exponent e(r);
        for (std::size_t i = 0; i < r; ++i) e[i] = small_rational(lo, hi);
        return e;
    }

    Exponent nonzero_exponent(std::size_t r) {
        for (;;) {
            auto e = exponent(r);
            if (!e.is_zero()) return e;
        }
    }

    Exponent positive_exponent(std::size_t r) {
        for (;;) {
            auto e = exponent(r);
            if (e.positive()) return e;
        }
    }

    Series series(std::size_t r, std::size_t max_terms = 3, bool positive = false) {
        std::vector<Term> ts;
        const int n = uniform(1, static_cast<int>(max_terms));
        for (int i = 0; i < n; ++i)
            ts.push_back({positive ? positive_exponent(r) : exponent(r), small_rational(-3, 3, true)});
        std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
        ts.erase(std::unique(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.exp == b.exp; }),
                 ts.end());
        return Series(r, ts);
    }

    // Random differential polynomial of the given order with at most `monomials` coefficients.
    DiffPoly diffpoly(std::size_t r, unsigned n, std::size_t deriv, std::size_t monomials = 3, unsigned max_len = 2) {
        DiffPoly F(r, n, deriv);
        while (F.coeffs().size() < monomials) {
            MultiIndex I(n);
            const int len = uniform(0, static_cast<int>(max_len));
            for (int a = 0; a < len; ++a) I[uniform(0, static_cast<int>(n))] += 1;
            F.add(I, series(r, 2));
        }
        return F;
    }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
};

inline Series monomial_series(const Exponent& e, const Rational& c = 1) { return Series::monomial(e, c); }

}  // namespace testing_support
