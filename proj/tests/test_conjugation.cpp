#include "doctest.h"
#include "support.hpp"

using namespace hardy;
using namespace testing_support;

namespace {
Exponent E(std::string_view s) { return Exponent::parse(s); }
Series S(std::string_view s, std::size_t r) { return Series::parse(s, r); }

DiffPoly poly(std::size_t r, unsigned n, std::size_t k, std::initializer_list<std::pair<MultiIndex, const char*>> cs) {
    DiffPoly F(r, n, k);
    for (const auto& [I, s] : cs) F.add(I, S(s, r));
    return F;
}

Series D(const Series& y, const DerivationSpec& spec, std::size_t k, unsigned i) {
    if (k != 0) return derive_Dk(y, spec, k, i);
    Series a = y;
    for (unsigned j = 0; j < i; ++j) a = derive_D0(a, spec);
    return a;
}

// Class pairs (k, l) for which a change of derivation is defined.
std::vector<std::pair<std::size_t, std::size_t>> pairs(const DerivationSpec& spec) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t l = 1; l <= spec.rank(); ++l) {
        if (!spec.theta(l).negative() || l <= spec.k0()) out.push_back({0, l});
        for (std::size_t k = 1; k < l; ++k) out.push_back({k, l});
    }
    return out;
}

void check_bound(const Transformed& t) {
    for (const auto& [I, c] : t.poly.coeffs())
        for (const auto& term : c.terms()) {
            const std::string at = term.exp.str();
            CAPTURE(at);
            CHECK(gs_member(t.bound(), term.exp) == Membership::Yes);
        }
}
}  // namespace

TEST_CASE("additive conjugation examples") {
    auto A = spec_A();
    auto sq = poly(1, 0, 0, {{{2}, "1"}});
    CHECK(additive_conjugate(sq, S("1*t1^1", 1), A).poly == poly(1, 0, 0, {{{2}, "1"}, {{1}, "2*t1^1"}, {{0}, "1*t1^2"}}));
    auto F = poly(1, 1, 1, {{{0, 1}, "1"}, {{1, 0}, "-2"}, {{0, 0}, "1*t1^1"}});
    CHECK(additive_conjugate(F, S("1*t1^1", 1), A).poly == poly(1, 1, 1, {{{0, 1}, "1"}, {{1, 0}, "-2"}}));
    CHECK(additive_conjugate(F, Series(1), A).poly == F);
}

TEST_CASE("multiplicative conjugation examples") {
    auto A = spec_A();
    auto d = poly(1, 1, 0, {{{0, 1}, "1"}});
    auto h = multiplicative_conjugate(d, Term{E("(3)"), 1}, A).poly;
    CHECK(h == poly(1, 1, 0, {{{1, 0}, "-3*t1^4"}, {{0, 1}, "1*t1^3"}}));
    auto F = poly(1, 1, 1, {{{0, 1}, "1"}, {{1, 0}, "-2"}, {{0, 0}, "1*t1^1"}});
    CHECK(multiplicative_conjugate(F, Term{E("(1)"), 1}, A).poly ==
          poly(1, 1, 1, {{{0, 1}, "1*t1^1"}, {{1, 0}, "-1*t1^1"}, {{0, 0}, "1*t1^1"}}));
    CHECK(multiplicative_conjugate(F, Term{E("(0)"), 1}, A).poly == F);
}

TEST_CASE("q table matches the published rows") {
    const std::vector<std::vector<std::string>> rows{
        {"m"},
        {"Dm", "m^2"},
        {"D^2m", "3*m*Dm", "m^3"},
        {"D^3m", "4*m*D^2m + 3*(Dm)^2", "6*m^2*Dm", "m^4"},
        {"D^4m", "5*m*D^3m + 10*Dm*D^2m", "10*m^2*D^2m + 15*m*(Dm)^2", "10*m^3*Dm", "m^5"},
    };
    auto q = qji_symbolic(5);
    for (unsigned i = 1; i <= 5; ++i)
        for (unsigned j = 1; j <= i; ++j) CHECK(mpoly_str(q[i][j]) == rows[i - 1][j - 1]);
}

TEST_CASE("q matrix numeric examples and closed forms") {
    auto B = spec_B();
    auto Q = qji_coefficients(B, 2, 3, 2);
    CHECK(Q.at(1, 1) == S("1*t3^1", 3));
    CHECK(Q.at(1, 2) == S("1*t3^2", 3));
    CHECK(Q.at(2, 2) == S("1*t3^2", 3));
    for (const auto& spec : reference_specs())
        for (auto [k, l] : pairs(spec)) {
            auto M = qji_coefficients(spec, k, l, 4);
            for (unsigned i = 1; i <= 4; ++i) {
                CHECK(M.at(1, i) == D(M.m, spec, k, i - 1));
                CHECK(M.at(i, i) == M.m.pow(i));
                if (i < 4)
                    for (unsigned j = 1; j < i; ++j)
                        CHECK(M.at(j + 1, i + 1) == M.at(j, i) * M.m + D(M.at(j + 1, i), spec, k, 1));
            }
        }
}

TEST_CASE("change of derivation examples") {
    auto B = spec_B();
    auto F = poly(3, 2, 2, {{{0, 0, 1}, "1"}});
    auto t = change_derivation(F, 3, B);
    CHECK(t.poly == poly(3, 2, 3, {{{0, 1, 0}, "1*t3^2"}, {{0, 0, 1}, "1*t3^2"}}));
    for (int a = -2; a <= 3; ++a) {
        auto y = Series::monomial(Rational(a) * E("(0,0,1)"));
        CHECK(evaluate(t.poly, y, B) == Series::monomial(Rational(a + 2) * E("(0,0,1)"), a * (a + 1)));
    }
    CHECK(change_derivation(F, 2, B).poly == F);

    auto C = spec_C();
    auto c = change_derivation(poly(2, 1, 0, {{{0, 1}, "1"}}), 2, C);
    CHECK(c.provenance.size() == 2);
    CHECK(c.provenance.front().kind == "multiplicative");
    for (const auto& [I, s] : c.poly.coeffs()) CHECK_FALSE(s.v().negative());
    CHECK_THROWS_AS(change_derivation(poly(3, 1, 3, {{{0, 1}, "1"}}), 2, B), DomainError);
}

TEST_CASE("change of derivation identity on random series") {
    Gen g(61);
    for (const auto& spec : reference_specs())
        for (auto [k, l] : pairs(spec)) {
            auto Q = qji_coefficients(spec, k, l, 4);
            for (int it = 0; it < 10; ++it) {
                auto y = g.series(spec.rank(), 3);
                for (unsigned i = 1; i <= 4; ++i) {
                    Series rhs(spec.rank());
                    for (unsigned j = 1; j <= i; ++j) rhs += Q.at(j, i) * D(y, spec, l, j);
                    CHECK(rhs == D(y, spec, k, i));
                }
            }
        }
}

TEST_CASE("round trips") {
    Gen g(71);
    int add = 0, mul = 0, chg = 0;
    for (const auto& spec : reference_specs()) {
        const std::size_t r = spec.rank();
        for (int it = 0; it < 70; ++it) {
            const unsigned n = g.uniform(0, 2);
            auto F = g.diffpoly(r, n, g.uniform(0, 1) ? g.uniform(1, static_cast<int>(r)) : 0);
            auto y = g.series(r, 3);

            auto a = g.series(r, 2);
            CHECK(evaluate(additive_conjugate(F, a, spec).poly, y - a, spec) == evaluate(F, y, spec));
            ++add;

            Term m{g.exponent(r), g.small_rational(-2, 2, true)};
            auto z = y * Series::monomial(-m.exp, 1 / m.coef);
            CHECK(evaluate(multiplicative_conjugate(F, m, spec).poly, z, spec) == evaluate(F, y, spec));
            ++mul;

            for (std::size_t l = std::max<std::size_t>(F.derivation(), 1); l <= r; ++l) {
                if (F.derivation() == 0 && spec.theta(l).negative() && l > spec.k0()) continue;
                auto t = change_derivation(F, l, spec);
                Series w = y;
                if (F.derivation() == 0 && spec.theta(l).negative())
                    w = y * Series::monomial(Rational(n) * spec.theta(l));
                CHECK(evaluate(t.poly, w, spec) == evaluate(F, y, spec));
                ++chg;
            }
        }
    }
    CHECK(add >= 200);
    CHECK(mul >= 200);
    CHECK(chg >= 200);
}

TEST_CASE("Weierstrass order under conjugation") {
    Gen g(83);
    int pres = 0, drop = 0;
    for (const auto& spec : reference_specs()) {
        const std::size_t r = spec.rank();
        for (int it = 0; it < 80; ++it) {
            const unsigned n = g.uniform(0, 2);
            const std::size_t k = g.uniform(1, static_cast<int>(r));
            auto N = weierstrass_normalize(g.diffpoly(r, n, k));

            auto a = g.series(r, 2, true);
            bool small = true;
            for (unsigned i = 0; i <= n && small; ++i) {
                auto d = D(a, spec, k, i);
                small = d.is_zero() || d.v().positive();
            }
            if (small) {
                auto G = weierstrass_normalize(additive_conjugate(N.poly, a, spec).poly);
                CHECK(G.shift == Exponent::zero(r));
                CHECK(G.w == N.w);
                ++pres;
            }

            Exponent lam = g.positive_exponent(r);
            if (lam.leading_class() != k) continue;
            auto H = weierstrass_normalize(multiplicative_conjugate(N.poly, Term{lam, 1}, spec).poly);
            CHECK(H.w <= N.w);
            ++drop;
        }
    }
    CHECK(pres >= 100);
    CHECK(drop >= 30);
}

TEST_CASE("transformation support bounds contain computed supports") {
    Gen g(97);
    for (const auto& spec : reference_specs()) {
        const std::size_t r = spec.rank();
        for (int it = 0; it < 30; ++it) {
            const unsigned n = g.uniform(0, 2);
            auto F = g.diffpoly(r, n, g.uniform(0, 1) ? g.uniform(1, static_cast<int>(r)) : 0);
            check_bound(additive_conjugate(F, g.series(r, 2, true), spec));
            check_bound(multiplicative_conjugate(F, Term{g.positive_exponent(r), 1}, spec));
            for (std::size_t l = std::max<std::size_t>(F.derivation(), 1); l <= r; ++l) {
                if (F.derivation() == 0 && spec.theta(l).negative() && l > spec.k0()) continue;
                check_bound(change_derivation(F, l, spec));
            }
        }
    }
}
