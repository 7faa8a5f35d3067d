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

// Every known term sits at or above the residual's truncation.
void check_vanishes(const Series& residual) {
    CHECK(residual.empty());
}

DiffPoly euler_like() { return poly(1, 1, 1, {{{0, 1}, "1"}, {{1, 0}, "-2"}, {{0, 0}, "1*t1^1"}}); }
}  // namespace

TEST_CASE("evaluate examples") {
    auto A = spec_A();
    auto riccati = poly(1, 1, 0, {{{0, 1}, "1"}, {{2, 0}, "1"}});
    CHECK(evaluate(riccati, S("1*t1^1", 1), A).is_zero());
    auto F = poly(1, 1, 1, {{{0, 1}, "1"}, {{1, 0}, "-2"}, {{0, 0}, "1*t1^1"}});
    CHECK(evaluate(F, S("1*t1^1 + 5*t1^2", 1), A).is_zero());
    CHECK(evaluate(F, Series(1), A) == S("1*t1^1", 1));
}

TEST_CASE("evaluation is additive and multiplicative on order 0") {
    Gen g(31);
    for (const auto& spec : reference_specs()) {
        const std::size_t r = spec.rank();
        for (int it = 0; it < 60; ++it) {
            auto F = g.diffpoly(r, 2, it % 2), G = g.diffpoly(r, 2, it % 2);
            auto y = g.series(r, 3);
            DiffPoly H = F;
            for (const auto& [I, c] : G.coeffs()) H.add(I, c);
            CHECK(evaluate(H, y, spec) == evaluate(F, y, spec) + evaluate(G, y, spec));

            auto a = g.diffpoly(r, 0, 0, 2), b = g.diffpoly(r, 0, 0, 2);
            DiffPoly ab(r, 0, 0);
            for (const auto& [I, c] : a.coeffs())
                for (const auto& [J, d] : b.coeffs()) ab.add(I + J, c * d);
            CHECK(evaluate(ab, y, spec) == evaluate(a, y, spec) * evaluate(b, y, spec));
        }
    }
}

TEST_CASE("partial derivative examples") {
    auto sq = poly(1, 0, 0, {{{2}, "1"}});
    CHECK(partial_derivative(sq, {1}) == poly(1, 0, 0, {{{1}, "2"}}));
    CHECK(partial_derivative(sq, {2}) == poly(1, 0, 0, {{{0}, "2"}}));
    auto yy = poly(1, 1, 0, {{{1, 1}, "1"}});
    CHECK(partial_derivative(yy, {1, 1}) == poly(1, 1, 0, {{{0, 0}, "1"}}));
    auto lin = poly(1, 1, 0, {{{0, 1}, "3*t1^1"}});
    CHECK(partial_derivative(lin, {0, 2}).is_zero());
}

TEST_CASE("Taylor examples") {
    auto A = spec_A();
    check_vanishes(taylor_check(poly(1, 0, 0, {{{2}, "1"}}), S("1*t1^1", 1), S("1*t1^2", 1), A));
    Gen g(2);
    auto D1 = poly(1, 1, 1, {{{0, 1}, "1"}});
    auto yD1 = poly(1, 1, 1, {{{1, 1}, "1"}});
    for (int it = 0; it < 30; ++it) {
        auto p = g.series(1, 3), q = g.series(1, 3);
        check_vanishes(taylor_check(D1, p, q, A));
        check_vanishes(taylor_check(yD1, p, q, A));
    }
}

TEST_CASE("Taylor identity on random data") {
    Gen g(17);
    for (const auto& spec : reference_specs()) {
        const std::size_t r = spec.rank();
        for (int it = 0; it < 40; ++it) {
            const unsigned n = g.uniform(0, 2);
            auto F = g.diffpoly(r, n, g.uniform(0, 1) ? r : 0);
            check_vanishes(taylor_check(F, g.series(r, 3), g.series(r, 3), spec));
        }
    }
}

TEST_CASE("Weierstrass normalization examples") {
    auto n1 = weierstrass_normalize(poly(1, 1, 1, {{{0, 1}, "1*t1^1"}, {{1, 0}, "1*t1^2"}}));
    CHECK(n1.shift == E("(1)"));
    CHECK(n1.w == 1);
    CHECK(n1.poly == poly(1, 1, 1, {{{0, 1}, "1"}, {{1, 0}, "1*t1^1"}}));
    CHECK(weierstrass_normalize(poly(1, 0, 0, {{{2}, "1"}, {{1}, "1*t1^1"}})).w == 2);
    CHECK(weierstrass_normalize(poly(1, 0, 0, {{{0}, "1"}, {{1}, "1"}})).w == 0);
    CHECK_THROWS_AS(weierstrass_normalize(poly(1, 0, 0, {{{1}, "O((1))"}})), DomainError);
}

TEST_CASE("normalization is idempotent") {
    Gen g(23);
    for (const auto& spec : reference_specs()) {
        for (int it = 0; it < 100; ++it) {
            auto N = weierstrass_normalize(g.diffpoly(spec.rank(), 2, 0));
            auto again = weierstrass_normalize(N.poly);
            CHECK(again.shift == Exponent::zero(spec.rank()));
            CHECK(again.w == N.w);
            CHECK(again.poly == N.poly);
        }
    }
}

TEST_CASE("indicial examples") {
    auto d = indicial_data(euler_like());
    CHECK(d.witnesses.size() == 2);
    CHECK(d.pi == std::vector<Rational>{-2, 1});
    CHECK(d.rational_roots == std::vector<Rational>{2});
    CHECK_FALSE(d.irrational_root);

    d = indicial_data(poly(1, 1, 1, {{{0, 1}, "1"}, {{0, 0}, "1*t1^1"}}));
    CHECK(d.rational_roots.empty());

    d = indicial_data(poly(1, 2, 1, {{{0, 0, 1}, "1"}, {{0, 1, 0}, "-2"}, {{1, 0, 0}, "1"}, {{0, 0, 0}, "1*t1^1"}}));
    CHECK(d.pi == std::vector<Rational>{1, -2, 1});
    CHECK(d.rational_roots == std::vector<Rational>{1});

    CHECK_THROWS_AS(indicial_data(poly(1, 0, 0, {{{2}, "1"}})), DomainError);
}

TEST_CASE("positive roots and irrational flag") {
    auto [r1, irr1] = positive_roots({-2, 0, 1});  // X^2 - 2
    CHECK(r1.empty());
    CHECK(irr1);
    auto [r2, irr2] = positive_roots({6, -5, 1});  // (X-2)(X-3)
    CHECK(r2 == std::vector<Rational>{2, 3});
    CHECK_FALSE(irr2);
    auto [r3, irr3] = positive_roots({Rational(-1, 2), 0, 0, 4});  // 4X^3 - 1/2, root 1/2
    CHECK(r3 == std::vector<Rational>{Rational(1, 2)});
    CHECK_FALSE(irr3);

    Gen g(41);
    for (int it = 0; it < 100; ++it) {
        auto F = g.diffpoly(1, 2, 1, 3, 1);
        F.add(MultiIndex{0, 1, 0}, S("1", 1));
        auto N = weierstrass_normalize(F);
        if (N.w != 1) continue;
        auto d = indicial_data(N.poly);
        CHECK(d.pi.size() <= 3);
        for (const auto& rho : d.rational_roots) CHECK(eval_poly(d.pi, rho) == 0);
    }
}

TEST_CASE("evaluation support bound examples") {
    auto A = spec_A();
    auto F = euler_like();
    auto lat = GridSet::coset(E("(0)"), {E("(1)")});
    auto bound = evaluation_support_bound(F, 1, lat, A);
    const auto value = evaluate(F, S("1*t1^1 + 1*t1^2", 1), A);
    for (const auto& t : value.terms())
        CHECK(gs_member(bound, t.exp) == Membership::Yes);
    auto c = poly(1, 0, 0, {{{0}, "3*t1^2"}});
    CHECK(gs_member(evaluation_support_bound(c, 1, lat, A), E("(2)")) == Membership::Yes);

    auto B = spec_B();
    auto D2 = poly(3, 1, 2, {{{0, 1}, "1"}});
    auto yb = GridSet::coset(E("(0,0,1)"), {E("(0,0,1)")});
    auto bb = evaluation_support_bound(D2, 3, yb, B);
    auto val = evaluate(D2, S("1*t3^1", 3), B);
    CHECK(val == S("1*t3^2", 3));
    CHECK(gs_member(bb, E("(0,0,2)")) == Membership::Yes);
}

TEST_CASE("evaluation support bound is sound") {
    Gen g(53);
    for (const auto& spec : reference_specs()) {
        const std::size_t r = spec.rank();
        int checked = 0;
        for (int it = 0; it < 100; ++it) {
            auto y = g.series(r, 2, true);
            if (y.is_zero()) continue;
            std::size_t k = r;
            for (const auto& t : y.terms()) k = std::min(k, t.exp.leading_class());
            auto F = g.diffpoly(r, 1, g.uniform(0, 1) ? k : 0, 2);
            GridSet ys(r);
            for (const auto& t : y.terms()) ys.unite(GridSet::points(r, {t.exp}));
            auto bound = evaluation_support_bound(F, k, ys, spec);
            const auto value = evaluate(F, y, spec);
            for (const auto& t : value.terms()) {
                const std::string at = t.exp.str();
                CAPTURE(at);
                CHECK(gs_member(bound, t.exp) == Membership::Yes);
            }
            ++checked;
        }
        CHECK(checked > 50);
    }
}
