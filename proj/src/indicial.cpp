#include <algorithm>

#include "hardy/diffpoly.hpp"

namespace hardy {

namespace {

using Poly = std::vector<Rational>;  // index = degree

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly remainder(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
    trim(d);
    return d;
}

int sign_changes(const std::vector<int>& signs) {
    int last = 0, changes = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Distinct real roots in (0, inf) by Sturm's theorem; requires p(0) != 0.
int positive_real_root_count(const Poly& p) {
    std::vector<Poly> seq{p, derivative(p)};
    while (!seq.back().empty()) {
        Poly r = remainder(seq[seq.size() - 2], seq.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        seq.push_back(std::move(r));
    }
    std::vector<int> at0, atinf;
    for (const auto& q : seq) {
        if (q.empty()) continue;
        at0.push_back(sgn(q.front()));
        atinf.push_back(sgn(q.back()));
    }
    return sign_changes(at0) - sign_changes(atinf);
}

std::vector<Natural> divisors(Natural n) {
    n = abs(n);
    std::vector<Natural> small, large;
    for (Natural d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

Rational eval_poly(const std::vector<Rational>& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

std::pair<std::vector<Rational>, bool> positive_roots(std::vector<Rational> p) {
    trim(p);
    std::size_t low = 0;
    while (low < p.size() && sgn(p[low]) == 0) ++low;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
    if (p.size() <= 1) return {{}, false};
    Natural l = 1;
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Natural> ints;
    for (const auto& c : p) ints.push_back(Natural(c * Rational(l)));
    std::vector<Rational> roots;
    for (const auto& num : divisors(ints.front()))
        for (const auto& den : divisors(ints.back())) {
            Rational cand(num, den);
            cand.canonicalize();
            if (sgn(eval_poly(p, cand)) == 0) roots.push_back(cand);
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    bool irrational = positive_real_root_count(p) > static_cast<int>(roots.size());
    return {roots, irrational};
}

IndicialData indicial_data(const DiffPoly& F) {
    IndicialData out;
    unsigned w = ~0u;
    for (const auto& [I, c] : F.coeffs()) {
        if (c.empty()) throw DomainError("indicial data: coefficient valuation hidden by truncation");
        if (c.v().negative()) throw DomainError("indicial data needs a normalized equation");
        if (c.v().is_zero()) w = std::min(w, I.length());
    }
    if (w != 1) throw DomainError("indicial data needs Weierstrass order 1, got " + (w == ~0u ? std::string("none") : std::to_string(w)));
    out.pi.assign(F.order() + 1, Rational(0));
    for (const auto& [I, c] : F.coeffs()) {
        if (I.length() != 1 || !c.v().is_zero()) continue;
        out.witnesses.push_back(I);
        out.pi[I.weight()] += c.leading().coef;
    }
    auto [roots, irr] = positive_roots(out.pi);
    out.rational_roots = std::move(roots);
    out.irrational_root = irr;
    trim(out.pi);
    return out;
}

}  // namespace hardy
