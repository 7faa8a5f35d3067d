#include <set>
#include "hardy/gridset.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace hardy {

namespace {

void canonical_gens(std::vector<Exponent>& g) {
    for (const auto& e : g)
        if (!e.positive()) throw DomainError("grid generator must be > 0, got " + e.str());
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
}

std::vector<Exponent> merge_gens(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
    std::vector<Exponent> g = a;
    g.insert(g.end(), b.begin(), b.end());
    canonical_gens(g);
    return g;
}

// Is target an N-combination of gens? Coordinates are fixed class by class:
// class-c generators only move coordinates >= c, and move c upward.
Membership member_span(std::vector<Exponent> gens, const Exponent& target, std::size_t cap) {
    std::stable_sort(gens.begin(), gens.end(),
                     [](const Exponent& a, const Exponent& b) { return a.leading_class() < b.leading_class(); });
    std::size_t nodes = 0;
    bool hit_cap = false;
    std::set<std::pair<std::size_t, Exponent>> dead;
    std::function<bool(std::size_t, const Exponent&)> rec = [&](std::size_t i, const Exponent& rem) -> bool {
        if (dead.contains({i, rem})) return false;
        if (++nodes > cap) {
            hit_cap = true;
            return false;
        }
        std::size_t cls = i < gens.size() ? gens[i].leading_class() : rem.rank() + 1;
        for (std::size_t j = 0; j + 1 < cls && j < rem.rank(); ++j)
            if (sgn(rem[j]) != 0) return false;
        if (i == gens.size()) return rem.is_zero();
        const Exponent& g = gens[i];
        const Rational& gc = g[cls - 1];
        if (sgn(rem[cls - 1]) < 0) return false;
        Rational ratio = rem[cls - 1] / gc;
        Natural kmax = ratio.get_num() / ratio.get_den();
        Exponent cur = rem;
        for (Natural k = 0; k <= kmax; ++k) {
            if (rec(i + 1, cur)) return true;
            if (hit_cap) return false;
            cur -= g;
        }
        dead.insert({i, rem});
        return false;
    };
    bool found = rec(0, target);
    if (found) return Membership::Yes;
    return hit_cap ? Membership::Unknown : Membership::No;
}

}  // namespace

GridSet GridSet::zero(std::size_t rank) { return coset(Exponent::zero(rank), {}); }

GridSet GridSet::points(std::size_t rank, const std::vector<Exponent>& pts) {
    GridSet g(rank);
    for (const auto& p : pts) g.add_coset(Coset{p, {}});
    return g;
}

GridSet GridSet::coset(const Exponent& offset, std::vector<Exponent> gens, bool exact) {
    GridSet g(offset.rank(), exact);
    g.add_coset(Coset{offset, std::move(gens)});
    return g;
}

void GridSet::add_coset(Coset c) {
    if (c.offset.rank() != rank_) throw DomainError("coset rank differs from grid rank");
    for (const auto& g : c.generators) require_same_rank(g, c.offset);
    canonical_gens(c.generators);
    if (std::find(cosets_.begin(), cosets_.end(), c) == cosets_.end()) cosets_.push_back(std::move(c));
}

GridSet& GridSet::unite(const GridSet& o) {
    if (o.rank_ != rank_) throw DomainError("rank mismatch in grid union");
    for (const auto& c : o.cosets_) add_coset(c);
    exact_ = exact_ && o.exact_;
    return *this;
}

GridSet gs_union(const GridSet& a, const GridSet& b) {
    GridSet r = a;
    return r.unite(b);
}

GridSet gs_sum(const GridSet& a, const GridSet& b) {
    if (a.rank() != b.rank()) throw DomainError("rank mismatch in grid sum");
    GridSet r(a.rank(), a.exact() && b.exact());
    for (const auto& x : a.cosets())
        for (const auto& y : b.cosets()) r.add_coset(Coset{x.offset + y.offset, merge_gens(x.generators, y.generators)});
    return r;
}

GridSet gs_semigroup(const GridSet& x) {
    std::vector<Exponent> gens;
    bool offsets_zero = true;
    for (const auto& c : x.cosets()) {
        if (c.offset.negative())
            throw DomainError("semigroup of a set with element " + c.offset.str() + " < 0 is not well-ordered");
        if (c.offset.is_zero()) {
            // fine: contributes only its generators
        } else {
            offsets_zero = false;
            gens.push_back(c.offset);
        }
        gens.insert(gens.end(), c.generators.begin(), c.generators.end());
    }
    canonical_gens(gens);
    return GridSet::coset(Exponent::zero(x.rank()), std::move(gens), offsets_zero && x.exact());
}

GridSet gs_add_generator(const GridSet& x, const Exponent& alpha) {
    if (!alpha.positive()) throw DomainError("new generator must be > 0, got " + alpha.str());
    GridSet r(x.rank(), x.exact());
    for (const auto& c : x.cosets()) r.add_coset(Coset{c.offset, merge_gens(c.generators, {alpha})});
    return r;
}

GridSet gs_translate_neg(const GridSet& x, const Exponent& beta, std::size_t cap) {
    GridSet out(x.rank(), x.exact());
    std::size_t produced = 0, max_gens = 0;
    for (const auto& c : x.cosets()) max_gens = std::max(max_gens, c.generators.size());
    // Elements of N*gens that are >= b, minus b. Exact recursion on one generator.
    std::function<void(const std::vector<Exponent>&, const Exponent&, std::size_t)> rec =
        [&](const std::vector<Exponent>& gens, const Exponent& b, std::size_t depth) {
            if (depth > max_gens) throw DomainError("internal: translate recursion deeper than generator count");
            if (++produced > cap) throw DomainError("non-accessible bound: negative translation exceeds enumeration cap");
            if (!b.positive()) {
                out.add_coset(Coset{-b, gens});
                return;
            }
            std::size_t bc = b.leading_class();
            std::optional<std::size_t> pick;
            Natural best_k;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                std::size_t gc = gens[i].leading_class();
                if (gc > bc) continue;
                Natural k = 1;
                if (gc == bc) {
                    Rational q = b[bc - 1] / gens[i][bc - 1];
                    k = q.get_num() / q.get_den();
                    if (k * q.get_den() != q.get_num()) k += 1;
                    if (k == 0) k = 1;
                    while (Rational(k) * gens[i] < b) k += 1;
                }
                if (!pick || k < best_k) {
                    pick = i;
                    best_k = k;
                }
            }
            if (!pick) return;  // every element of N*gens lies below b
            const Exponent& lam = gens[*pick];
            out.add_coset(Coset{Rational(best_k) * lam - b, gens});
            std::vector<Exponent> rest = gens;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*pick));
            for (Natural j = 0; j < best_k; ++j) rec(rest, b - Rational(j) * lam, depth + 1);
        };
    for (const auto& c : x.cosets()) rec(c.generators, beta - c.offset, 0);
    return out;
}

Membership gs_member(const GridSet& x, const Exponent& gamma, std::size_t cap) {
    bool unknown = false;
    for (const auto& c : x.cosets()) {
        Exponent target = gamma - c.offset;
        if (target.negative()) continue;
        auto m = member_span(c.generators, target, cap);
        if (m == Membership::Yes) return m;
        if (m == Membership::Unknown) unknown = true;
    }
    return unknown ? Membership::Unknown : Membership::No;
}

std::vector<Exponent> gs_enumerate_below(const GridSet& x, const Exponent& bound, std::size_t cap) {
    std::set<Exponent> found;
    std::size_t nodes = 0;
    const std::size_t node_cap = cap * 64;
    std::set<std::pair<std::size_t, Exponent>> seen;
    std::function<void(const Coset&, std::size_t, const Exponent&)> rec = [&](const Coset& c, std::size_t i,
                                                                           const Exponent& p) {
        if (!seen.insert({i, p}).second) return;
        found.insert(p);
        if (found.size() > cap || ++nodes > node_cap)
            throw DomainError("non-accessible bound: more than " + std::to_string(cap) + " elements below " +
                              bound.str());
        for (std::size_t j = i; j < c.generators.size(); ++j) {
            Exponent q = p + c.generators[j];
            if (q < bound) rec(c, j, q);
        }
    };
    for (const auto& c : x.cosets()) {
        seen.clear();
        if (c.offset < bound) rec(c, 0, c.offset);
    }
    return {found.begin(), found.end()};
}

std::string GridSet::str() const {
    std::ostringstream os;
    os << "{ ";
    for (std::size_t i = 0; i < cosets_.size(); ++i) {
        if (i) os << " , ";
        os << '(' << cosets_[i].offset.str() << ';';
        for (std::size_t j = 0; j < cosets_[i].generators.size(); ++j)
            os << (j ? ", " : " ") << cosets_[i].generators[j].str();
        os << ')';
    }
    os << (cosets_.empty() ? "} " : " } ") << (exact_ ? "exact" : "approx");
    return os.str();
}

GridSet GridSet::parse(std::string_view text) {
    auto fail = [&](const std::string& m, std::size_t p) -> GridSet { throw ParseError(m, p); };
    std::size_t p = text.find('{');
    std::size_t q = text.rfind('}');
    if (p == std::string_view::npos || q == std::string_view::npos || q < p) return fail("expected '{ ... }'", 0);
    std::string_view tail = text.substr(q + 1);
    bool exact = tail.find("approx") == std::string_view::npos;
    // Split the body into top-level parenthesised cosets.
    std::vector<std::pair<Exponent, std::vector<Exponent>>> raw;
    std::size_t i = p + 1;
    while (i < q) {
        if (text[i] != '(') {
            ++i;
            continue;
        }
        std::size_t depth = 0, start = i + 1, j = i;
        for (; j < q; ++j) {
            if (text[j] == '(') ++depth;
            if (text[j] == ')' && --depth == 0) break;
        }
        if (j >= q) return fail("unbalanced coset", i);
        std::string_view inner = text.substr(start, j - start);
        std::vector<std::string_view> parts;
        std::size_t d = 0, s = 0;
        for (std::size_t k = 0; k <= inner.size(); ++k) {
            char ch = k < inner.size() ? inner[k] : ',';
            if (ch == '(') ++d;
            if (ch == ')') --d;
            if ((ch == ',' || ch == ';') && d == 0) {
                parts.push_back(inner.substr(s, k - s));
                s = k + 1;
            }
        }
        std::vector<Exponent> gens;
        for (std::size_t k = 1; k < parts.size(); ++k)
            if (parts[k].find_first_not_of(" \t") != std::string_view::npos) gens.push_back(Exponent::parse(parts[k]));
        raw.emplace_back(Exponent::parse(parts.at(0)), std::move(gens));
        i = j + 1;
    }
    std::size_t rank = raw.empty() ? 1 : raw.front().first.rank();
    GridSet g(rank, exact);
    for (auto& [o, gens] : raw) g.add_coset(Coset{o, std::move(gens)});
    return g;
}

}  // namespace hardy
