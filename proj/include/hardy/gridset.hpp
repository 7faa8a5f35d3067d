#pragma once

#include <set>
#include <string>
#include <vector>

#include "hardy/exponent.hpp"

namespace hardy {

// offset + N-combinations of strictly positive generators.
struct Coset {
    Exponent offset;
    std::vector<Exponent> generators;  // sorted, unique
    friend auto operator<=>(const Coset&, const Coset&) = default;
};

enum class Membership { Yes, No, Unknown };

// Finite union of cosets. When exact is false only superset claims hold.
class GridSet {
public:
    explicit GridSet(std::size_t rank = 1, bool exact = true) : rank_(rank), exact_(exact) {}

    static GridSet empty(std::size_t rank) { return GridSet(rank); }
    // {0}.
    static GridSet zero(std::size_t rank);
    // The finite set itself, as generator-free cosets.
    static GridSet points(std::size_t rank, const std::vector<Exponent>& pts);
    // offset + N gens, one coset.
    static GridSet coset(const Exponent& offset, std::vector<Exponent> gens, bool exact = true);

    std::size_t rank() const { return rank_; }
    bool exact() const { return exact_; }
    bool is_empty() const { return cosets_.empty(); }
    const std::vector<Coset>& cosets() const { return cosets_; }

    void add_coset(Coset c);
    void set_exact(bool e) { exact_ = e; }
    GridSet& unite(const GridSet& o);

    std::string str() const;
    static GridSet parse(std::string_view text);

private:
    std::size_t rank_;
    bool exact_;
    std::vector<Coset> cosets_;
};

GridSet gs_sum(const GridSet& a, const GridSet& b);
GridSet gs_semigroup(const GridSet& x);
GridSet gs_add_generator(const GridSet& x, const Exponent& alpha);
// Superset of (X)_{>= beta} - beta.
GridSet gs_translate_neg(const GridSet& x, const Exponent& beta, std::size_t cap = kDefaultEnumCap);
Membership gs_member(const GridSet& x, const Exponent& gamma, std::size_t cap = kDefaultEnumCap);
std::vector<Exponent> gs_enumerate_below(const GridSet& x, const Exponent& bound, std::size_t cap = kDefaultEnumCap);
GridSet gs_union(const GridSet& a, const GridSet& b);

}  // namespace hardy
