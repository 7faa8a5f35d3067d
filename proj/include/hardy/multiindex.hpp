#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hardy/exponent.hpp"

namespace hardy {

// I = (i0, ..., in): multiplicities of y, Dy, ..., D^n y in a monomial.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t order) : e_(order + 1, 0) {}
    explicit MultiIndex(std::vector<unsigned> entries) : e_(std::move(entries)) {}
    MultiIndex(std::initializer_list<unsigned> entries) : e_(entries) {}

    // Index of the single factor D^j y.
    static MultiIndex single(std::size_t order, std::size_t j) {
        MultiIndex I(order);
        I.e_.at(j) = 1;
        return I;
    }

    std::size_t size() const { return e_.size(); }
    std::size_t order() const { return e_.empty() ? 0 : e_.size() - 1; }
    unsigned operator[](std::size_t j) const { return e_[j]; }
    unsigned& operator[](std::size_t j) { return e_[j]; }
    const std::vector<unsigned>& entries() const { return e_; }

    unsigned length() const;   // |I|
    unsigned weight() const;   // ||I||
    Natural factorial() const; // I!

    // Componentwise partial order I <= J.
    bool divides(const MultiIndex& J) const;
    MultiIndex operator+(const MultiIndex& o) const;
    MultiIndex operator-(const MultiIndex& o) const;

    // Antilexicographic: the highest differing position decides.
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);
    friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;

    std::string str() const;

private:
    std::vector<unsigned> e_;
};

std::strong_ordering antilex_compare(const MultiIndex& a, const MultiIndex& b);

// All multi-indices of the given order with |I| == len.
std::vector<MultiIndex> indices_of_length(std::size_t order, unsigned len);

}  // namespace hardy
