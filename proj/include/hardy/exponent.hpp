#pragma once

#include <compare>
#include <cstddef>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hardy {

using Rational = mpq_class;
using Natural = mpz_class;

// Raised for mathematically invalid requests (bad spec, caps exceeded, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised for malformed text input.
class ParseError : public DomainError {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : DomainError(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

inline constexpr std::size_t kDefaultEnumCap = 10000;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Element of Q^r under lexicographic order.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::size_t rank) : coords_(rank) {}
    explicit Exponent(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Exponent(std::initializer_list<Rational> coords) : coords_(coords) {}

    static Exponent zero(std::size_t rank) { return Exponent(rank); }
    // e_k, 1-based class index.
    static Exponent unit(std::size_t rank, std::size_t k);

    std::size_t rank() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool positive() const;
    bool negative() const;
    // 1-based index of the first nonzero coordinate; 0 for the zero vector.
    std::size_t leading_class() const;

    Exponent& operator+=(const Exponent& o);
    Exponent& operator-=(const Exponent& o);
    Exponent operator-() const;
    friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
    friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
    friend Exponent operator*(const Rational& s, const Exponent& a);

    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);
    friend bool operator==(const Exponent& a, const Exponent& b);

    std::string str() const;
    static Exponent parse(std::string_view text);

private:
    std::vector<Rational> coords_;
};

std::strong_ordering lex_compare(const Exponent& a, const Exponent& b);
void require_same_rank(const Exponent& a, const Exponent& b);

}  // namespace hardy
