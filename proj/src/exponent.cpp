#include "hardy/exponent.hpp"

#include <cctype>
#include <sstream>

namespace hardy {

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw ParseError("empty rational", 0);
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    bool slash = false, digit = false;
    for (std::size_t j = i; j < s.size(); ++j) {
        if (std::isdigit(static_cast<unsigned char>(s[j]))) {
            digit = true;
        } else if (s[j] == '/' && !slash && digit && j + 1 < s.size()) {
            slash = true;
            digit = false;
        } else {
            throw ParseError("bad rational '" + s + "'", j);
        }
    }
    if (!digit) throw ParseError("bad rational '" + s + "'", s.size());
    if (s[0] == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'", 0);
    if (slash && q.get_den() == 0) throw ParseError("zero denominator", 0);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Exponent Exponent::unit(std::size_t rank, std::size_t k) {
    Exponent e(rank);
    e.coords_.at(k - 1) = 1;
    return e;
}

bool Exponent::is_zero() const {
    for (const auto& c : coords_)
        if (sgn(c) != 0) return false;
    return true;
}

std::size_t Exponent::leading_class() const {
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (sgn(coords_[i]) != 0) return i + 1;
    return 0;
}

bool Exponent::positive() const {
    auto k = leading_class();
    return k != 0 && sgn(coords_[k - 1]) > 0;
}

bool Exponent::negative() const {
    auto k = leading_class();
    return k != 0 && sgn(coords_[k - 1]) < 0;
}

void require_same_rank(const Exponent& a, const Exponent& b) {
    if (a.rank() != b.rank())
        throw DomainError("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                          std::to_string(b.rank()));
}

Exponent& Exponent::operator+=(const Exponent& o) {
    require_same_rank(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Exponent& Exponent::operator-=(const Exponent& o) {
    require_same_rank(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Exponent Exponent::operator-() const {
    Exponent r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
}

Exponent operator*(const Rational& s, const Exponent& a) {
    Exponent r(a);
    for (auto& c : r.coords_) c *= s;
    return r;
}

std::strong_ordering lex_compare(const Exponent& a, const Exponent& b) {
    require_same_rank(a, b);
    for (std::size_t i = 0; i < a.rank(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) { return lex_compare(a, b); }

bool operator==(const Exponent& a, const Exponent& b) { return lex_compare(a, b) == 0; }

std::string Exponent::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ',';
        os << coords_[i].get_str();
    }
    os << ')';
    return os.str();
}

Exponent Exponent::parse(std::string_view text) {
    std::size_t b = text.find_first_not_of(" \t\n");
    std::size_t e = text.find_last_not_of(" \t\n");
    if (b == std::string_view::npos) throw ParseError("empty exponent", 0);
    text = text.substr(b, e - b + 1);
    if (text.front() != '(') return Exponent{parse_rational(text)};
    if (text.back() != ')') throw ParseError("exponent must end with ')'", text.size());
    std::vector<Rational> coords;
    std::string_view body = text.substr(1, text.size() - 2);
    std::size_t start = 0;
    while (true) {
        std::size_t comma = body.find(',', start);
        coords.push_back(parse_rational(body.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Exponent(std::move(coords));
}

}  // namespace hardy
