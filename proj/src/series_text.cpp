#include <cctype>
#include <set>
#include <sstream>

#include "hardy/series.hpp"

namespace hardy {

namespace {

std::string monomial_text(const Exponent& e) {
    std::ostringstream os;
    for (std::size_t i = 0; i < e.rank(); ++i) {
        if (sgn(e[i]) == 0) continue;
        os << "*t" << (i + 1) << '^';
        if (e[i].get_den() == 1)
            os << e[i].get_str();
        else
            os << '(' << e[i].get_str() << ')';
    }
    return os.str();
}

class Parser {
public:
    Parser(std::string_view s, std::size_t rank) : s_(s), rank_(rank) {}

    Series run() {
        std::vector<Term> terms;
        std::set<Exponent> seen;
        std::optional<Exponent> trunc;
        skip();
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (first && (s_[pos_] == '-' || s_[pos_] == '+')) {
                std::size_t q = pos_ + 1;
                while (q < s_.size() && std::isspace(static_cast<unsigned char>(s_[q]))) ++q;
                if (q < s_.size() && (s_[q] == 't' || s_[q] == 'O')) {
                    sign = s_[pos_] == '-' ? -1 : 1;
                    pos_ = q;
                }
            } else if (!first) {
                char c = s_[pos_];
                if (c != '+' && c != '-') fail("expected '+' or '-'");
                sign = c == '-' ? -1 : 1;
                ++pos_;
                skip();
            }
            if (peek_big_o()) {
                if (sign < 0) fail("O(...) must be added");
                trunc = big_o();
                skip();
                if (pos_ != s_.size()) fail("O(...) must be the last summand");
                break;
            }
            Term t = term();
            if (sign < 0) t.coef = -t.coef;
            if (!seen.insert(t.exp).second) fail("duplicate exponent " + t.exp.str());
            terms.push_back(std::move(t));
            first = false;
            skip();
        }
        if (terms.empty() && !trunc && !saw_any_) fail("empty series");
        return Series(rank_, std::move(terms), trunc);
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek_big_o() const { return s_.substr(pos_, 2) == "O("; }

    Exponent big_o() {
        pos_ += 2;
        std::size_t depth = 1, start = pos_;
        while (pos_ < s_.size() && depth) {
            if (s_[pos_] == '(') ++depth;
            if (s_[pos_] == ')') --depth;
            ++pos_;
        }
        if (depth) fail("unterminated O(");
        Exponent e = Exponent::parse(s_.substr(start, pos_ - 1 - start));
        if (e.rank() != rank_) fail("truncation rank mismatch");
        saw_any_ = true;
        return e;
    }

    Rational rational() {
        skip();
        std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '(') {
            auto close = s_.find(')', pos_);
            if (close == std::string_view::npos) fail("unterminated parenthesis");
            pos_ = close + 1;
        } else {
            if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        }
        if (start == pos_) fail("expected a rational");
        try {
            return parse_rational(s_.substr(start, pos_ - start));
        } catch (const ParseError&) {
            pos_ = start;
            fail("malformed rational");
        }
    }

    Term term() {
        Term t{Exponent::zero(rank_), 1};
        bool need_star = false;
        if (pos_ < s_.size() && s_[pos_] != 't') {
            t.coef = rational();
            need_star = true;
        }
        skip();
        while (pos_ < s_.size()) {
            if (need_star) {
                if (s_[pos_] != '*') break;
                ++pos_;
                skip();
            }
            if (pos_ >= s_.size() || s_[pos_] != 't') fail("expected 't<index>'");
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected variable index");
            std::size_t idx = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (idx < 1 || idx > rank_) fail("variable index out of range for rank " + std::to_string(rank_));
            Rational e = 1;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                e = rational();
            }
            t.exp[idx - 1] += e;
            need_star = true;
            skip();
        }
        saw_any_ = true;
        return t;
    }

    std::string_view s_;
    std::size_t rank_;
    std::size_t pos_ = 0;
    bool saw_any_ = false;
};

}  // namespace

std::string Series::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coef;
        if (first) {
            os << c.get_str();
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            os << Rational(abs(c)).get_str();
        }
        os << monomial_text(t.exp);
        first = false;
    }
    if (trunc_) os << (first ? "" : " + ") << "O(" << trunc_->str() << ')';
    else if (first) os << '0';
    return os.str();
}

Series Series::parse(std::string_view text, std::size_t rank) { return Parser(text, rank).run(); }

}  // namespace hardy
