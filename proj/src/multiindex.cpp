#include "hardy/multiindex.hpp"

#include <sstream>

namespace hardy {

namespace {
void require_same_size(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw DomainError("multi-index length mismatch");
}
}  // namespace

unsigned MultiIndex::length() const {
    unsigned s = 0;
    for (auto v : e_) s += v;
    return s;
}

unsigned MultiIndex::weight() const {
    unsigned s = 0;
    for (std::size_t j = 0; j < e_.size(); ++j) s += static_cast<unsigned>(j) * e_[j];
    return s;
}

Natural MultiIndex::factorial() const {
    Natural r = 1;
    for (auto v : e_) {
        Natural f;
        mpz_fac_ui(f.get_mpz_t(), v);
        r *= f;
    }
    return r;
}

bool MultiIndex::divides(const MultiIndex& J) const {
    require_same_size(*this, J);
    for (std::size_t j = 0; j < e_.size(); ++j)
        if (e_[j] > J.e_[j]) return false;
    return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    require_same_size(*this, o);
    MultiIndex r(*this);
    for (std::size_t j = 0; j < e_.size(); ++j) r.e_[j] += o.e_[j];
    return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
    if (!o.divides(*this)) throw DomainError("multi-index subtraction underflow");
    MultiIndex r(*this);
    for (std::size_t j = 0; j < e_.size(); ++j) r.e_[j] -= o.e_[j];
    return r;
}

std::strong_ordering antilex_compare(const MultiIndex& a, const MultiIndex& b) {
    require_same_size(a, b);
    for (std::size_t j = a.size(); j-- > 0;) {
        if (a[j] != b[j]) return a[j] < b[j] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) { return antilex_compare(a, b); }

std::string MultiIndex::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < e_.size(); ++j) os << (j ? "," : "") << e_[j];
    os << ')';
    return os.str();
}

std::vector<MultiIndex> indices_of_length(std::size_t order, unsigned len) {
    std::vector<MultiIndex> out;
    MultiIndex cur(order);
    auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
        if (pos == order) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, len);
    return out;
}

}  // namespace hardy
