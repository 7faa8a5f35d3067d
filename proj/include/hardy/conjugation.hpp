#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hardy/diffpoly.hpp"

namespace hardy {

// Audit record of one transformation.
struct ProvenanceEntry {
    std::string kind;  // additive | multiplicative | change-derivation | normalize | weierstrass-reduction | ...
    std::vector<std::pair<std::string, std::string>> params;
    GridSet bound;
    std::string param(const std::string& key) const;
};

struct Transformed {
    DiffPoly poly;
    std::vector<ProvenanceEntry> provenance;
    const GridSet& bound() const { return provenance.back().bound; }
};

// y = a + z.
Transformed additive_conjugate(const DiffPoly& F, const Series& a, const DerivationSpec& spec,
                               std::size_t cap = kDefaultEnumCap);
// y = m z for a single term m.
Transformed multiplicative_conjugate(const DiffPoly& F, const Term& m, const DerivationSpec& spec,
                                     std::size_t cap = kDefaultEnumCap);
// Rewrites D_k-derivatives through D_l; may prepend the pre-step y = t^{-n theta_l} z.
Transformed change_derivation(const DiffPoly& F, std::size_t l, const DerivationSpec& spec,
                              std::size_t cap = kDefaultEnumCap);

// Triangular q_{j,i}, 1 <= j <= i <= n, with m = d_l/d_k (d_0 = 1).
struct QMatrix {
    std::size_t k, l;
    unsigned n;
    Series m;
    std::vector<std::vector<Series>> q;  // q[i][j]
    const Series& at(unsigned j, unsigned i) const { return q.at(i).at(j); }
};
QMatrix qji_coefficients(const DerivationSpec& spec, std::size_t k, std::size_t l, unsigned n,
                         std::size_t cap = kDefaultEnumCap);

// Symbolic q_{j,i}: N-combinations of monomials prod_a (D^a m)^{e_a}; key e = (e_0, e_1, ...).
using MPoly = std::map<std::vector<unsigned>, Natural>;
std::vector<std::vector<MPoly>> qji_symbolic(unsigned n);
std::string mpoly_str(const MPoly& p);

// Support bounds of the three transformations.
enum class TransformKind { Additive, Multiplicative, ChangeDerivation };
struct TransformDescriptor {
    TransformKind kind;
    Series by;              // a for additive, the term m for multiplicative
    std::size_t target = 0; // l for change of derivation
};
GridSet transform_support_bound(const TransformDescriptor& t, const DiffPoly& F, const DerivationSpec& spec,
                                std::size_t cap = kDefaultEnumCap);

}  // namespace hardy
