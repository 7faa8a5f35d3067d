#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hardy/gridset.hpp"
#include "hardy/series.hpp"

namespace hardy {

// Per-class constants of a derivation: d_k = T_k t^theta, tau = v(t_k').
struct ClassConstants {
    Term d;
    Exponent tau;
    Exponent theta;
    std::optional<std::size_t> tilde_k;  // first nonzero coordinate of theta
};

struct Violation {
    std::string axiom;  // HD0, HD2, HD3, TAU-MATRIX, VAL-DK
    std::string detail;
};

struct SpecReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool has(std::string_view axiom) const;
    std::string summary() const;
};

// The derivation determined by the logarithmic derivatives t_k'/t_k.
class DerivationSpec {
public:
    // Computes the constants; throws only if some t_k'/t_k has no leading term.
    DerivationSpec(std::size_t rank, std::vector<Series> log_derivatives);

    // Builds and validates; throws DomainError naming every violation.
    static DerivationSpec validated(std::size_t rank, std::vector<Series> log_derivatives);

    std::size_t rank() const { return rank_; }
    const std::vector<Series>& log_derivatives() const { return logd_; }
    const ClassConstants& cls(std::size_t k) const { return consts_.at(k - 1); }
    const Term& d(std::size_t k) const { return cls(k).d; }
    const Exponent& theta(std::size_t k) const { return cls(k).theta; }
    const Exponent& tau(std::size_t k) const { return cls(k).tau; }
    std::size_t k0() const { return k0_; }

    SpecReport validate() const;

    // D_0 for k = 0, else D_k = D_0 / d_k, iterated i times.
    Series derive(const Series& a, std::size_t k = 0, unsigned i = 1, std::size_t cap = kDefaultEnumCap) const;

    // max(0, -n theta(k0)).
    Exponent alpha0(unsigned n) const;

private:
    std::size_t rank_;
    std::vector<Series> logd_;
    std::vector<ClassConstants> consts_;
    std::size_t k0_ = 0;
};

Series derive_D0(const Series& a, const DerivationSpec& spec, std::size_t cap = kDefaultEnumCap);
Series derive_Dk(const Series& a, const DerivationSpec& spec, std::size_t k, unsigned i,
                 std::size_t cap = kDefaultEnumCap);

// Predicted v(d_k^(i)) for i >= 1.
struct ZeroDerivative {};
struct ExactValuation {
    Exponent value;
};
struct CandidateValuations {
    std::vector<Exponent> values;
};
using PredictedValuation = std::variant<ZeroDerivative, ExactValuation, CandidateValuations>;
PredictedValuation predicted_dk_derivative_valuation(const DerivationSpec& spec, std::size_t k, unsigned i);

// Superset of the sum over i = 1..n, l = k..r of <Supp D_k^i(t_l) / t_l>.
GridSet compute_script_T(const DerivationSpec& spec, std::size_t k, unsigned n, std::size_t cap = kDefaultEnumCap);

}  // namespace hardy
