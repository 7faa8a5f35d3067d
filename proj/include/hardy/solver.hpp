#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hardy/conjugation.hpp"

namespace hardy {

struct SolveBudget {
    std::size_t maxTerms = 8;
    std::size_t maxBranches = 64;
    std::size_t maxReductionDepth = 8;
    std::size_t enumerationCap = kDefaultEnumCap;
};

// What to do with a free coefficient (resonance).
struct ResonancePolicy {
    enum class Kind { Zero, Value, Report } kind = Kind::Zero;
    Rational value = 0;
    static ResonancePolicy parse(std::string_view text);
    std::string str() const;
};

struct SolveOptions {
    SolveBudget budget;
    ResonancePolicy policy;
    // Known leading term m0 t^mu0 with mu0 <= alpha0; triggers the reduction to positive valuation.
    std::optional<Term> leading;
};

enum class OutcomeKind { SolutionPrefix, Stabilized, BudgetExhausted };
std::string to_string(OutcomeKind k);

struct TracePoint {
    std::size_t length;
    std::optional<Exponent> value;  // nullopt: F(prefix) = 0
};

struct ResonanceNote {
    Exponent exponent;
    std::string note;
};

struct SolveOutcome {
    OutcomeKind kind;
    Series prefix;
    std::vector<TracePoint> valuationTrace;
    std::vector<ResonanceNote> resonances;
    GridSet supportBound;
    std::vector<ProvenanceEntry> provenance;
    std::vector<std::string> warnings;
    std::string stopReason;
    std::optional<Exponent> stabilizedValue;
    std::vector<Exponent> testedExtensions;
    // Shift mu0 - alpha0 when the reduction to positive valuation was applied.
    std::optional<Exponent> shift;
    bool containmentVerified = false;
};

enum class CandidateKind { Newton, Corner, Resonance, Descent };
std::string to_string(CandidateKind k);

struct Candidate {
    Exponent exponent;             // in the variable of the solved equation
    CandidateKind kind;
    std::optional<Rational> coef;  // nullopt: free coefficient
    std::size_t cls;               // derivation class used
    unsigned w;                    // Weierstrass order of the normalized equation at this node
    bool viable = true;            // false: listed but cannot change the leading behaviour
};

// max(0, -n theta(k0)).
Exponent alpha0(const DerivationSpec& spec, unsigned n);

// Additive conjugation by m0 t^mu0, then multiplicative conjugation by t^{mu0 - alpha0}.
// Identity (empty provenance, zero shift) when mu0 > alpha0.
struct Reduced {
    DiffPoly poly;
    Exponent shift;
    std::vector<ProvenanceEntry> provenance;
};
Reduced reduce_to_positive(const DiffPoly& P, const Term& leading, const DerivationSpec& spec,
                           std::size_t cap = kDefaultEnumCap);

// Candidate next exponents after prefix p (all classes), sorted lexicographically.
std::vector<Candidate> next_candidates(const DiffPoly& P, const Series& p, const DerivationSpec& spec,
                                       std::size_t cap = kDefaultEnumCap);

// Coefficient for candidate exponent mu after prefix p; nullopt when the coefficient is free.
struct StepResult {
    std::optional<Rational> coef;
    Series prefix;
};
StepResult solve_w1_step(const DiffPoly& P, const Series& p, const Exponent& mu, const DerivationSpec& spec,
                         std::size_t cap = kDefaultEnumCap);

// Weierstrass order after conjugating a normalized equation by m t^mu and renormalizing.
struct WeierstrassStep {
    unsigned w_before;
    unsigned w_after;
    DiffPoly reduced;
};
WeierstrassStep reduce_weierstrass(const DiffPoly& normalized, const Exponent& mu, const Rational& m,
                                   const DerivationSpec& spec, std::size_t cap = kDefaultEnumCap);

std::vector<SolveOutcome> solve(const DiffPoly& P, const DerivationSpec& spec, const SolveOptions& opts = {});

// Replays the elementary transformations recorded on a branch.
GridSet support_bound_R(const std::vector<ProvenanceEntry>& provenance, const DerivationSpec& spec, unsigned order,
                        std::size_t cap = kDefaultEnumCap);

}  // namespace hardy
