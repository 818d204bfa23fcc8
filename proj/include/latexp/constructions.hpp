#pragma once

#include <optional>
#include <string>

#include "latexp/lattice.hpp"

namespace latexp {

// Verdict of one exact hypothesis clause, with a finite certificate on failure
// (an integer relation, a kernel vector, or a vanishing minor).
struct Clause {
    std::string description;
    bool pass = false;
    std::string certificate;  // human-readable exact witness for failures
};

struct HypothesisReport {
    std::string hypothesis;
    std::vector<Clause> clauses;
    bool passed() const {
        for (const auto& c : clauses)
            if (!c.pass) return false;
        return true;
    }
};

// Lattice of the order Z[alpha] of a totally real field: row i applies the
// i-th real embedding to (1, alpha, ..., alpha^{d-1}). The coordinate product
// of a point is the field norm, an exact rational integer.
Lattice totally_real_lattice(const FieldPtr& field);

// Every wedge of every row tuple must have Q-linearly independent coordinates.
HypothesisReport verify_corollary1_hypothesis(const FieldForms& forms);

// First coordinate of the (1..d-1)-wedge zero, the rest independent, every
// other tuple fully independent.
HypothesisReport verify_theorem4_hypothesis(const FieldForms& forms);

// The subspace {l_1 = ... = l_{d-k} = 0} has rational closure of dimension
// exactly k + l.
HypothesisReport verify_spectrum_hypothesis(const FieldForms& forms, int k, int l);

struct ConstructionResult {
    Lattice lattice;
    HypothesisReport report;
};

// A lattice satisfying the full sharpness hypothesis, validated by the
// verifier at construction (d = 3 ships a quintic-field recipe; a small
// catalog of last-row perturbations is tried in order).
ConstructionResult theorem4_lattice(int d, const std::optional<FieldForms>& config = {});

// Forms realizing the spectrum value k(d-k-l)/(dl): the common kernel of the
// first d-k rows has rational closure of dimension exactly k+l. The expected
// exponent is attached by the caller via spectrum_value(d, k, l).
ConstructionResult spectrum_lattice(int d, int k, int l,
                                    const std::optional<FieldForms>& config = {});

}  // namespace latexp
