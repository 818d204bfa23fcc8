#pragma once

#include <optional>
#include <string>

#include "latexp/enumerate.hpp"

namespace latexp {

// Coordinate parallelepiped |x_i| <= eta_i with rational half-sides.
struct Parallelepiped {
    std::vector<Rat> eta;
    explicit Parallelepiped(std::vector<Rat> e);
    int dim() const { return static_cast<int>(eta.size()); }
};

// eta*_i = (prod_j eta_j) / eta_i.
Parallelepiped pseudo_compound(const Parallelepiped& p);

// --- Theorem 2 checking -------------------------------------------------------

enum class T2Verdict { PremiseFalse, ImplicationHolds, Counterexample, Inconclusive };

struct Theorem2Check {
    T2Verdict verdict = T2Verdict::Inconclusive;
    std::optional<LatticePoint> dual_witness;    // nonzero point of P* cap dual
    std::optional<LatticePoint> primal_witness;  // nonzero point of cP cap lattice
    bool complete = true;
};

// Decides "P* cap L* != {0} => cP cap L != {0}" with c = d^{1/(2(d-2))}.
// Premise membership is exact (rational box); conclusion membership is decided
// by the exact power comparison |x_i|^{2(d-2)} <= d eta_i^{2(d-2)}, so a
// reported counterexample is always genuine. Requires |det L| = 1 exactly.
Theorem2Check check_theorem2(const Lattice& lat, const Parallelepiped& p,
                             const EnumerationBudget& budget);

struct TrialReport {
    int d = 0;
    long long trials = 0;
    unsigned long long seed = 0;
    long long premise_true = 0;
    long long implication_holds = 0;
    long long counterexamples = 0;
    long long inconclusive = 0;
    std::vector<std::string> counterexample_notes;
};

// Seeded unimodular-lattice x box trials; the sampler uses integer shears and
// permutations so det = +-1 holds exactly.
TrialReport random_theorem2_trials(int d, long long trials, unsigned long long seed,
                                   const EnumerationBudget& budget);

Lattice random_unimodular_lattice(int d, SplitMix64& rng);
std::vector<Rat> random_eta(int d, SplitMix64& rng);

// --- Case I of the transference proof ------------------------------------------

struct InequalityCheck {
    std::string name;
    Interval lhs, rhs;
    bool holds = false;
    bool exact = false;  // decided by exact arithmetic (vs certified intervals)
};

struct TransferenceWitness {
    ZVec u_preimage;
    LatticePoint u;
    GammaResult gamma_u;
    std::vector<Interval> eta;  // eta_i = |u_i|^{-1} (prod |u_j|)^{1/(d-1)}
    Interval c;                 // d^{1/(2(d-2))}
    LatticePoint v;             // nonzero point of cP cap L
    bool eta_pseudo_compound_exact = false;  // half-sides of P* equal |u_i|, exactly
    std::vector<InequalityCheck> checks;     // (a), (b), (c)
    bool all_hold = false;
};

// Builds the Case I box from a dual point u (all coordinates nonzero exactly),
// finds v in cP cap L and certifies the proof's inequality chain. Field-forms
// lattices with |det| = 1.
TransferenceWitness case1_witness(const Lattice& lat, const ZVec& u_preimage,
                                  const EnumerationBudget& budget);

// A dual point suitable for case 1 trials: all coordinates nonzero, |u| > 1
// and Pi(u) <= 1 (exact checks). Returns its integer preimage.
std::optional<ZVec> find_case1_dual_point(const Lattice& lat, const EnumerationBudget& budget);

// --- Case II of the transference proof -------------------------------------------

struct Case2Point {
    LatticePoint v;
    bool bound_exact = false;   // prod and sup bound certified by exact arithmetic
    Interval pi_bound_rhs;      // c2^{(d-1)/d} |v|^{-1/(d(d-2))}
    GammaResult gamma_v;
    Interval gamma_lower_rhs;   // 1/(d(d-2)) - ln(c2^{(d-1)/d}) / ln |v|
};

struct Case2Result {
    ZVec u_preimage;
    LatticePoint u;
    Interval c2;        // (det Gamma)^{1/(d-2)}, Gamma = L cap u-perp
    Rat gram_det;       // exact det of the unscaled Gram of Gamma, when rational
    std::vector<Case2Point> points;
    bool axis_case = false;  // Gamma contains the last coordinate axis
};

// Constructive points from Case II: u in L* with u_d = 0 exactly. Produces
// `count` points v in Gamma with strictly growing |v_d|, each carrying the
// exactly-certified bound Pi(v) <= c2^{(d-1)/d} |v|^{-1/(d(d-2))}.
Case2Result case2_points(const Lattice& lat, const ZVec& u_preimage, int count,
                         const EnumerationBudget& budget);

}  // namespace latexp
