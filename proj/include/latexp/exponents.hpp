#pragma once

#include <optional>

#include "latexp/enumerate.hpp"

namespace latexp {

struct TrajectoryPoint {
    Interval sup;
    GammaResult gamma;
};

// Certified lower estimate of the lattice exponent from a record search: the
// gamma trajectory plus its maximum, or an exact +infinity certificate. No
// upper bound is ever claimed.
struct ExponentEstimate {
    bool is_infinite = false;
    std::optional<Interval> gamma_max;
    int records_used = 0;
    Rat x_max_reached;
    std::optional<LatticePoint> certificate;
    std::vector<TrajectoryPoint> trajectory;
    bool complete = true;
};

// tail_fraction in (0, 1]: only records with sup >= (1 - tail_fraction) * x_max
// enter gamma_max (the full trajectory is always reported).
ExponentEstimate estimate_omega(const Lattice& lat, const RecordSearchResult& search,
                                const Rat& tail_fraction);

// Theorem's transference bound omega* / ((d-1)^2 + d(d-2) omega*).
Rat transference_lower_bound(const Rat& omega_dual, int d);
Rat transference_lower_bound_infinite(int d);  // value 1/(d(d-2))
Interval transference_lower_bound(const Interval& omega_dual, int d);

// k(d-k-l) / (d l) for k in {1..d-2}, l in {1..d-k-1}.
Rat spectrum_value(int d, int k, int l);

// --- classical pair exponents (n forms in n+1 variables) ---

struct ClassicalConfig {
    std::vector<FieldElement> theta;  // all in one field
    long long x_max = 1000;           // bound on z_1
    bool multiplicative = false;
    long precision = 128;
};

struct ClassicalRecord {
    ZVec z;             // (z_1, ..., z_{n+1})
    Interval base;      // |z| (ordinary) or |z_1| (multiplicative)
    Interval value;     // max_i |l_i(z)| or prod |l_i(z)|^{1/n}
    GammaResult gamma;
};

struct ClassicalResult {
    bool is_infinite = false;
    std::optional<ZVec> certificate;  // exact solution of the defining system
    std::vector<ClassicalRecord> records;
    std::optional<Interval> gamma_max;
};

// Records of l_i(z) = theta_i z_1 + z_{i+1}. Ordinary mode scores
// max_i |l_i(z)| against |z|; multiplicative mode scores prod |l_i|^{1/n}
// against |z_1| (z_1 != 0). All record decisions are exact field comparisons.
ClassicalResult classical_exponent(const ClassicalConfig& cfg);

}  // namespace latexp
