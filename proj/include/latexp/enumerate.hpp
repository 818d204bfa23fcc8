#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "latexp/lattice.hpp"

namespace latexp {

// Closed coordinate box |x_i| <= eta_i.
struct Box {
    std::vector<Rat> eta;
    Box() = default;
    explicit Box(std::vector<Rat> e);
    static Box cube(int d, const Rat& eta);
    Rat volume_half() const;  // prod eta_i (the volume is 2^d times this)
};

struct EnumerationBudget {
    Rat x_max = Rat(100);
    // Cap on candidate integer vectors examined (enumeration work), applied in
    // deterministic chunks so results are independent of the thread count.
    long long max_points = 200'000'000;
    long precision = 128;
    int threads = 1;
};

struct EnumerationStats {
    long long scanned = 0;   // candidate vectors examined
    long long in_box = 0;    // points that passed the membership test
    bool complete = true;    // false iff the work cap truncated the scan
};

// Rigorous double-precision view of a candidate point: |x_i| lies in
// [x_abs[i] - x_margin[i], x_abs[i] + x_margin[i]]. Lets sinks reject the bulk
// of candidates without exact arithmetic.
struct CandidateView {
    const double* x_abs = nullptr;
    const double* x_margin = nullptr;
    int d = 0;
};

// Folding sink for (possibly parallel) enumeration. Results must not depend
// on arrival order; all built-in sinks decide with exact comparisons.
class FoldSink {
  public:
    virtual ~FoldSink() = default;
    virtual std::unique_ptr<FoldSink> clone_empty() const = 0;
    virtual void offer(const ZVec& z, const CandidateView& view) = 0;
    virtual void merge(FoldSink&& other) = 0;
};

// Enumeration engine for one lattice at one precision. Completeness is
// unconditional: the w-box bound is computed from the exact inverse of the
// (LLL-tightened) embedded basis with outward rounding.
class Enumerator {
  public:
    Enumerator(const Lattice& lat, long prec);

    const Lattice& lattice() const { return lat_; }
    long precision() const { return prec_; }

    // Enumerate all z with |x(z)| in the box and fold them into `sink`.
    EnumerationStats run(const Box& box, FoldSink& sink, long long max_candidates,
                         int threads, bool exclude_zero) const;

    // Deterministic z-lexicographic materialization (small boxes).
    std::vector<ZVec> collect(const Box& box, long long max_candidates, int threads,
                              bool exclude_zero, EnumerationStats* stats = nullptr) const;

  private:
    struct Row {
        std::vector<Interval> iv;   // x_i = sum_j iv[j] * w_j  (embedding scale folded in)
        std::vector<double> mid, rad;
    };

    std::vector<long long> w_bounds(const Box& box) const;
    // -1 out, +1 in, 0 unsure; fills xa (|x| approx) and xm (margins)
    int double_filter(const std::vector<double>& eta_lo, const std::vector<double>& eta_hi,
                      const long long* w, double* xa, double* xm) const;
    bool member_exact(const ZVec& z, const Box& box) const;
    int member_interval(const long long* w, const Box& box) const;  // -1/0/+1

    const Lattice& lat_;
    long prec_;
    int d_;
    std::vector<std::vector<long long>> u_;  // z = U w
    std::vector<Row> rows_;                  // indexed by coordinate i
};

// --- record searches -----------------------------------------------------------

struct RecordPoint {
    LatticePoint point;
    GammaResult gamma;
    Interval running_pi_min;  // equals point.pi at the time of the record
};

struct RecordSearchResult {
    std::vector<RecordPoint> records;
    bool complete = true;
    Rat x_max_requested;
    Rat x_max_covered = Rat(1);
    std::optional<LatticePoint> certificate;  // exact zero-coordinate witness
    long long points_enumerated = 0;
    long long candidates_scanned = 0;
};

// Sup-norm shell record search: emits the Pareto staircase of (sup, Pi) over
// all points with 1 < |x| <= x_max, certified by exact comparisons. Stops at
// shell granularity on an exact zero-coordinate certificate.
RecordSearchResult record_points(const Lattice& lat, const EnumerationBudget& budget);

struct NormMinimumResult {
    Interval value;            // N_{x_max}; exact zero when zero_witness is set
    bool exact_zero = false;
    std::optional<ZVec> attained;  // argmin (min product, then lex-least z)
    bool complete = true;
    long long points_enumerated = 0;
};

// N_{x_max} = min prod |x_i| over 0 < |x| <= x_max (unit box included).
NormMinimumResult norm_minimum_estimate(const Lattice& lat, const Rat& x_max,
                                        const EnumerationBudget& budget);

struct MinkowskiResult {
    LatticePoint point;
    Rat widened_by = Rat(0);  // nonzero when the fallback widening was used
};

// A nonzero lattice point in the closed box; requires the volume hypothesis
// 2^d prod eta_i >= 2^d |det|, checked exactly. Deterministic (lex-least z).
MinkowskiResult minkowski_point(const Lattice& lat, const Box& box,
                                const EnumerationBudget& budget);

// Exact decision: a nonzero z with l_i(z) = 0 for some i, found through the
// rational kernels of the rows. Returns the point and the 1-based coordinate.
std::optional<std::pair<LatticePoint, int>> coordinate_plane_point(const Lattice& lat, long prec);

// points_in_box as a stream in z-lexicographic order.
EnumerationStats points_in_box(const Lattice& lat, const Box& box, bool exclude_zero,
                               const EnumerationBudget& budget,
                               const std::function<void(const LatticePoint&)>& yield);

}  // namespace latexp
