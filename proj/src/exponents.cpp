#include "latexp/exponents.hpp"

#include <algorithm>

#include "latexp/errors.hpp"

namespace latexp {

ExponentEstimate estimate_omega(const Lattice& lat, const RecordSearchResult& search,
                                const Rat& tail_fraction) {
    if (!(tail_fraction > 0 && tail_fraction <= 1))
        throw input_error("tail_fraction must lie in (0, 1]");
    ExponentEstimate est;
    est.x_max_reached = search.x_max_covered;
    est.complete = search.complete;
    if (search.certificate) {
        est.is_infinite = true;
        est.certificate = search.certificate;
    }
    for (const auto& r : search.records) est.trajectory.push_back({r.point.sup, r.gamma});
    if (est.is_infinite) return est;
    if (search.records.empty()) throw input_error("estimate_omega: no records found");

    Rat threshold = (1 - tail_fraction) * search.x_max_covered;
    std::optional<Interval> gmax;
    int used = 0;
    for (const auto& r : search.records) {
        if (threshold > 1 && lat.cmp_sup_rat(r.point.z, threshold) < 0) continue;
        ++used;
        if (!r.gamma.value) continue;
        if (!gmax) {
            gmax = *r.gamma.value;
        } else {
            gmax = Interval::max(*gmax, *r.gamma.value);
        }
    }
    if (used == 0) {
        // tail too aggressive for the data: fall back to the last record
        const auto& r = search.records.back();
        used = 1;
        gmax = r.gamma.value;
    }
    est.records_used = used;
    est.gamma_max = gmax;
    return est;
}

Rat transference_lower_bound(const Rat& omega_dual, int d) {
    if (d < 3) throw input_error("transference bound requires d >= 3 (d = 2 has omega = omega*)");
    if (omega_dual < 0) throw input_error("omega* must be nonnegative");
    Rat denom = Rat((d - 1) * (d - 1)) + Rat(d * (d - 2)) * omega_dual;
    return omega_dual / denom;
}

Rat transference_lower_bound_infinite(int d) {
    if (d < 3) throw input_error("transference bound requires d >= 3");
    return Rat(1, d * (d - 2));
}

Interval transference_lower_bound(const Interval& omega_dual, int d) {
    if (d < 3) throw input_error("transference bound requires d >= 3");
    long prec = omega_dual.prec();
    Interval dd = Interval::exact(Rat((d - 1) * (d - 1)), prec);
    Interval c = Interval::exact(Rat(d * (d - 2)), prec);
    return omega_dual / (dd + c * omega_dual);
}

Rat spectrum_value(int d, int k, int l) {
    if (d < 3) throw input_error("spectrum value requires d >= 3");
    if (k < 1 || k > d - 2) throw input_error("spectrum value requires 1 <= k <= d-2");
    if (l < 1 || l > d - k - 1) throw input_error("spectrum value requires 1 <= l <= d-k-1");
    return Rat(static_cast<long>(k) * (d - k - l), static_cast<long>(d) * l);
}

// --- classical exponents ---------------------------------------------------------

namespace {

// floor of a field element, decided exactly
Int exact_floor(const FieldElement& v) {
    if (v.is_rational()) return rat_floor(v.as_rational());
    long prec = 32;
    while (true) {
        Interval iv = v.embed(prec);
        Rat lo = iv.lo_rat(), hi = iv.hi_rat();
        Int fl = rat_floor(lo);
        if (Rat(fl + 1) > hi) return fl;  // no integer inside (lo, hi]
        // an integer boundary n in (lo, hi]: decide v == n exactly
        Int n = fl + 1;
        FieldElement diff = v - FieldElement::from_rational(v.field(), Rat(n));
        if (diff.is_zero()) return n;
        prec *= 2;
        if (prec > (1L << 22)) throw internal_error("exact_floor failed to converge");
    }
}

FieldElement abs_exact(const FieldElement& v) { return v.sign() >= 0 ? v : -v; }

}  // namespace

ClassicalResult classical_exponent(const ClassicalConfig& cfg) {
    size_t n = cfg.theta.size();
    if (n == 0) throw input_error("classical exponent requires at least one theta");
    if (cfg.x_max <= 1) throw input_error("classical exponent requires x_max > 1");
    const FieldPtr& f = cfg.theta[0].field();
    for (const auto& t : cfg.theta)
        if (!f->same_field(*t.field())) throw input_error("theta entries must share one field");

    ClassicalResult out;
    struct Cand {
        ZVec z;
        long long base;
        FieldElement score;  // exact nonnegative value before the 1/n root
    };
    std::vector<Cand> cands_all;
    long long d = static_cast<long long>(n) + 1;

    for (long long z1 = 1; z1 <= cfg.x_max; ++z1) {
        // candidate z_{i+1}: the integers bracketing -theta_i * z1
        std::vector<std::vector<long long>> cands(n);
        for (size_t i = 0; i < n; ++i) {
            FieldElement t = (-cfg.theta[i]).scaled(Rat(static_cast<long>(z1)));
            Int fl = exact_floor(t);
            FieldElement diff = t - FieldElement::from_rational(f, Rat(fl));
            if (!fl.fits_slong_p()) throw input_error("classical search: coordinates too large");
            long long lo = fl.get_si();
            if (diff.is_zero()) {
                cands[i] = {lo};  // exact integer: the form vanishes
            } else {
                cands[i] = {lo, lo + 1};
            }
        }
        // all combinations (n <= a handful in practice)
        size_t combos = 1;
        for (size_t i = 0; i < n; ++i) combos *= cands[i].size();
        for (size_t mask = 0; mask < combos; ++mask) {
            ZVec z(static_cast<size_t>(d));
            z[0] = z1;
            size_t m = mask;
            for (size_t i = 0; i < n; ++i) {
                z[i + 1] = cands[i][m % cands[i].size()];
                m /= cands[i].size();
            }
            // exact form values
            std::vector<FieldElement> vals;
            bool any_zero = false, all_zero = true;
            for (size_t i = 0; i < n; ++i) {
                FieldElement li = cfg.theta[i].scaled(Rat(static_cast<long>(z1))) +
                                  FieldElement::from_rational(f, Rat(static_cast<long>(z[i + 1])));
                if (li.is_zero())
                    any_zero = true;
                else
                    all_zero = false;
                vals.push_back(abs_exact(li));
            }
            bool inf_now = cfg.multiplicative ? any_zero : all_zero;
            if (inf_now) {
                out.is_infinite = true;
                out.certificate = z;
                return out;
            }
            // score and base
            FieldElement score = FieldElement::one(f);
            long long base_int;
            if (cfg.multiplicative) {
                for (const auto& v : vals) score = score * v;
                base_int = z1 < 0 ? -z1 : z1;
            } else {
                score = vals[0];
                for (size_t i = 1; i < n; ++i)
                    if ((vals[i] * vals[i] - score * score).sign() > 0) score = vals[i];
                base_int = z1;
                for (size_t i = 0; i < n; ++i) {
                    long long a = z[i + 1] < 0 ? -z[i + 1] : z[i + 1];
                    if (a > base_int) base_int = a;
                }
            }
            if (base_int <= 1) continue;  // gamma undefined at base 1
            cands_all.push_back({z, base_int, score});
        }
    }
    // the record staircase runs over increasing base (not scan order)
    std::sort(cands_all.begin(), cands_all.end(), [](const Cand& a, const Cand& b) {
        if (a.base != b.base) return a.base < b.base;
        return std::lexicographical_compare(a.z.begin(), a.z.end(), b.z.begin(), b.z.end());
    });
    std::optional<FieldElement> vmin;
    for (const auto& c : cands_all) {
        if (vmin && (c.score * c.score - *vmin * *vmin).sign() >= 0) continue;  // not a record
        vmin = c.score;
        ClassicalRecord rec;
        rec.z = c.z;
        rec.base = Interval::exact(Rat(static_cast<long>(c.base)), cfg.precision);
        long p = cfg.precision;
        Interval sv = c.score.embed(p);
        while (!sv.certainly_positive() && p < cfg.precision * 64) {
            p *= 2;
            sv = c.score.embed(p);
        }
        if (!sv.certainly_positive())
            throw internal_error("classical: score enclosure stuck at 0");
        rec.value = cfg.multiplicative ? sv.root(static_cast<unsigned long>(n)) : sv;
        rec.gamma.value = -(rec.value.log() / rec.base.log());
        out.records.push_back(std::move(rec));
    }
    for (const auto& r : out.records) {
        if (!r.gamma.value) continue;
        if (!out.gamma_max)
            out.gamma_max = *r.gamma.value;
        else
            out.gamma_max = Interval::max(*out.gamma_max, *r.gamma.value);
    }
    return out;
}

}  // namespace latexp
