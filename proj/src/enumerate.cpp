#include "latexp/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "latexp/errors.hpp"
#include "latexp/linalg.hpp"
#include "latexp/reduce.hpp"

namespace latexp {

Box::Box(std::vector<Rat> e) : eta(std::move(e)) {
    for (const auto& h : eta)
        if (h <= 0) throw input_error("box half-sides must be positive");
}

Box Box::cube(int d, const Rat& h) { return Box(std::vector<Rat>(static_cast<size_t>(d), h)); }

Rat Box::volume_half() const {
    Rat v(1);
    for (const auto& h : eta) v *= h;
    return v;
}

namespace {

bool zvec_lex_less(const ZVec& a, const ZVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Rigorous double lower/upper bounds for prod |x_i| from a candidate view.
double product_lower(const CandidateView& v) {
    double p = 1;
    for (int i = 0; i < v.d; ++i) {
        double lo = v.x_abs[i] - v.x_margin[i];
        if (lo <= 0) return 0;
        p *= lo;
    }
    return p * (1 - 1e-12);
}

double product_upper(const CandidateView& v) {
    double p = 1;
    for (int i = 0; i < v.d; ++i) p *= (v.x_abs[i] + v.x_margin[i]);
    return p * (1 + 1e-12) + 1e-300;
}

}  // namespace

// --- Enumerator -----------------------------------------------------------------

Enumerator::Enumerator(const Lattice& lat, long prec) : lat_(lat), prec_(prec), d_(lat.dim()) {
    // embedded basis columns at low precision for the reduction heuristic
    std::vector<std::vector<Rat>> cols(d_, std::vector<Rat>(d_));
    std::vector<std::vector<Interval>> zcols;
    zcols.reserve(d_);
    for (int j = 0; j < d_; ++j) {
        ZVec e(d_, 0);
        e[j] = 1;
        zcols.push_back(lat.embed_coords(e, prec_));
        for (int i = 0; i < d_; ++i) cols[j][i] = zcols[j][i].mid_rat();
    }
    u_ = lll_transform(cols);

    rows_.resize(d_);
    for (int i = 0; i < d_; ++i) {
        rows_[i].iv.reserve(d_);
        for (int j = 0; j < d_; ++j) {
            Interval acc = Interval::exact(Rat(0), prec_);
            for (int k = 0; k < d_; ++k) acc.add_mul_si(zcols[k][i], static_cast<long>(u_[k][j]));
            rows_[i].iv.push_back(std::move(acc));
        }
        rows_[i].mid.resize(d_);
        rows_[i].rad.resize(d_);
        for (int j = 0; j < d_; ++j) {
            double lo = rows_[i].iv[j].lo_d(), hi = rows_[i].iv[j].hi_d();
            double mid = 0.5 * (lo + hi);
            double mag = std::max(std::abs(lo), std::abs(hi));
            // covers the interval radius, the dot-product rounding (<= 16 eps
            // per term for d <= 12) and the midpoint rounding
            rows_[i].mid[j] = mid;
            rows_[i].rad[j] = (hi - lo) * 0.5 + 16 * 2.220446049250313e-16 * mag + 1e-300;
        }
    }
}

std::vector<long long> Enumerator::w_bounds(const Box& box) const {
    if (static_cast<int>(box.eta.size()) != d_) throw input_error("box dimension mismatch");
    std::vector<Interval> sums;
    Interval s = lat_.embed_scale(prec_);
    if (const auto* ff = lat_.field_forms()) {
        // G = F U exactly over the field; |w_j| <= sum_i |G^{-1}[j][i]| eta_i / s
        const auto& rows = ff->rows();
        FMatrix g(d_, FRow(d_, FieldElement::zero(lat_.field())));
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) {
                FieldElement acc = FieldElement::zero(lat_.field());
                for (int k = 0; k < d_; ++k) {
                    if (u_[k][j] == 0) continue;
                    acc = acc + rows[i][k].scaled(Rat(static_cast<long>(u_[k][j])));
                }
                g[i][j] = acc;
            }
        FMatrix ginv = finverse(g);
        for (int j = 0; j < d_; ++j) {
            Interval sum = Interval::exact(Rat(0), prec_);
            for (int i = 0; i < d_; ++i)
                sum += ginv[j][i].embed(prec_).abs() * Interval::exact(box.eta[i], prec_);
            sums.push_back(sum / s);
        }
    } else {
        const auto* nf = lat_.norm_forms();
        // (V R U)^{-1}[j][i] = w_j(alpha_i) with W = (RU)^{-1} S^{-1}
        QMatrix ru(d_, std::vector<Rat>(d_, Rat(0)));
        for (int k = 0; k < d_; ++k)
            for (int j = 0; j < d_; ++j) {
                Rat acc(0);
                for (int t = 0; t < d_; ++t)
                    acc += nf->coeffs()[k][t] * Rat(static_cast<long>(u_[t][j]));
                ru[k][j] = acc;
            }
        QMatrix rinv = matrix_inverse(ru);
        QMatrix sinv = matrix_inverse(nf->trace_matrix());
        for (int j = 0; j < d_; ++j) {
            std::vector<Rat> wrow(d_, Rat(0));
            for (int t = 0; t < d_; ++t) {
                Rat acc(0);
                for (int k = 0; k < d_; ++k) acc += rinv[j][k] * sinv[k][t];
                wrow[t] = acc;
            }
            poly::QPoly wp(wrow.begin(), wrow.end());
            poly::normalize(wp);
            Interval sum = Interval::exact(Rat(0), prec_);
            for (int i = 0; i < d_; ++i)
                sum += lat_.field()->evaluate_at_root(wp, i, prec_).abs() *
                       Interval::exact(box.eta[i], prec_);
            sums.push_back(sum / s);
        }
    }
    std::vector<long long> bounds(d_);
    for (int j = 0; j < d_; ++j) {
        Int b = rat_ceil(sums[j].hi_rat());
        if (b > Int(2'000'000'000)) throw input_error("enumeration box too large");
        bounds[j] = std::max<long long>(0, static_cast<long long>(b.get_si()));
    }
    return bounds;
}

int Enumerator::double_filter(const std::vector<double>& eta_lo,
                              const std::vector<double>& eta_hi, const long long* w, double* xa,
                              double* xm) const {
    bool all_in = true;
    for (int i = 0; i < d_; ++i) {
        double acc = 0, margin = 0;
        const auto& row = rows_[i];
        for (int j = 0; j < d_; ++j) {
            double wj = static_cast<double>(w[j]);
            acc += row.mid[j] * wj;
            margin += row.rad[j] * std::abs(wj);
        }
        margin = margin * 1.0001 + 1e-300;
        double a = std::abs(acc);
        xa[i] = a;
        xm[i] = margin;
        if (a - margin > eta_hi[i]) return -1;
        if (!(a + margin <= eta_lo[i])) all_in = false;
    }
    return all_in ? 1 : 0;
}

int Enumerator::member_interval(const long long* w, const Box& box) const {
    bool all_in = true;
    for (int i = 0; i < d_; ++i) {
        Interval acc = Interval::exact(Rat(0), prec_);
        for (int j = 0; j < d_; ++j) acc.add_mul_si(rows_[i].iv[j], static_cast<long>(w[j]));
        Interval a = acc.abs();
        if (a.certainly_greater(box.eta[i])) return -1;
        if (!a.certainly_leq(box.eta[i])) all_in = false;
    }
    return all_in ? 1 : 0;
}

bool Enumerator::member_exact(const ZVec& z, const Box& box) const {
    for (int i = 0; i < d_; ++i)
        if (lat_.cmp_coord_abs_rat(z, i, box.eta[i]) > 0) return false;
    return true;
}

EnumerationStats Enumerator::run(const Box& box, FoldSink& sink, long long max_candidates,
                                 int threads, bool exclude_zero) const {
    EnumerationStats stats;
    auto bounds = w_bounds(box);
    unsigned __int128 per_chunk = 1;
    for (int j = 1; j < d_; ++j) per_chunk *= static_cast<unsigned long long>(2 * bounds[j] + 1);
    long long total_chunks = 2 * bounds[0] + 1;
    long long chunks;
    if (per_chunk == 0 || max_candidates <= 0) {
        chunks = 0;
    } else {
        unsigned __int128 budget_chunks = static_cast<unsigned __int128>(max_candidates) / per_chunk;
        if (budget_chunks < 1) budget_chunks = 1;  // always do at least the central slab
        chunks = budget_chunks >= static_cast<unsigned __int128>(total_chunks)
                     ? total_chunks
                     : static_cast<long long>(budget_chunks);
    }
    stats.complete = (chunks == total_chunks);
    unsigned __int128 scanned128 = per_chunk * static_cast<unsigned long long>(chunks);
    stats.scanned = scanned128 > static_cast<unsigned __int128>(INT64_MAX)
                        ? INT64_MAX
                        : static_cast<long long>(scanned128);

    // center-out w_0 sequence: 0, 1, -1, 2, -2, ...
    auto chunk_value = [&](long long idx) -> long long {
        if (idx == 0) return 0;
        long long k = (idx + 1) / 2;
        return (idx % 2 == 1) ? k : -k;
    };

    std::vector<double> eta_lo(d_), eta_hi(d_);
    for (int i = 0; i < d_; ++i) {
        Interval e = Interval::exact(box.eta[i], 64);
        eta_lo[i] = e.lo_d();
        eta_hi[i] = e.hi_d();
    }

    std::atomic<long long> next_chunk{0};
    std::atomic<long long> in_box_count{0};
    int nthreads = std::max(1, threads);

    auto worker_run = [&](FoldSink* local) {
        std::vector<long long> w(static_cast<size_t>(d_), 0);
        ZVec z(static_cast<size_t>(d_), 0);
        std::vector<double> xa(static_cast<size_t>(d_)), xm(static_cast<size_t>(d_));
        CandidateView view{xa.data(), xm.data(), d_};
        long long local_in = 0;
        while (true) {
            long long ci = next_chunk.fetch_add(1);
            if (ci >= chunks) break;
            w[0] = chunk_value(ci);
            for (int j = 1; j < d_; ++j) w[j] = -bounds[j];
            while (true) {
                int verdict = double_filter(eta_lo, eta_hi, w.data(), xa.data(), xm.data());
                if (verdict >= 0) {
                    bool zero = true;
                    for (int i = 0; i < d_; ++i) {
                        long long acc = 0;
                        for (int j = 0; j < d_; ++j) acc += u_[i][j] * w[j];
                        z[i] = acc;
                        if (acc != 0) zero = false;
                    }
                    bool in;
                    if (zero) {
                        in = !exclude_zero;
                    } else if (verdict == 1) {
                        in = true;
                    } else {
                        int ivv = member_interval(w.data(), box);
                        in = ivv == 1 || (ivv == 0 && member_exact(z, box));
                    }
                    if (in) {
                        ++local_in;
                        local->offer(z, view);
                    }
                }
                if (d_ == 1) break;
                int j = d_ - 1;
                while (j >= 1) {
                    if (w[j] < bounds[j]) {
                        ++w[j];
                        break;
                    }
                    w[j] = -bounds[j];
                    --j;
                }
                if (j == 0) break;
            }
        }
        in_box_count.fetch_add(local_in);
    };

    if (nthreads == 1) {
        worker_run(&sink);
    } else {
        std::vector<std::unique_ptr<FoldSink>> locals;
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) locals.push_back(sink.clone_empty());
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker_run, locals[t].get());
        for (auto& th : pool) th.join();
        for (auto& l : locals) sink.merge(std::move(*l));
    }
    stats.in_box = in_box_count.load();
    return stats;
}

namespace {

struct CollectSink : FoldSink {
    std::vector<ZVec> pts;
    std::unique_ptr<FoldSink> clone_empty() const override {
        return std::make_unique<CollectSink>();
    }
    void offer(const ZVec& z, const CandidateView&) override { pts.push_back(z); }
    void merge(FoldSink&& other) override {
        auto& o = static_cast<CollectSink&>(other);
        pts.insert(pts.end(), o.pts.begin(), o.pts.end());
    }
};

}  // namespace

std::vector<ZVec> Enumerator::collect(const Box& box, long long max_candidates, int threads,
                                      bool exclude_zero, EnumerationStats* stats) const {
    CollectSink sink;
    auto st = run(box, sink, max_candidates, threads, exclude_zero);
    if (stats) *stats = st;
    std::sort(sink.pts.begin(), sink.pts.end(), zvec_lex_less);
    return sink.pts;
}

// --- record search ---------------------------------------------------------------

namespace {

// Pareto staircase of (sup-norm, product): entries sorted by (sup, lex z) with
// the product strictly decreasing. All decisions exact, so the final staircase
// is a pure function of the offered point set.
struct Frontier {
    const Lattice* lat = nullptr;
    std::vector<ZVec> entries;

    int cmp_key(const ZVec& a, const ZVec& b) const {
        int c = lat->cmp_sup(a, b);
        if (c != 0) return c;
        if (zvec_lex_less(a, b)) return -1;
        if (zvec_lex_less(b, a)) return 1;
        return 0;
    }

    void insert(const ZVec& z) {
        size_t pos = 0;
        while (pos < entries.size() && cmp_key(entries[pos], z) < 0) ++pos;
        if (pos < entries.size() && cmp_key(entries[pos], z) == 0) return;
        if (pos > 0 && lat->cmp_product(entries[pos - 1], z) <= 0) return;  // dominated
        // collapse exact sup ties: keep one record per sup value
        if (pos > 0 && lat->cmp_sup(entries[pos - 1], z) == 0) {
            entries.erase(entries.begin() + (pos - 1));
            --pos;
        }
        entries.insert(entries.begin() + pos, z);
        size_t q = pos + 1;
        while (q < entries.size() && lat->cmp_product(entries[q], z) >= 0)
            entries.erase(entries.begin() + q);
    }
};

struct RecordSink : FoldSink {
    const Lattice* lat = nullptr;
    Rat inner;  // previous shells cover sup <= inner
    double inner_lo = 0, inner_hi = 0;
    std::shared_ptr<std::atomic<double>> pmin_hi;  // advisory true upper bound on min P
    Frontier frontier;
    std::optional<ZVec> zero_witness;
    long long offered = 0;

    std::unique_ptr<FoldSink> clone_empty() const override {
        auto s = std::make_unique<RecordSink>();
        s->lat = lat;
        s->inner = inner;
        s->inner_lo = inner_lo;
        s->inner_hi = inner_hi;
        s->pmin_hi = pmin_hi;
        s->frontier.lat = lat;
        return s;
    }

    void consider_zero(const ZVec& z) {
        if (!zero_witness || frontier.cmp_key(z, *zero_witness) < 0) zero_witness = z;
    }

    void offer(const ZVec& z, const CandidateView& v) override {
        ++offered;
        // shell filter: skip points certainly inside the previous shell
        bool certainly_inside = true, certainly_outside = false;
        for (int i = 0; i < v.d; ++i) {
            if (!(v.x_abs[i] + v.x_margin[i] <= inner_lo)) certainly_inside = false;
            if (v.x_abs[i] - v.x_margin[i] > inner_hi) certainly_outside = true;
        }
        if (certainly_inside) return;
        if (!certainly_outside && lat->cmp_sup_rat(z, inner) <= 0) return;
        // zero-coordinate certificate (exact check only for near-zero coordinates)
        for (int i = 0; i < v.d; ++i) {
            if (v.x_abs[i] <= v.x_margin[i] && lat->coord_is_zero(z, i)) {
                consider_zero(z);
                return;
            }
        }
        // The filter bound reflects only PREVIOUS shells (every committed point
        // has smaller sup than any point of this shell, so exceeding their
        // minimum disqualifies a record candidate; intra-shell minima must not
        // be used here because a record only competes against smaller sups).
        double bound = pmin_hi->load(std::memory_order_relaxed);
        if (product_lower(v) > bound) return;
        frontier.insert(z);
    }

    void merge(FoldSink&& other) override {
        auto& o = static_cast<RecordSink&>(other);
        offered += o.offered;
        for (const auto& z : o.frontier.entries) frontier.insert(z);
        if (o.zero_witness) consider_zero(*o.zero_witness);
    }
};

}  // namespace

RecordSearchResult record_points(const Lattice& lat, const EnumerationBudget& budget) {
    if (!(budget.x_max > 1)) throw input_error("record search requires x_max > 1");
    RecordSearchResult out;
    out.x_max_requested = budget.x_max;
    Enumerator en(lat, budget.precision);

    Frontier committed;
    committed.lat = &lat;
    std::optional<ZVec> cert;
    long long candidates_used = 0, points_seen = 0;
    Rat inner(1), covered(1);
    bool complete = true;

    while (inner < budget.x_max) {
        Rat outer = inner * 2;
        if (outer > budget.x_max) outer = budget.x_max;
        long long remaining = budget.max_points - candidates_used;
        if (remaining <= 0) {
            complete = false;
            break;
        }
        RecordSink sink;
        sink.lat = &lat;
        sink.inner = inner;
        {
            Interval it = Interval::exact(inner, 64);
            sink.inner_lo = it.lo_d();
            sink.inner_hi = it.hi_d();
        }
        sink.pmin_hi = std::make_shared<std::atomic<double>>(1e301);
        sink.frontier = committed;  // new records must beat everything seen so far
        if (!committed.entries.empty()) {
            LatticePoint best = lat.make_point(committed.entries.back(), 64);
            double hi = 1;
            for (const auto& xi : best.x) hi *= xi.abs().hi_d();
            sink.pmin_hi->store(hi * (1 + 1e-12));
        }
        auto stats = en.run(Box::cube(lat.dim(), outer), sink, remaining, budget.threads, true);
        candidates_used += stats.scanned;
        points_seen += sink.offered;
        if (!stats.complete) {
            complete = false;  // partial shell: discard its provisional records
            break;
        }
        committed = std::move(sink.frontier);
        covered = outer;
        if (sink.zero_witness) {
            cert = sink.zero_witness;
            break;
        }
        inner = outer;
    }

    out.complete = complete;
    out.x_max_covered = covered;
    out.points_enumerated = points_seen;
    out.candidates_scanned = candidates_used;
    if (cert) out.certificate = lat.make_point(*cert, budget.precision);
    for (const auto& z : committed.entries) {
        RecordPoint rp;
        rp.point = lat.make_point(z, budget.precision);
        rp.gamma = gamma_of_point(lat, z, budget.precision);
        rp.running_pi_min = rp.point.pi;
        out.records.push_back(std::move(rp));
    }
    return out;
}

// --- norm minimum ------------------------------------------------------------------

namespace {

struct MinSink : FoldSink {
    const Lattice* lat = nullptr;
    std::shared_ptr<std::atomic<double>> min_hi;
    std::optional<ZVec> best;
    bool zero_found = false;

    std::unique_ptr<FoldSink> clone_empty() const override {
        auto s = std::make_unique<MinSink>();
        s->lat = lat;
        s->min_hi = min_hi;
        return s;
    }

    void take(const ZVec& z) {
        if (!best) {
            best = z;
            return;
        }
        int c = lat->cmp_product(z, *best);
        if (c < 0 || (c == 0 && zvec_lex_less(z, *best))) best = z;
    }

    void offer(const ZVec& z, const CandidateView& v) override {
        for (int i = 0; i < v.d; ++i) {
            if (v.x_abs[i] <= v.x_margin[i] && lat->coord_is_zero(z, i)) {
                zero_found = true;
                take(z);
                return;
            }
        }
        double bound = min_hi->load(std::memory_order_relaxed);
        if (product_lower(v) > bound) return;
        take(z);
        double hi = product_upper(v);
        double cur = min_hi->load(std::memory_order_relaxed);
        while (hi < cur && !min_hi->compare_exchange_weak(cur, hi, std::memory_order_relaxed)) {
        }
    }

    void merge(FoldSink&& other) override {
        auto& o = static_cast<MinSink&>(other);
        if (o.zero_found) {
            zero_found = true;
        }
        if (o.best) {
            // re-run the exact comparison; zero-product points compare equal to
            // each other and below everything else
            if (!best) {
                best = o.best;
            } else {
                int c = lat->cmp_product(*o.best, *best);
                if (c < 0 || (c == 0 && zvec_lex_less(*o.best, *best))) best = *o.best;
            }
        }
    }
};

}  // namespace

NormMinimumResult norm_minimum_estimate(const Lattice& lat, const Rat& x_max,
                                        const EnumerationBudget& budget) {
    if (x_max < 1) throw input_error("norm minimum requires x_max >= 1");
    NormMinimumResult out;
    Enumerator en(lat, budget.precision);
    MinSink sink;
    sink.lat = &lat;
    sink.min_hi = std::make_shared<std::atomic<double>>(1e301);
    auto stats = en.run(Box::cube(lat.dim(), x_max), sink, budget.max_points, budget.threads, true);
    out.complete = stats.complete;
    out.points_enumerated = stats.in_box;
    if (!sink.best) return out;  // no nonzero point in range; attained stays empty
    out.attained = *sink.best;
    if (sink.zero_found) {
        out.exact_zero = true;
        out.value = Interval::exact(Rat(0), budget.precision);
        return out;
    }
    LatticePoint p = lat.make_point(*sink.best, budget.precision);
    Interval prod = p.x[0].abs();
    for (int i = 1; i < lat.dim(); ++i) prod = prod * p.x[i].abs();
    out.value = prod;
    return out;
}

// --- Minkowski point ------------------------------------------------------------------

namespace {

struct FirstSink : FoldSink {
    std::optional<ZVec> best;  // lex-least
    std::unique_ptr<FoldSink> clone_empty() const override { return std::make_unique<FirstSink>(); }
    void offer(const ZVec& z, const CandidateView&) override {
        if (!best || zvec_lex_less(z, *best)) best = z;
    }
    void merge(FoldSink&& other) override {
        auto& o = static_cast<FirstSink&>(other);
        if (o.best && (!best || zvec_lex_less(*o.best, *best))) best = o.best;
    }
};

}  // namespace

MinkowskiResult minkowski_point(const Lattice& lat, const Box& box,
                                const EnumerationBudget& budget) {
    if (static_cast<int>(box.eta.size()) != lat.dim()) throw input_error("box dimension mismatch");
    // volume hypothesis 2^d prod eta >= 2^d |det|, decided exactly
    Rat vol = box.volume_half();
    bool ok;
    if (lat.unit_det()) {
        ok = vol >= 1;
    } else if (const auto* ff = lat.field_forms()) {
        FieldElement det2 = ff->det() * ff->det();
        FieldElement e = FieldElement::from_rational(lat.field(), vol * vol) -
                         det2.scaled(pow_rat(lat.scale(), 2 * lat.dim()));
        ok = e.sign() >= 0;
    } else {
        ok = vol * vol >= lat.norm_forms()->det_sq() * pow_rat(lat.scale(), 2 * lat.dim());
    }
    if (!ok) throw input_error("Minkowski volume hypothesis violated: prod eta < |det|");

    Enumerator en(lat, budget.precision);
    FirstSink sink;
    en.run(box, sink, budget.max_points, budget.threads, true);
    MinkowskiResult res;
    if (!sink.best) {
        // boundary corner case: widen by 2^-precision and retry once
        Rat widen = pow_rat(Rat(1, 2), budget.precision);
        Box wider = box;
        for (auto& h : wider.eta) h *= (1 + widen);
        FirstSink retry;
        en.run(wider, retry, budget.max_points, budget.threads, true);
        if (!retry.best)
            throw internal_error("Minkowski guarantee failed (check the enumeration budget)");
        res.point = lat.make_point(*retry.best, budget.precision);
        res.widened_by = widen;
        return res;
    }
    res.point = lat.make_point(*sink.best, budget.precision);
    return res;
}

std::optional<std::pair<LatticePoint, int>> coordinate_plane_point(const Lattice& lat, long prec) {
    if (lat.norm_forms()) return std::nullopt;  // coefficient matrix invertible: kernels trivial
    const auto* ff = lat.field_forms();
    for (int i = 0; i < lat.dim(); ++i) {
        auto kernel = rational_kernel(ff->rows()[i]);
        if (kernel.dim() == 0) continue;
        ZVector prim = to_primitive_integer(kernel.basis[0]);
        ZVec z(lat.dim());
        for (int j = 0; j < lat.dim(); ++j) {
            if (!prim[j].fits_slong_p()) throw internal_error("kernel vector too large");
            z[j] = prim[j].get_si();
        }
        if (!lat.coord_is_zero(z, i)) throw internal_error("kernel point fails exact zero check");
        return std::make_pair(lat.make_point(z, prec), i + 1);
    }
    return std::nullopt;
}

EnumerationStats points_in_box(const Lattice& lat, const Box& box, bool exclude_zero,
                               const EnumerationBudget& budget,
                               const std::function<void(const LatticePoint&)>& yield) {
    Enumerator en(lat, budget.precision);
    EnumerationStats stats;
    auto pts = en.collect(box, budget.max_points, budget.threads, exclude_zero, &stats);
    for (const auto& z : pts) yield(lat.make_point(z, budget.precision));
    return stats;
}

}  // namespace latexp
