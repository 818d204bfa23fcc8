#include "latexp/transfer.hpp"

#include <algorithm>

#include "latexp/errors.hpp"
#include "latexp/exponents.hpp"
#include "latexp/linalg.hpp"

namespace latexp {

Parallelepiped::Parallelepiped(std::vector<Rat> e) : eta(std::move(e)) {
    if (eta.empty()) throw input_error("parallelepiped needs at least one half-side");
    for (const auto& h : eta)
        if (h <= 0) throw input_error("parallelepiped half-sides must be positive");
}

Parallelepiped pseudo_compound(const Parallelepiped& p) {
    Rat prod(1);
    for (const auto& h : p.eta) prod *= h;
    std::vector<Rat> out(p.eta.size());
    for (size_t i = 0; i < p.eta.size(); ++i) out[i] = prod / p.eta[i];
    return Parallelepiped(std::move(out));
}

// --- Theorem 2 -----------------------------------------------------------------

namespace {

bool zvec_lex_less(const ZVec& a, const ZVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// sign(|x_i(z)| - c q) with c = d^{1/(2(d-2))} and rational q > 0, decided
// exactly by comparing |x_i|^{2(d-2)} against d q^{2(d-2)}.
int cmp_coord_abs_vs_c_eta(const Lattice& lat, const ZVec& z, int i, const Rat& q) {
    int d = lat.dim();
    long e = 2L * (d - 2);
    if (const auto* ff = lat.field_forms()) {
        FieldElement l = lat.form_value(z, i);
        if (!lat.unit_det()) {
            FieldElement lhs = l.pow(e).scaled(pow_rat(lat.scale(), e));
            FieldElement rhs = FieldElement::from_rational(lat.field(), Rat(d) * pow_rat(q, e));
            return (lhs - rhs).sign();
        }
        // raise to the d-th power: x^{2d(d-2)} = l^{2d(d-2)} / det^{2(d-2)}
        FieldElement lhs = l.pow(e * d);
        FieldElement rhs = ff->det().pow(e) *
                           FieldElement::from_rational(lat.field(),
                                                       pow_rat(Rat(d), d) * pow_rat(q, e * d));
        return (lhs - rhs).sign();
    }
    const auto* nf = lat.norm_forms();
    poly::QPoly g = nf->point_poly(z);
    poly::QPoly g2 = poly::mul(g, g);
    if (!lat.unit_det()) {
        poly::QPoly acc{Rat(1)};
        for (long t = 0; t < d - 2; ++t) acc = poly::mul(acc, g2);
        acc = poly::scale(acc, pow_rat(lat.scale(), e));
        acc = poly::sub(acc, poly::QPoly{Rat(d) * pow_rat(q, e)});
        return lat.field()->sign_at_root(acc, i);
    }
    poly::QPoly acc{Rat(1)};
    for (long t = 0; t < d * (d - 2); ++t) acc = poly::mul(acc, g2);
    Rat rhs = pow_rat(nf->det_sq(), d - 2) * pow_rat(Rat(d), d) * pow_rat(q, e * d);
    acc = poly::sub(acc, poly::QPoly{rhs});
    return lat.field()->sign_at_root(acc, i);
}

struct AllSink : FoldSink {
    std::vector<ZVec> pts;
    std::unique_ptr<FoldSink> clone_empty() const override { return std::make_unique<AllSink>(); }
    void offer(const ZVec& z, const CandidateView&) override { pts.push_back(z); }
    void merge(FoldSink&& other) override {
        auto& o = static_cast<AllSink&>(other);
        pts.insert(pts.end(), o.pts.begin(), o.pts.end());
    }
};

struct LexMinSink : FoldSink {
    std::optional<ZVec> best;
    std::unique_ptr<FoldSink> clone_empty() const override {
        return std::make_unique<LexMinSink>();
    }
    void offer(const ZVec& z, const CandidateView&) override {
        if (!best || zvec_lex_less(z, *best)) best = z;
    }
    void merge(FoldSink&& other) override {
        auto& o = static_cast<LexMinSink&>(other);
        if (o.best) offer(*o.best, CandidateView{});
    }
};

}  // namespace

Theorem2Check check_theorem2(const Lattice& lat, const Parallelepiped& p,
                             const EnumerationBudget& budget) {
    int d = lat.dim();
    if (d < 3) throw input_error("Theorem 2 check requires d >= 3");
    if (p.dim() != d) throw input_error("parallelepiped dimension mismatch");
    if (!lat.det_is_unimodular())
        throw input_error("Theorem 2 requires |det| = 1 exactly (normalize the lattice first)");

    Theorem2Check out;
    Lattice dual = lat.dual();

    // premise: a nonzero dual point in the rational box P*
    Parallelepiped pc = pseudo_compound(p);
    Enumerator dual_en(dual, budget.precision);
    LexMinSink premise;
    auto st1 = dual_en.run(Box(pc.eta), premise, budget.max_points, budget.threads, true);
    if (!premise.best) {
        out.verdict = st1.complete ? T2Verdict::PremiseFalse : T2Verdict::Inconclusive;
        out.complete = st1.complete;
        return out;
    }
    out.dual_witness = dual.make_point(*premise.best, budget.precision);

    // conclusion: a nonzero lattice point in the closed irrational box cP;
    // enumerate a rational cover and certify membership exactly per candidate
    Interval c = Interval::exact(Rat(d), budget.precision)
                     .root(static_cast<unsigned long>(2 * (d - 2)));
    std::vector<Rat> cover(p.eta.size());
    for (size_t i = 0; i < p.eta.size(); ++i)
        cover[i] = (c * Interval::exact(p.eta[i], budget.precision)).hi_rat();
    Enumerator en(lat, budget.precision);
    AllSink candidates;
    auto st2 = en.run(Box(cover), candidates, budget.max_points, budget.threads, true);
    std::sort(candidates.pts.begin(), candidates.pts.end(), zvec_lex_less);
    for (const auto& z : candidates.pts) {
        bool in = true;
        for (int i = 0; i < d && in; ++i)
            if (cmp_coord_abs_vs_c_eta(lat, z, i, p.eta[i]) > 0) in = false;
        if (in) {
            out.primal_witness = lat.make_point(z, budget.precision);
            out.verdict = T2Verdict::ImplicationHolds;
            out.complete = st1.complete && st2.complete;
            return out;
        }
    }
    if (!st2.complete) {
        out.verdict = T2Verdict::Inconclusive;
        out.complete = false;
        return out;
    }
    out.verdict = T2Verdict::Counterexample;  // genuine: the cover scan was complete and exact
    return out;
}

Lattice random_unimodular_lattice(int d, SplitMix64& rng) {
    auto fq = NumberField::rationals();
    while (true) {
        std::vector<std::vector<long long>> m(d, std::vector<long long>(d, 0));
        for (int i = 0; i < d; ++i) m[i][i] = 1;
        int ops = 5 + static_cast<int>(rng.next_in(0, 3));
        for (int t = 0; t < ops; ++t) {
            int kind = static_cast<int>(rng.next_in(0, 2));
            if (kind == 0) {
                int i = static_cast<int>(rng.next_in(0, d - 1));
                int j = static_cast<int>(rng.next_in(0, d - 1));
                if (i == j) continue;
                long long k = rng.next_in(1, 3) * (rng.next_in(0, 1) ? 1 : -1);
                for (int cc = 0; cc < d; ++cc) m[i][cc] += k * m[j][cc];
            } else if (kind == 1) {
                int i = static_cast<int>(rng.next_in(0, d - 1));
                int j = static_cast<int>(rng.next_in(0, d - 1));
                if (i != j) std::swap(m[i], m[j]);
            } else {
                int i = static_cast<int>(rng.next_in(0, d - 1));
                for (int cc = 0; cc < d; ++cc) m[i][cc] = -m[i][cc];
            }
        }
        long long mx = 0;
        for (const auto& row : m)
            for (long long v : row) mx = std::max(mx, v < 0 ? -v : v);
        if (mx > 60) continue;  // keep the trial boxes small
        FMatrix rows(d, FRow(d, FieldElement::zero(fq)));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                rows[i][j] = FieldElement::from_rational(fq, Rat(static_cast<long>(m[i][j])));
        return Lattice(FieldForms(fq, rows));
    }
}

std::vector<Rat> random_eta(int d, SplitMix64& rng) {
    static const Rat menu[] = {Rat(1, 2), Rat(2, 3), Rat(3, 4), Rat(1),
                               Rat(5, 4), Rat(4, 3), Rat(3, 2), Rat(2)};
    std::vector<Rat> eta(d);
    Rat prod(1);
    for (int i = 0; i + 1 < d; ++i) {
        eta[i] = menu[rng.next_in(0, 7)];
        prod *= eta[i];
    }
    Rat target = menu[rng.next_in(0, 7)];
    eta[d - 1] = target / prod;  // makes prod eta = target in [1/2, 2]
    return eta;
}

TrialReport random_theorem2_trials(int d, long long trials, unsigned long long seed,
                                   const EnumerationBudget& budget) {
    if (d < 3 || d > 5) throw input_error("trials support d in {3, 4, 5}");
    TrialReport rep;
    rep.d = d;
    rep.trials = trials;
    rep.seed = seed;
    SplitMix64 root(seed);
    for (long long t = 0; t < trials; ++t) {
        SplitMix64 rng = root.split(static_cast<unsigned long long>(t));
        Lattice lat = random_unimodular_lattice(d, rng);
        Parallelepiped p(random_eta(d, rng));
        Theorem2Check chk = check_theorem2(lat, p, budget);
        switch (chk.verdict) {
            case T2Verdict::PremiseFalse:
                break;
            case T2Verdict::ImplicationHolds:
                ++rep.premise_true;
                ++rep.implication_holds;
                break;
            case T2Verdict::Counterexample: {
                ++rep.premise_true;
                ++rep.counterexamples;
                std::string note = "trial " + std::to_string(t) + ": eta =";
                for (const auto& h : p.eta) note += " " + rational_string(h);
                rep.counterexample_notes.push_back(note);
                break;
            }
            case T2Verdict::Inconclusive:
                ++rep.inconclusive;
                break;
        }
    }
    return rep;
}

// --- Case I ----------------------------------------------------------------------

namespace {

// monomials coef * G^e with G^{d-1} = base (all in the field); exact value
// algebra for the eta construction
struct RootMonomial {
    FieldElement coef;
    long e;
};

RootMonomial mono_mul(const RootMonomial& a, const RootMonomial& b, const FieldElement& base,
                      long order) {
    RootMonomial r{a.coef * b.coef, a.e + b.e};
    while (r.e >= order) {
        r.coef = r.coef * base;
        r.e -= order;
    }
    return r;
}

RootMonomial mono_div(const RootMonomial& a, const RootMonomial& b, const FieldElement& base,
                      long order) {
    // a / b = a * b^{-1}; normalize the exponent into [0, order)
    RootMonomial r{a.coef * b.coef.inverse(), a.e - b.e};
    while (r.e < 0) {
        r.coef = r.coef * base.inverse();
        r.e += order;
    }
    while (r.e >= order) {
        r.coef = r.coef * base;
        r.e -= order;
    }
    return r;
}

FieldElement abs_exact(const FieldElement& v) { return v.sign() >= 0 ? v : -v; }

}  // namespace

std::optional<ZVec> find_case1_dual_point(const Lattice& lat, const EnumerationBudget& budget) {
    Lattice dual = lat.dual();
    for (Rat xmax(8); xmax <= 512; xmax *= 4) {
        EnumerationBudget b = budget;
        b.x_max = xmax;
        auto search = record_points(dual, b);
        for (const auto& r : search.records) {
            const ZVec& m = r.point.z;
            bool nonzero_coords = true;
            for (int i = 0; i < dual.dim(); ++i)
                if (dual.coord_is_zero(m, i)) nonzero_coords = false;
            if (!nonzero_coords) continue;
            if (dual.cmp_sup_rat(m, Rat(1)) <= 0) continue;
            if (dual.cmp_product_rat(m, Rat(1)) > 0) continue;  // need Pi(u) <= 1
            return m;
        }
        if (search.certificate) return std::nullopt;  // dual point in a coordinate plane
    }
    return std::nullopt;
}

TransferenceWitness case1_witness(const Lattice& lat, const ZVec& u_preimage,
                                  const EnumerationBudget& budget) {
    int d = lat.dim();
    if (d < 3) throw input_error("case 1 requires d >= 3");
    if (!lat.field_forms())
        throw input_error("case 1 supports field-forms lattices");
    if (!lat.det_is_unimodular())
        throw input_error("case 1 requires |det| = 1 exactly (normalize the lattice first)");
    Lattice dual = lat.dual();
    long prec = budget.precision;

    TransferenceWitness w;
    w.u_preimage = u_preimage;
    w.u = dual.make_point(u_preimage, prec);
    if (w.u.has_zero())
        throw input_error("case 1 requires all coordinates of u nonzero (use case 2)");
    // gamma(u) exists only for |u| > 1; check (c) is omitted otherwise
    if (dual.cmp_sup_rat(u_preimage, Rat(1)) > 0)
        w.gamma_u = gamma_of_point(dual, u_preimage, prec);

    // unscaled dual values and their exact absolute values
    std::vector<FieldElement> uhat(d, FieldElement::zero(lat.field()));
    for (int i = 0; i < d; ++i) uhat[i] = abs_exact(dual.form_value(u_preimage, i));
    FieldElement phat = FieldElement::one(lat.field());
    for (const auto& e : uhat) phat = phat * e;

    // eta_i = |u_i|^{-1} G with G^{d-1} = prod |u_j|: exact monomial algebra
    long order = d - 1;
    std::vector<RootMonomial> eta(d);
    for (int i = 0; i < d; ++i) eta[i] = RootMonomial{uhat[i].inverse(), 1};
    RootMonomial prod{FieldElement::one(lat.field()), 0};
    for (int i = 0; i < d; ++i) prod = mono_mul(prod, eta[i], phat, order);
    bool pc_exact = true;
    for (int i = 0; i < d; ++i) {
        RootMonomial star = mono_div(prod, eta[i], phat, order);
        // the pseudo-compound half-side must be exactly |u_i| (coef, exponent 0)
        if (star.e != 0 || !(star.coef == uhat[i])) pc_exact = false;
    }
    w.eta_pseudo_compound_exact = pc_exact;

    // interval values of the actual (scaled) eta: eta_i = s_dual^{1/(d-1)} * etahat_i
    Interval s_dual = dual.embed_scale(prec);
    Interval g_hat = phat.embed(prec).abs().root(static_cast<unsigned long>(d - 1));
    std::vector<Interval> eta_iv;
    Interval sd_root = s_dual.root(static_cast<unsigned long>(d - 1));
    for (int i = 0; i < d; ++i) {
        Interval ehat = g_hat / uhat[i].embed(prec).abs();
        eta_iv.push_back(ehat * sd_root);
    }
    w.eta = eta_iv;
    w.c = Interval::exact(Rat(d), prec).root(static_cast<unsigned long>(2 * (d - 2)));

    // find v in cP cap L: enumerate a rational cover and certify each candidate
    // via l^{2(d-1)(d-2)} uhat^{2(d-1)(d-2)} [det^{-2(d-2)}] <= d^{d-1} phat^{2(d-2)}
    std::vector<Rat> cover(d);
    for (int i = 0; i < d; ++i) cover[i] = (w.c * eta_iv[i]).hi_rat();
    Enumerator en(lat, prec);
    AllSink sink;
    auto st = en.run(Box(cover), sink, budget.max_points, budget.threads, true);
    if (!st.complete) throw input_error("case 1: enumeration budget too small for the box");
    std::sort(sink.pts.begin(), sink.pts.end(), zvec_lex_less);

    long e1 = 2L * (d - 1) * (d - 2);
    const FieldForms* ff = lat.field_forms();
    FieldElement det_pow = lat.unit_det()
                               ? ff->det().pow(2L * (d - 2))
                               : FieldElement::one(lat.field());
    // the embedding scale enters as s^{2d(d-2)} once both sides are raised to
    // the power 2(d-1)(d-2)
    Rat scale_pow = lat.unit_det() ? Rat(1) : pow_rat(lat.scale(), 2L * d * (d - 2));
    FieldElement rhs_base =
        phat.pow(2L * (d - 2)).scaled(pow_rat(Rat(d), d - 1)) * det_pow;
    std::optional<ZVec> v;
    for (const auto& z : sink.pts) {
        bool in = true;
        for (int i = 0; i < d && in; ++i) {
            FieldElement l = lat.form_value(z, i);
            FieldElement lhs = (l.pow(e1) * uhat[i].pow(e1)).scaled(scale_pow);
            if ((lhs - rhs_base).sign() > 0) in = false;
        }
        if (in) {
            v = z;
            break;
        }
    }
    if (!v) throw internal_error("case 1: no point of L in cP (contradicts Theorem 2)");
    w.v = lat.make_point(*v, prec);

    // (a) Pi(v) <= c Pi(u)^{1/(d-1)}: exact power comparison
    {
        InequalityCheck chk;
        chk.name = "pi_v_le_c_pi_u_pow";
        FieldElement pv = FieldElement::one(lat.field());
        for (int i = 0; i < d; ++i) pv = pv * lat.form_value(*v, i);
        // (prod l_z)^{2(d-1)(d-2)} <= d^{d(d-1)} phat^{2(d-2)} [det^{2d(d-2)}] [scale powers]
        FieldElement lhs = pv.pow(e1);
        FieldElement rhs = phat.pow(2L * (d - 2)).scaled(pow_rat(Rat(d), d * (d - 1)));
        if (lat.unit_det()) {
            rhs = rhs * ff->det().pow(2L * d * (d - 2));
        } else {
            // s = scale on both sides: lhs carries scale^{d e1}, rhs scale^{-2d(d-2)}
            lhs = lhs.scaled(pow_rat(lat.scale(), static_cast<long>(d) * e1 + 2L * d * (d - 2)));
        }
        chk.exact = true;
        chk.holds = (lhs - rhs).sign() <= 0;
        chk.lhs = w.v.pi;
        chk.rhs = w.c * w.u.pi.root(static_cast<unsigned long>(d - 1));
        w.checks.push_back(chk);
    }
    // (b) |v| <= c |u|^{d-1} Pi(u)^{-d(d-2)/(d-1)}: exact power comparison
    {
        InequalityCheck chk;
        chk.name = "sup_v_le_c_sup_u_bound";
        // pick the exact argmax coordinates
        int iv_max = 0;
        for (int i = 1; i < d; ++i)
            if (lat.cmp_coord_abs(*v, i, *v, iv_max) > 0) iv_max = i;
        int iu_max = 0;
        for (int i = 1; i < d; ++i)
            if ((uhat[i] * uhat[i] - uhat[iu_max] * uhat[iu_max]).sign() > 0) iu_max = i;
        FieldElement lmax = abs_exact(lat.form_value(*v, iv_max));
        FieldElement lhs = lmax.pow(e1) * phat.pow(2L * (d - 2) * (d - 2));
        FieldElement rhs =
            uhat[iu_max].pow(2L * (d - 1) * (d - 1) * (d - 2)).scaled(pow_rat(Rat(d), d - 1));
        if (lat.unit_det()) {
            rhs = rhs * ff->det().pow(2L * (d - 2));
        } else {
            lhs = lhs.scaled(pow_rat(lat.scale(), 2L * d * (d - 2)));
        }
        chk.exact = true;
        chk.holds = (lhs - rhs).sign() <= 0;
        chk.lhs = w.v.sup;
        Interval pu_pow = w.u.pi.pow_int(d * (d - 2));
        Interval supn = w.u.sup.pow_int((d - 1) * (d - 1));
        chk.rhs = w.c * (supn / pu_pow).root(static_cast<unsigned long>(d - 1));
        w.checks.push_back(chk);
    }
    // (c) Pi(v) <= c^{1+eps} |v|^{-eps}, eps = gamma / ((d-1)^2 + d(d-2) gamma):
    // certified numerically on intervals (gamma is a log ratio); omitted when
    // gamma(u) is undefined (|u| <= 1) and v has no vanishing coordinate
    {
        InequalityCheck chk;
        chk.name = "pi_v_vs_v_transference_exponent";
        chk.exact = false;
        if (w.v.has_zero()) {
            chk.holds = true;  // Pi(v) = 0 exactly
            chk.exact = true;
            chk.lhs = Interval::exact(Rat(0), prec);
            chk.rhs = w.c;
            w.checks.push_back(chk);
        } else if (w.gamma_u.value) {
            for (long p2 = prec; p2 <= prec * 16; p2 *= 2) {
                LatticePoint vv = lat.make_point(*v, p2);
                LatticePoint uu = dual.make_point(u_preimage, p2);
                Interval g = gamma_value(uu.sup, uu.pi);
                Interval eps = transference_lower_bound(g, d);
                Interval cc = Interval::exact(Rat(d), p2)
                                  .root(static_cast<unsigned long>(2 * (d - 2)));
                Interval one = Interval::exact(Rat(1), p2);
                Interval c1 = (cc.log() * (one + eps)).exp();
                Interval rhs = c1 * (vv.sup.log() * (-eps)).exp();
                chk.lhs = vv.pi;
                chk.rhs = rhs;
                if (vv.pi.certainly_leq(rhs)) {
                    chk.holds = true;
                    break;
                }
            }
            w.checks.push_back(chk);
        }
    }
    w.all_hold = pc_exact;
    for (const auto& c2 : w.checks) w.all_hold = w.all_hold && c2.holds;
    return w;
}

// --- Case II -----------------------------------------------------------------------

Case2Result case2_points(const Lattice& lat, const ZVec& u_preimage, int count,
                         const EnumerationBudget& budget) {
    int d = lat.dim();
    if (d < 3) throw input_error("case 2 requires d >= 3");
    if (!lat.field_forms()) throw input_error("case 2 supports field-forms lattices");
    long prec = budget.precision;
    Lattice dual = lat.dual();

    Case2Result out;
    out.u_preimage = u_preimage;
    out.u = dual.make_point(u_preimage, prec);
    bool u_zero = true;
    for (long long t : u_preimage)
        if (t != 0) u_zero = false;
    if (u_zero) throw input_error("case 2 requires a nonzero dual point");
    if (!dual.coord_is_zero(u_preimage, d - 1))
        throw input_error("case 2 requires u_d = 0 exactly (permute coordinates first)");

    // Gamma = L cap u-perp: <u, x(z)> = <m, z>, an integer condition on z
    ZVector m(d);
    for (int i = 0; i < d; ++i) m[i] = Int(static_cast<long>(u_preimage[i]));
    auto kernel = integer_kernel_of_row(m);
    if (static_cast<int>(kernel.size()) != d - 1)
        throw internal_error("case 2: kernel rank mismatch");
    std::vector<ZVec> kbasis;
    for (const auto& kv : kernel) {
        ZVec col(d);
        for (int i = 0; i < d; ++i) {
            if (!kv[i].fits_slong_p()) throw input_error("case 2: kernel basis too large");
            col[i] = kv[i].get_si();
        }
        kbasis.push_back(col);
    }

    const FieldForms* ff = lat.field_forms();
    const FieldPtr& f = lat.field();
    // M = A K (d x (d-1)); Gram = M^T M; g0 = det(Gram), all exact
    FMatrix mm(d, FRow(d - 1, FieldElement::zero(f)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d - 1; ++j) {
            FieldElement acc = FieldElement::zero(f);
            for (int k = 0; k < d; ++k) {
                if (kbasis[j][k] == 0) continue;
                acc = acc + ff->rows()[i][k].scaled(Rat(static_cast<long>(kbasis[j][k])));
            }
            mm[i][j] = acc;
        }
    FMatrix gram(d - 1, FRow(d - 1, FieldElement::zero(f)));
    for (int a = 0; a < d - 1; ++a)
        for (int b = 0; b < d - 1; ++b) {
            FieldElement acc = FieldElement::zero(f);
            for (int i = 0; i < d; ++i) acc = acc + mm[i][a] * mm[i][b];
            gram[a][b] = acc;
        }
    FieldElement g0 = fdet(gram);
    if (g0.sign() <= 0) throw internal_error("case 2: Gram determinant not positive");
    if (g0.is_rational()) out.gram_det = g0.as_rational();

    // det(Gamma)^2 = s^{2(d-1)} g0; c2 = det(Gamma)^{1/(d-2)}
    Interval s = lat.embed_scale(prec);
    Interval det_gamma = (g0.embed(prec) * s.pow_int(2 * (d - 1))).root(2);
    out.c2 = det_gamma.root(static_cast<unsigned long>(d - 2));

    // axis special case: a rational direction with l_1 = ... = l_{d-1} = 0
    {
        std::vector<FieldElement> stacked;
        QMatrix coord_rows;
        int deg = f->degree();
        for (int i = 0; i + 1 < d; ++i) {
            for (int c = 0; c < deg; ++c) {
                std::vector<Rat> row(d);
                bool nz = false;
                for (int j = 0; j < d; ++j) {
                    row[j] = ff->rows()[i][j].coords()[c];
                    if (row[j] != 0) nz = true;
                }
                if (nz) coord_rows.push_back(std::move(row));
            }
        }
        QMatrix ker = kernel_basis(coord_rows);
        if (!ker.empty()) {
            ZVector prim = to_primitive_integer(ker[0]);
            Int dot = 0;
            for (int i = 0; i < d; ++i) dot += m[i] * prim[i];
            if (dot == 0) {
                ZVec z0(d);
                for (int i = 0; i < d; ++i) {
                    if (!prim[i].fits_slong_p())
                        throw internal_error("case 2: axis direction too large");
                    z0[i] = prim[i].get_si();
                }
                bool really_axis = true;
                for (int i = 0; i + 1 < d; ++i)
                    if (!lat.coord_is_zero(z0, i)) really_axis = false;
                if (really_axis && !lat.coord_is_zero(z0, d - 1)) {
                    out.axis_case = true;
                    for (int k = 1; k <= count; ++k) {
                        ZVec zk(d);
                        for (int i = 0; i < d; ++i) zk[i] = z0[i] * k;
                        Case2Point cp;
                        cp.v = lat.make_point(zk, prec);
                        cp.bound_exact = true;  // Pi(v) = 0 <= anything
                        cp.pi_bound_rhs = out.c2;
                        cp.gamma_v.is_infinite = true;
                        cp.gamma_lower_rhs = Interval::exact(Rat(0), prec);
                        out.points.push_back(std::move(cp));
                    }
                    return out;
                }
            }
        }
    }

    // general case: T_j = 2^{j(d-2)} so a = c2 * 2^{-j} has a clean rational cover
    std::optional<FieldElement> last_ld_sq;  // (l_d of the last accepted point)^2
    Rat tlb = Rat(1, d * (d - 2));
    FMatrix gram_inv = finverse(gram);
    for (int j = 1; j <= 40 && static_cast<int>(out.points.size()) < count; ++j) {
        Rat t_j = pow_rat(Rat(2), static_cast<long>(j) * (d - 2));
        Rat a_up = (out.c2 * Interval::exact(pow_rat(Rat(1, 2), j), prec)).hi_rat();
        // w-box: bounds from the exact pseudo-inverse of M
        std::vector<long long> wb(d - 1, 0);
        for (int a = 0; a < d - 1; ++a) {
            // pinv[a][i] = sum_b gram_inv[a][b] mm[i][b]
            Interval sum = Interval::exact(Rat(0), prec);
            for (int i = 0; i < d; ++i) {
                FieldElement acc = FieldElement::zero(f);
                for (int b = 0; b < d - 1; ++b) acc = acc + gram_inv[a][b] * mm[i][b];
                Rat bound_i = (i + 1 == d) ? t_j : a_up;
                sum += acc.embed(prec).abs() * Interval::exact(bound_i, prec);
            }
            Interval wbound = sum / s;
            Int b = rat_ceil(wbound.hi_rat());
            if (b > Int(100'000'000)) throw input_error("case 2: enumeration box too large");
            wb[a] = static_cast<long long>(b.get_si());
        }
        // enumerate w in the box, certify each candidate exactly
        std::vector<ZVec> certified;
        std::vector<long long> w(d - 1, 0);
        for (int a = 0; a < d - 1; ++a) w[a] = -wb[a];
        while (true) {
            bool allz = true;
            for (int a = 0; a < d - 1; ++a)
                if (w[a] != 0) allz = false;
            if (!allz) {
                ZVec z(d, 0);
                for (int i = 0; i < d; ++i) {
                    long long acc = 0;
                    for (int a = 0; a < d - 1; ++a) acc += kbasis[a][i] * w[a];
                    z[i] = acc;
                }
                // certify: l_i^{2(d-2)} l_d^2 <= g0 for all i < d, l_d != 0,
                // and the product bound (prod l)^{2(d-2)} lmax^2 <= g0^{d-1};
                // points inside the unit box are skipped (gamma undefined there)
                FieldElement ld = lat.form_value(z, d - 1);
                if (!ld.is_zero() && lat.cmp_sup_rat(z, Rat(1)) > 0) {
                    bool ok = true;
                    FieldElement ld2 = ld * ld;
                    for (int i = 0; i + 1 < d && ok; ++i) {
                        FieldElement li = lat.form_value(z, i);
                        if ((li.pow(2L * (d - 2)) * ld2 - g0).sign() > 0) ok = false;
                    }
                    if (ok) {
                        FieldElement prod = FieldElement::one(f);
                        for (int i = 0; i < d; ++i) prod = prod * lat.form_value(z, i);
                        int imax = 0;
                        for (int i = 1; i < d; ++i)
                            if (lat.cmp_coord_abs(z, i, z, imax) > 0) imax = i;
                        FieldElement lmax = lat.form_value(z, imax);
                        FieldElement lhs = prod.pow(2L * (d - 2)) * lmax * lmax;
                        if ((lhs - g0.pow(d - 1)).sign() <= 0) certified.push_back(z);
                    }
                }
            }
            int a = d - 2;
            while (a >= 0) {
                if (w[a] < wb[a]) {
                    ++w[a];
                    break;
                }
                w[a] = -wb[a];
                --a;
            }
            if (a < 0) break;
        }
        // pick the certified point with the largest |l_d| beyond the previous one
        std::optional<ZVec> best;
        std::optional<FieldElement> best_sq;
        for (const auto& z : certified) {
            FieldElement ld = lat.form_value(z, d - 1);
            FieldElement sq = ld * ld;
            if (last_ld_sq && (sq - *last_ld_sq).sign() <= 0) continue;
            if (!best || (sq - *best_sq).sign() > 0 ||
                ((sq - *best_sq).sign() == 0 && zvec_lex_less(z, *best))) {
                best = z;
                best_sq = sq;
            }
        }
        if (!best) continue;
        last_ld_sq = best_sq;
        Case2Point cp;
        cp.v = lat.make_point(*best, prec);
        cp.bound_exact = true;
        cp.pi_bound_rhs = out.c2.pow_int(d - 1).root(static_cast<unsigned long>(d)) *
                          cp.v.sup.pow_int(-1).root(static_cast<unsigned long>(d * (d - 2)));
        cp.gamma_v = gamma_of_point(lat, *best, prec);
        {
            Interval ln_c2 = out.c2.log();
            Interval ln_v = cp.v.sup.log();
            Interval frac = Interval::exact(Rat(d - 1), prec) / Interval::exact(Rat(d), prec);
            cp.gamma_lower_rhs = Interval::exact(tlb, prec) - (frac * ln_c2) / ln_v;
        }
        out.points.push_back(std::move(cp));
    }
    return out;
}

}  // namespace latexp
