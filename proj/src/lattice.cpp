#include "latexp/lattice.hpp"

#include <algorithm>

#include "latexp/errors.hpp"

namespace latexp {

Lattice::Lattice(FormsVariant forms, Rat scale, bool unit_det)
    : forms_(std::move(forms)), scale_(std::move(scale)), unit_det_(unit_det) {
    if (scale_ <= 0) throw input_error("lattice scale must be positive");
    d_ = std::visit([](const auto& f) { return f.dim(); }, forms_);
}

const FieldPtr& Lattice::field() const {
    return std::visit([](const auto& f) -> const FieldPtr& { return f.field(); }, forms_);
}

Lattice Lattice::dual() const {
    return std::visit(
        [&](const auto& f) { return Lattice(FormsVariant(f.dual_forms()), 1 / scale_, unit_det_); },
        forms_);
}

Lattice Lattice::normalized() const { return Lattice(forms_, scale_, true); }

Interval Lattice::det_abs(long prec) const {
    if (unit_det_) return Interval::exact(Rat(1), prec);
    Interval base;
    if (const auto* ff = field_forms()) {
        base = ff->det().embed(prec).abs();
    } else {
        base = norm_forms()->det_interval(prec).abs();
    }
    return base * Interval::exact(pow_rat(scale_, d_), prec);
}

Interval Lattice::embed_scale(long prec) const {
    if (!unit_det_) return Interval::exact(scale_, prec);
    if (const auto* ff = field_forms()) {
        Interval det = ff->det().embed(prec).abs();
        return Interval::exact(Rat(1), prec) / det.root(static_cast<unsigned long>(d_));
    }
    Interval det = norm_forms()->det_interval(prec).abs();
    return Interval::exact(Rat(1), prec) / det.root(static_cast<unsigned long>(d_));
}

bool Lattice::det_is_unimodular() const {
    if (unit_det_) return true;
    Rat s2d = pow_rat(scale_, 2 * d_);
    if (const auto* ff = field_forms()) {
        FieldElement det2 = ff->det() * ff->det();
        return det2.scaled(s2d) == FieldElement::one(field());
    }
    return norm_forms()->det_sq() * s2d == 1;
}

bool Lattice::same_data(const Lattice& o) const {
    if (d_ != o.d_ || scale_ != o.scale_ || unit_det_ != o.unit_det_) return false;
    if (field_forms() && o.field_forms()) return *field_forms() == *o.field_forms();
    if (norm_forms() && o.norm_forms()) return *norm_forms() == *o.norm_forms();
    return false;
}

std::vector<Interval> Lattice::embed_coords(const ZVec& z, long prec) const {
    if (static_cast<int>(z.size()) != d_) throw input_error("point dimension mismatch");
    Interval s = embed_scale(prec);
    std::vector<Interval> x;
    x.reserve(d_);
    if (const auto* ff = field_forms()) {
        for (int i = 0; i < d_; ++i) {
            FieldElement acc = FieldElement::zero(field());
            for (int j = 0; j < d_; ++j) {
                if (z[j] == 0) continue;
                acc = acc + ff->rows()[i][j].scaled(Rat(static_cast<long>(z[j])));
            }
            x.push_back(acc.embed(prec) * s);
        }
    } else {
        const auto* nf = norm_forms();
        poly::QPoly g = nf->point_poly(z);
        for (int i = 0; i < d_; ++i)
            x.push_back(field()->evaluate_at_root(g, i, prec) * s);
    }
    return x;
}

LatticePoint Lattice::make_point(const ZVec& z, long prec) const {
    LatticePoint p;
    p.z = z;
    p.x = embed_coords(z, prec);
    p.zero_coords = zero_coords_of(z);
    Interval sup = p.x[0].abs();
    for (int i = 1; i < d_; ++i) sup = Interval::max(sup, p.x[i].abs());
    p.sup = sup;
    if (p.has_zero()) {
        p.pi = Interval::exact(Rat(0), prec);
    } else {
        p.pi = pi_value(p.x);
    }
    return p;
}

bool Lattice::coord_is_zero(const ZVec& z, int i) const {
    if (const auto* ff = field_forms()) {
        FieldElement acc = FieldElement::zero(field());
        for (int j = 0; j < d_; ++j) {
            if (z[j] == 0) continue;
            acc = acc + ff->rows()[i][j].scaled(Rat(static_cast<long>(z[j])));
        }
        return acc.is_zero();
    }
    // norm-form: g_z(alpha_i) = 0 iff g_z == 0 iff z == 0 (coeff matrix invertible)
    for (long long v : z)
        if (v != 0) return false;
    return true;
}

std::vector<int> Lattice::zero_coords_of(const ZVec& z) const {
    std::vector<int> out;
    if (norm_forms()) {
        bool zero = true;
        for (long long v : z)
            if (v != 0) zero = false;
        if (zero)
            for (int i = 1; i <= d_; ++i) out.push_back(i);
        return out;
    }
    for (int i = 0; i < d_; ++i)
        if (coord_is_zero(z, i)) out.push_back(i + 1);
    return out;
}

FieldElement Lattice::form_value(const ZVec& z, int i) const {
    const auto* ff = field_forms();
    if (!ff) throw internal_error("form_value requires the field-forms backend");
    FieldElement acc = FieldElement::zero(field());
    for (int j = 0; j < d_; ++j) {
        if (z[j] == 0) continue;
        acc = acc + ff->rows()[i][j].scaled(Rat(static_cast<long>(z[j])));
    }
    return acc;
}

int Lattice::cmp_coord_abs_rat(const ZVec& z, int i, const Rat& q) const {
    if (q < 0) throw internal_error("cmp_coord_abs_rat: negative bound");
    if (const auto* ff = field_forms()) {
        (void)ff;
        FieldElement l = form_value(z, i);
        if (!unit_det_) {
            // sign(x_i^2 - q^2) with x_i = scale * l
            FieldElement e = (l * l).scaled(scale_ * scale_) -
                             FieldElement::from_rational(field(), q * q);
            return e.sign();
        }
        // sign(x_i^{2d} - q^{2d}) with x_i^{2d} = l^{2d} / det^2
        FieldElement det2 = field_forms()->det() * field_forms()->det();
        FieldElement e = l.pow(2 * d_) - det2.scaled(pow_rat(q, 2 * d_));
        return e.sign();
    }
    const auto* nf = norm_forms();
    poly::QPoly g = nf->point_poly(z);
    if (!unit_det_) {
        poly::QPoly h = poly::scale(poly::mul(g, g), scale_ * scale_);
        h = poly::sub(h, poly::QPoly{q * q});
        return field()->sign_at_root(h, i);
    }
    // x_i^{2d} = g^{2d}(alpha_i) / (disc * det_R^2)
    poly::QPoly h = poly::mul(g, g);
    poly::QPoly acc{Rat(1)};
    for (int t = 0; t < d_; ++t) acc = poly::mul(acc, h);
    Rat rhs = pow_rat(q, 2 * d_) * nf->det_sq();
    acc = poly::sub(acc, poly::QPoly{rhs});
    return field()->sign_at_root(acc, i);
}

int Lattice::cmp_coord_abs(const ZVec& z, int i, const ZVec& w, int j) const {
    if (const auto* ff = field_forms()) {
        (void)ff;
        FieldElement a = form_value(z, i), b = form_value(w, j);
        return (a * a - b * b).sign();  // the embedding scale cancels
    }
    const auto* nf = norm_forms();
    poly::QPoly gz = nf->point_poly(z), gw = nf->point_poly(w);
    if (i == j) {
        poly::QPoly h = poly::sub(poly::mul(gz, gz), poly::mul(gw, gw));
        return field()->sign_at_root(h, i);
    }
    // cross-embedding comparison: refine both enclosures; a persistent overlap
    // past the cap is treated as a tie (products, which drive the record
    // logic, always compare exactly)
    for (long prec = 64; prec <= 4096; prec *= 2) {
        Interval a = field()->evaluate_at_root(gz, i, prec).abs();
        Interval b = field()->evaluate_at_root(gw, j, prec).abs();
        if (a.certainly_less(b)) return -1;
        if (b.certainly_less(a)) return 1;
    }
    return 0;
}

int Lattice::cmp_sup_rat(const ZVec& z, const Rat& q) const {
    int best = -1;
    for (int i = 0; i < d_; ++i) {
        int c = cmp_coord_abs_rat(z, i, q);
        if (c > 0) return 1;
        if (c == 0) best = 0;
    }
    return best;
}

int Lattice::cmp_sup(const ZVec& z, const ZVec& w) const {
    // index of a maximal coordinate of z
    int iz = 0;
    for (int i = 1; i < d_; ++i)
        if (cmp_coord_abs(z, i, z, iz) > 0) iz = i;
    int iw = 0;
    for (int i = 1; i < d_; ++i)
        if (cmp_coord_abs(w, i, w, iw) > 0) iw = i;
    return cmp_coord_abs(z, iz, w, iw);
}

bool Lattice::product_is_zero(const ZVec& z) const {
    if (norm_forms()) {
        for (long long v : z)
            if (v != 0) return false;
        return true;
    }
    for (int i = 0; i < d_; ++i)
        if (coord_is_zero(z, i)) return true;
    return false;
}

namespace {
FieldElement field_product(const Lattice& lat, const ZVec& z) {
    FieldElement acc = FieldElement::one(lat.field());
    for (int i = 0; i < lat.dim(); ++i) acc = acc * lat.form_value(z, i);
    return acc;
}
}  // namespace

int Lattice::cmp_product(const ZVec& z, const ZVec& w) const {
    if (field_forms()) {
        FieldElement a = field_product(*this, z), b = field_product(*this, w);
        return (a * a - b * b).sign();  // common positive factor cancels
    }
    const auto* nf = norm_forms();
    Rat a = nf->point_norm(z), b = nf->point_norm(w);
    return sgn(a * a - b * b);
}

int Lattice::cmp_product_rat(const ZVec& z, const Rat& q) const {
    if (q < 0) throw internal_error("cmp_product_rat: negative bound");
    Rat q2 = q * q;
    if (field_forms()) {
        FieldElement p = field_product(*this, z);
        FieldElement p2 = p * p;
        if (!unit_det_) {
            FieldElement e = p2.scaled(pow_rat(scale_, 2 * d_)) -
                             FieldElement::from_rational(field(), q2);
            return e.sign();
        }
        FieldElement det2 = field_forms()->det() * field_forms()->det();
        FieldElement e = p2 - det2.scaled(q2);
        return e.sign();
    }
    const auto* nf = norm_forms();
    Rat n = nf->point_norm(z);
    Rat p2 = n * n;
    if (!unit_det_) return sgn(p2 * pow_rat(scale_, 2 * d_) - q2);
    return sgn(p2 - q2 * nf->det_sq());
}

Interval pi_value(const std::vector<Interval>& x) {
    if (x.empty()) throw input_error("pi_value: empty vector");
    Interval prod = x[0].abs();
    for (size_t i = 1; i < x.size(); ++i) prod = prod * x[i].abs();
    return prod.root(static_cast<unsigned long>(x.size()));
}

Interval gamma_value(const Interval& sup, const Interval& pi) {
    return -(pi.log() / sup.log());
}

GammaResult gamma_of_point(const Lattice& lat, const ZVec& z, long prec) {
    if (lat.cmp_sup_rat(z, Rat(1)) <= 0)
        throw input_error("gamma requires sup-norm > 1");
    GammaResult r;
    if (lat.product_is_zero(z)) {
        r.is_infinite = true;
        return r;
    }
    // Pi == 1 exactly gives gamma == 0 exactly.
    if (lat.cmp_product_rat(z, Rat(1)) == 0) {
        r.value = Interval::exact(Rat(0), prec);
        return r;
    }
    for (long p = prec; p <= prec * 64; p *= 2) {
        LatticePoint pt = lat.make_point(z, p);
        if (pt.pi.certainly_positive() && pt.sup.certainly_greater(Rat(1))) {
            r.value = gamma_value(pt.sup, pt.pi);
            return r;
        }
    }
    throw internal_error("gamma_of_point failed to certify");
}

}  // namespace latexp
