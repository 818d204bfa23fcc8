#include "latexp/number_field.hpp"

#include <algorithm>

#include "latexp/errors.hpp"

namespace latexp {

std::shared_ptr<const NumberField> NumberField::create(poly::ZPoly minpoly, const Rat& root_lo,
                                                       const Rat& root_hi) {
    poly::normalize_z(minpoly);
    int n = poly::degree_z(minpoly);
    if (n < 1) throw input_error("minimal polynomial must be nonconstant");
    if (n > 12) throw input_error("field degree capped at 12");
    if (!(root_lo < root_hi)) throw input_error("root interval must satisfy lo < hi");
    Int lc = minpoly.back();
    if (lc != 1 && lc != -1) throw input_error("minimal polynomial must be monic");
    if (lc < 0)
        for (auto& c : minpoly) c = -c;
    if (!poly::irreducible_over_q(minpoly))
        throw input_error("minimal polynomial is reducible over Q");

    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->minpoly_ = minpoly;
    f->minpoly_q_ = poly::to_qpoly(minpoly);
    f->degree_ = n;
    f->roots_ = poly::isolate_real_roots(f->minpoly_q_);
    if (f->roots_.empty()) throw input_error("minimal polynomial has no real root");

    // Locate the root designated by the given interval; there must be exactly one.
    auto chain = poly::sturm_sequence(f->minpoly_q_);
    Rat lo = root_lo, hi = root_hi;
    if (poly::eval(f->minpoly_q_, lo) == 0 || poly::eval(f->minpoly_q_, hi) == 0) {
        if (n > 1) throw internal_error("irreducible polynomial with rational root");
        // degree 1: nudge the endpoints off the root
        Rat root = -Rat(minpoly[0]) / Rat(minpoly[1]);
        lo = root - 1;
        hi = root + 1;
    }
    int cnt = poly::count_roots(chain, lo, hi);
    if (cnt == 0) throw input_error("root interval contains no root");
    if (cnt > 1) throw input_error("root interval contains more than one root");
    f->designated_ = -1;
    for (size_t i = 0; i < f->roots_.size(); ++i) {
        // refine the stored isolating interval into the designated one if they overlap
        poly::QInterval iv = f->roots_[i];
        Rat ilo = std::max(iv.lo, lo), ihi = std::min(iv.hi, hi);
        if (ilo < ihi && poly::count_roots(chain, ilo, ihi) == 1) {
            f->designated_ = static_cast<int>(i);
            break;
        }
    }
    if (f->designated_ < 0) throw input_error("root interval isolates no real root");

    // rows expressing alpha^(n+i) in the power basis, i = 0..n-2
    f->reduction_.clear();
    if (n >= 2) {
        std::vector<Rat> cur(n);  // alpha^n = -(c_0 + ... + c_{n-1} alpha^{n-1})
        for (int i = 0; i < n; ++i) cur[i] = -Rat(minpoly[i]);
        for (int i = 0; i <= n - 2; ++i) {
            f->reduction_.push_back(cur);
            std::vector<Rat> next(n, Rat(0));
            Rat top = cur[n - 1];
            for (int j = n - 1; j >= 1; --j) next[j] = cur[j - 1];
            for (int j = 0; j < n; ++j) next[j] += top * -Rat(minpoly[j]);
            cur = std::move(next);
        }
    }
    f->orig_lo_ = root_lo;
    f->orig_hi_ = root_hi;
    return f;
}

std::shared_ptr<const NumberField> NumberField::rationals() {
    static std::shared_ptr<const NumberField> q =
        create({Int(0), Int(1)}, Rat(-1), Rat(1));  // alpha = 0
    return q;
}

Rat NumberField::rational_root() const {
    if (degree_ != 1) throw internal_error("rational_root on a nontrivial field");
    return -Rat(minpoly_[0]) / Rat(minpoly_[1]);
}

poly::QInterval NumberField::root_enclosure(int idx, long bits) const {
    if (idx < 0 || idx >= num_real_roots()) throw internal_error("root index out of range");
    if (degree_ == 1) {
        Rat r = rational_root();
        return {r, r};
    }
    std::lock_guard lk(mu_);
    poly::QInterval iv = roots_[idx];
    Rat target = pow_rat(Rat(1, 2), bits);
    while (iv.hi - iv.lo > target) iv = poly::bisect_once(minpoly_q_, iv);
    roots_[idx] = iv;
    return iv;
}

int NumberField::sign_at_root(const poly::QPoly& g, int idx) const {
    poly::QPoly r = poly::divmod(g, minpoly_q_).second;
    if (r.empty()) return 0;
    if (degree_ == 1) return sgn(poly::eval(r, rational_root()));
    long bits = 8;
    while (true) {
        poly::QInterval iv = root_enclosure(idx, bits);
        poly::QInterval v = poly::eval_on_interval(r, iv);
        if (v.lo > 0) return 1;
        if (v.hi < 0) return -1;
        bits *= 2;
        if (bits > (1L << 22)) throw internal_error("sign_at_root failed to converge");
    }
}

Interval NumberField::evaluate_at_root(const poly::QPoly& g, int idx, long prec) const {
    poly::QPoly r = poly::divmod(g, minpoly_q_).second;
    if (r.empty()) return Interval::exact(Rat(0), prec);
    if (degree_ == 1) return Interval::exact(poly::eval(r, rational_root()), prec);
    long bits = prec + 4;
    while (true) {
        poly::QInterval iv = root_enclosure(idx, bits);
        poly::QInterval v = poly::eval_on_interval(r, iv);
        Interval out = Interval::hull(v.lo, v.hi, prec);
        if (out.width_below(prec - 2)) return out;
        bits *= 2;
        if (bits > (1L << 22)) throw internal_error("evaluate_at_root failed to converge");
    }
}

bool NumberField::same_field(const NumberField& o) const {
    return this == &o || (minpoly_ == o.minpoly_ && designated_ == o.designated_);
}

// --- FieldElement -----------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), c_(std::move(coords)) {
    if (!field_) throw internal_error("FieldElement without a field");
    if (static_cast<int>(c_.size()) != field_->degree())
        throw input_error("coordinate vector length must equal the field degree");
}

FieldElement FieldElement::zero(const FieldPtr& f) {
    return FieldElement(f, std::vector<Rat>(f->degree(), Rat(0)));
}

FieldElement FieldElement::one(const FieldPtr& f) {
    std::vector<Rat> c(f->degree(), Rat(0));
    c[0] = 1;
    return FieldElement(f, std::move(c));
}

FieldElement FieldElement::alpha(const FieldPtr& f) {
    if (f->degree() == 1) return from_rational(f, f->rational_root());
    std::vector<Rat> c(f->degree(), Rat(0));
    c[1] = 1;
    return FieldElement(f, std::move(c));
}

FieldElement FieldElement::from_rational(const FieldPtr& f, const Rat& q) {
    std::vector<Rat> c(f->degree(), Rat(0));
    c[0] = q;
    return FieldElement(f, std::move(c));
}

bool FieldElement::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat FieldElement::as_rational() const {
    if (!is_rational()) throw internal_error("as_rational on an irrational element");
    return c_[0];
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (!field_ || !o.field_ || !field_->same_field(*o.field_))
        throw input_error("field mismatch in field arithmetic");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o);
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(o);
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o);
    int n = field_->degree();
    if (n == 1) return FieldElement(field_, {c_[0] * o.c_[0]});
    std::vector<Rat> prod(2 * n - 1, Rat(0));
    for (int i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rat> r(prod.begin(), prod.begin() + n);
    const auto& red = field_->reduction_rows();
    for (int i = n; i < 2 * n - 1; ++i) {
        if (prod[i] == 0) continue;
        const auto& row = red[i - n];
        for (int j = 0; j < n; ++j) r[j] += prod[i] * row[j];
    }
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw input_error("inversion of zero field element");
    if (field_->degree() == 1) return FieldElement(field_, {1 / c_[0]});
    auto res = poly::xgcd(as_poly(), poly::to_qpoly(field_->minpoly()));
    if (poly::degree(res.g) != 0) throw internal_error("inverse: gcd with minpoly nontrivial");
    poly::QPoly inv = poly::divmod(res.s, poly::to_qpoly(field_->minpoly())).second;
    std::vector<Rat> r(field_->degree(), Rat(0));
    for (size_t i = 0; i < inv.size(); ++i) r[i] = inv[i];
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::pow(long e) const {
    if (e == 0) return one(field_);
    FieldElement base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    FieldElement acc = one(field_);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

FieldElement FieldElement::scaled(const Rat& q) const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * q;
    return FieldElement(field_, std::move(r));
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!field_->same_field(*o.field_)) return false;
    return c_ == o.c_;
}

int FieldElement::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sgn(c_[0]);
    return field_->sign_at_root(as_poly(), field_->designated_root());
}

Interval FieldElement::embed(long prec) const {
    if (prec < 16) throw input_error("embedding precision must be at least 16 bits");
    if (is_rational()) return Interval::exact(c_[0], prec);
    return field_->evaluate_at_root(as_poly(), field_->designated_root(), prec);
}

Rat FieldElement::norm() const {
    int n = field_->degree();
    if (n == 1) return c_[0];
    // multiplication matrix: column j = coordinates of x * alpha^j
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    FieldElement cur = *this;
    FieldElement a = alpha(field_);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m[i][j] = cur.coords()[i];
        if (j + 1 < n) cur = cur * a;
    }
    // plain fraction Gaussian elimination determinant
    Rat det(1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        Rat inv = 1 / m[k][k];
        for (int i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] * inv;
            for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

poly::QPoly FieldElement::as_poly() const {
    poly::QPoly p = c_;
    poly::normalize(p);
    return p;
}

}  // namespace latexp
