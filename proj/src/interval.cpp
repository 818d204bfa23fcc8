#include "latexp/interval.hpp"

#include <algorithm>
#include <cstdio>

#include "latexp/errors.hpp"

namespace latexp {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
    if (this == &o) return *this;
    if (prec_ != o.prec_) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::exact(const Rat& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::exact(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::hull(const Rat& lo, const Rat& hi, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    if (mpfr_greater_p(r.lo_, r.hi_)) throw internal_error("Interval::hull: lo > hi");
    return r;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(prec_);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval& Interval::operator+=(const Interval& o) {
    mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(prec_);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    Interval r(prec_);
    mpfr_t t;
    mpfr_init2(t, prec_);
    // lo: minimum of the four products rounded down
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    if (mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    if (mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    if (mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
    // hi: maximum of the four products rounded up
    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    if (mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    if (mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    if (mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::operator/(const Interval& o) const {
    if (o.contains_zero()) throw internal_error("Interval division by interval containing zero");
    Interval inv(o.prec_);
    if (mpfr_sgn(o.lo_) > 0) {
        mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
        mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
    } else {
        mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
        mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
    }
    return *this * inv;
}

Interval Interval::abs() const {
    Interval r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    if (mpfr_less_p(r.hi_, hi_)) mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::pow_int(long e) const {
    if (e == 0) return Interval::exact(1L, prec_);
    if (e < 0) {
        Interval one = Interval::exact(1L, prec_);
        return one / pow_int(-e);
    }
    Interval acc = Interval::exact(1L, prec_);
    Interval base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Interval Interval::root(unsigned long k) const {
    if (mpfr_sgn(lo_) < 0) throw internal_error("Interval::root of possibly-negative value");
    Interval r(prec_);
    mpfr_rootn_ui(r.lo_, lo_, k, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, k, MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    if (!certainly_positive()) throw internal_error("Interval::log of possibly-nonpositive value");
    Interval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::exp() const {
    Interval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::mul_si(long n) const {
    Interval r(prec_);
    if (n >= 0) {
        mpfr_mul_si(r.lo_, lo_, n, MPFR_RNDD);
        mpfr_mul_si(r.hi_, hi_, n, MPFR_RNDU);
    } else {
        mpfr_mul_si(r.lo_, hi_, n, MPFR_RNDD);
        mpfr_mul_si(r.hi_, lo_, n, MPFR_RNDU);
    }
    return r;
}

void Interval::add_mul_si(const Interval& o, long n) {
    if (n == 0) return;
    mpfr_t t;
    mpfr_init2(t, prec_);
    if (n > 0) {
        mpfr_mul_si(t, o.lo_, n, MPFR_RNDD);
        mpfr_add(lo_, lo_, t, MPFR_RNDD);
        mpfr_mul_si(t, o.hi_, n, MPFR_RNDU);
        mpfr_add(hi_, hi_, t, MPFR_RNDU);
    } else {
        mpfr_mul_si(t, o.hi_, n, MPFR_RNDD);
        mpfr_add(lo_, lo_, t, MPFR_RNDD);
        mpfr_mul_si(t, o.lo_, n, MPFR_RNDU);
        mpfr_add(hi_, hi_, t, MPFR_RNDU);
    }
    mpfr_clear(t);
}

Interval Interval::max(const Interval& a, const Interval& b) {
    Interval r(a.prec_);
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::min(const Interval& a, const Interval& b) {
    Interval r(a.prec_);
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

bool Interval::certainly_less(const Interval& o) const { return mpfr_less_p(hi_, o.lo_); }
bool Interval::certainly_leq(const Interval& o) const { return mpfr_lessequal_p(hi_, o.lo_); }

bool Interval::certainly_less(const Rat& q) const {
    return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0;
}

bool Interval::certainly_leq(const Rat& q) const {
    return mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0;
}

bool Interval::certainly_greater(const Rat& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0;
}

bool Interval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::contains(const Rat& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

double Interval::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_d() const {
    return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

double Interval::width_d() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double r = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return r;
}

bool Interval::width_below(long bits) const {
    mpfr_t w, m, bound;
    mpfr_init2(w, prec_);
    mpfr_init2(m, prec_);
    mpfr_init2(bound, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_abs(m, lo_, MPFR_RNDU);
    mpfr_t ha;
    mpfr_init2(ha, prec_);
    mpfr_abs(ha, hi_, MPFR_RNDU);
    if (mpfr_greater_p(ha, m)) mpfr_set(m, ha, MPFR_RNDU);
    if (mpfr_cmp_ui(m, 1) < 0) mpfr_set_ui(m, 1, MPFR_RNDU);
    mpfr_mul_2si(bound, m, -bits, MPFR_RNDD);
    bool ok = mpfr_lessequal_p(w, bound);
    mpfr_clear(w);
    mpfr_clear(m);
    mpfr_clear(bound);
    mpfr_clear(ha);
    return ok;
}

Rat Interval::lo_rat() const {
    if (!mpfr_number_p(lo_)) throw internal_error("lo_rat on non-finite endpoint");
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, lo_);
    Rat r(q);
    mpq_clear(q);
    return r;
}

Rat Interval::hi_rat() const {
    if (!mpfr_number_p(hi_)) throw internal_error("hi_rat on non-finite endpoint");
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, hi_);
    Rat r(q);
    mpq_clear(q);
    return r;
}

Rat Interval::mid_rat() const { return (lo_rat() + hi_rat()) / 2; }

std::string Interval::mid_string(int digits) const {
    mpfr_t m;
    mpfr_init2(m, prec_ + 8);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    if (mpfr_zero_p(m)) {
        mpfr_clear(m);
        return "0";
    }
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, m);
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(m);
    return out;
}

}  // namespace latexp
