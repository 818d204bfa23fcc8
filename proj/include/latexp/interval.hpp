#pragma once

#include <mpfr.h>

#include <string>

#include "latexp/rational.hpp"

namespace latexp {

// A closed real interval [lo, hi] with MPFR endpoints and outward rounding.
// Every operation returns an enclosure of the exact result, so any predicate
// that reports "certainly" is sound at any precision.
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 128);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    static Interval exact(const Rat& q, mpfr_prec_t prec);
    static Interval exact(long v, mpfr_prec_t prec);
    static Interval hull(const Rat& lo, const Rat& hi, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return prec_; }

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;  // requires o certainly nonzero
    Interval operator-() const;

    Interval& operator+=(const Interval& o);

    Interval abs() const;
    Interval pow_int(long e) const;  // negative e requires certainly nonzero
    // k-th root; requires lo >= 0 (callers only take roots of nonnegatives).
    Interval root(unsigned long k) const;
    Interval log() const;  // requires certainly positive
    Interval exp() const;

    // x * n for integer n without building an interval.
    Interval mul_si(long n) const;
    void add_mul_si(const Interval& o, long n);  // *this += o * n, in place

    static Interval max(const Interval& a, const Interval& b);
    static Interval min(const Interval& a, const Interval& b);

    bool certainly_less(const Interval& o) const;      // hi <  o.lo
    bool certainly_leq(const Interval& o) const;       // hi <= o.lo
    bool certainly_less(const Rat& q) const;
    bool certainly_leq(const Rat& q) const;  // hi <= q
    bool certainly_greater(const Rat& q) const;
    bool certainly_positive() const;
    bool certainly_negative() const;
    bool contains_zero() const;
    bool contains(const Rat& q) const;

    double lo_d() const;
    double hi_d() const;
    double mid_d() const;
    double width_d() const;

    // True when width <= 2^-bits * max(1, |mid|).
    bool width_below(long bits) const;

    Rat lo_rat() const;
    Rat hi_rat() const;
    Rat mid_rat() const;

    // Midpoint with `digits` significant decimal digits; "0" for an exact zero.
    std::string mid_string(int digits) const;

  private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;

    friend Interval interval_from_mpq(const mpq_t lo, const mpq_t hi, mpfr_prec_t prec);
};

}  // namespace latexp
