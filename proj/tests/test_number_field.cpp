#include "latexp/number_field.hpp"

#include "doctest.h"
#include "latexp/errors.hpp"

#include <cmath>

using namespace latexp;

namespace {
poly::ZPoly zp(std::initializer_list<long> cs) {
    poly::ZPoly p;
    for (long c : cs) p.push_back(Int(c));
    poly::normalize_z(p);
    return p;
}

FieldPtr cubic_field() { return NumberField::create(zp({-1, -3, 0, 1}), Rat(1), Rat(2)); }
FieldPtr sqrt2_field() { return NumberField::create(zp({-2, 0, 1}), Rat(1), Rat(2)); }
}  // namespace

TEST_CASE("nf_create: degree-1 field is the rationals") {
    auto f = NumberField::create(zp({-2, 1}), Rat(1), Rat(3));
    CHECK(f->degree() == 1);
    CHECK(f->is_rational_field());
    CHECK(f->rational_root() == 2);
}

TEST_CASE("nf_create: totally real cubic") {
    auto f = cubic_field();
    CHECK(f->degree() == 3);
    CHECK(f->num_real_roots() == 3);
    CHECK(f->is_totally_real());
    // the designated root is the largest one
    CHECK(f->designated_root() == 2);
}

TEST_CASE("nf_create: reducible polynomial rejected") {
    CHECK_THROWS_AS(NumberField::create(zp({1, -2, 1}), Rat(0), Rat(2)), input_error);
}

TEST_CASE("nf_create: interval with no or several roots rejected") {
    CHECK_THROWS_AS(NumberField::create(zp({-1, -3, 0, 1}), Rat(5), Rat(6)), input_error);
    CHECK_THROWS_AS(NumberField::create(zp({-1, -3, 0, 1}), Rat(-10), Rat(10)), input_error);
}

TEST_CASE("field arithmetic spec examples") {
    auto f2 = sqrt2_field();
    FieldElement one = FieldElement::one(f2);
    FieldElement r2 = FieldElement::alpha(f2);
    // (1 + sqrt2)(1 - sqrt2) = -1
    CHECK((one + r2) * (one - r2) == -one);
    // add(x, 0) = x
    CHECK(r2 + FieldElement::zero(f2) == r2);

    auto f3 = cubic_field();
    FieldElement a = FieldElement::alpha(f3);
    // inv(alpha) = alpha^2 - 3 since alpha^3 = 3 alpha + 1
    FieldElement expect = a * a - FieldElement::from_rational(f3, Rat(3));
    CHECK(a.inverse() == expect);
    CHECK(a * a.inverse() == FieldElement::one(f3));
}

TEST_CASE("multiplicative inverse round trip on random-ish elements") {
    auto f = cubic_field();
    for (long k = 1; k < 8; ++k) {
        FieldElement x(f, {Rat(k, 3), Rat(-k, 2), Rat(1, k)});
        CHECK(x * x.inverse() == FieldElement::one(f));
    }
    CHECK_THROWS_AS(FieldElement::zero(f).inverse(), input_error);
}

TEST_CASE("field mismatch is rejected") {
    auto a = FieldElement::alpha(cubic_field());
    auto b = FieldElement::alpha(sqrt2_field());
    CHECK_THROWS_AS(a + b, input_error);
}

TEST_CASE("embed: spec examples") {
    auto fq = NumberField::rationals();
    Interval i = FieldElement::from_rational(fq, Rat(3, 4)).embed(64);
    CHECK(i.contains(Rat(3, 4)));
    CHECK(i.width_d() <= std::ldexp(1.0, -62));

    auto f3 = cubic_field();
    Interval a = FieldElement::alpha(f3).embed(64);
    CHECK(a.mid_d() == doctest::Approx(1.8793852416).epsilon(1e-8));

    // embed(a * inv(a)) contains exactly 1
    FieldElement x(f3, {Rat(1), Rat(2), Rat(3)});
    Interval unit = (x * x.inverse()).embed(64);
    CHECK(unit.contains(Rat(1)));
}

TEST_CASE("embed precision doubling agreement") {
    auto f3 = cubic_field();
    FieldElement x(f3, {Rat(7, 5), Rat(-2), Rat(1, 3)});
    for (long p : {32L, 64L, 128L}) {
        Interval lo = x.embed(p), hi = x.embed(2 * p);
        // the high-precision value lies inside the low-precision interval
        CHECK(lo.lo_d() <= hi.hi_d());
        CHECK(hi.lo_d() <= lo.hi_d());
        CHECK(lo.width_below(p - 2));
    }
}

TEST_CASE("embed respects arithmetic") {
    auto f3 = cubic_field();
    FieldElement x(f3, {Rat(1), Rat(1), Rat(0)});
    FieldElement y(f3, {Rat(0), Rat(2), Rat(-1)});
    long p = 96;
    Interval sum_direct = (x + y).embed(p);
    Interval sum_intervals = x.embed(p) + y.embed(p);
    // the two enclosures must intersect (both contain the exact value)
    CHECK_FALSE(sum_direct.certainly_less(sum_intervals));
    CHECK_FALSE(sum_intervals.certainly_less(sum_direct));
    Interval prod_direct = (x * y).embed(p);
    Interval prod_intervals = x.embed(p) * y.embed(p);
    CHECK_FALSE(prod_direct.certainly_less(prod_intervals));
    CHECK_FALSE(prod_intervals.certainly_less(prod_direct));
}

TEST_CASE("exact sign determination") {
    auto f3 = cubic_field();
    FieldElement a = FieldElement::alpha(f3);
    CHECK(a.sign() == 1);                    // alpha ~ 1.879
    CHECK((-a).sign() == -1);
    CHECK(FieldElement::zero(f3).sign() == 0);
    // alpha^2 - 3.5321 is tiny but nonzero: sign must still resolve
    FieldElement tight = a * a - FieldElement::from_rational(f3, Rat(35321, 10000));
    CHECK(tight.sign() == -1);
}

TEST_CASE("norm is multiplicative and matches resultant oracle") {
    auto f3 = cubic_field();
    FieldElement x(f3, {Rat(1), Rat(1), Rat(0)});   // 1 + alpha
    FieldElement y(f3, {Rat(2), Rat(0), Rat(-1)});  // 2 - alpha^2
    CHECK(x.norm() * y.norm() == (x * y).norm());
    // oracle: N(g(alpha)) = Res(f, g) for monic f
    poly::ZPoly f = zp({-1, -3, 0, 1});
    poly::ZPoly g = zp({1, 1});
    CHECK(Rat(poly::resultant(f, g)) == x.norm());
    // norm of a nonzero algebraic integer is a nonzero rational integer
    CHECK(x.norm() != 0);
    CHECK(x.norm().get_den() == 1);
}
