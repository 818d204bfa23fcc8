#include "latexp/lattice.hpp"

#include <cmath>

#include "doctest.h"
#include "latexp/errors.hpp"
#include "latexp/lattice_io.hpp"

using namespace latexp;

namespace {
poly::ZPoly zp(std::initializer_list<long> cs) {
    poly::ZPoly p;
    for (long c : cs) p.push_back(Int(c));
    poly::normalize_z(p);
    return p;
}
FieldPtr quintic() { return NumberField::create(zp({-2, 0, 0, 0, 0, 1}), Rat(1), Rat(2)); }

Lattice integer_lattice(std::initializer_list<std::initializer_list<long>> rows, Rat scale = Rat(1)) {
    auto fq = NumberField::rationals();
    FMatrix m;
    for (auto& r : rows) {
        FRow row;
        for (long v : r) row.push_back(FieldElement::from_rational(fq, Rat(v)));
        m.push_back(std::move(row));
    }
    return Lattice(Lattice::FormsVariant(FieldForms(fq, m)), scale);
}

Lattice z3() { return integer_lattice({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

Lattice quintic_lattice() {
    auto f = quintic();
    FieldElement a = FieldElement::alpha(f);
    FieldElement b = a.pow(4) + a;
    FMatrix rows{
        {FieldElement::one(f), a, a * a},
        {a, a * a, b},
        {a.pow(3), FieldElement::one(f), a},
    };
    return Lattice(Lattice::FormsVariant(FieldForms(f, rows)));
}
}  // namespace

TEST_CASE("lattice_from_forms: identity and singular") {
    Lattice l = z3();
    CHECK(l.dim() == 3);
    CHECK(l.det_abs(64).contains(Rat(1)));
    CHECK(l.det_is_unimodular());
    CHECK_THROWS_AS(integer_lattice({{1, 2, 3}, {1, 2, 3}, {0, 0, 1}}), input_error);
}

TEST_CASE("algebraic lattice has exact determinant") {
    Lattice l = quintic_lattice();
    const auto* ff = l.field_forms();
    REQUIRE(ff != nullptr);
    CHECK_FALSE(ff->det().is_zero());
    // det(dual) * det = 1 exactly
    Lattice dual = l.dual();
    FieldElement prod = dual.field_forms()->det() * ff->det();
    CHECK(prod == FieldElement::one(l.field()));
}

TEST_CASE("dual: involution and determinant inversion") {
    Lattice l = quintic_lattice();
    CHECK(l.dual().dual().same_data(l));
    Lattice zd = z3();
    CHECK(zd.dual().same_data(zd));
    Lattice scaled = integer_lattice({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, Rat(2));
    CHECK(scaled.dual().scale() == Rat(1, 2));
    CHECK(scaled.dual().dual().same_data(scaled));
}

TEST_CASE("pi_value spec examples") {
    long p = 96;
    auto iv = [&](long v) { return Interval::exact(Rat(v), p); };
    CHECK(pi_value({iv(2), iv(2), iv(2)}).contains(Rat(2)));
    CHECK(pi_value({iv(1), iv(0), iv(5)}).contains(Rat(0)));
    Interval r = pi_value({iv(1), iv(2), iv(4)});
    CHECK(r.contains(Rat(2)));  // cube root of 8
}

TEST_CASE("gamma: spec examples") {
    long p = 96;
    // |x| = 100, Pi = 0.5 -> ln 2 / ln 100
    Interval g = gamma_value(Interval::exact(Rat(100), p), Interval::exact(Rat(1, 2), p));
    CHECK(g.mid_d() == doctest::Approx(std::log(2.0) / std::log(100.0)).epsilon(1e-12));
    // Pi = 1 -> gamma = 0
    Interval z = gamma_value(Interval::exact(Rat(100), p), Interval::exact(Rat(1), p));
    CHECK(z.contains(Rat(0)));
    // exact zero coordinate -> infinite flag
    Lattice l = z3();
    GammaResult r = gamma_of_point(l, {2, 1, 0}, p);
    CHECK(r.is_infinite);
    // sup <= 1 is a domain error
    CHECK_THROWS_AS(gamma_of_point(l, {1, 0, 0}, p), input_error);
}

TEST_CASE("normalize_det examples") {
    Lattice l = z3();
    CHECK(l.normalized().det_abs(64).contains(Rat(1)));
    Lattice two = integer_lattice({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    Lattice norm = two.normalized();
    CHECK(norm.det_abs(64).contains(Rat(1)));
    // embedding scale becomes 1/2
    CHECK(norm.embed_scale(64).contains(Rat(1, 2)));
    // cubic-field totally real lattice with |det| 9: scaling 9^{-1/3}
    auto f3 = NumberField::create(zp({-1, -3, 0, 1}), Rat(1), Rat(2));
    QMatrix id3(3, std::vector<Rat>(3, Rat(0)));
    for (int i = 0; i < 3; ++i) id3[i][i] = 1;
    Lattice tr(Lattice::FormsVariant(NormForms(f3, id3)));
    Lattice trn = tr.normalized();
    double s = trn.embed_scale(96).mid_d();
    CHECK(s == doctest::Approx(std::pow(9.0, -1.0 / 3.0)).epsilon(1e-10));
    CHECK(trn.det_abs(96).contains(Rat(1)));
}

TEST_CASE("exact comparison services") {
    Lattice l = quintic_lattice();
    ZVec z{1, -1, 0}, w{0, 1, 1};
    // coordinate zero detection is exact
    CHECK_FALSE(l.coord_is_zero(z, 0));
    // cmp against self is 0
    CHECK(l.cmp_coord_abs(z, 1, z, 1) == 0);
    CHECK(l.cmp_product(z, z) == 0);
    // antisymmetry
    CHECK(l.cmp_product(z, w) == -l.cmp_product(w, z));
    CHECK(l.cmp_sup(z, w) == -l.cmp_sup(w, z));
    // consistency with the interval data
    LatticePoint pz = l.make_point(z, 128), pw = l.make_point(w, 128);
    if (l.cmp_sup(z, w) < 0) CHECK(pz.sup.lo_d() <= pw.sup.hi_d());
    // product against rationals brackets the interval value
    Interval pprod = pz.x[0].abs() * pz.x[1].abs() * pz.x[2].abs();
    Rat mid = pprod.mid_rat();
    CHECK(l.cmp_product_rat(z, mid + 1) < 0);
    if (mid > 1) CHECK(l.cmp_product_rat(z, mid - mid / 2) > 0);
}

TEST_CASE("scaling equivariance of the minimum") {
    // min{P(y) : y in tL, |y| <= tX} = t^d min{P(x) : x in L, |x| <= X} for the
    // product (so t for Pi); check by exact comparison on a small box
    Lattice l = integer_lattice({{1, 1, 0}, {0, 1, 2}, {1, 0, 3}});
    Lattice l2 = integer_lattice({{1, 1, 0}, {0, 1, 2}, {1, 0, 3}}, Rat(3, 2));
    // P(t z) = t^d P(z) exactly: compare the cmp services
    ZVec z{1, 0, 0};
    Rat q(2);
    // |x_i| <= q on l2 iff |x_i| <= q / (3/2) on l
    for (int i = 0; i < 3; ++i)
        CHECK(l2.cmp_coord_abs_rat(z, i, q) == l.cmp_coord_abs_rat(z, i, q / Rat(3, 2)));
}

TEST_CASE("lattice json round trip") {
    Lattice l = quintic_lattice();
    Json j = lattice_to_json(l);
    Lattice back = lattice_from_json(j);
    CHECK(back.same_data(l));
    // norm-form round trip
    auto f3 = NumberField::create(zp({-1, -3, 0, 1}), Rat(1), Rat(2));
    QMatrix id3(3, std::vector<Rat>(3, Rat(0)));
    for (int i = 0; i < 3; ++i) id3[i][i] = 1;
    Lattice tr(Lattice::FormsVariant(NormForms(f3, id3)), Rat(5, 7));
    Lattice back2 = lattice_from_json(lattice_to_json(tr));
    CHECK(back2.same_data(tr));
    // byte-identical serialization
    CHECK(lattice_to_json(back2).dump() == lattice_to_json(tr).dump());
}

TEST_CASE("malformed lattice json is rejected") {
    Json j;
    j["dim"] = 3;
    CHECK_THROWS_AS(lattice_from_json(j), input_error);
    j["field"] = {{"minpoly", {1, 1}}, {"root_interval", {"0/1", "1/1"}}};
    // minpoly x + 1 has root -1, not in (0,1)
    CHECK_THROWS_AS(lattice_from_json(j), input_error);
}
