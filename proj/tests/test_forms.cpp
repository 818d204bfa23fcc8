#include "latexp/forms.hpp"

#include "doctest.h"
#include "latexp/errors.hpp"

using namespace latexp;

namespace {
poly::ZPoly zp(std::initializer_list<long> cs) {
    poly::ZPoly p;
    for (long c : cs) p.push_back(Int(c));
    poly::normalize_z(p);
    return p;
}
FieldPtr quintic() { return NumberField::create(zp({-2, 0, 0, 0, 0, 1}), Rat(1), Rat(2)); }
FieldPtr cubic() { return NumberField::create(zp({-1, -3, 0, 1}), Rat(1), Rat(2)); }

FieldForms identity_forms(int d) {
    auto fq = NumberField::rationals();
    FMatrix rows(d, FRow(d, FieldElement::zero(fq)));
    for (int i = 0; i < d; ++i) rows[i][i] = FieldElement::one(fq);
    return FieldForms(fq, rows);
}

FieldForms random_forms(const FieldPtr& f, int d, SplitMix64& rng) {
    while (true) {
        FMatrix rows(d, FRow(d, FieldElement::zero(f)));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                std::vector<Rat> c(f->degree(), Rat(0));
                for (int t = 0; t < f->degree(); ++t)
                    c[t] = Rat(static_cast<long>(rng.next_in(-2, 2)));
                rows[i][j] = FieldElement(f, c);
            }
        try {
            return FieldForms(f, rows);
        } catch (const input_error&) {
            continue;  // singular draw
        }
    }
}
}  // namespace

TEST_CASE("field determinant and inverse") {
    auto f = cubic();
    FieldElement a = FieldElement::alpha(f);
    FMatrix m{
        {FieldElement::one(f), a, a * a},
        {FieldElement::zero(f), FieldElement::one(f), a},
        {FieldElement::zero(f), FieldElement::zero(f), FieldElement::one(f)},
    };
    CHECK(fdet(m) == FieldElement::one(f));
    FMatrix inv = finverse(m);
    // m * inv = I
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            FieldElement acc = FieldElement::zero(f);
            for (int k = 0; k < 3; ++k) acc = acc + m[i][k] * inv[k][j];
            CHECK(acc == (i == j ? FieldElement::one(f) : FieldElement::zero(f)));
        }
}

TEST_CASE("lex subsets ordering") {
    auto s = lex_subsets(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s[0] == std::vector<int>{1, 2});
    CHECK(s[1] == std::vector<int>{1, 3});
    CHECK(s[5] == std::vector<int>{3, 4});
}

TEST_CASE("wedge: identity forms, rows (1,2)") {
    FieldForms id3 = identity_forms(3);
    GrassmannCoords g = id3.wedge({1, 2});
    REQUIRE(g.coords.size() == 3);
    CHECK(g.coords[0].as_rational() == 1);  // subset (1,2)
    CHECK(g.coords[1].is_zero());           // subset (1,3)
    CHECK(g.coords[2].is_zero());           // subset (2,3)
}

TEST_CASE("wedge: full tuple gives the determinant") {
    auto f = quintic();
    SplitMix64 rng(555ULL);
    FieldForms forms = random_forms(f, 3, rng);
    GrassmannCoords g = forms.wedge({1, 2, 3});
    REQUIRE(g.coords.size() == 1);
    CHECK(g.coords[0] == forms.det());
}

TEST_CASE("wedge: symbolic 2x2 minors match the spec example") {
    // l1 = (1, a, a^2), l2 = (a, a^2, b) with b = a^4 + a:
    // coords (0, b - a^3, a b - a^4)
    auto f = quintic();
    FieldElement a = FieldElement::alpha(f);
    FieldElement b = a.pow(4) + a;
    FMatrix rows{
        {FieldElement::one(f), a, a * a},
        {a, a * a, b},
        {a.pow(3), FieldElement::one(f), a},
    };
    FieldForms forms(f, rows);
    GrassmannCoords g = forms.wedge({1, 2});
    CHECK(g.coords[0].is_zero());
    CHECK(g.coords[1] == b - a.pow(3));
    CHECK(g.coords[2] == a * b - a.pow(4));
    // the two nonzero coordinates are (b - a^3) * {1, a}
    CHECK(g.coords[2] == g.coords[1] * a);
}

TEST_CASE("complementary dual wedge: identity forms") {
    FieldForms id3 = identity_forms(3);
    auto res = complementary_dual_wedge(id3, {1, 2});
    CHECK(res.verified);
    // dual wedge is l*_3 = (0,0,1)
    REQUIRE(res.dual_wedge.coords.size() == 3);
    CHECK(res.dual_wedge.coords[2].as_rational() == 1);
}

TEST_CASE("complementary dual wedge: k = d reduces to det * det(inverse) = 1") {
    auto f = quintic();
    SplitMix64 rng(777ULL);
    FieldForms forms = random_forms(f, 3, rng);
    auto res = complementary_dual_wedge(forms, {1, 2, 3});
    CHECK(res.verified);
    CHECK(res.dual_wedge.k == 0);
}

TEST_CASE("complementary dual wedge: exact identity on random matrices") {
    // independent oracle: direct cofactor computation is what dual_forms uses;
    // here the identity itself is recomputed coordinate by coordinate
    SplitMix64 rng(20240818ULL);
    auto f5 = quintic();
    auto fq = NumberField::rationals();
    for (int trial = 0; trial < 30; ++trial) {
        int d = 3 + static_cast<int>(rng.next_in(0, 1));
        const FieldPtr& f = (trial % 2 == 0) ? f5 : fq;
        FieldForms forms = random_forms(f, d, rng);
        for (int k = 1; k <= d; ++k) {
            // one random tuple per k
            auto subsets = lex_subsets(d, k);
            const auto& tuple = subsets[static_cast<size_t>(rng.next_in(
                0, static_cast<long long>(subsets.size()) - 1))];
            auto res = complementary_dual_wedge(forms, tuple);
            CHECK(res.verified);
        }
    }
}

TEST_CASE("norm forms: construction requires totally real") {
    auto f5 = quintic();  // one real root only
    QMatrix id5(5, std::vector<Rat>(5, Rat(0)));
    for (int i = 0; i < 5; ++i) id5[i][i] = 1;
    CHECK_THROWS_AS(NormForms(f5, id5), input_error);

    auto f3 = cubic();
    QMatrix id3(3, std::vector<Rat>(3, Rat(0)));
    for (int i = 0; i < 3; ++i) id3[i][i] = 1;
    NormForms nf(f3, id3);
    CHECK(nf.dim() == 3);
    CHECK(nf.disc() == 81);
    // |det| = sqrt(disc) = 9
    Interval det = nf.det_interval(96);
    CHECK(det.contains(Rat(9)));
}

TEST_CASE("norm forms: point norms are exact integers on Z[alpha]") {
    auto f3 = cubic();
    QMatrix id3(3, std::vector<Rat>(3, Rat(0)));
    for (int i = 0; i < 3; ++i) id3[i][i] = 1;
    NormForms nf(f3, id3);
    // z = (1, 1, 0) embeds 1 + alpha; norm via the resultant oracle
    Rat n = nf.point_norm({1, 1, 0});
    CHECK(n == Rat(poly::resultant(zp({-1, -3, 0, 1}), zp({1, 1}))));
    CHECK(n.get_den() == 1);
    CHECK(n != 0);
}

TEST_CASE("norm forms: dual round trip") {
    auto f3 = cubic();
    QMatrix id3(3, std::vector<Rat>(3, Rat(0)));
    for (int i = 0; i < 3; ++i) id3[i][i] = 1;
    NormForms nf(f3, id3);
    NormForms dd = nf.dual_forms().dual_forms();
    CHECK(dd == nf);
    // det multiplicativity: det(dual) * det = 1
    Interval prod = nf.dual_forms().det_interval(96) * nf.det_interval(96);
    CHECK(prod.contains(Rat(1)));
}
