#include "latexp/constructions.hpp"

#include <algorithm>

#include "latexp/errors.hpp"
#include "latexp/linalg.hpp"

namespace latexp {

namespace {

std::string subset_string(const std::vector<int>& s) {
    std::string out = "(";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + ")";
}

std::string relation_string(const ZVector& r) {
    std::string out = "relation (";
    for (size_t i = 0; i < r.size(); ++i) {
        if (i) out += ", ";
        out += r[i].get_str();
    }
    return out + ")";
}

}  // namespace

Lattice totally_real_lattice(const FieldPtr& field) {
    int d = field->degree();
    if (d < 3) throw input_error("totally real lattice requires degree >= 3");
    if (!field->is_totally_real())
        throw input_error("minimal polynomial is not totally real");
    QMatrix identity(d, std::vector<Rat>(d, Rat(0)));
    for (int i = 0; i < d; ++i) identity[i][i] = 1;
    return Lattice(Lattice::FormsVariant(NormForms(field, identity)));
}

HypothesisReport verify_corollary1_hypothesis(const FieldForms& forms) {
    HypothesisReport rep;
    rep.hypothesis = "corollary1";
    int d = forms.dim();
    for (int k = 1; k <= d; ++k) {
        for (const auto& tuple : lex_subsets(d, k)) {
            GrassmannCoords g = forms.wedge(tuple);
            auto verdict = q_linear_independence(g.coords);
            Clause c;
            c.description = "wedge " + subset_string(tuple) + " coordinates Q-independent";
            c.pass = verdict.independent;
            if (!c.pass) c.certificate = relation_string(verdict.relation);
            rep.clauses.push_back(std::move(c));
        }
    }
    return rep;
}

HypothesisReport verify_theorem4_hypothesis(const FieldForms& forms) {
    HypothesisReport rep;
    rep.hypothesis = "theorem4";
    int d = forms.dim();
    std::vector<int> main_tuple;
    for (int i = 1; i <= d - 1; ++i) main_tuple.push_back(i);
    GrassmannCoords g = forms.wedge(main_tuple);
    {
        Clause c;
        c.description = "first coordinate of wedge " + subset_string(main_tuple) + " vanishes";
        c.pass = g.coords[0].is_zero();
        if (!c.pass) c.certificate = "nonzero minor on columns " + subset_string(g.col_subsets[0]);
        rep.clauses.push_back(std::move(c));
    }
    {
        Clause c;
        c.description = "remaining coordinates of wedge " + subset_string(main_tuple) +
                        " Q-independent";
        std::vector<FieldElement> rest(g.coords.begin() + 1, g.coords.end());
        auto verdict = q_linear_independence(rest);
        c.pass = verdict.independent;
        if (!c.pass) c.certificate = relation_string(verdict.relation);
        rep.clauses.push_back(std::move(c));
    }
    for (int k = 1; k <= d; ++k) {
        for (const auto& tuple : lex_subsets(d, k)) {
            if (tuple == main_tuple) continue;
            GrassmannCoords gk = forms.wedge(tuple);
            auto verdict = q_linear_independence(gk.coords);
            Clause c;
            c.description = "wedge " + subset_string(tuple) + " coordinates Q-independent";
            c.pass = verdict.independent;
            if (!c.pass) c.certificate = relation_string(verdict.relation);
            rep.clauses.push_back(std::move(c));
        }
    }
    return rep;
}

HypothesisReport verify_spectrum_hypothesis(const FieldForms& forms, int k, int l) {
    HypothesisReport rep;
    rep.hypothesis = "spectrum(" + std::to_string(k) + "," + std::to_string(l) + ")";
    int d = forms.dim();
    if (k < 1 || k > d - 2 || l < 1 || l > d - k - 1)
        throw input_error("spectrum parameters out of range");
    // S = common kernel of the first d-k rows, over the field
    FMatrix top(forms.rows().begin(), forms.rows().begin() + (d - k));
    FMatrix kernel = fkernel(top);
    {
        Clause c;
        c.description = "kernel of the first " + std::to_string(d - k) + " forms has dimension " +
                        std::to_string(k);
        c.pass = static_cast<int>(kernel.size()) == k;
        if (!c.pass) c.certificate = "kernel dimension " + std::to_string(kernel.size());
        rep.clauses.push_back(std::move(c));
    }
    if (!kernel.empty()) {
        auto closure = minimal_rational_subspace(kernel);
        Clause c;
        c.description = "rational closure of the kernel has dimension exactly " +
                        std::to_string(k + l);
        c.pass = closure.dim() == k + l;
        if (!c.pass) c.certificate = "closure dimension " + std::to_string(closure.dim());
        rep.clauses.push_back(std::move(c));
    }
    return rep;
}

namespace {

FieldPtr quintic_field() {
    return NumberField::create({Int(-2), Int(0), Int(0), Int(0), Int(0), Int(1)}, Rat(1), Rat(2));
}

// powers of alpha as row vectors
FRow power_row(const FieldPtr& f, std::initializer_list<long> exps) {
    FRow row;
    FieldElement a = FieldElement::alpha(f);
    for (long e : exps) row.push_back(a.pow(e));
    return row;
}

}  // namespace

ConstructionResult theorem4_lattice(int d, const std::optional<FieldForms>& config) {
    if (d < 3) throw input_error("theorem 4 lattice requires d >= 3");
    if (config) {
        HypothesisReport rep = verify_theorem4_hypothesis(*config);
        return {Lattice(Lattice::FormsVariant(*config)), std::move(rep)};
    }
    if (d == 3) {
        auto f = quintic_field();
        FieldElement a = FieldElement::alpha(f);
        FieldElement beta = a.pow(4) + a;  // forces the (1,2)-minor of rows 1,2 to vanish
        FRow l1 = power_row(f, {0, 1, 2});
        FRow l2{a, a * a, beta};
        // catalog of candidate third rows, tried in order
        std::vector<FRow> catalog{
            power_row(f, {3, 0, 1}),
            power_row(f, {2, 0, 3}),
            power_row(f, {3, 1, 0}),
            power_row(f, {1, 3, 0}),
            FRow{a.pow(3), FieldElement::one(f) + a, a.pow(2) + a.pow(4)},
        };
        for (const auto& l3 : catalog) {
            FMatrix rows{l1, l2, l3};
            FieldForms forms(f, rows);
            HypothesisReport rep = verify_theorem4_hypothesis(forms);
            if (rep.passed()) return {Lattice(Lattice::FormsVariant(forms)), std::move(rep)};
        }
        throw input_error("theorem 4: no passing configuration in the d = 3 catalog");
    }
    if (d == 4) {
        // degree-12 field keeps the wedge coordinates on distinct power products
        auto f = NumberField::create(
            {Int(-2), Int(0), Int(0), Int(0), Int(0), Int(0), Int(0), Int(0), Int(0), Int(0),
             Int(0), Int(0), Int(1)},
            Rat(1), Rat(2));
        FieldElement a = FieldElement::alpha(f);
        // rows 1..3: geometric in the first three columns (rank-1 block, so the
        // leading 3x3 minor vanishes), custom last column
        FMatrix rows{
            FRow{a.pow(0), a.pow(1), a.pow(2), a.pow(3)},
            FRow{a.pow(1), a.pow(2), a.pow(3), a.pow(7)},
            FRow{a.pow(2), a.pow(3), a.pow(4), a.pow(9)},
            FRow{a.pow(5), a.pow(10), a.pow(6), a.pow(11)},
        };
        std::vector<FMatrix> catalog{rows};
        {
            FMatrix alt = rows;
            alt[3] = FRow{a.pow(6), a.pow(10), a.pow(5), a.pow(11)};
            catalog.push_back(alt);
            alt[3] = FRow{a.pow(5), a.pow(8), a.pow(10), a.pow(11)};
            catalog.push_back(alt);
        }
        for (const auto& cand : catalog) {
            FieldForms forms(f, cand);
            HypothesisReport rep = verify_theorem4_hypothesis(forms);
            if (rep.passed()) return {Lattice(Lattice::FormsVariant(forms)), std::move(rep)};
        }
        throw input_error("theorem 4: no passing configuration in the d = 4 catalog");
    }
    throw input_error(
        "theorem 4 construction ships recipes for d = 3 and d = 4 (the field degree cap "
        "of 12 blocks larger d); pass an explicit configuration instead");
}

ConstructionResult spectrum_lattice(int d, int k, int l, const std::optional<FieldForms>& config) {
    if (d < 3) throw input_error("spectrum lattice requires d >= 3");
    if (k < 1 || k > d - 2) throw input_error("spectrum lattice requires 1 <= k <= d-2");
    if (l < 1 || l > d - k - 1) throw input_error("spectrum lattice requires 1 <= l <= d-k-1");
    if (config) {
        HypothesisReport rep = verify_spectrum_hypothesis(*config, k, l);
        return {Lattice(Lattice::FormsVariant(*config)), std::move(rep)};
    }
    // the sharpness construction covers (k, l) = (1, d-2) directly
    if (k == 1 && l == d - 2 && d <= 4) {
        try {
            ConstructionResult t4 = theorem4_lattice(d);
            HypothesisReport rep = verify_spectrum_hypothesis(*t4.lattice.field_forms(), k, l);
            if (rep.passed()) return {t4.lattice, std::move(rep)};
        } catch (const input_error&) {
            // fall through to the generic recipe
        }
    }
    // generic recipe: S spanned by (1, alpha, ..., alpha^l, 0, ...) and the
    // rational unit vectors e_{l+2}, ..., e_{l+k}; its closure has dimension
    // exactly (l+1) + (k-1) = k + l
    int degree = std::max(l + 1, 2);
    poly::ZPoly mp(static_cast<size_t>(degree) + 1, Int(0));
    mp[0] = -2;
    mp[degree] = 1;  // x^degree - 2
    auto f = NumberField::create(mp, Rat(1), Rat(2));
    FieldElement a = FieldElement::alpha(f);
    FieldElement one = FieldElement::one(f), zero = FieldElement::zero(f);
    FMatrix rows;
    // l rows: alpha e_s - e_{s+1} kill the algebraic direction
    for (int s = 0; s < l; ++s) {
        FRow r(d, zero);
        r[s] = a;
        r[s + 1] = -one;
        rows.push_back(std::move(r));
    }
    // d - (l + k) rows: unit covectors on the trailing coordinates
    for (int t = l + k; t < d; ++t) {
        FRow r(d, zero);
        r[t] = one;
        rows.push_back(std::move(r));
    }
    // k completion rows make the matrix invertible
    {
        FRow r(d, zero);
        r[0] = one;
        rows.push_back(std::move(r));
    }
    for (int t = l + 1; t < l + k; ++t) {
        FRow r(d, zero);
        r[t] = one;
        rows.push_back(std::move(r));
    }
    FieldForms forms(f, rows);
    HypothesisReport rep = verify_spectrum_hypothesis(forms, k, l);
    if (!rep.passed()) throw internal_error("spectrum recipe failed its own verifier");
    return {Lattice(Lattice::FormsVariant(forms)), std::move(rep)};
}

}  // namespace latexp
