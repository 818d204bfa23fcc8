#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "latexp/forms.hpp"

namespace latexp {

using ZVec = std::vector<long long>;

// A lattice point together with its certified embedding. zero_coords records
// the coordinates that vanish exactly (decided in exact arithmetic, not from
// the intervals).
struct LatticePoint {
    ZVec z;
    std::vector<Interval> x;
    Interval sup;
    Interval pi;
    std::vector<int> zero_coords;  // 1-based
    bool has_zero() const { return !zero_coords.empty(); }
};

// Full-rank lattice scale * {(l_1(z), ..., l_d(z)) : z in Z^d}. When
// `unit_det` is set the embedding carries an extra |det|^{-1/d} homothety so
// the embedded lattice has determinant exactly 1; the exact data is unchanged.
class Lattice {
  public:
    using FormsVariant = std::variant<FieldForms, NormForms>;

    explicit Lattice(FormsVariant forms, Rat scale = Rat(1), bool unit_det = false);

    int dim() const { return d_; }
    const FormsVariant& forms() const { return forms_; }
    const Rat& scale() const { return scale_; }
    bool unit_det() const { return unit_det_; }
    const FieldForms* field_forms() const { return std::get_if<FieldForms>(&forms_); }
    const NormForms* norm_forms() const { return std::get_if<NormForms>(&forms_); }
    const FieldPtr& field() const;

    Lattice dual() const;
    Lattice normalized() const;  // homothetic copy with |det| = 1

    // |det| of the embedded lattice (scale and unit factor included).
    Interval det_abs(long prec) const;
    // The total embedding scale s with x = s * F z.
    Interval embed_scale(long prec) const;

    // True iff |det| == 1 exactly.
    bool det_is_unimodular() const;

    bool same_data(const Lattice& o) const;

    // --- certified point construction ---
    LatticePoint make_point(const ZVec& z, long prec) const;
    std::vector<Interval> embed_coords(const ZVec& z, long prec) const;

    // --- exact decisions (never float) ---
    bool coord_is_zero(const ZVec& z, int i) const;  // i is 0-based here
    std::vector<int> zero_coords_of(const ZVec& z) const;
    // sign(|x_i(z)| - q) for rational q >= 0
    int cmp_coord_abs_rat(const ZVec& z, int i, const Rat& q) const;
    // sign(|x_i(z)| - |x_j(w)|); exact except cross-embedding norm-form ties,
    // which resolve to 0 after a deep refinement cap
    int cmp_coord_abs(const ZVec& z, int i, const ZVec& w, int j) const;
    // sign(max_i |x_i(z)| - q)
    int cmp_sup_rat(const ZVec& z, const Rat& q) const;
    // sign(|x(z)|_inf - |x(w)|_inf)
    int cmp_sup(const ZVec& z, const ZVec& w) const;
    bool product_is_zero(const ZVec& z) const;
    // sign(P(z) - P(w)) for P = prod |x_i|; always exact
    int cmp_product(const ZVec& z, const ZVec& w) const;
    // sign(P(z) - q) for rational q >= 0; always exact
    int cmp_product_rat(const ZVec& z, const Rat& q) const;

    // Exact field element l_i(z) (field-forms backend only).
    FieldElement form_value(const ZVec& z, int i) const;

  private:
    FormsVariant forms_;
    Rat scale_;
    bool unit_det_ = false;
    int d_ = 0;
};

// Geometric mean of coordinate absolute values, in interval arithmetic.
Interval pi_value(const std::vector<Interval>& x);

struct GammaResult {
    bool is_infinite = false;
    std::optional<Interval> value;  // set when finite
};

// gamma with Pi(x) = |x|^{-gamma}; +infinity flag when a coordinate vanishes
// exactly. Requires |x| > 1 (throws input_error otherwise).
GammaResult gamma_of_point(const Lattice& lat, const ZVec& z, long prec);
// The raw formula -ln(pi)/ln(sup) on certified intervals.
Interval gamma_value(const Interval& sup, const Interval& pi);

}  // namespace latexp
