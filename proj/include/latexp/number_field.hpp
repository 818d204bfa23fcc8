#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "latexp/interval.hpp"
#include "latexp/polynomial.hpp"
#include "latexp/rational.hpp"

namespace latexp {

// A real algebraic number field Q(alpha) in the power basis, with a designated
// real embedding fixed by an isolating interval for alpha. The minimal
// polynomial is validated (irreducible, monic, degree <= 12) at construction
// and all real roots are isolated once, so the same field object can also
// serve the conjugate embeddings of a totally real field.
class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    static std::shared_ptr<const NumberField> create(poly::ZPoly minpoly, const Rat& root_lo,
                                                     const Rat& root_hi);
    // The rationals as a degree-1 field (alpha = value).
    static std::shared_ptr<const NumberField> rationals();

    int degree() const { return degree_; }
    const poly::ZPoly& minpoly() const { return minpoly_; }
    bool is_rational_field() const { return degree_ == 1; }
    Rat rational_root() const;  // degree-1 fields only

    int num_real_roots() const { return static_cast<int>(roots_.size()); }
    bool is_totally_real() const { return num_real_roots() == degree_; }
    int designated_root() const { return designated_; }
    // The root interval exactly as given at construction (for serialization).
    Rat given_lo() const { return orig_lo_; }
    Rat given_hi() const { return orig_hi_; }

    // Enclosure of root #idx (ascending order) with width <= 2^-bits.
    poly::QInterval root_enclosure(int idx, long bits) const;

    // Exact sign of g(alpha_idx): 0 iff g vanishes at the root exactly.
    int sign_at_root(const poly::QPoly& g, int idx) const;

    // Certified enclosure of g(alpha_idx); width <= 2^-(prec-2) * max(1,|value|).
    Interval evaluate_at_root(const poly::QPoly& g, int idx, long prec) const;

    // Rows expressing alpha^(degree+i), i = 0..degree-2, in the power basis.
    const std::vector<std::vector<Rat>>& reduction_rows() const { return reduction_; }

    bool same_field(const NumberField& o) const;

  private:
    NumberField() = default;

    poly::ZPoly minpoly_;
    poly::QPoly minpoly_q_;
    int degree_ = 0;
    int designated_ = 0;
    Rat orig_lo_, orig_hi_;
    std::vector<std::vector<Rat>> reduction_;
    mutable std::vector<poly::QInterval> roots_;
    mutable std::mutex mu_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// An exact element of a number field: rational coordinates in the power basis.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<Rat> coords);

    static FieldElement zero(const FieldPtr& f);
    static FieldElement one(const FieldPtr& f);
    static FieldElement alpha(const FieldPtr& f);
    static FieldElement from_rational(const FieldPtr& f, const Rat& q);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rat as_rational() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;  // throws on zero
    FieldElement pow(long e) const;
    FieldElement scaled(const Rat& q) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Exact sign under the designated embedding.
    int sign() const;
    // Certified enclosure under the designated embedding.
    Interval embed(long prec) const;

    // Field norm N(x) = product over all (complex) embeddings; exact rational,
    // computed as the determinant of the multiplication-by-x matrix.
    Rat norm() const;

    poly::QPoly as_poly() const;

  private:
    void check_same_field(const FieldElement& o) const;

    FieldPtr field_;
    std::vector<Rat> c_;
};

}  // namespace latexp
