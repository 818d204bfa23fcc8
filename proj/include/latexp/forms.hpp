#pragma once

#include <vector>

#include "latexp/linalg.hpp"
#include "latexp/number_field.hpp"

namespace latexp {

using FRow = std::vector<FieldElement>;
using FMatrix = std::vector<FRow>;

// Exact linear algebra over a number field.
FieldElement fdet(FMatrix m);
FMatrix finverse(const FMatrix& m);  // throws input_error if singular
FMatrix ftranspose(const FMatrix& m);
// Basis rows of the right kernel {x : m x = 0} over the field.
FMatrix fkernel(const FMatrix& m);

// Lexicographically ordered k-subsets of {1, ..., d} (1-based).
std::vector<std::vector<int>> lex_subsets(int d, int k);

// Exact k-minor coordinates of a wedge of forms: coords[t] is the minor of the
// selected rows on the t-th lexicographic column subset.
struct GrassmannCoords {
    int k = 0;
    std::vector<int> row_indices;                // increasing, 1-based
    std::vector<std::vector<int>> col_subsets;   // lex order, 1-based
    std::vector<FieldElement> coords;
};

// Linear forms written in the rows of an exact d x d matrix over one
// designated real embedding. The determinant is computed (and required
// nonzero) at construction.
class FieldForms {
  public:
    FieldForms(FieldPtr field, FMatrix rows);

    int dim() const { return d_; }
    const FieldPtr& field() const { return field_; }
    const FMatrix& rows() const { return rows_; }
    const FieldElement& det() const { return det_; }

    // Rows of the exact inverse-transpose: the dual forms.
    FieldForms dual_forms() const;

    GrassmannCoords wedge(const std::vector<int>& row_tuple) const;

    bool operator==(const FieldForms& o) const;

  private:
    FieldPtr field_;
    FMatrix rows_;
    int d_ = 0;
    FieldElement det_;
};

// The paper's duality between a wedge of forms and the complementary wedge of
// dual forms. dual_wedge.coords[S^c] * det == sign[S] * primal.coords[S],
// verified coordinate by coordinate in exact arithmetic.
struct DualWedgeResult {
    GrassmannCoords primal;
    GrassmannCoords dual_wedge;
    std::vector<int> signs;  // indexed like primal.col_subsets
    FieldElement det;
    bool verified = false;
};
DualWedgeResult complementary_dual_wedge(const FieldForms& forms,
                                         const std::vector<int>& row_tuple);

// Forms given by the d real embeddings of d rational-coefficient polynomials:
// row i, column j holds q_j(alpha_i) where the coefficients of q_j are column
// j of the rational matrix R (so the matrix is V * R for the root Vandermonde
// V). Exact determinants come from the field discriminant and exact products
// of coordinates from field norms; this is the backend for lattices of
// complete modules in totally real fields.
class NormForms {
  public:
    NormForms(FieldPtr field, QMatrix coeffs);

    int dim() const { return d_; }
    const FieldPtr& field() const { return field_; }
    const QMatrix& coeffs() const { return coeffs_; }
    const Rat& det_r() const { return det_r_; }
    const Int& disc() const { return disc_; }

    // det(V R) = sqrt(disc) * det(R); roots are taken in ascending order so
    // det(V) = +sqrt(disc).
    Interval det_interval(long prec) const;
    Rat det_sq() const { return Rat(disc_) * det_r_ * det_r_; }

    NormForms dual_forms() const;

    // Coefficients of g_z = sum_j z_j q_j; row i of the forms evaluates to
    // g_z(alpha_i).
    poly::QPoly point_poly(const std::vector<long long>& z) const;

    // Exact product of all coordinates of the (unscaled) point: prod_i g_z(alpha_i).
    Rat point_norm(const std::vector<long long>& z) const;

    // Rows w_j with (V R)^{-1}[j][i] = w_j(alpha_i).
    const QMatrix& inverse_poly_rows() const { return inv_rows_; }

    // Power-sum matrix S[j][k] = sum_i alpha_i^{j+k}.
    const QMatrix& trace_matrix() const { return trace_; }

    bool operator==(const NormForms& o) const;

  private:
    FieldPtr field_;
    QMatrix coeffs_;
    int d_ = 0;
    Rat det_r_;
    Int disc_;
    QMatrix trace_;
    QMatrix inv_rows_;
};

}  // namespace latexp
