#pragma once

#include <optional>
#include <vector>

#include "latexp/number_field.hpp"
#include "latexp/rational.hpp"

namespace latexp {

using QMatrix = std::vector<std::vector<Rat>>;
using ZVector = std::vector<Int>;

// --- exact rational linear algebra -------------------------------------------

// Reduced row echelon form in place; returns the rank.
int rref(QMatrix& m);
int rank_of(QMatrix m);
// Basis of the right kernel {x : m x = 0}, canonical from the RREF.
QMatrix kernel_basis(const QMatrix& m);
QMatrix matrix_inverse(const QMatrix& m);  // throws input_error if singular
Rat det_gauss(QMatrix m);

// Independent fraction-free route (Bareiss), used as a cross-check oracle.
int rank_bareiss(const std::vector<ZVector>& m);
Int det_bareiss(std::vector<ZVector> m);

// Scale a rational vector to a primitive integer vector (gcd 1, first nonzero
// entry positive).
ZVector to_primitive_integer(const std::vector<Rat>& v);

// Basis of {z in Z^d : <m, z> = 0} for an integer row; the returned lattice is
// saturated (it is the full integer kernel, built from a unimodular transform).
std::vector<ZVector> integer_kernel_of_row(const ZVector& m);

// --- rational subspaces -------------------------------------------------------

// A subspace of R^d defined over Q, stored with a canonical RREF basis.
struct RationalSubspace {
    int ambient_dim = 0;
    QMatrix basis;  // RREF rows, possibly empty
    int dim() const { return static_cast<int>(basis.size()); }
};

RationalSubspace make_subspace(int ambient_dim, QMatrix spanning_rows);

// --- operations on field-element data -----------------------------------------

struct IndependenceReport {
    bool independent = false;
    // When dependent: a nonzero primitive integer relation with
    // sum r_i * elems_i = 0.
    ZVector relation;
};

// Exact Q-linear independence of field elements, decided by the rank of the
// power-basis coordinate matrix. Never numeric.
IndependenceReport q_linear_independence(const std::vector<FieldElement>& elems);

// {z in Q^d : sum_i form_i z_i = 0 exactly}: the kernel of the
// (degree x d) coordinate matrix of the form.
RationalSubspace rational_kernel(const std::vector<FieldElement>& form);

// Smallest rational subspace of R^d containing all the given vectors: the
// rational span of the power-basis coordinate slices.
RationalSubspace minimal_rational_subspace(const std::vector<std::vector<FieldElement>>& vectors);

}  // namespace latexp
