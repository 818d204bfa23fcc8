#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latexp/interval.hpp"
#include "latexp/rational.hpp"

namespace latexp::poly {

// Dense polynomials, coefficients low-to-high degree. Normalized form has no
// trailing zeros; the zero polynomial is the empty vector.
using ZPoly = std::vector<Int>;
using QPoly = std::vector<Rat>;

void normalize(QPoly& p);
void normalize_z(ZPoly& p);
int degree(const QPoly& p);  // -1 for the zero polynomial
int degree_z(const ZPoly& p);

QPoly to_qpoly(const ZPoly& p);
// Clears denominators; returns the primitive integer polynomial with positive
// leading coefficient.
ZPoly primitive_part(const QPoly& p);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rat& c);
QPoly derivative(const QPoly& p);
Rat eval(const QPoly& p, const Rat& x);
Int eval_z(const ZPoly& p, const Int& x);

// Quotient and remainder over Q; divisor must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

// Monic gcd over Q (1 for coprime, 0 only if both inputs are 0).
QPoly gcd(QPoly a, QPoly b);

// Extended gcd: returns (g, s, t) monic with s*a + t*b = g.
struct XgcdResult {
    QPoly g, s, t;
};
XgcdResult xgcd(const QPoly& a, const QPoly& b);

// Exact rational interval, used for certified polynomial evaluation during
// root refinement (no rounding anywhere).
struct QInterval {
    Rat lo, hi;
};
QInterval eval_on_interval(const QPoly& p, const QInterval& x);

// --- Sturm machinery ------------------------------------------------------

std::vector<QPoly> sturm_sequence(const QPoly& p);
// Number of distinct real roots in (a, b]; requires p(a) != 0 and p(b) != 0
// for the usual open/closed reading to coincide.
int count_roots(const std::vector<QPoly>& chain, const Rat& a, const Rat& b);
int count_real_roots(const QPoly& p);

// Cauchy bound: all real roots lie in [-B, B].
Rat root_bound(const QPoly& p);

// Isolating intervals for all real roots, sorted ascending. Each interval
// (lo, hi) satisfies p(lo) != 0, p(hi) != 0 and contains exactly one root.
std::vector<QInterval> isolate_real_roots(const QPoly& p);

// Halve the width of an isolating interval around a simple root, preserving
// the sign change at the endpoints.
QInterval bisect_once(const QPoly& p, const QInterval& iv);

// --- Resultants and factorization ------------------------------------------

// Exact resultant via Bareiss elimination on the Sylvester matrix.
Int resultant(const ZPoly& f, const ZPoly& g);
Int discriminant(const ZPoly& f);

// Irreducibility over Q for primitive integer polynomials with |lc| = 1 and
// degree <= 12 (Zassenhaus: factor mod p, Hensel lift, subset recombination).
bool irreducible_over_q(const ZPoly& f);

}  // namespace latexp::poly
