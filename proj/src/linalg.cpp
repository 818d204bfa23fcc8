#include "latexp/linalg.hpp"

#include <algorithm>

#include "latexp/errors.hpp"

namespace latexp {

int rref(QMatrix& m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

int rank_of(QMatrix m) { return rref(m); }

QMatrix kernel_basis(const QMatrix& m_in) {
    if (m_in.empty()) return {};
    QMatrix m = m_in;
    size_t cols = m[0].size();
    int rank = rref(m);
    // pivot column of each of the first `rank` rows
    std::vector<size_t> pivot_col(rank);
    std::vector<bool> is_pivot(cols, false);
    for (int i = 0; i < rank; ++i) {
        size_t c = 0;
        while (c < cols && m[i][c] == 0) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    QMatrix kernel;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_c] = 1;
        for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -m[i][free_c];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

QMatrix matrix_inverse(const QMatrix& m) {
    size_t n = m.size();
    if (n == 0 || m[0].size() != n) throw internal_error("matrix_inverse: not square");
    QMatrix aug(n, std::vector<Rat>(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    rref(aug);
    // singular iff the left block fails to reduce to the identity
    for (size_t i = 0; i < n; ++i)
        if (aug[i][i] != 1) throw input_error("matrix is singular");
    QMatrix inv(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

Rat det_gauss(QMatrix m) {
    size_t n = m.size();
    if (n == 0) return Rat(1);
    Rat det(1);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        Rat inv = 1 / m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] * inv;
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

int rank_bareiss(const std::vector<ZVector>& m_in) {
    if (m_in.empty()) return 0;
    auto m = m_in;
    size_t rows = m.size(), cols = m[0].size();
    Int prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                Int t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

Int det_bareiss(std::vector<ZVector> m) {
    size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

ZVector to_primitive_integer(const std::vector<Rat>& v) {
    Int den_lcm = 1;
    for (const auto& x : v) {
        Int d;
        mpz_lcm(d.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
        den_lcm = d;
    }
    ZVector z(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        Rat t = v[i] * den_lcm;
        z[i] = t.get_num();
        Int gg;
        mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
        g = gg;
    }
    if (g != 0)
        for (auto& x : z) x /= g;
    for (const auto& x : z) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : z) y = -y;
        break;
    }
    return z;
}

std::vector<ZVector> integer_kernel_of_row(const ZVector& m) {
    size_t d = m.size();
    // Column operations bringing m to (g, 0, ..., 0); U tracks them, so
    // m * U = (g, 0, ..., 0) and columns 1..d-1 of U span the integer kernel.
    std::vector<ZVector> u(d, ZVector(d, Int(0)));
    for (size_t i = 0; i < d; ++i) u[i][i] = 1;
    ZVector w = m;
    size_t lead = 0;
    while (lead < d && w[lead] == 0) ++lead;
    if (lead == d) {
        // zero row: the kernel is everything
        std::vector<ZVector> basis;
        for (size_t i = 0; i < d; ++i) {
            ZVector e(d, Int(0));
            e[i] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    if (lead != 0) {
        for (size_t i = 0; i < d; ++i) std::swap(u[i][0], u[i][lead]);
        std::swap(w[0], w[lead]);
    }
    for (size_t j = 1; j < d; ++j) {
        if (w[j] == 0) continue;
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), w[0].get_mpz_t(),
                   w[j].get_mpz_t());
        Int a = w[0] / g, b = w[j] / g;
        for (size_t i = 0; i < d; ++i) {
            Int c0 = u[i][0], cj = u[i][j];
            u[i][0] = s * c0 + t * cj;
            u[i][j] = -b * c0 + a * cj;
        }
        w[0] = g;
        w[j] = 0;
    }
    std::vector<ZVector> basis;
    for (size_t j = 1; j < d; ++j) {
        ZVector col(d);
        for (size_t i = 0; i < d; ++i) col[i] = u[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

RationalSubspace make_subspace(int ambient_dim, QMatrix spanning_rows) {
    RationalSubspace s;
    s.ambient_dim = ambient_dim;
    if (spanning_rows.empty()) return s;
    int r = rref(spanning_rows);
    spanning_rows.resize(r);
    s.basis = std::move(spanning_rows);
    return s;
}

IndependenceReport q_linear_independence(const std::vector<FieldElement>& elems) {
    if (elems.empty()) throw input_error("q_linear_independence: empty list");
    const auto& f = elems[0].field();
    for (const auto& e : elems)
        if (!f->same_field(*e.field())) throw input_error("q_linear_independence: field mismatch");
    size_t n = elems.size(), deg = static_cast<size_t>(f->degree());
    // relation r satisfies r^T M = 0 for the n x deg coordinate matrix M,
    // i.e. r lies in the kernel of M^T.
    QMatrix mt(deg, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t c = 0; c < deg; ++c) mt[c][i] = elems[i].coords()[c];
    QMatrix ker = kernel_basis(mt);
    IndependenceReport rep;
    if (ker.empty()) {
        rep.independent = true;
        return rep;
    }
    rep.independent = false;
    rep.relation = to_primitive_integer(ker[0]);
    return rep;
}

RationalSubspace rational_kernel(const std::vector<FieldElement>& form) {
    if (form.empty()) throw input_error("rational_kernel: empty form");
    bool all_zero = true;
    for (const auto& e : form)
        if (!e.is_zero()) all_zero = false;
    if (all_zero) throw input_error("rational_kernel: zero form");
    const auto& f = form[0].field();
    size_t d = form.size(), deg = static_cast<size_t>(f->degree());
    QMatrix m(deg, std::vector<Rat>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t c = 0; c < deg; ++c) m[c][i] = form[i].coords()[c];
    return make_subspace(static_cast<int>(d), kernel_basis(m));
}

RationalSubspace minimal_rational_subspace(const std::vector<std::vector<FieldElement>>& vectors) {
    if (vectors.empty()) throw input_error("minimal_rational_subspace: empty input");
    size_t d = vectors[0].size();
    QMatrix rows;
    for (const auto& v : vectors) {
        if (v.empty() || v.size() != d)
            throw input_error("minimal_rational_subspace: inconsistent dimensions");
        bool zero = true;
        for (const auto& e : v)
            if (!e.is_zero()) zero = false;
        if (zero) throw input_error("minimal_rational_subspace: zero vector");
        size_t deg = static_cast<size_t>(v[0].field()->degree());
        for (size_t c = 0; c < deg; ++c) {
            std::vector<Rat> slice(d);
            bool nonzero = false;
            for (size_t i = 0; i < d; ++i) {
                slice[i] = v[i].coords()[c];
                if (slice[i] != 0) nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(slice));
        }
    }
    return make_subspace(static_cast<int>(d), std::move(rows));
}

}  // namespace latexp
