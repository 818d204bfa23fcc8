#include "latexp/forms.hpp"

#include <algorithm>

#include "latexp/errors.hpp"

namespace latexp {

FieldElement fdet(FMatrix m) {
    size_t n = m.size();
    if (n == 0) throw internal_error("fdet of empty matrix");
    const FieldPtr& f = m[0][0].field();
    FieldElement det = FieldElement::one(f);
    bool neg = false;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return FieldElement::zero(f);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            neg = !neg;
        }
        det = det * m[k][k];
        FieldElement inv = m[k][k].inverse();
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            FieldElement fac = m[i][k] * inv;
            for (size_t j = k; j < n; ++j) m[i][j] = m[i][j] - fac * m[k][j];
        }
    }
    return neg ? -det : det;
}

FMatrix finverse(const FMatrix& m) {
    size_t n = m.size();
    if (n == 0) throw internal_error("finverse of empty matrix");
    const FieldPtr& f = m[0][0].field();
    FMatrix aug(n, FRow(2 * n, FieldElement::zero(f)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = FieldElement::one(f);
    }
    size_t r = 0;
    for (size_t c = 0; c < n && r < n; ++c) {
        size_t piv = r;
        while (piv < n && aug[piv][c].is_zero()) ++piv;
        if (piv == n) throw input_error("forms matrix is singular");
        std::swap(aug[piv], aug[r]);
        FieldElement inv = aug[r][c].inverse();
        for (size_t j = c; j < 2 * n; ++j) aug[r][j] = aug[r][j] * inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == r || aug[i][c].is_zero()) continue;
            FieldElement fac = aug[i][c];
            for (size_t j = c; j < 2 * n; ++j) aug[i][j] = aug[i][j] - fac * aug[r][j];
        }
        ++r;
    }
    if (r < n) throw input_error("forms matrix is singular");
    FMatrix inv(n, FRow(n, FieldElement::zero(f)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

FMatrix ftranspose(const FMatrix& m) {
    if (m.empty()) return {};
    size_t rows = m.size(), cols = m[0].size();
    FMatrix t(cols, FRow(rows, m[0][0]));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

FMatrix fkernel(const FMatrix& m_in) {
    if (m_in.empty()) return {};
    FMatrix m = m_in;
    const FieldPtr& f = m[0][0].field();
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    std::vector<size_t> pivot_col;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        FieldElement inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            FieldElement fac = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - fac * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    FMatrix kernel;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        FRow v(cols, FieldElement::zero(f));
        v[free_c] = FieldElement::one(f);
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free_c];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::vector<std::vector<int>> lex_subsets(int d, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > d) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == d - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    if (k == 0) out = {std::vector<int>{}};
    return out;
}

FieldForms::FieldForms(FieldPtr field, FMatrix rows)
    : field_(std::move(field)), rows_(std::move(rows)) {
    d_ = static_cast<int>(rows_.size());
    if (d_ == 0) throw input_error("forms matrix is empty");
    for (const auto& r : rows_) {
        if (static_cast<int>(r.size()) != d_) throw input_error("forms matrix must be square");
        for (const auto& e : r)
            if (!field_->same_field(*e.field()))
                throw input_error("forms entries must share one field");
    }
    det_ = fdet(rows_);
    if (det_.is_zero()) throw input_error("linear forms are not linearly independent");
}

FieldForms FieldForms::dual_forms() const { return FieldForms(field_, ftranspose(finverse(rows_))); }

GrassmannCoords FieldForms::wedge(const std::vector<int>& row_tuple) const {
    int k = static_cast<int>(row_tuple.size());
    if (k < 1 || k > d_) throw input_error("wedge: tuple size out of range");
    for (int i = 0; i < k; ++i) {
        if (row_tuple[i] < 1 || row_tuple[i] > d_) throw input_error("wedge: row index out of range");
        if (i > 0 && row_tuple[i] <= row_tuple[i - 1])
            throw input_error("wedge: row indices must be strictly increasing");
    }
    GrassmannCoords g;
    g.k = k;
    g.row_indices = row_tuple;
    g.col_subsets = lex_subsets(d_, k);
    for (const auto& cols : g.col_subsets) {
        FMatrix minor(k, FRow(k, FieldElement::zero(field_)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor[i][j] = rows_[row_tuple[i] - 1][cols[j] - 1];
        g.coords.push_back(fdet(std::move(minor)));
    }
    return g;
}

bool FieldForms::operator==(const FieldForms& o) const {
    if (d_ != o.d_ || !field_->same_field(*o.field_)) return false;
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j)
            if (rows_[i][j] != o.rows_[i][j]) return false;
    return true;
}

DualWedgeResult complementary_dual_wedge(const FieldForms& forms,
                                         const std::vector<int>& row_tuple) {
    int d = forms.dim();
    DualWedgeResult out;
    out.primal = forms.wedge(row_tuple);
    out.det = forms.det();
    FieldForms duals = forms.dual_forms();

    std::vector<int> complement;
    {
        std::vector<bool> used(d + 1, false);
        for (int r : row_tuple) used[r] = true;
        for (int i = 1; i <= d; ++i)
            if (!used[i]) complement.push_back(i);
    }
    long sum_r = 0;
    for (int r : row_tuple) sum_r += r;

    if (complement.empty()) {
        // k = d: the complementary wedge is the empty wedge, the scalar 1, and
        // the identity reduces to det * det(inverse) = 1.
        out.dual_wedge.k = 0;
        out.dual_wedge.col_subsets = {std::vector<int>{}};
        out.dual_wedge.coords = {FieldElement::one(forms.field())};
        out.signs = {1};
        FieldElement lhs = out.dual_wedge.coords[0] * out.det;
        out.verified = (lhs == out.primal.coords[0]);
        return out;
    }

    out.dual_wedge = duals.wedge(complement);
    // Jacobi: dual_wedge[S^c] = (-1)^{sum(R) + sum(S)} * primal[S] / det.
    size_t n_subsets = out.primal.col_subsets.size();
    out.signs.resize(n_subsets);
    bool ok = true;
    for (size_t t = 0; t < n_subsets; ++t) {
        const auto& s = out.primal.col_subsets[t];
        long sum_s = 0;
        std::vector<bool> used(d + 1, false);
        for (int c : s) {
            sum_s += c;
            used[c] = true;
        }
        std::vector<int> s_comp;
        for (int i = 1; i <= d; ++i)
            if (!used[i]) s_comp.push_back(i);
        // locate S^c among the lex subsets of the dual wedge
        size_t idx = 0;
        const auto& dual_subsets = out.dual_wedge.col_subsets;
        while (idx < dual_subsets.size() && dual_subsets[idx] != s_comp) ++idx;
        if (idx == dual_subsets.size()) throw internal_error("complement subset not found");
        int sign = ((sum_r + sum_s) % 2 == 0) ? 1 : -1;
        out.signs[t] = sign;
        FieldElement lhs = out.dual_wedge.coords[idx] * out.det;
        FieldElement rhs = sign > 0 ? out.primal.coords[t] : -out.primal.coords[t];
        if (!(lhs == rhs)) ok = false;
    }
    out.verified = ok;
    return out;
}

// --- NormForms ----------------------------------------------------------------

namespace {

// Power sums of the roots of the minimal polynomial via traces of companion
// matrix powers.
QMatrix power_sum_matrix(const FieldPtr& f) {
    int n = f->degree();
    const auto& mp = f->minpoly();
    // companion matrix C: C[i][j] multiplication by alpha in power basis
    QMatrix c(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 1; i < n; ++i) c[i][i - 1] = 1;
    for (int i = 0; i < n; ++i) c[i][n - 1] = -Rat(mp[i]);
    std::vector<Rat> p(2 * n - 1);
    QMatrix pw(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) pw[i][i] = 1;  // identity
    for (int m = 0; m < 2 * n - 1; ++m) {
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += pw[i][i];
        p[m] = tr;
        if (m + 1 < 2 * n - 1) {
            QMatrix next(n, std::vector<Rat>(n, Rat(0)));
            for (int i = 0; i < n; ++i)
                for (int kk = 0; kk < n; ++kk) {
                    if (pw[i][kk] == 0) continue;
                    for (int j = 0; j < n; ++j) next[i][j] += pw[i][kk] * c[kk][j];
                }
            pw = std::move(next);
        }
    }
    QMatrix s(n, std::vector<Rat>(n));
    for (int j = 0; j < n; ++j)
        for (int kk = 0; kk < n; ++kk) s[j][kk] = p[j + kk];
    return s;
}

QMatrix qmul(const QMatrix& a, const QMatrix& b) {
    size_t n = a.size(), m = b[0].size(), kk = b.size();
    QMatrix r(n, std::vector<Rat>(m, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < kk; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

QMatrix qtranspose(const QMatrix& a) {
    size_t n = a.size(), m = a[0].size();
    QMatrix t(m, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
    return t;
}

}  // namespace

NormForms::NormForms(FieldPtr field, QMatrix coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    d_ = field_->degree();
    if (d_ < 2) throw input_error("norm forms require field degree >= 2");
    if (!field_->is_totally_real()) throw input_error("norm forms require a totally real field");
    if (static_cast<int>(coeffs_.size()) != d_)
        throw input_error("norm forms coefficient matrix must be degree x degree");
    for (const auto& r : coeffs_)
        if (static_cast<int>(r.size()) != d_)
            throw input_error("norm forms coefficient matrix must be square");
    det_r_ = det_gauss(coeffs_);
    if (det_r_ == 0) throw input_error("norm forms are not linearly independent");
    disc_ = poly::discriminant(field_->minpoly());
    if (disc_ <= 0) throw internal_error("totally real discriminant must be positive");
    trace_ = power_sum_matrix(field_);
    inv_rows_ = qmul(matrix_inverse(coeffs_), matrix_inverse(trace_));
}

Interval NormForms::det_interval(long prec) const {
    Interval sq = Interval::exact(Rat(disc_), prec).root(2);
    return sq * Interval::exact(det_r_, prec);
}

NormForms NormForms::dual_forms() const {
    // (V R)^{-T} = V S^{-1} R^{-T}
    QMatrix r2 = qmul(matrix_inverse(trace_), qtranspose(matrix_inverse(coeffs_)));
    return NormForms(field_, std::move(r2));
}

poly::QPoly NormForms::point_poly(const std::vector<long long>& z) const {
    poly::QPoly g(d_, Rat(0));
    for (int k = 0; k < d_; ++k) {
        Rat acc(0);
        for (int j = 0; j < d_; ++j) {
            if (z[j] == 0) continue;
            acc += coeffs_[k][j] * Rat(static_cast<long>(z[j]));
        }
        g[k] = acc;
    }
    poly::normalize(g);
    return g;
}

Rat NormForms::point_norm(const std::vector<long long>& z) const {
    poly::QPoly g = point_poly(z);
    if (g.empty()) return Rat(0);
    std::vector<Rat> coords(d_, Rat(0));
    for (size_t i = 0; i < g.size(); ++i) coords[i] = g[i];
    return FieldElement(field_, coords).norm();
}

bool NormForms::operator==(const NormForms& o) const {
    return d_ == o.d_ && field_->same_field(*o.field_) && coeffs_ == o.coeffs_;
}

}  // namespace latexp
