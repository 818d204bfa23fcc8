#include "latexp/reduce.hpp"

#include <algorithm>
#include <cstdlib>

namespace latexp {

namespace {
using ZCol = std::vector<Int>;
}  // namespace

std::vector<std::vector<long long>> lll_transform(const std::vector<std::vector<Rat>>& cols) {
    size_t n = cols.size();
    std::vector<std::vector<long long>> identity(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i) identity[i][i] = 1;
    if (n < 2) return identity;

    // scale to integers (the approximation quality is irrelevant)
    std::vector<ZCol> b(n, ZCol(n, Int(0)));
    Int scale = Int(1) << 30;
    for (size_t j = 0; j < n; ++j) {
        if (cols[j].size() != n) return identity;
        for (size_t i = 0; i < n; ++i) {
            Rat v = cols[j][i] * Rat(scale);
            b[j][i] = rat_floor(v);
        }
    }
    std::vector<ZCol> u(n, ZCol(n, Int(0)));
    for (size_t i = 0; i < n; ++i) u[i][i] = 1;  // columns of U track column ops on b

    // rational Gram-Schmidt data
    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> bstar_norm(n, Rat(0));
    std::vector<std::vector<Rat>> bstar(n, std::vector<Rat>(n, Rat(0)));

    auto recompute_gs = [&]() -> bool {
        for (size_t i = 0; i < n; ++i) {
            for (size_t t = 0; t < n; ++t) bstar[i][t] = Rat(b[i][t]);
            for (size_t j = 0; j < i; ++j) {
                if (bstar_norm[j] == 0) return false;
                Rat num(0);
                for (size_t t = 0; t < n; ++t) num += Rat(b[i][t]) * bstar[j][t];
                mu[i][j] = num / bstar_norm[j];
                for (size_t t = 0; t < n; ++t) bstar[i][t] -= mu[i][j] * bstar[j][t];
            }
            Rat nn(0);
            for (size_t t = 0; t < n; ++t) nn += bstar[i][t] * bstar[i][t];
            bstar_norm[i] = nn;
            if (nn == 0) return false;
        }
        return true;
    };
    if (!recompute_gs()) return identity;

    const Rat delta(3, 4);
    size_t k = 1;
    int iterations = 0;
    while (k < n) {
        if (++iterations > 5000) break;
        // size-reduce column k
        for (size_t j = k; j-- > 0;) {
            Rat m = mu[k][j];
            Rat half(1, 2);
            if (rat_abs(m) > half) {
                Rat rounded = Rat(rat_floor(m + half));
                Int q = rounded.get_num();
                for (size_t t = 0; t < n; ++t) {
                    b[k][t] -= q * b[j][t];
                    u[k][t] -= q * u[j][t];
                }
                if (!recompute_gs()) return identity;
            }
        }
        Rat lhs = bstar_norm[k];
        Rat rhs = (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar_norm[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            std::swap(u[k], u[k - 1]);
            if (!recompute_gs()) return identity;
            k = std::max<size_t>(1, k - 1);
        }
    }

    // convert U columns (stored as rows of `u` per column index) into the
    // row-major transform with z = U w; check the entries fit comfortably
    std::vector<std::vector<long long>> out(n, std::vector<long long>(n, 0));
    const Int cap = Int(1) << 40;
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) {
            if (abs(u[j][i]) > cap) return identity;
            out[i][j] = static_cast<long long>(u[j][i].get_si());
        }
    return out;
}

}  // namespace latexp
