#include "latexp/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "latexp/errors.hpp"

namespace latexp::poly {

void normalize(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void normalize_z(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }
int degree_z(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly to_qpoly(const ZPoly& p) {
    QPoly q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[i] = Rat(p[i]);
    return q;
}

ZPoly primitive_part(const QPoly& p) {
    QPoly q = p;
    normalize(q);
    if (q.empty()) return {};
    Int den_lcm = 1;
    for (const auto& c : q) {
        Int d;
        mpz_lcm(d.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        den_lcm = d;
    }
    ZPoly z(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        Rat t = q[i] * den_lcm;
        z[i] = t.get_num();
    }
    Int content = 0;
    for (const auto& c : z) {
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        content = g;
    }
    if (content != 0)
        for (auto& c : z) c /= content;
    if (z.back() < 0)
        for (auto& c : z) c = -c;
    return z;
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    normalize(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    normalize(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    normalize(r);
    return r;
}

QPoly scale(const QPoly& a, const Rat& c) {
    if (c == 0) return {};
    QPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

QPoly derivative(const QPoly& p) {
    if (p.size() <= 1) return {};
    QPoly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<long>(i);
    normalize(r);
    return r;
}

Rat eval(const QPoly& p, const Rat& x) {
    Rat acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

Int eval_z(const ZPoly& p, const Int& x) {
    Int acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw internal_error("polynomial division by zero");
    QPoly r = a, q;
    normalize(r);
    int db = degree(b);
    if (degree(r) >= db) q.assign(r.size() - b.size() + 1, Rat(0));
    while (degree(r) >= db) {
        int dr = degree(r);
        Rat c = r.back() / b.back();
        q[dr - db] = c;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= c * b[i];
        normalize(r);
    }
    normalize(q);
    return {q, r};
}

QPoly gcd(QPoly a, QPoly b) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

XgcdResult xgcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    normalize(r0);
    normalize(r1);
    QPoly s0 = {Rat(1)}, s1 = {};
    QPoly t0 = {}, t1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2 = sub(s0, mul(q, s1));
        QPoly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.empty()) {
        Rat lc = r0.back();
        for (auto& c : r0) c /= lc;
        for (auto& c : s0) c /= lc;
        for (auto& c : t0) c /= lc;
    }
    return {r0, s0, t0};
}

QInterval eval_on_interval(const QPoly& p, const QInterval& x) {
    QInterval acc{Rat(0), Rat(0)};
    for (size_t i = p.size(); i-- > 0;) {
        Rat p1 = acc.lo * x.lo, p2 = acc.lo * x.hi, p3 = acc.hi * x.lo, p4 = acc.hi * x.hi;
        Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
        Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
        acc.lo = lo + p[i];
        acc.hi = hi + p[i];
    }
    return acc;
}

// --- Sturm -----------------------------------------------------------------

std::vector<QPoly> sturm_sequence(const QPoly& p) {
    std::vector<QPoly> chain;
    QPoly a = p;
    normalize(a);
    if (a.empty()) return chain;
    chain.push_back(a);
    QPoly b = derivative(a);
    while (!b.empty()) {
        chain.push_back(b);
        auto [q, r] = divmod(chain[chain.size() - 2], b);
        for (auto& c : r) c = -c;
        normalize(r);
        b = std::move(r);
    }
    return chain;
}

namespace {

int sign_variations_at(const std::vector<QPoly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        Rat v = eval(p, x);
        int s = sgn(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int sign_variations_at_infinity(const std::vector<QPoly>& chain, bool plus) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.empty()) continue;
        int s = sgn(p.back());
        if (!plus && (degree(p) % 2 == 1)) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

int count_roots(const std::vector<QPoly>& chain, const Rat& a, const Rat& b) {
    if (!(a < b)) throw internal_error("count_roots: empty interval");
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

int count_real_roots(const QPoly& p) {
    auto chain = sturm_sequence(p);
    if (chain.empty()) return 0;
    return sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
}

Rat root_bound(const QPoly& p) {
    QPoly q = p;
    normalize(q);
    if (q.size() <= 1) return Rat(1);
    Rat m(0);
    for (size_t i = 0; i + 1 < q.size(); ++i) {
        Rat a = rat_abs(q[i] / q.back());
        if (a > m) m = a;
    }
    return m + 1;
}

std::vector<QInterval> isolate_real_roots(const QPoly& p) {
    QPoly f = p;
    normalize(f);
    if (degree(f) < 1) return {};
    QPoly g = gcd(f, derivative(f));
    if (degree(g) >= 1) f = divmod(f, g).first;
    auto chain = sturm_sequence(f);
    Rat b = root_bound(f);
    Rat lo = -b - 1, hi = b + 1;
    std::vector<QInterval> out;
    struct Seg {
        Rat lo, hi;
        int n;
    };
    std::vector<Seg> stack{{lo, hi, count_roots(chain, lo, hi)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        while (eval(f, mid) == 0) mid = (s.lo + mid) / 2;
        int left = count_roots(chain, s.lo, mid);
        stack.push_back({mid, s.hi, s.n - left});
        stack.push_back({s.lo, mid, left});
    }
    std::sort(out.begin(), out.end(),
              [](const QInterval& a, const QInterval& b2) { return a.lo < b2.lo; });
    // make the intervals pairwise disjoint (bisection may leave shared endpoints)
    for (size_t i = 0; i + 1 < out.size(); ++i)
        while (!(out[i].hi < out[i + 1].lo)) {
            out[i] = bisect_once(f, out[i]);
            out[i + 1] = bisect_once(f, out[i + 1]);
        }
    return out;
}

QInterval bisect_once(const QPoly& p, const QInterval& iv) {
    Rat mid = (iv.lo + iv.hi) / 2;
    Rat fm = eval(p, mid);
    if (fm == 0) {
        Rat w = (iv.hi - iv.lo) / 4;
        return {mid - w, mid + w};
    }
    Rat fl = eval(p, iv.lo);
    if (sgn(fl) * sgn(fm) < 0) return {iv.lo, mid};
    return {mid, iv.hi};
}

// --- Resultant via Sylvester + Bareiss ---------------------------------------

namespace {

Int bareiss_det(std::vector<std::vector<Int>> m) {
    size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
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

}  // namespace

Int resultant(const ZPoly& f, const ZPoly& g) {
    ZPoly a = f, b = g;
    normalize_z(a);
    normalize_z(b);
    int da = degree_z(a), db = degree_z(b);
    if (da < 0 || db < 0) return 0;
    if (da == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), a[0].get_mpz_t(), db);
        return r;
    }
    if (db == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), b[0].get_mpz_t(), da);
        return r;
    }
    size_t n = static_cast<size_t>(da + db);
    std::vector<std::vector<Int>> s(n, std::vector<Int>(n, Int(0)));
    for (int row = 0; row < db; ++row)
        for (int i = 0; i <= da; ++i) s[row][row + i] = a[da - i];
    for (int row = 0; row < da; ++row)
        for (int i = 0; i <= db; ++i) s[db + row][row + i] = b[db - i];
    return bareiss_det(std::move(s));
}

Int discriminant(const ZPoly& f) {
    ZPoly fz = f;
    normalize_z(fz);
    int n = degree_z(fz);
    if (n < 1) throw input_error("discriminant of a constant");
    ZPoly df(fz.size() - 1);
    for (size_t i = 1; i < fz.size(); ++i) df[i - 1] = static_cast<long>(i) * fz[i];
    normalize_z(df);
    Int res = resultant(fz, df);
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) res = -res;
    Int out;
    mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), fz.back().get_mpz_t());
    return out;
}

// --- Irreducibility over Q (Zassenhaus) --------------------------------------

namespace {

long mod_pow_l(long base, long exp, long p) {
    long r = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (exp) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

long mod_inv_l(long a, long p) { return mod_pow_l(a, p - 2, p); }

using PPoly = std::vector<long>;  // coefficients in [0, p)

void pnorm(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    pnorm(r);
    return r;
}

std::pair<PPoly, PPoly> pdivmod(PPoly a, const PPoly& b, long p) {
    pnorm(a);
    if (b.empty()) throw internal_error("pdivmod by zero");
    long inv = mod_inv_l(b.back(), p);
    PPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size() && !a.empty()) {
        long c = a.back() * inv % p;
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            a[off + i] = (a[off + i] - c * b[i]) % p;
            if (a[off + i] < 0) a[off + i] += p;
        }
        pnorm(a);
    }
    pnorm(q);
    return {q, a};
}

PPoly pgcd(PPoly a, PPoly b, long p) {
    pnorm(a);
    pnorm(b);
    while (!b.empty()) {
        PPoly r = pdivmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv = mod_inv_l(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

PPoly psub(const PPoly& a, const PPoly& b, long p) {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % p + p) % p;
    pnorm(r);
    return r;
}

PPoly ppow_mod(PPoly base, Int exp, const PPoly& m, long p) {
    PPoly r{1};
    base = pdivmod(std::move(base), m, p).second;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) r = pdivmod(pmul(r, base, p), m, p).second;
        base = pdivmod(pmul(base, base, p), m, p).second;
        exp >>= 1;
    }
    return r;
}

// Distinct-degree factorization followed by a deterministic equal-degree
// split. Only squarefree monic inputs arrive here; p and degrees are tiny.
void factor_mod_p(PPoly g, long p, std::vector<PPoly>& out) {
    pnorm(g);
    if (g.size() <= 1) return;
    int n = static_cast<int>(g.size()) - 1;
    for (int d = 1; g.size() > 1 && d <= n; ++d) {
        if (2 * d > static_cast<int>(g.size()) - 1) break;
        Int q;
        mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
        PPoly xq = ppow_mod(PPoly{0, 1}, q, g, p);
        PPoly diff = psub(xq, PPoly{0, 1}, p);
        PPoly h = pgcd(g, diff, p);
        if (h.size() <= 1) continue;
        // h is the product of all irreducible factors of degree exactly d
        std::vector<PPoly> stack{h};
        while (!stack.empty()) {
            PPoly cur = stack.back();
            stack.pop_back();
            if (static_cast<int>(cur.size()) - 1 == d) {
                long inv = mod_inv_l(cur.back(), p);
                for (auto& c : cur) c = c * inv % p;
                out.push_back(cur);
                continue;
            }
            Int e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p),
                          static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            bool split = false;
            for (long a = 0; a < p && !split; ++a) {
                PPoly t = ppow_mod(PPoly{a, 1}, e, cur, p);
                t = psub(t, PPoly{1}, p);
                PPoly w = pgcd(cur, t, p);
                if (w.size() > 1 && w.size() < cur.size()) {
                    stack.push_back(w);
                    stack.push_back(pdivmod(cur, w, p).first);
                    split = true;
                }
            }
            if (!split) throw internal_error("equal-degree splitting failed");
        }
        g = pdivmod(g, h, p).first;
    }
    if (g.size() > 1) {
        long inv = mod_inv_l(g.back(), p);
        for (auto& c : g) c = c * inv % p;
        out.push_back(g);
    }
}

// Polynomials with coefficients reduced into the symmetric range mod m.
using MPoly = std::vector<Int>;

Int symmetric_mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r * 2 > m) r -= m;
    return r;
}

void mnorm(MPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

MPoly madd(const MPoly& a, const MPoly& b, const Int& m) {
    MPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = symmetric_mod(r[i] + b[i], m);
    mnorm(r);
    return r;
}

MPoly msub(const MPoly& a, const MPoly& b, const Int& m) {
    MPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = symmetric_mod(r[i] - b[i], m);
    mnorm(r);
    return r;
}

MPoly mmul(const MPoly& a, const MPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = symmetric_mod(r[i + j] + a[i] * b[j], m);
    mnorm(r);
    return r;
}

// Division by a monic divisor, coefficients mod m.
std::pair<MPoly, MPoly> mdivmod_monic(MPoly a, const MPoly& b, const Int& m) {
    mnorm(a);
    MPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Int(0));
    while (a.size() >= b.size() && !a.empty()) {
        Int c = a.back();
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] = symmetric_mod(a[off + i] - c * b[i], m);
        mnorm(a);
    }
    mnorm(q);
    return {q, a};
}

struct HenselPair {
    MPoly g, h, s, t;  // f = g*h, s*g + t*h = 1, g and h monic
};

// One quadratic lifting step: everything valid mod m on input, mod m^2 on output.
HenselPair hensel_step(const MPoly& f, const HenselPair& in, const Int& m2) {
    const MPoly& g = in.g;
    const MPoly& h = in.h;
    const MPoly& s = in.s;
    const MPoly& t = in.t;
    MPoly e = msub(f, mmul(g, h, m2), m2);
    auto [q, r] = mdivmod_monic(mmul(s, e, m2), h, m2);
    MPoly g1 = madd(g, madd(mmul(t, e, m2), mmul(q, g, m2), m2), m2);
    MPoly h1 = madd(h, r, m2);
    MPoly b = msub(madd(mmul(s, g1, m2), mmul(t, h1, m2), m2), MPoly{Int(1)}, m2);
    auto [c, dd] = mdivmod_monic(mmul(s, b, m2), h1, m2);
    MPoly s1 = msub(s, dd, m2);
    MPoly t1 = msub(t, madd(mmul(t, b, m2), mmul(c, g1, m2), m2), m2);
    return {g1, h1, s1, t1};
}

std::vector<MPoly> lift_factors(const ZPoly& f, const std::vector<PPoly>& factors, long p,
                                const Int& m_target) {
    if (factors.size() == 1) {
        MPoly g(f.size());
        for (size_t i = 0; i < f.size(); ++i) g[i] = symmetric_mod(f[i], m_target);
        mnorm(g);
        return {g};
    }
    size_t half = factors.size() / 2;
    std::vector<PPoly> left(factors.begin(), factors.begin() + half);
    std::vector<PPoly> right(factors.begin() + half, factors.end());
    PPoly gl{1}, gr{1};
    for (const auto& q : left) gl = pmul(gl, q, p);
    for (const auto& q : right) gr = pmul(gr, q, p);
    // Bezout pair mod p
    PPoly r0 = gl, r1 = gr, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, rem] = pdivmod(r0, r1, p);
        PPoly s2 = psub(s0, pmul(q, s1, p), p);
        PPoly t2 = psub(t0, pmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw internal_error("hensel: halves not coprime mod p");
    long inv = mod_inv_l(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;

    Int m(p);
    auto to_mp = [&](const PPoly& q) {
        MPoly r(q.size());
        for (size_t i = 0; i < q.size(); ++i) r[i] = symmetric_mod(Int(q[i]), m);
        mnorm(r);
        return r;
    };
    HenselPair pair{to_mp(gl), to_mp(gr), to_mp(s0), to_mp(t0)};
    while (m < m_target) {
        Int m2 = m * m;
        MPoly fm(f.size());
        for (size_t i = 0; i < f.size(); ++i) fm[i] = symmetric_mod(f[i], m2);
        mnorm(fm);
        pair = hensel_step(fm, pair, m2);
        m = m2;
    }
    auto reduce_to = [&](MPoly v) {
        for (auto& c : v) c = symmetric_mod(c, m_target);
        mnorm(v);
        return v;
    };
    MPoly glift = reduce_to(pair.g), hlift = reduce_to(pair.h);
    ZPoly gz(glift.size()), hz(hlift.size());
    for (size_t i = 0; i < glift.size(); ++i) gz[i] = glift[i];
    for (size_t i = 0; i < hlift.size(); ++i) hz[i] = hlift[i];
    auto lhs = lift_factors(gz, left, p, m_target);
    auto rhs = lift_factors(hz, right, p, m_target);
    lhs.insert(lhs.end(), rhs.begin(), rhs.end());
    return lhs;
}

}  // namespace

bool irreducible_over_q(const ZPoly& f_in) {
    ZPoly f = f_in;
    normalize_z(f);
    int n = degree_z(f);
    if (n < 1) throw input_error("irreducibility test requires degree >= 1");
    if (n > 12) throw input_error("irreducibility test capped at degree 12");
    if (n == 1) return true;
    Int lc = f.back();
    if (lc != 1 && lc != -1) throw input_error("minimal polynomial must be monic");
    if (lc < 0)
        for (auto& c : f) c = -c;
    if (f[0] == 0) return false;  // divisible by x
    QPoly fq = to_qpoly(f);
    if (degree(gcd(fq, derivative(fq))) >= 1) return false;  // not squarefree
    {
        // rational root test: any integer root divides the constant term
        Int c0 = f[0] < 0 ? Int(-f[0]) : f[0];
        for (Int d = 1; d * d <= c0; ++d) {
            if (c0 % d != 0) continue;
            Int cands[4] = {d, -d, c0 / d, -(c0 / d)};
            for (const Int& r : cands)
                if (eval_z(f, r) == 0) return false;
        }
    }
    static const long primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                  37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
    long best_p = 0;
    std::vector<PPoly> best_factors;
    int usable = 0;
    for (long p : primes) {
        PPoly fp(f.size());
        for (size_t i = 0; i < f.size(); ++i) {
            Int r;
            mpz_mod_ui(r.get_mpz_t(), f[i].get_mpz_t(), static_cast<unsigned long>(p));
            fp[i] = r.get_si();
        }
        pnorm(fp);
        if (static_cast<int>(fp.size()) - 1 != n) continue;  // lc vanished mod p
        PPoly dfp(fp.size() - 1);
        for (size_t i = 1; i < fp.size(); ++i) dfp[i - 1] = static_cast<long>(i % p) * fp[i] % p;
        pnorm(dfp);
        if (dfp.empty() || pgcd(fp, dfp, p).size() > 1) continue;  // not squarefree mod p
        std::vector<PPoly> factors;
        factor_mod_p(fp, p, factors);
        if (factors.size() == 1) return true;
        if (best_p == 0 || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = factors;
        }
        if (++usable >= 4) break;
    }
    if (best_p == 0) throw internal_error("no usable prime for factorization");

    // Coefficient bound for monic factors (Landau-Mignotte flavored, generous).
    Rat norm2_sq(0);
    for (const auto& c : f) norm2_sq += Rat(c) * Rat(c);
    Int norm_ceil = rat_ceil(norm2_sq);
    Int sqrt_ceil;
    mpz_sqrt(sqrt_ceil.get_mpz_t(), norm_ceil.get_mpz_t());
    sqrt_ceil += 2;
    Int bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
    bound *= sqrt_ceil;

    Int modulus(best_p);
    while (modulus <= 2 * bound) modulus *= modulus;
    auto lifted = lift_factors(f, best_factors, best_p, modulus);

    size_t r = lifted.size();
    for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
        int bits = __builtin_popcount(mask);
        if (bits * 2 > static_cast<int>(r)) continue;
        MPoly prod{Int(1)};
        for (size_t i = 0; i < r; ++i)
            if (mask & (1u << i)) prod = mmul(prod, lifted[i], modulus);
        if (prod.empty() || prod.back() != 1) continue;
        if (static_cast<int>(prod.size()) - 1 >= n) continue;
        // exact division over Z by the candidate factor
        ZPoly cand(prod.size());
        for (size_t i = 0; i < prod.size(); ++i) cand[i] = prod[i];
        ZPoly rem = f;
        while (rem.size() >= cand.size() && !rem.empty()) {
            Int c = rem.back();
            size_t off = rem.size() - cand.size();
            for (size_t i = 0; i < cand.size(); ++i) rem[off + i] -= c * cand[i];
            size_t before = rem.size();
            normalize_z(rem);
            if (rem.size() >= before) break;  // no progress: not divisible
        }
        if (rem.empty()) return false;
    }
    return true;
}

}  // namespace latexp::poly
