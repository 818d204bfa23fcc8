#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "latexp/errors.hpp"

namespace latexp {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p/q", "p", or a plain decimal like "1.25" into an exact rational.
Rat parse_rational(const std::string& s);

// Canonical "p/q" form (always includes the denominator).
std::string rational_string(const Rat& q);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

inline Int rat_ceil(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

Rat pow_rat(const Rat& base, long exp);

// Deterministic 64-bit generator (splitmix64). Used everywhere randomness is
// needed so that seeded runs are identical across platforms; the standard
// distributions are not pinned down by the C++ standard.
class SplitMix64 {
  public:
    explicit SplitMix64(unsigned long long seed) : state_(seed) {}

    unsigned long long next() {
        unsigned long long z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] by rejection-free modulo; bias is irrelevant here,
    // determinism is what matters.
    long long next_in(long long lo, long long hi) {
        if (hi < lo) throw internal_error("next_in: empty range");
        unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

    // Stable per-index substream.
    SplitMix64 split(unsigned long long index) const {
        SplitMix64 child(state_ ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        child.next();
        return child;
    }

  private:
    unsigned long long state_;
};

}  // namespace latexp
