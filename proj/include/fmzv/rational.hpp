#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fmzv {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw error("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& x) { return x.get_str(); }

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int ipow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rat rpow(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (is_zero(b)) throw error("rpow: zero to negative power");
        return 1 / rpow(b, -e);
    }
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), (unsigned long)e);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), (unsigned long)e);
    return r;
}

// p-adic valuation of a nonzero rational; throws on zero.
inline long vp(const Rat& x, const Int& p) {
    if (is_zero(x)) throw error("vp of zero");
    long v = 0;
    Int n = x.get_num(), d = x.get_den(), q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        n = q;
        ++v;
    }
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        d = q;
        --v;
    }
    return v;
}

// residue of x mod p^M; requires v_p(x) >= 0
inline Int mod_pm(const Rat& x, const Int& p, int M) {
    Int pm = ipow(p, (unsigned long)M);
    Int den = x.get_den();
    if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t()))
        throw error("mod_pm: negative valuation");
    Int inv;
    if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t()))
        throw error("mod_pm: denominator not invertible");
    Int r = (x.get_num() % pm) * inv % pm;
    if (r < 0) r += pm;
    return r;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    Int z(n);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

inline std::vector<long> primes_in(long lo, long hi) {
    std::vector<long> out;
    for (long n = lo < 2 ? 2 : lo; n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

} // namespace fmzv
