#pragma once

// Truncated p-adic numbers with a tracked valuation lower bound, the p-adic
// harmonic table used for mod-p^M laws at large p^k, finite multiple zeta
// values over prime windows, and the (p^k - n)^{-t} reflection expansion.

#include "fmzv/harmonic.hpp"

#include <climits>
#include <set>

namespace fmzv {

struct PadicTrunc {
    // Three states:
    //   exact zero        v = VINF
    //   approximate zero  u = 0, prec = 0, value known to satisfy v_p >= v
    //   unit form         value = p^v * u, u a unit mod p^prec, prec >= 1
    static constexpr int VINF = INT_MAX / 4;
    long p = 0;
    int v = VINF;
    int prec = 0;
    Int u = 0;

    PadicTrunc() = default;
    PadicTrunc(long p_, int v_, int prec_, Int u_) : p(p_), v(v_), prec(prec_), u(std::move(u_)) {
        normalize();
    }
    static PadicTrunc zero(long p, int prec) {
        PadicTrunc z;
        z.p = p;
        (void)prec;
        return z;
    }
    static PadicTrunc from_rat(const Rat& x, long p, int prec) {
        if (is_zero(x)) return zero(p, prec);
        Int pz(p);
        long val = vp(x, pz);
        Rat unit = x / rpow(Rat(p), val);
        Int pm = ipow(pz, (unsigned long)prec);
        Int den = unit.get_den(), inv;
        if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t()))
            throw error("PadicTrunc: denominator has p-content after normalization");
        return PadicTrunc(p, (int)val, prec, unit.get_num() % pm * inv % pm);
    }
    bool exact_zero() const { return v >= VINF / 2; }
    bool approx_zero() const { return !exact_zero() && u == 0; }
    void normalize() {
        if (p == 0 || exact_zero()) return;
        if (prec <= 0) { u = 0; prec = 0; return; }
        Int pz(p), pm = ipow(pz, (unsigned long)prec);
        u %= pm;
        if (u < 0) u += pm;
        while (u != 0 && prec > 0 && mpz_divisible_p(u.get_mpz_t(), pz.get_mpz_t())) {
            u /= pz;
            ++v;
            --prec;
        }
        if (u == 0 || prec == 0) { v += prec; prec = 0; u = 0; } // approximate zero, v_p >= v
    }
    // value is known mod p^{abs_prec()}
    int abs_prec() const { return exact_zero() ? VINF / 2 : v + prec; }

    friend PadicTrunc operator*(const PadicTrunc& a, const PadicTrunc& b) {
        long p = a.p ? a.p : b.p;
        if (a.exact_zero() || b.exact_zero()) return zero(p, 0);
        if (a.approx_zero() || b.approx_zero()) {
            PadicTrunc r;
            r.p = p;
            r.v = a.v + b.v;
            r.prec = 0;
            r.u = 0;
            return r;
        }
        int prec = std::min(a.prec, b.prec);
        Int pm = ipow(Int(p), (unsigned long)prec);
        return PadicTrunc(p, a.v + b.v, prec, a.u * b.u % pm);
    }
    friend PadicTrunc operator+(const PadicTrunc& a, const PadicTrunc& b) {
        if (a.exact_zero()) return b;
        if (b.exact_zero()) return a;
        const PadicTrunc& lo = a.v <= b.v ? a : b;
        const PadicTrunc& hi = a.v <= b.v ? b : a;
        int shift = hi.v - lo.v;
        int absp = std::min(lo.abs_prec(), hi.abs_prec());
        int prec = absp - lo.v; // >= 0 since absp >= lo.v
        if (prec <= 0) {
            PadicTrunc r;
            r.p = lo.p;
            r.v = lo.v; // v_p(sum) >= min of valuation bounds
            r.prec = 0;
            r.u = 0;
            return r;
        }
        Int pm = ipow(Int(lo.p), (unsigned long)prec);
        Int val = lo.u % pm;
        if (shift < prec && !hi.approx_zero()) val = (val + ipow(Int(lo.p), (unsigned long)shift) * hi.u) % pm;
        return PadicTrunc(lo.p, lo.v, prec, val);
    }
    PadicTrunc operator-() const {
        if (exact_zero() || approx_zero()) return *this;
        Int pm = ipow(Int(p), (unsigned long)prec);
        return PadicTrunc(p, v, prec, pm - u % pm);
    }
    friend PadicTrunc operator-(const PadicTrunc& a, const PadicTrunc& b) { return a + (-b); }
    PadicTrunc inv() const {
        if (exact_zero() || approx_zero()) throw error("PadicTrunc: inverse of (approximate) zero");
        Int pm = ipow(Int(p), (unsigned long)prec), r;
        if (!mpz_invert(r.get_mpz_t(), u.get_mpz_t(), pm.get_mpz_t()))
            throw error("PadicTrunc: non-unit");
        return PadicTrunc(p, -v, prec, r);
    }
    friend PadicTrunc operator/(const PadicTrunc& a, const PadicTrunc& b) { return a * b.inv(); }

    // residue mod p^M; requires v >= 0 and abs_prec() >= M
    Int residue(int M) const {
        if (exact_zero()) return 0;
        if (abs_prec() < M) throw error("PadicTrunc: insufficient precision for mod p^" + std::to_string(M));
        if (v >= M) return 0;
        if (v < 0) throw error("PadicTrunc: negative valuation residue");
        Int pm = ipow(Int(p), (unsigned long)M);
        return ipow(Int(p), (unsigned long)v) * u % pm;
    }
    bool zero_mod(int M) const {
        if (exact_zero()) return true;
        if (v >= M) return true;
        return residue(M) == 0;
    }
    std::string str() const {
        if (exact_zero()) return "0";
        if (approx_zero()) return "O(" + std::to_string(p) + "^" + std::to_string(v) + ")";
        return "v_p>=" + std::to_string(v) + "; " + u.get_str() + "*" + std::to_string(p) + "^" +
               std::to_string(v) + " mod " + std::to_string(p) + "^" + std::to_string(v + prec);
    }
};

inline bool padic_eq_mod(const PadicTrunc& a, const PadicTrunc& b, int M) {
    return (a - b).zero_mod(M);
}

// p-adic harmonic table for N = p^k; same recursion as the exact table but
// with precision-tracked arithmetic (division by n^{s} loses precision when
// p | n, which happens for k >= 2).
class PadicHarmonic {
  public:
    PadicHarmonic(long p, int k, std::vector<Composition> indices, int rel_prec)
        : p_(p), k_(k), prec_(rel_prec) {
        long N = 1;
        for (int i = 0; i < k; ++i) N *= p;
        N_ = N;
        std::set<Composition> idx(indices.begin(), indices.end());
        idx.insert(Composition());
        for (bool grew = true; grew;) {
            grew = false;
            for (auto& c : std::vector<Composition>(idx.begin(), idx.end()))
                if (!c.empty() && idx.insert(c.drop_top()).second) grew = true;
        }
        int maxtop = 1;
        for (auto& c : idx)
            if (!c.empty()) maxtop = std::max(maxtop, c.parts[0]);
        for (auto& c : idx) tab_.emplace(c, PadicTrunc::zero(p_, prec_));
        tab_.at(Composition()) = PadicTrunc::from_rat(Rat(1), p_, prec_);
        std::vector<Composition> order(idx.begin(), idx.end());
        std::sort(order.begin(), order.end(),
                  [](const Composition& a, const Composition& b) { return a.depth() < b.depth(); });
        // running H_n values; advance n = 1 .. N-1
        std::map<Composition, PadicTrunc> cur;
        for (auto& c : idx)
            cur.emplace(c, c.empty() ? PadicTrunc::from_rat(Rat(1), p_, prec_)
                                     : PadicTrunc::zero(p_, prec_));
        for (long n = 1; n < N; ++n) {
            PadicTrunc nb = PadicTrunc::from_rat(Rat(n), p_, prec_);
            std::vector<PadicTrunc> npow((size_t)maxtop + 1);
            npow[0] = PadicTrunc::from_rat(Rat(1), p_, prec_);
            for (int e = 1; e <= maxtop; ++e) npow[(size_t)e] = npow[(size_t)e - 1] * nb;
            std::map<Composition, PadicTrunc> next = cur;
            for (auto& c : order) {
                if (c.empty()) continue;
                next.at(c) = cur.at(c) + cur.at(c.drop_top()) / npow[(size_t)c.parts[0]];
            }
            cur = std::move(next);
        }
        tab_ = std::move(cur);
    }

    long p() const { return p_; }
    long pk() const { return N_; }
    const PadicTrunc& H(const Composition& c) const {
        auto it = tab_.find(c);
        if (it == tab_.end()) throw error("PadicHarmonic: missing index " + c.str());
        return it->second;
    }
    // zeta_{f^{-k}}(c) = (p^k)^{wt} H_{p^k}(c)
    PadicTrunc zeta(const Composition& c) const {
        PadicTrunc z = H(c);
        if (z.exact_zero()) return z;
        return PadicTrunc(p_, z.v + k_ * c.weight(), z.prec, z.u);
    }
    PadicTrunc zeta(const YLinQ& x) const {
        PadicTrunc r = PadicTrunc::zero(p_, prec_);
        for (auto& [c, k] : x.t) r = r + PadicTrunc::from_rat(k, p_, prec_) * zeta(c);
        return r;
    }

  private:
    long p_, N_;
    int k_, prec_;
    std::map<Composition, PadicTrunc> tab_;
};

// p^{k wt} H_{p^k}(c) via exact rationals (small p^k only)
inline PadicTrunc finite_mzv_exact(const Composition& c, int k, long p, int M) {
    long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    HarmonicTable ht(pk, {c});
    return PadicTrunc::from_rat(zeta_exact(ht, pk, c), p, M + 2);
}

// residues (H_p(c) mod p) over a prime window; primes <= weight+1 are skipped
// unless allow_small
inline std::vector<std::pair<long, Int>> zeta_A(const Composition& c, long plo, long phi,
                                                bool allow_small = false) {
    std::vector<std::pair<long, Int>> out;
    for (long p : primes_in(plo, phi)) {
        if (!allow_small && p <= c.weight() + 1) continue;
        HarmonicTable ht(p, {c});
        out.emplace_back(p, mod_pm(ht.H(p, c), Int(p), 1));
    }
    return out;
}

// (p^k - n)^{-t} as a truncated series sum_{l} C(t+l-1,l) (p^k)^l / ((-n)^t n^l),
// checked against the exact rational on construction paths in tests.
inline PadicTrunc padic_expand_reflect(long n, int t, long p, int k, int M) {
    Int pz(p);
    long vn = 0;
    {
        Int nn(n);
        while (mpz_divisible_p(nn.get_mpz_t(), pz.get_mpz_t())) { nn /= pz; ++vn; }
    }
    if (!(n > 0 && vn < k)) throw error("padic_expand_reflect: needs 0<n<p^k with v_p(n)<k");
    int prec = M + (int)vn * (t + 4) + 4;
    // term_l = C(t+l-1,l) (-1)^t n^{-t-l} p^{kl} has valuation >= l(k-v_p(n)) - t v_p(n)
    int L = (M + t * (int)vn + 2) / (k - (int)vn) + 1;
    PadicTrunc acc = PadicTrunc::zero(p, prec);
    PadicTrunc ninv = PadicTrunc::from_rat(Rat(1, n), p, prec);
    PadicTrunc pk = PadicTrunc::from_rat(rpow(Rat(p), k), p, prec);
    PadicTrunc term = PadicTrunc::from_rat(rpow(Rat(-1, n), t), p, prec);
    for (int l = 0; l <= L; ++l) {
        acc = acc + PadicTrunc::from_rat(Rat(binomial((unsigned long)(t + l - 1), (unsigned long)l)), p, prec) * term;
        term = term * pk * ninv;
    }
    return acc;
}

// Zhao-type probe: H_p(s) == p s/(s+1) H_p((s,1)) mod p^2, for p > s+1 with
// p-1 not dividing s+1.
inline bool kummer_probe(int s, long p) {
    if (!(p > s + 1) || (s + 1) % (p - 1) == 0) throw error("kummer_probe: window violated");
    HarmonicTable ht(p, {Composition(std::vector<int>{s, 1}), Composition(std::vector<int>{s})});
    Rat lhs = ht.H(p, Composition(std::vector<int>{s}));
    Rat rhs = Rat(p) * Rat(s) / Rat(s + 1) * ht.H(p, Composition(std::vector<int>{s, 1}));
    Rat diff = lhs - rhs;
    return is_zero(diff) || vp(diff, Int(p)) >= 2;
}

} // namespace fmzv
