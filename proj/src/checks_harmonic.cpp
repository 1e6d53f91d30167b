// harmonic/p-adic laws: depth-one residues, valuation bounds, stability in
// the Frobenius power, the Zhao congruence probe, the Taylor/shuffle bridge,
// and cross-validation of the p-adic table against exact rationals.

#include "checks_util.hpp"

namespace fmzv::checks {

std::vector<Verdict> harmonic_laws(const RunConfig& cfg) {
    std::vector<Verdict> out;
    const std::string L = "harmonic";

    // H_p(s) mod p: -1 if p-1 | s else 0 (all primes, including small)
    {
        bool ok = true;
        std::string wit;
        for (long p : primes_in(2, std::min(cfg.p_hi, 50L))) {
            std::vector<Composition> idx;
            for (int s = 1; s <= 8; ++s) idx.push_back(Composition(std::vector<int>{s}));
            HarmonicTable ht2(p, idx);
            for (int s = 1; s <= 8; ++s) {
                Int r = mod_pm(ht2.H(p, Composition(std::vector<int>{s})), Int(p), 1);
                Int expect = (s % (p - 1) == 0 || p == 2) ? Int(p - 1) : Int(0);
                if (p == 2) expect = 1;
                if (r != expect) { ok = false; wit = fmt("p=", p, " s=", s, " got ", r.get_str()); }
            }
        }
        push(out, L, "depth-one-residues p<=50 s<=8", ok, wit);
    }
    // zeta_A(s) = 0 for s <= 8, s+1 < p <= p_hi
    {
        for (int s = 1; s <= 8; ++s) {
            bool ok = true;
            std::string wit;
            for (auto& [p, r] : zeta_A(Composition(std::vector<int>{s}), 2, cfg.p_hi))
                if (r != 0) { ok = false; wit = fmt("p=", p, " residue=", r.get_str()); }
            push(out, L, fmt("zetaA-depth1-vanishes s=", s, " p<=", cfg.p_hi), ok, wit);
        }
    }
    // valuation bound v_p(zeta_{f^{-k}}(c)) >= wt(c), k in {1,2}
    {
        bool ok = true;
        std::string wit;
        auto idx = compositions_upto(std::min(cfg.wmax + 1, 6), 1);
        for (long p : {2L, 3L, 5L, 7L, 13L})
            for (int k = 1; k <= 2; ++k) {
                long pk = k == 1 ? p : p * p;
                HarmonicTable ht(pk, idx);
                for (auto& c : idx) {
                    Rat z = zeta_exact(ht, pk, c);
                    if (!is_zero(z) && vp(z, Int(p)) < c.weight()) {
                        ok = false;
                        wit = fmt("p=", p, " k=", k, " c=", c.str());
                    }
                }
            }
        push(out, L, "valuation-bound k<=2 wt<=6 (all primes, incl small)", ok, wit);
    }
    // stability in k: zeta_{f^{-2}}(c) == zeta_{f^{-1}}(c) mod p^{wt+1}
    {
        bool ok = true;
        std::string wit;
        auto idx = compositions_upto(4, 1);
        for (long p : {5L, 7L, 11L}) {
            HarmonicTable h1(p, idx), h2(p * p, idx);
            for (auto& c : idx) {
                Rat d = zeta_exact(h2, p * p, c) - zeta_exact(h1, p, c);
                if (!is_zero(d) && vp(d, Int(p)) < c.weight() + 1) {
                    ok = false;
                    wit = fmt("p=", p, " c=", c.str());
                }
            }
        }
        push(out, L, "k-stability mod p^{wt+1} wt<=4", ok, wit);
    }
    // Zhao probe H_p(s) = p s/(s+1) H_p((s,1)) mod p^2, skipping p-1 | s+1
    {
        for (int s = 1; s <= 6; ++s) {
            bool ok = true;
            std::string wit;
            int skipped = 0;
            for (long p : primes_in(s + 2, cfg.p_hi)) {
                if ((s + 1) % (p - 1) == 0) { ++skipped; continue; }
                if (!kummer_probe(s, p)) { ok = false; wit = fmt("p=", p); }
            }
            push(out, L, fmt("zhao-congruence s=", s, " p<=", cfg.p_hi, " skipped=", skipped), ok, wit);
        }
    }
    // Taylor/shuffle bridge:
    // sum_{n<N} c_n(Li_{w sh w'}) = sum_{m+m'<N} c_m(Li_w) c_{m'}(Li_{w'})
    {
        bool ok = true;
        std::string wit;
        int wcap = std::min(cfg.wmax, 5);
        long Nb = std::min((long)cfg.n_max, 100L);
        HarmonicTable ht(Nb, compositions_upto(wcap));
        auto pairs = std::vector<std::pair<Composition, Composition>>{
            {comp({2}), comp({1})}, {comp({2}), comp({2})}, {comp({2, 1}), comp({1})},
            {comp({1, 1}), comp({2})}, {comp({3}), comp({2})}, {comp({1}), comp({1})}};
        for (auto& [u, v] : pairs) {
            if (u.weight() + v.weight() > wcap) continue;
            YLinQ sh = shuffle_comps(u, v);
            std::vector<Rat> cu((size_t)Nb, Rat(0)), cv((size_t)Nb, Rat(0)), csh((size_t)Nb, Rat(0)),
                prefv((size_t)Nb, Rat(0));
            for (long m = 1; m < Nb; ++m) {
                cu[(size_t)m] = ht.li_coeff(m, u);
                cv[(size_t)m] = ht.li_coeff(m, v);
                prefv[(size_t)m] = prefv[(size_t)m - 1] + cv[(size_t)m];
                for (auto& [c, k] : sh.t) csh[(size_t)m] += k * ht.li_coeff(m, c);
            }
            for (long N = 2; N < Nb; ++N) {
                Rat lhs(0), rhs(0);
                for (long n = 1; n < N; ++n) {
                    lhs += csh[(size_t)n];
                    rhs += cu[(size_t)n] * prefv[(size_t)(N - 1 - n)];
                }
                if (lhs != rhs) {
                    ok = false;
                    wit = fmt(u.str(), " sh ", v.str(), " at N=", N);
                    break;
                }
            }
        }
        push(out, L, fmt("taylor-shuffle-bridge N=", Nb), ok, wit);
    }
    // reflection expansion (p^k - n)^{-t} agrees with the exact rational
    {
        bool ok = true;
        std::string wit;
        for (auto [p, k, n, t, M] : std::vector<std::array<long, 5>>{
                 {5, 1, 1, 1, 3}, {7, 1, 3, 2, 4}, {5, 2, 7, 2, 4}, {5, 2, 10, 1, 4}, {3, 2, 3, 2, 4}}) {
            long pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            PadicTrunc series = padic_expand_reflect(n, (int)t, p, (int)k, (int)M);
            PadicTrunc exact = PadicTrunc::from_rat(rpow(Rat(pk - n), -(long)t), p, (int)M + 8);
            if (!padic_eq_mod(series, exact, (int)M)) {
                ok = false;
                wit = fmt("p=", p, " k=", k, " n=", n, " t=", t);
            }
        }
        push(out, L, "reflection-expansion-vs-exact", ok, wit);
    }
    // p-adic harmonic table cross-validated against exact rationals
    {
        bool ok = true;
        std::string wit;
        auto idx = compositions_upto(5, 1);
        for (long p : {5L, 7L, 11L, 13L}) {
            PadicHarmonic ph(p, 2, idx, 12);
            HarmonicTable ht(p * p, idx);
            for (auto& c : idx) {
                PadicTrunc a = ph.zeta(c);
                PadicTrunc b = PadicTrunc::from_rat(zeta_exact(ht, p * p, c), p, 12);
                if (!padic_eq_mod(a, b, c.weight() + 4)) { ok = false; wit = fmt("p=", p, " c=", c.str()); }
            }
        }
        push(out, L, "padic-table-vs-exact k=2 wt<=5", ok, wit);
    }
    return out;
}

} // namespace fmzv::checks
