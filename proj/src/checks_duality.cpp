// duality laws for tau: w(e0,e1) -> w(e0+e1,-e1): the exact binomial form,
// the two exact stuffle-dressed forms, the leading-order z-sum form, Rosen's
// binomial identity, and mutual agreement of the three dressed forms.

#include "checks_util.hpp"

namespace fmzv::checks {

namespace {

// zeta(tau w) as a composition LinComb
YLinQ lhs_tau(const Composition& w) { return tau_comps(w); }

// exact form A: (y_{s_d} - y_{s_d+1}) . (drop(w) * 1/(1+y1)), weight-capped
YLinQ rhs_contract(const Composition& w, int lmax, int wcap) {
    YLinQ inner = stuffle_lin(YLinQ::unit(w.drop_top(), Rat(1)), one_over_one_plus_y1(lmax));
    YLinQ r;
    int s = w.parts[0];
    for (auto& [c, k] : inner.t) {
        Composition a = Composition(std::vector<int>{s}) + c;
        Composition b = Composition(std::vector<int>{s + 1}) + c;
        if (a.weight() <= wcap) r.add(a, k);
        if (b.weight() <= wcap) r.add(b, -k);
    }
    return r;
}

// exact form B: (1 + y1) . (w * 1/(1+y1)), weight-capped
YLinQ rhs_rosen(const Composition& w, int lmax, int wcap) {
    YLinQ inner = stuffle_lin(YLinQ::unit(w, Rat(1)), one_over_one_plus_y1(lmax));
    YLinQ r;
    for (auto& [c, k] : inner.t) {
        if (c.weight() <= wcap) r.add(c, k);
        Composition c1 = Composition(std::vector<int>{1}) + c;
        if (c1.weight() <= wcap) r.add(c1, k);
    }
    return r;
}

// leading-order form: sum_z (-1)^{depth z} w.z (z on the right, |z| <= zmax)
YLinQ rhs_zsum(const Composition& w, int zmax) {
    YLinQ r;
    for (auto& z : compositions_upto(zmax))
        r.add(w + z, Rat(z.depth() % 2 ? -1 : 1));
    return r;
}

} // namespace

std::vector<Verdict> duality(const RunConfig& cfg) {
    std::vector<Verdict> out;
    const std::string L = "duality";
    int wmax = std::min(cfg.wmax, 5);
    int M = cfg.padic_M;

    // binomial duality, exact for every N:
    // H_N(tau w) = sum_{n=1}^{N} (-1)^{n+1} C(N,n) H_n(w)
    {
        long Nmax = std::min((long)64, (long)cfg.n_max);
        auto words = compositions_upto(wmax, 1);
        std::vector<YLinQ> lins;
        for (auto& w : words) lins.push_back(lhs_tau(w));
        for (auto& w : words) lins.push_back(YLinQ::unit(w, Rat(1)));
        HarmonicTable ht(Nmax, collect_indices(lins));
        for (auto& w : words) {
            bool ok = true;
            std::string wit;
            YLinQ tl = lhs_tau(w);
            for (long N = 2; N <= Nmax && ok; ++N) {
                Rat lhs = ht.H(N, tl);
                Rat rhs(0);
                for (long n = 1; n <= N; ++n)
                    rhs += Rat(n % 2 ? 1 : -1) * Rat(binomial((unsigned long)N, (unsigned long)n)) * ht.H(n, w);
                if (lhs != rhs) { ok = false; wit = fmt("N=", N); }
            }
            push(out, L, fmt("binomial-exact w=", w.str(), " N<=", Nmax), ok, wit);
        }
    }
    // Rosen's identity, exact:
    // (-1)^{n+1} C(N,n) = (N/n) sum_l (-N)^l H_n(1,...,1)
    {
        bool ok = true;
        std::string wit;
        for (long N : {5L, 9L, 12L, 25L, 49L}) {
            std::vector<Composition> ones;
            for (int l = 0; l <= 8; ++l) ones.push_back(Composition(std::vector<int>((size_t)l, 1)));
            HarmonicTable ht(std::max(N, 9L), ones);
            for (long n = 1; n <= std::min(N - 1, 8L); ++n) {
                Rat lhs = Rat(n % 2 ? 1 : -1) * Rat(binomial((unsigned long)N, (unsigned long)n));
                Rat rhs(0);
                for (int l = 0; l < (int)n; ++l)
                    rhs += rpow(Rat(-N), l) * ht.H(n, Composition(std::vector<int>((size_t)l, 1)));
                rhs *= Rat(N) / Rat(n);
                if (lhs != rhs) { ok = false; wit = fmt("N=", N, " n=", n); }
            }
        }
        push(out, L, "rosen-binomial-exact", ok, wit);
    }
    // the three dressed forms over the prime window, k = 1..cfg.k, mod p^M
    {
        for (int k = 1; k <= cfg.k; ++k) {
            for (long p : cfg.window(wmax)) {
                // shared evaluator for this (p,k)
                std::vector<YLinQ> lins;
                auto words = compositions_upto(wmax, 1);
                for (auto& w : words) {
                    int wcap = w.weight() + M + 1;
                    lins.push_back(lhs_tau(w));
                    lins.push_back(rhs_contract(w, M + 1, wcap));
                    lins.push_back(rhs_rosen(w, M + 1, wcap));
                    lins.push_back(rhs_zsum(w, M));
                }
                FiniteEval ev(p, k, collect_indices(lins), wmax + M + 1);
                for (auto& w : words) {
                    int wt = w.weight();
                    int wcap = wt + M + 1;
                    PadicTrunc lhs = ev.zeta(lhs_tau(w));
                    PadicTrunc ra = ev.zeta(rhs_contract(w, M + 1, wcap));
                    PadicTrunc rb = ev.zeta(rhs_rosen(w, M + 1, wcap));
                    PadicTrunc rz = ev.zeta(rhs_zsum(w, M));
                    // exact forms: valid mod p^{wt+M}
                    int full = wt + M;
                    push(out, L, fmt("contract-form p=", p, " k=", k, " w=", w.str(), " modM=", full),
                         padic_eq_mod(lhs, ra, full),
                         fmt("lhs=", lhs.str(), " rhs=", ra.str()));
                    push(out, L, fmt("rosen-form p=", p, " k=", k, " w=", w.str(), " modM=", full),
                         padic_eq_mod(lhs, rb, full),
                         fmt("lhs=", lhs.str(), " rhs=", rb.str()));
                    // printed z-sum form holds to leading orders: mod p^{wt + min(M,1)}..
                    // proof-backed modulus wt+1; often better in practice
                    int lead = wt + std::min(M, 1);
                    push(out, L, fmt("zsum-form p=", p, " k=", k, " w=", w.str(), " modM=", lead),
                         padic_eq_mod(lhs, rz, lead),
                         fmt("lhs=", lhs.str(), " rhs=", rz.str()));
                    // mutual agreement of the dressed forms
                    push(out, L, fmt("forms-agree p=", p, " k=", k, " w=", w.str()),
                         padic_eq_mod(ra, rb, full) && padic_eq_mod(ra, rz, lead), "");
                }
            }
        }
    }
    return out;
}

} // namespace fmzv::checks
