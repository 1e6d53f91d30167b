// stuffle character laws: exact H_N multiplicativity, the (anti-)morphism
// laws for inv and iota_{*,T}, and stability of stuffle characters under the
// convolution twist.

#include "checks_util.hpp"

namespace fmzv::checks {

std::vector<Verdict> stuffle_character(const RunConfig& cfg) {
    std::vector<Verdict> out;
    const std::string L = "stuffle";
    int wmax = std::min(cfg.wmax + 1, 6);
    long N = cfg.n_max;

    HarmonicTable ht(N, compositions_upto(wmax));

    // H_N(u) H_N(v) = H_N(u * v) for all pairs and all N
    {
        auto comps = compositions_upto(wmax, 1);
        for (auto& u : comps)
            for (auto& v : comps) {
                if (u.weight() + v.weight() > wmax || v < u) continue;
                const YLinQ& uv = stuffle_comps(u, v);
                bool ok = true;
                std::string wit;
                for (long n = 1; n <= N && ok; ++n) {
                    Rat lhs = ht.H(n, u) * ht.H(n, v);
                    Rat rhs = ht.H(n, uv);
                    if (lhs != rhs) {
                        ok = false;
                        wit = fmt("N=", n, " lhs=", to_string(lhs), " rhs=", to_string(rhs));
                    }
                }
                push(out, L, fmt("character u=", u.str(), " v=", v.str(), " N<=", N), ok, wit);
            }
    }
    // inv is a stuffle (anti-)morphism: inv(u*v) = inv(u)*inv(v)
    {
        bool ok = true;
        std::string wit;
        for (auto& u : compositions_upto(wmax - 1, 1))
            for (auto& v : compositions_upto(wmax - u.weight(), 1)) {
                YLinQ lhs = inv_map(stuffle_comps(u, v));
                YLinQ rhs = stuffle_lin(inv_map(YLinQ::unit(u, Rat(1))), inv_map(YLinQ::unit(v, Rat(1))));
                if (!(lhs == rhs)) { ok = false; wit = u.str() + ";" + v.str(); }
            }
        push(out, L, fmt("inv-antimorphism wmax=", wmax), ok, wit);
    }
    // iota_{*,T} is a stuffle morphism (symbolic T, weight-truncated)
    {
        bool ok = true;
        std::string wit;
        int wcap = wmax, tdeg = std::min(cfg.tdeg, 4);
        for (auto& u : compositions_upto(wmax - 1, 1))
            for (auto& v : compositions_upto(std::min(wmax - u.weight(), 3), 1)) {
                YLin<TPoly> iu = iota_star_T_sym(u, wcap, tdeg);
                YLin<TPoly> iv = iota_star_T_sym(v, wcap, tdeg);
                YLin<TPoly> rhs = stuffle_lin(iu, iv).truncated(wcap);
                YLin<TPoly> lhs;
                for (auto& [c, k] : stuffle_comps(u, v).t)
                    for (auto& [c2, k2] : iota_star_T_sym(c, wcap, tdeg).t)
                        lhs.add(c2, scaled(k2, k));
                if (!(lhs.truncated(wcap) == rhs)) { ok = false; wit = u.str() + ";" + v.str(); }
            }
        push(out, L, fmt("iota-morphism wmax=", wmax, " tdeg=", std::min(cfg.tdeg, 4)), ok, wit);
    }
    // the convolution twist (f^inv o iota_{*,T}) f of an H_N character is
    // again a stuffle character (per T-degree)
    {
        int tdeg = 3, wcap = wmax + tdeg;
        HarmonicTable big(60, compositions_upto(wcap));
        auto g = [&](long n, const Composition& w) {
            TPoly val(tdeg);
            for (auto& [a, b] : decat(w)) {
                // f(inv(iota_T(a))) expanded per T-degree, times f(b)
                YLin<TPoly> ia = iota_star_T_sym(a, wcap, tdeg);
                TPoly fa(tdeg);
                for (auto& [c, k] : inv_map(ia).t) fa = fa + scaled(k, big.H(n, c));
                val = val + scaled(fa, big.H(n, b));
            }
            return val;
        };
        bool ok = true;
        std::string wit;
        for (long n : {20L, 47L}) {
            for (auto& u : compositions_upto(3, 1))
                for (auto& v : compositions_upto(2, 1)) {
                    TPoly lhs(tdeg);
                    for (auto& [c, k] : stuffle_comps(u, v).t) lhs = lhs + scaled(g(n, c), k);
                    TPoly rhs = g(n, u) * g(n, v);
                    if (!(lhs == rhs)) { ok = false; wit = fmt("N=", n, " ", u.str(), ";", v.str()); }
                }
        }
        push(out, L, "twisted-character N in {20,47} tdeg=3", ok, wit);
    }
    return out;
}

} // namespace fmzv::checks
