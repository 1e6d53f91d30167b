// finite-side shuffle laws: the split-sum expressions for H_N(w sh w'),
// the dressed shuffle relation and its symmetry, the exact alternative
// symmetry identity, and the derived cyclic relation mod p.

#include "checks_util.hpp"

namespace fmzv::checks {

namespace {

// exact split sums: H_N(u sh v) = sum_n c_n(Li_u) H_{N-n}(v)
//                              = sum_n H_n(u) c_{N-n}(Li_v)
bool split_identity(const HarmonicTable& ht, long N, const Composition& u, const Composition& v,
                    const YLinQ& shuv, std::string& wit) {
    Rat lhs = ht.H(N, shuv);
    Rat r1(0), r2(0);
    for (long n = 1; n < N; ++n) {
        r1 += ht.li_coeff(n, u) * ht.H(N - n, v);
        r2 += ht.H(n, u) * ht.li_coeff(N - n, v);
    }
    if (lhs != r1 || lhs != r2) {
        wit = fmt("N=", N, " lhs=", to_string(lhs), " r1=", to_string(r1), " r2=", to_string(r2));
        return false;
    }
    return true;
}

// exact alternative symmetry:
// (-1)^{wt+1} H_N((1)+c) = -H_N((1)+rev c)
//   - sum_{n,t} (-1)^{1+s_1+..+s_{n-1}+t} H_N((s_n-t, s_{n+1},..,s_d) sh (t+1, s_{n-1},..,s_1))
bool alt_symmetry(const HarmonicTable& ht, long N, const Composition& c, std::string& wit) {
    int d = c.depth(), wt = c.weight();
    const auto& s = c.parts; // s[0]=s_d ... s[d-1]=s_1
    Composition head1 = Composition(std::vector<int>{1});
    Rat lhs = Rat((wt + 1) % 2 ? -1 : 1) * ht.H(N, head1 + c);
    Rat rhs = -ht.H(N, head1 + c.reversed());
    for (int n = 1; n <= d; ++n) {
        int s_n = s[(size_t)(d - n)];
        int below = 0; // s_1 + ... + s_{n-1}
        for (int i = d - n + 1; i < d; ++i) below += s[(size_t)i];
        for (int t = 0; t < s_n; ++t) {
            std::vector<int> bp{s_n - t};
            for (int i = d - n - 1; i >= 0; --i) bp.push_back(s[(size_t)i]); // (s_{n+1},...,s_d)... reversed below
            // B = (s_n - t, s_{n+1}, ..., s_d): ascending tail of c, read upward
            std::vector<int> B{s_n - t};
            for (int i = d - n - 1; i >= 0; --i) B.push_back(s[(size_t)i]);
            std::vector<int> RA{t + 1};
            for (int i = d - n + 1; i < d; ++i) RA.push_back(s[(size_t)i]);
            Rat sign = Rat((1 + below + t) % 2 ? -1 : 1);
            rhs -= sign * ht.H(N, shuffle_comps(Composition(B), Composition(RA)));
        }
    }
    if (lhs != rhs) {
        wit = fmt("N=", N, " lhs=", to_string(lhs), " rhs=", to_string(rhs));
        return false;
    }
    return true;
}

// derived cyclic relation mod p:
// (-1)^{wt+1} H_p((1)+c) + H_p((1)+rev c)
//   + sum_{n,t} H_p((s_1,..,s_{n-1}, t+1, s_n-t, s_{n+1},..,s_d)) == 0 (mod p)
bool cyclic_mod_p(long p, const Composition& c, std::string& wit) {
    int d = c.depth(), wt = c.weight();
    std::vector<int> asc(c.parts.rbegin(), c.parts.rend()); // (s_1,...,s_d)
    std::vector<Composition> idx;
    Composition head1 = Composition(std::vector<int>{1});
    idx.push_back(head1 + c);
    idx.push_back(head1 + c.reversed());
    std::vector<Composition> splits;
    for (int n = 1; n <= d; ++n) {
        int s_n = asc[(size_t)(n - 1)];
        for (int t = 0; t < s_n; ++t) {
            std::vector<int> v(asc.begin(), asc.begin() + (n - 1));
            v.push_back(t + 1);
            v.push_back(s_n - t);
            v.insert(v.end(), asc.begin() + n, asc.end());
            splits.emplace_back(v);
            idx.push_back(splits.back());
        }
    }
    HarmonicTable ht(p, idx);
    Rat tot = Rat((wt + 1) % 2 ? -1 : 1) * ht.H(p, head1 + c) + ht.H(p, head1 + c.reversed());
    for (auto& sp : splits) tot += ht.H(p, sp);
    if (mod_pm(tot, Int(p), 1) != 0) {
        wit = fmt("p=", p, " residue=", mod_pm(tot, Int(p), 1).get_str());
        return false;
    }
    return true;
}

} // namespace

std::vector<Verdict> shuffle_finite(const RunConfig& cfg) {
    std::vector<Verdict> out;
    const std::string L = "shuffle-fin";
    int wmax = std::min(cfg.wmax, 5);
    int M = cfg.padic_M;

    std::vector<std::pair<Composition, Composition>> pairs = {
        {comp({2}), comp({1})}, {comp({2}), comp({2})},  {comp({2, 1}), comp({1})},
        {comp({1}), comp({1})}, {comp({1, 1}), comp({2})}, {comp({3}), comp({1, 1})}};

    // appendix split sums, exact for arbitrary N
    {
        for (auto& [u, v] : pairs) {
            if (u.weight() + v.weight() > wmax + 2) continue;
            YLinQ shuv = shuffle_comps(u, v);
            std::vector<YLinQ> lins{shuv, YLinQ::unit(u, Rat(1)), YLinQ::unit(v, Rat(1)),
                                    YLinQ::unit(u.drop_top(), Rat(1)), YLinQ::unit(v.drop_top(), Rat(1))};
            bool ok = true;
            std::string wit;
            for (long N : {5L, 9L, 16L, 20L, 25L}) {
                HarmonicTable ht(N, collect_indices(lins));
                if (!split_identity(ht, N, u, v, shuv, wit)) { ok = false; break; }
            }
            push(out, L, fmt("appendix-split u=", u.str(), " v=", v.str()), ok, wit);
        }
    }
    // dressed shuffle relation: zeta(u sh v) = zeta((iota_{*,T=-1} o inv)(v) . u),
    // tails cut at added weight M+1, checked mod p^{wt+M}
    {
        for (int k = 1; k <= cfg.k; ++k)
            for (long p : cfg.window(wmax)) {
                for (auto& [u, v] : pairs) {
                    int wt = u.weight() + v.weight();
                    if (wt > wmax) continue;
                    int wcap = wt + M + 1;
                    YLinQ shuv = shuffle_comps(u, v);
                    YLinQ dressed;
                    for (auto& [iv, kv] : itilde(v, Rat(-1), v.weight() + M + 1).t)
                        dressed.add(iv + u, kv);
                    FiniteEval ev(p, k, collect_indices({shuv, dressed}), wcap);
                    PadicTrunc lhs = ev.zeta(shuv), rhs = ev.zeta(dressed);
                    push(out, L, fmt("dressed-shuffle p=", p, " k=", k, " u=", u.str(), " v=", v.str()),
                         padic_eq_mod(lhs, rhs, wt + M),
                         fmt("lhs=", lhs.str(), " rhs=", rhs.str()));
                }
            }
    }
    // symmetry: zeta(itilde(v).u) = zeta(itilde(u).v) mod p^{wt+M}; its mod-p
    // shadow is the sign-reversal duality H_p(c) = (-1)^wt H_p(rev c)
    {
        for (long p : cfg.window(wmax)) {
            for (auto& [u, v] : pairs) {
                int wt = u.weight() + v.weight();
                if (wt > wmax) continue;
                YLinQ a, b;
                for (auto& [iv, kv] : itilde(v, Rat(-1), v.weight() + M + 1).t) a.add(iv + u, kv);
                for (auto& [iu, ku] : itilde(u, Rat(-1), u.weight() + M + 1).t) b.add(iu + v, ku);
                FiniteEval ev(p, 1, collect_indices({a, b}), wt + M);
                push(out, L, fmt("symmetry p=", p, " u=", u.str(), " v=", v.str()),
                     padic_eq_mod(ev.zeta(a), ev.zeta(b), wt + M), "");
            }
            // mod-p shadow on single words
            bool ok = true;
            std::string wit;
            auto words = compositions_upto(wmax, 2);
            std::vector<YLinQ> lins;
            for (auto& c : words) {
                lins.push_back(YLinQ::unit(c, Rat(1)));
                lins.push_back(YLinQ::unit(c.reversed(), Rat(1)));
            }
            HarmonicTable ht(p, collect_indices(lins));
            for (auto& c : words) {
                Rat d = ht.H(p, c) - Rat(c.weight() % 2 ? -1 : 1) * ht.H(p, c.reversed());
                if (mod_pm(d, Int(p), 1) != 0) { ok = false; wit = c.str(); }
            }
            push(out, L, fmt("reversal-duality-mod-p p=", p), ok, wit);
        }
    }
    // exact alternative symmetry identity
    {
        for (auto& c : compositions_upto(std::min(wmax, 4), 1)) {
            bool ok = true;
            std::string wit;
            for (long N : {4L, 7L, 10L, 13L}) {
                std::vector<Composition> idx; // alt_symmetry builds shuffles internally; collect
                Composition head1 = Composition(std::vector<int>{1});
                std::vector<YLinQ> lins{YLinQ::unit(head1 + c, Rat(1)), YLinQ::unit(head1 + c.reversed(), Rat(1))};
                int d = c.depth();
                const auto& s = c.parts;
                for (int n = 1; n <= d; ++n) {
                    int s_n = s[(size_t)(d - n)];
                    for (int t = 0; t < s_n; ++t) {
                        std::vector<int> B{s_n - t};
                        for (int i = d - n - 1; i >= 0; --i) B.push_back(s[(size_t)i]);
                        std::vector<int> RA{t + 1};
                        for (int i = d - n + 1; i < d; ++i) RA.push_back(s[(size_t)i]);
                        lins.push_back(shuffle_comps(Composition(B), Composition(RA)));
                    }
                }
                HarmonicTable ht(N, collect_indices(lins));
                if (!alt_symmetry(ht, N, c, wit)) { ok = false; break; }
            }
            push(out, L, fmt("alt-symmetry-exact c=", c.str()), ok, wit);
        }
    }
    // derived cyclic relation mod p
    {
        for (auto& c : compositions_upto(std::min(wmax, 4), 2)) {
            if (c.depth() < 2 && c.weight() < 2) continue;
            bool ok = true;
            std::string wit;
            for (long p : cfg.window(c.weight() + 1))
                if (!cyclic_mod_p(p, c, wit)) { ok = false; break; }
            push(out, L, fmt("cyclic-sum-mod-p c=", c.str()), ok, wit);
        }
    }
    return out;
}

} // namespace fmzv::checks
