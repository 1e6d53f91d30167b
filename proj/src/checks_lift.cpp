// weight-adic lift of the depth-one vanishing: the w_n^N tables from the
// exact recursion, the congruence h(s) = sum_n h(w_n^N(s)) mod p^{s+N},
// the sum-over-fixed-weight identity and its partition form, and the
// even-weight depth-two consequence.

#include "checks_util.hpp"

#include <mutex>

namespace fmzv::checks {

namespace {

// ordered tuples (k_1..k_l) with sum s, l >= 2, weighted 1/l! . prod 1/k_i
void for_each_partition_tuple(int s, const std::function<void(const std::vector<int>&, const Rat&)>& fn) {
    std::vector<int> ks;
    std::function<void(int)> rec = [&](int rem) {
        if (rem == 0) {
            if (ks.size() >= 2) {
                Rat coef = Rat(1) / Rat(factorial(ks.size()));
                for (int k : ks) coef /= k;
                fn(ks, coef);
            }
            return;
        }
        for (int k = 1; k <= rem; ++k) {
            ks.push_back(k);
            rec(rem - k);
            ks.pop_back();
        }
    };
    rec(s);
}

std::map<std::tuple<int, int, int>, YLinQ> g_lift;
std::mutex g_lift_mu;

YLinQ build_lift_word(int n, int N, int s); // fwd

YLinQ lift_zpart(int n, int s) {
    YLinQ z;
    Rat pref = Rat(s) / Rat(s + 1);
    if (n == 1) {
        z.add(Composition(std::vector<int>{s + 1}), pref);
        z.add(Composition(std::vector<int>{s, 1}), pref);
    } else {
        Rat sign = pref * Rat((n + 1) % 2 ? -1 : 1);
        std::vector<int> a{s};
        a.insert(a.end(), (size_t)n, 1);
        std::vector<int> b{s + 1};
        b.insert(b.end(), (size_t)(n - 1), 1);
        z.add(Composition(a), sign);
        z.add(Composition(b), sign);
    }
    return z;
}

YLinQ build_lift_word(int n, int N, int s) {
    if (N < 2 || n < 1 || n > N - 1) throw error("lift table: bad (n,N)");
    {
        std::lock_guard<std::mutex> lock(g_lift_mu);
        auto it = g_lift.find({n, N, s});
        if (it != g_lift.end()) return it->second;
    }
    YLinQ r;
    if (N == 2) {
        r = lift_zpart(1, s);
    } else {
        r = lift_zpart(n, s);
        Rat pref = Rat(s) / Rat(s + 1);
        for_each_partition_tuple(s, [&](const std::vector<int>& ks, const Rat& coef) {
            size_t l = ks.size();
            // ordered (n_1..n_l), n_i in [1, N-2], sum n
            std::vector<int> ns(l, 1);
            std::function<void(size_t, int)> rec = [&](size_t i, int rem) {
                if (i == l) {
                    if (rem != 0) return;
                    YLinQ prod = YLinQ::unit(Composition(), Rat(1));
                    for (size_t j = 0; j < l; ++j)
                        prod = stuffle_lin(prod, build_lift_word(ns[j], N - 1, ks[j]));
                    r -= (pref * coef) * prod;
                    return;
                }
                for (int v = 1; v <= std::min(rem, N - 2); ++v) {
                    ns[i] = v;
                    rec(i + 1, rem - v);
                }
            };
            rec(0, n);
        });
    }
    std::lock_guard<std::mutex> lock(g_lift_mu);
    return g_lift.emplace(std::make_tuple(n, N, s), std::move(r)).first->second;
}

} // namespace

YLinQ lift_word(int n, int N, int s) { return build_lift_word(n, N, s); }

std::vector<Verdict> lift(const RunConfig& cfg) {
    std::vector<Verdict> out;
    const std::string L = "lift";
    int smax = 3, Nmax = 3;

    // base case: the depth-two component of w_1^2(s) is (s/(s+1)) y_s y_1
    {
        bool ok = true;
        std::string wit;
        for (int s = 1; s <= smax; ++s) {
            YLinQ w = lift_word(1, 2, s);
            Rat c = w.coeff(Composition(std::vector<int>{s, 1}));
            if (c != Rat(s) / Rat(s + 1)) { ok = false; wit = fmt("s=", s, " coeff=", to_string(c)); }
            // denominators divide powers of lcm(2..s+1)
            for (auto& [cc, k] : w.t) {
                Int den = k.get_den();
                for (long q = 2; q <= s + 1; ++q)
                    while (mpz_divisible_ui_p(den.get_mpz_t(), (unsigned long)q)) den /= q;
                if (den != 1) { ok = false; wit = fmt("s=", s, " denominator ", k.get_den().get_str()); }
            }
        }
        push(out, L, "base-case-table", ok, wit);
    }
    // congruence h(s) = sum_{n<N} h(w_n^N(s)) mod p^{s+N}, window p > s+1
    {
        for (int s = 1; s <= smax; ++s)
            for (int N = 2; N <= Nmax; ++N) {
                bool ok = true;
                std::string wit;
                int skipped = 0;
                std::vector<YLinQ> lins{YLinQ::unit(Composition(std::vector<int>{s}), Rat(1))};
                for (int n = 1; n < N; ++n) lins.push_back(lift_word(n, N, s));
                auto idx = collect_indices(lins);
                for (long p : primes_in(s + 2, cfg.p_hi)) {
                    HarmonicTable ht(p, idx);
                    Rat lhs = zeta_exact(ht, p, Composition(std::vector<int>{s}));
                    Rat rhs(0);
                    for (int n = 1; n < N; ++n) rhs += zeta_exact(ht, p, lift_word(n, N, s));
                    Rat d = lhs - rhs;
                    if (!is_zero(d) && vp(d, Int(p)) < s + N) {
                        ok = false;
                        wit = fmt("p=", p, " v=", vp(d, Int(p)), " need ", s + N);
                    }
                }
                push(out, L, fmt("congruence s=", s, " N=", N, " p<=", cfg.p_hi, " skipped=", skipped), ok, wit);
            }
    }
    // sum over all words of fixed weight s:
    // sum_{|w|=s} h(w) = [x^s] exp(sum_k h(k) x^k / k), exact on H_N
    {
        bool ok = true;
        std::string wit;
        for (long N : {3L, 10L, 25L, 50L}) {
            int sb = 6;
            HarmonicTable ht(N, compositions_upto(sb));
            for (int s = 1; s <= sb; ++s) {
                Rat lhs(0);
                for (auto& c : compositions_of(s)) lhs += ht.H(N, c);
                Rat rhs(0);
                // ordered tuples with 1/l!, all l >= 1
                std::vector<int> ks;
                std::function<void(int)> rec = [&](int rem) {
                    if (rem == 0) {
                        Rat term = Rat(1) / Rat(factorial(ks.size()));
                        for (int k : ks) term *= ht.H(N, Composition(std::vector<int>{k})) / Rat(k);
                        rhs += term;
                        return;
                    }
                    for (int k = 1; k <= rem; ++k) {
                        ks.push_back(k);
                        rec(rem - k);
                        ks.pop_back();
                    }
                };
                rec(s);
                if (lhs != rhs) { ok = false; wit = fmt("N=", N, " s=", s); }
            }
        }
        push(out, L, "fixed-weight-sum-exp N<=50 s<=6", ok, wit);
    }
    // partition identity: sum_{perm} h(s_phi) = sum_{partitions} (-1)^{d-l}
    // prod (|B|-1)! h(sum_B), exact on H_N
    {
        bool ok = true;
        std::string wit;
        std::vector<std::vector<int>> tuples = {{1, 2},    {2, 2},       {1, 1, 2}, {1, 2, 3},
                                                {1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 2}};
        for (long N : {4L, 10L, 25L, 50L}) {
            HarmonicTable ht(N, compositions_upto(6));
            for (auto& ss : tuples) {
                int d = (int)ss.size();
                if (d > 4) continue;
                Rat lhs(0);
                std::vector<int> perm = ss;
                std::sort(perm.begin(), perm.end());
                // sum over ALL d! orderings (repeats counted)
                std::vector<int> idxv(ss.size());
                for (size_t i = 0; i < idxv.size(); ++i) idxv[i] = (int)i;
                std::sort(idxv.begin(), idxv.end());
                std::vector<std::vector<int>> all_orders;
                std::vector<int> cur;
                std::vector<bool> used(ss.size(), false);
                std::function<void()> gen = [&]() {
                    if (cur.size() == ss.size()) { all_orders.push_back(cur); return; }
                    for (size_t i = 0; i < ss.size(); ++i) {
                        if (used[i]) continue;
                        used[i] = true;
                        cur.push_back(ss[i]);
                        gen();
                        cur.pop_back();
                        used[i] = false;
                    }
                };
                gen();
                for (auto& ord : all_orders) lhs += ht.H(N, Composition(ord));
                // partitions of {1..d}
                Rat rhs(0);
                std::vector<std::vector<std::vector<int>>> parts;
                std::vector<std::vector<int>> curp;
                std::function<void(int)> genp = [&](int i) {
                    if (i == d) { parts.push_back(curp); return; }
                    for (auto& blk : curp) {
                        blk.push_back(i);
                        genp(i + 1);
                        blk.pop_back();
                    }
                    curp.push_back({i});
                    genp(i + 1);
                    curp.pop_back();
                };
                genp(0);
                for (auto& part : parts) {
                    Rat term = Rat((d - (int)part.size()) % 2 ? -1 : 1);
                    for (auto& blk : part) {
                        int bs = 0;
                        for (int i : blk) bs += ss[(size_t)i];
                        term *= Rat(factorial(blk.size() - 1)) * ht.H(N, Composition(std::vector<int>{bs}));
                    }
                    rhs += term;
                }
                if (lhs != rhs) {
                    ok = false;
                    wit = fmt("N=", N, " tuple=", Composition(ss).str());
                }
            }
        }
        push(out, L, "partition-identity N<=50 d<=4", ok, wit);
    }
    // even weight, depth two: h(s2,s1) = (h(s2)h(s1) - h(s1+s2))/2 mod p^{wt+1}
    {
        bool ok = true;
        std::string wit;
        for (auto [s2, s1] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {1, 3}, {3, 1}, {2, 4}}) {
            int wt = s1 + s2;
            std::vector<Composition> idx{Composition(std::vector<int>{s2, s1}),
                                         Composition(std::vector<int>{s2}),
                                         Composition(std::vector<int>{s1}),
                                         Composition(std::vector<int>{wt})};
            for (long p : primes_in(wt + 2, std::min(cfg.p_hi, 60L))) {
                HarmonicTable ht(p, idx);
                Rat lhs = zeta_exact(ht, p, idx[0]);
                Rat rhs = (zeta_exact(ht, p, idx[1]) * zeta_exact(ht, p, idx[2]) -
                           zeta_exact(ht, p, idx[3])) /
                          Rat(2);
                Rat d = lhs - rhs;
                int modulus = std::min(cfg.padic_M + wt, wt + 1);
                if (!is_zero(d) && vp(d, Int(p)) < modulus) { ok = false; wit = fmt("p=", p, " s2=", s2, " s1=", s1); }
            }
        }
        push(out, L, "even-depth2-identity", ok, wit);
    }
    return out;
}

} // namespace fmzv::checks
