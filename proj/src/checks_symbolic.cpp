// symbolic shuffle laws: the regrouping identity for shuffles against the
// dressed letters, its T=0 telescoping form, the two-parameter product rule
// for the dressed insertions, the vanishing families for conjugated Lie
// series, the grouplike/Lie equivalences with reconstruction, the tensor
// commutation lemma, and the coefficient identities for characters killed
// on e0-shuffles.

#include "fmzv/cycles.hpp" // for the linear solver
#include "fmzv/series.hpp"

#include "checks_util.hpp"

namespace fmzv::checks {

namespace {

using ELT = ELin<TPoly>;
using ELT2 = ELin<T2Poly>;

TPoly flipT(const TPoly& x) {
    TPoly r = x;
    for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
    return r;
}

// (iota_{*,-T} o inv)(c) as a y-LinComb over Q[T], weight-truncated
YLin<TPoly> itilde_sym(const Composition& c, int wmax, int tdeg) {
    Rat sign = c.weight() % 2 ? Rat(-1) : Rat(1);
    YLin<TPoly> r;
    for (auto& [u, k] : iota_star_T_sym(c.reversed(), wmax, tdeg).t) r.add(u, scaled(flipT(k), sign));
    return r;
}
ELT itilde_sym_e(const Composition& c, int wmax, int tdeg) {
    ELT r;
    for (auto& [u, k] : itilde_sym(c, wmax, tdeg).t) r.add(comp_to_word(u), k);
    return r;
}

ELT to_elt(const Word& w, int tdeg) { return ELT::unit(w, TPoly(tdeg, Rat(1))); }

TPoly eval_h(const TruncSeries& h, const ELT& x) {
    TPoly r;
    for (auto& [w, c] : x.t) r = r + scaled(c, h.coeff(w));
    return r;
}

// zero through T-degree lmax (degrees beyond may be incomplete under the
// weight cap and are not asserted)
bool zero_prefix(const TPoly& x, int lmax) {
    for (int i = 0; i <= lmax && i < (int)x.c.size(); ++i)
        if (!is_zero(x.c[(size_t)i])) return false;
    return true;
}

// bivariate j insertion: sum_l V^l e0^l e1 x with V = T0 or T1
ELT2 jlie_T2(const ELT2& x, int var, int wmax, int tdeg) {
    ELT2 r;
    for (auto& [w, c] : x.t)
        for (int l = 0; l + 1 + w.weight() <= wmax && l <= tdeg; ++l) {
            T2Poly t(tdeg);
            t.add(var == 0 ? std::pair<int, int>{l, 0} : std::pair<int, int>{0, l}, Rat(1));
            T2Poly cc = t * c;
            if (!cc.is_zero()) r.add(Word(std::string((size_t)l, '0') + "1" + w.s), cc);
        }
    return r;
}
// sum_l (T0+T1)^l e0^l e1 x
ELT2 jlie_Tsum(const ELT2& x, int wmax, int tdeg) {
    ELT2 r;
    for (auto& [w, c] : x.t)
        for (int l = 0; l + 1 + w.weight() <= wmax && l <= tdeg; ++l) {
            T2Poly t(tdeg);
            for (int i = 0; i <= l; ++i) t.add({i, l - i}, Rat(binomial((unsigned long)l, (unsigned long)i)));
            T2Poly cc = t * c;
            if (!cc.is_zero()) r.add(Word(std::string((size_t)l, '0') + "1" + w.s), cc);
        }
    return r;
}

// words of the y-span (empty or ending in e1) up to a weight
std::vector<Word> yspan_words(int wmax) {
    std::vector<Word> out{Word()};
    for (int n = 1; n <= wmax; ++n)
        for (auto& w : words_of(n))
            if (w.s.back() == '1') out.push_back(w);
    return out;
}

// reconstruct grouplike f with f[e1^n]=0 from h = f^{-1} e1 f by solving
// e1 f - f h = 0 weight by weight; returns nullopt if inconsistent
std::optional<TruncSeries> reconstruct_from_conjugate(const TruncSeries& h) {
    int W = h.cutoff - 1;
    TruncSeries f = TruncSeries::one(W);
    for (int n = 1; n <= W; ++n) {
        auto wn = words_of(n);
        std::map<Word, int> col_of;
        for (size_t i = 0; i < wn.size(); ++i) col_of[wn[i]] = (int)i;
        // K = sum_{a<n} f_a h_{n+1-a}
        ELinQ K;
        for (int a = 0; a < n; ++a)
            K += concat(f.parts[(size_t)a], h.parts[(size_t)(n + 1 - a)]);
        std::vector<std::vector<Rat>> rows;
        for (auto& v : words_of(n + 1)) {
            rows.emplace_back(wn.size() + 1, Rat(0));
            auto& row = rows.back();
            if (v.s.front() == '1') row[(size_t)col_of[Word(v.s.substr(1))]] += 1;
            if (v.s.back() == '1') row[(size_t)col_of[Word(v.s.substr(0, v.s.size() - 1))]] -= 1;
            row[wn.size()] = K.coeff(v);
        }
        {
            rows.emplace_back(wn.size() + 1, Rat(0));
            rows.back()[(size_t)col_of[Word(std::string((size_t)n, '1'))]] = 1;
        }
        std::vector<int> free_cols;
        std::vector<Rat> x;
        try {
            x = fmzv::detail::solve_pin_free(rows, (int)wn.size(), free_cols);
        } catch (const error&) {
            return std::nullopt;
        }
        for (size_t i = 0; i < wn.size(); ++i)
            if (!is_zero(x[i])) f.parts[(size_t)n].add(wn[i], x[i]);
    }
    return f;
}

} // namespace

std::vector<Verdict> shuffle_symbolic(const RunConfig& cfg) {
    std::vector<Verdict> out;
    const std::string L = "shuffle-sym";
    int tdeg = cfg.tdeg;

    // regrouping identity:
    // -j_T[(e0^{s-1}e1 w) sh w' - w sh (itilde(y_s) w')]
    //    = sum_{k=0}^{s-1} (e0^k e1 w) sh (itilde(y_{s-k}) w')
    {
        bool ok = true;
        std::string wit;
        auto ws = yspan_words(std::min(cfg.wmax, 4));
        for (int s = 1; s <= 3 && ok; ++s)
            for (auto& w : ws)
                for (auto& w2 : ws) {
                    int wcap = s + w.weight() + w2.weight() + tdeg;
                    Word ysw(std::string((size_t)(s - 1), '0') + "1" + w.s);
                    ELT lhs_arg = shuffle_lin(to_elt(ysw, tdeg), to_elt(w2, tdeg));
                    ELT dressed = concat(itilde_sym_e(Composition(std::vector<int>{s}), s + tdeg, tdeg),
                                         to_elt(w2, tdeg));
                    lhs_arg -= shuffle_lin(to_elt(w, tdeg), dressed);
                    ELT lhs = -jlie_T<TPoly>(lhs_arg, wcap, tdeg);
                    ELT rhs;
                    for (int k = 0; k < s; ++k) {
                        Word ekw(std::string((size_t)k, '0') + "1" + w.s);
                        ELT right = concat(itilde_sym_e(Composition(std::vector<int>{s - k}), s - k + tdeg, tdeg),
                                           to_elt(w2, tdeg));
                        rhs += shuffle_lin(to_elt(ekw, tdeg), right);
                    }
                    if (!(lhs.truncated(wcap) == rhs.truncated(wcap))) {
                        ok = false;
                        wit = fmt("s=", s, " w=", w.str(), " w'=", w2.str());
                        break;
                    }
                }
        push(out, L, fmt("regrouping-identity s<=3 wmax=", std::min(cfg.wmax, 4), " tdeg=", tdeg), ok, wit);
    }
    // T=0 telescoping:
    // sum_k (e0^k e1 w) sh ((-1)^{s-1-k} e0^{s-1-k} e1 w')
    //   = e1((e0^{s-1}e1 w) sh w' + (-1)^{s-1} w sh (e0^{s-1}e1 w'))
    {
        bool ok = true;
        std::string wit;
        for (int s = 1; s <= 3 && ok; ++s)
            for (auto& w : yspan_words(3))
                for (auto& w2 : yspan_words(3)) {
                    ELinQ lhs;
                    for (int k = 0; k < s; ++k) {
                        Word a(std::string((size_t)k, '0') + "1" + w.s);
                        Word b(std::string((size_t)(s - 1 - k), '0') + "1" + w2.s);
                        lhs += Rat((s - 1 - k) % 2 ? -1 : 1) *
                               shuffle_lin(ELinQ::unit(a, Rat(1)), ELinQ::unit(b, Rat(1)));
                    }
                    Word ysw(std::string((size_t)(s - 1), '0') + "1" + w.s);
                    Word ysw2(std::string((size_t)(s - 1), '0') + "1" + w2.s);
                    ELinQ inner = shuffle_lin(ELinQ::unit(ysw, Rat(1)), ELinQ::unit(w2, Rat(1)));
                    inner += Rat((s - 1) % 2 ? -1 : 1) *
                             shuffle_lin(ELinQ::unit(w, Rat(1)), ELinQ::unit(ysw2, Rat(1)));
                    ELinQ rhs = concat(ELinQ::unit(e1(), Rat(1)), inner);
                    if (!(lhs == rhs)) { ok = false; wit = fmt("s=", s, " w=", w.str(), " w'=", w2.str()); }
                }
        push(out, L, "telescoping-T0 s<=3", ok, wit);
    }
    // two-parameter product rule:
    // j_T(w) sh j_U(w') = j_{T+U}( w sh j_U(w') + j_T(w) sh w' )
    {
        bool ok = true;
        std::string wit;
        int t2 = 4, wcap = std::min(cfg.wmax + 2, 6);
        for (auto& w : yspan_words(2))
            for (auto& w2 : yspan_words(2)) {
                ELT2 a = jlie_T2(ELT2::unit(w, T2Poly(t2, Rat(1))), 0, wcap, t2);
                ELT2 b = jlie_T2(ELT2::unit(w2, T2Poly(t2, Rat(1))), 1, wcap, t2);
                ELT2 lhs = shuffle_lin(a, b).truncated(wcap);
                ELT2 arg = shuffle_lin(ELT2::unit(w, T2Poly(t2, Rat(1))), b) +
                           shuffle_lin(a, ELT2::unit(w2, T2Poly(t2, Rat(1))));
                ELT2 rhs = jlie_Tsum(arg, wcap, t2).truncated(wcap);
                if (!(lhs == rhs)) { ok = false; wit = "w=" + w.str() + " w'=" + w2.str(); }
            }
        push(out, L, fmt("two-parameter-product-rule cutoff=", wcap), ok, wit);
    }
    // vanishing families for h = f^{-1} e1 f, f random grouplike
    {
        int W = 7;
        for (uint64_t seed = cfg.seed; seed < cfg.seed + 5; ++seed) {
            TruncSeries f = random_grouplike(W, seed);
            TruncSeries h = conjugate_e1(f);
            int td = W - 2;
            bool ok_a = true, ok_b = true, ok_c = true;
            std::string wit;
            auto ws = yspan_words(3);
            // (a): u = y_s single letters
            for (int s = 1; s <= 3 && ok_a; ++s)
                for (auto& w : ws)
                    for (auto& w2 : ws) {
                        if (s + w.weight() + w2.weight() > W - 1) continue;
                        Word ysw(std::string((size_t)(s - 1), '0') + "1" + w.s);
                        int lmax = W - 1 - (s + w.weight() + w2.weight());
                        if (lmax < 0) continue;
                        ELT arg = shuffle_lin(to_elt(ysw, td), to_elt(w2, td));
                        arg -= shuffle_lin(to_elt(w, td),
                                           concat(itilde_sym_e(Composition(std::vector<int>{s}), W, td),
                                                  to_elt(w2, td)));
                        TPoly val = eval_h(h, jlie_T<TPoly>(arg, W, td));
                        if (!zero_prefix(val, lmax)) { ok_a = false; wit = fmt("a: s=", s, " seed=", seed); }
                    }
            // (b): general u from a small sample
            for (auto& u : std::vector<Composition>{comp({2}), comp({1, 1}), comp({2, 1})}) {
                for (auto& w : yspan_words(2))
                    for (auto& w2 : yspan_words(2)) {
                        if (u.weight() + w.weight() + w2.weight() > W - 1) continue;
                        Word uw = comp_to_word(u) + w;
                        int lmax = W - 1 - (u.weight() + w.weight() + w2.weight());
                        if (lmax < 0) continue;
                        ELT arg = shuffle_lin(to_elt(uw, td), to_elt(w2, td));
                        arg -= shuffle_lin(to_elt(w, td),
                                           concat(itilde_sym_e(u, W, td), to_elt(w2, td)));
                        TPoly val = eval_h(h, jlie_T<TPoly>(arg, W, td));
                        if (!zero_prefix(val, lmax)) { ok_b = false; wit = fmt("b: u=", u.str(), " seed=", seed); }
                    }
            }
            // (c): w sh w' - itilde(w) w'
            for (auto& wy : compositions_upto(3, 1))
                for (auto& w2 : yspan_words(3)) {
                    if (wy.weight() + w2.weight() > W - 1) continue;
                    int lmax = W - 1 - (wy.weight() + w2.weight());
                    if (lmax < 0) continue;
                    ELT arg = shuffle_lin(to_elt(comp_to_word(wy), td), to_elt(w2, td));
                    arg -= concat(itilde_sym_e(wy, W, td), to_elt(w2, td));
                    TPoly val = eval_h(h, jlie_T<TPoly>(arg, W, td));
                    if (!zero_prefix(val, lmax)) { ok_c = false; wit = fmt("c: w=", wy.str(), " seed=", seed); }
                }
            push(out, L, fmt("vanishing-a seed=", seed), ok_a, wit);
            push(out, L, fmt("vanishing-b seed=", seed), ok_b, wit);
            push(out, L, fmt("vanishing-c seed=", seed), ok_c, wit);
        }
    }
    // grouplike => conjugate is Lie; converse by reconstruction; injectivity
    {
        int W = 7;
        bool ok = true;
        std::string wit;
        for (uint64_t seed = cfg.seed; seed < cfg.seed + 5 && ok; ++seed) {
            TruncSeries f = random_grouplike(W, seed, {.zero_e1 = true});
            TruncSeries h = conjugate_e1(f);
            if (!is_lie(h)) { ok = false; wit = fmt("conjugate not Lie, seed=", seed); }
            auto frec = reconstruct_from_conjugate(h);
            if (!frec) { ok = false; wit = fmt("reconstruction failed, seed=", seed); }
            else {
                if (!(*frec == f.with_cutoff(frec->cutoff))) { ok = false; wit = fmt("uniqueness, seed=", seed); }
                if (!is_grouplike(*frec)) { ok = false; wit = fmt("reconstructed not grouplike, seed=", seed); }
            }
        }
        push(out, L, "grouplike-conjugate-lie-and-reconstruction", ok, wit);

        // a non-Lie perturbation admits no grouplike preimage
        TruncSeries f = random_grouplike(6, cfg.seed + 3, {.zero_e1 = true});
        TruncSeries h = conjugate_e1(f);
        h.parts[2].add(Word("01"), Rat(1));
        bool neg_ok = !is_lie(h);
        auto frec = reconstruct_from_conjugate(h);
        if (frec && is_grouplike(*frec)) neg_ok = false;
        push(out, L, "non-lie-has-no-grouplike-preimage", neg_ok, "");

        // injectivity
        TruncSeries g1 = random_grouplike(6, cfg.seed + 21, {.zero_e1 = true});
        TruncSeries g2 = random_grouplike(6, cfg.seed + 22, {.zero_e1 = true});
        bool inj = (g1 == g2) || !(conjugate_e1(g1) == conjugate_e1(g2));
        push(out, L, "conjugation-injectivity", inj, "");
    }
    // tensor commutation: u = Delta(f) (f^{-1} (x) f^{-1}) commutes with
    // Delta(e1) and is supported on e1-power pairs
    {
        int W = 6;
        TruncSeries f = random_grouplike(W, cfg.seed + 31);
        TruncSeries finv = inverse(f);
        auto uval = [&](const Word& w, const Word& w2) {
            Rat r(0);
            for (auto& [a1, b1] : decat(w))
                for (auto& [a2, b2] : decat(w2)) {
                    Rat dfa(0);
                    for (auto& [x, m] : shuffle_words(a1, a2).t) dfa += m * f.coeff(x);
                    r += dfa * finv.coeff(b1) * finv.coeff(b2);
                }
            return r;
        };
        auto dl = [&](const Word& w) { return w.empty() || w.s.front() != '1' ? std::optional<Word>{} : Word(w.s.substr(1)); };
        auto dr = [&](const Word& w) { return w.empty() || w.s.back() != '1' ? std::optional<Word>{} : Word(w.s.substr(0, w.s.size() - 1)); };
        bool ok = true;
        std::string wit;
        for (int a = 0; a <= 3 && ok; ++a)
            for (int b = 0; a + b <= 5 && b <= 3; ++b)
                for (auto& w : words_of(a))
                    for (auto& w2 : words_of(b)) {
                        Rat lhs(0), rhs(0);
                        if (auto x = dl(w)) lhs += uval(*x, w2);
                        if (auto x = dl(w2)) lhs += uval(w, *x);
                        if (auto x = dr(w)) rhs += uval(*x, w2);
                        if (auto x = dr(w2)) rhs += uval(w, *x);
                        if (lhs != rhs) { ok = false; wit = "commutation " + w.str() + "|" + w2.str(); }
                        bool pure1 = w.s.find('0') == std::string::npos && w2.s.find('0') == std::string::npos;
                        if (!pure1 && !is_zero(uval(w, w2))) { ok = false; wit = "support " + w.str() + "|" + w2.str(); }
                    }
        push(out, L, "tensor-commutation cutoff=6", ok, wit);
    }
    // character shift identity for grouplike f with f[e0] = 0 (depth <= 2)
    {
        int W = 6;
        TruncSeries f = random_grouplike(W, cfg.seed + 41, {.zero_e0 = true});
        bool ok = true;
        std::string wit;
        auto lhs_word = [&](const std::vector<int>& sl, int t) {
            std::string s;
            for (int x : sl) { s.append((size_t)(x - 1), '0'); s.push_back('1'); }
            s.append((size_t)t, '0');
            return Word(std::move(s));
        };
        for (auto& c : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 1}, {2, 1}, {1, 2}}) {
            int d = (int)c.size(), wt = 0;
            for (int x : c) wt += x;
            // enumerate shifts l (per slot) and trailing t
            std::function<void(size_t, std::vector<int>&, int)> loop = [&](size_t i, std::vector<int>& ls, int used) {
                if (!ok) return;
                if (i == (size_t)d) {
                    for (int t = 0; wt + used + t <= W; ++t) {
                        std::vector<int> shifted = c;
                        Rat lc(1);
                        for (int j = 0; j < d; ++j) {
                            shifted[(size_t)j] += ls[(size_t)j];
                            lc *= Rat(binomial((unsigned long)(ls[(size_t)j] + c[(size_t)j] - 1),
                                               (unsigned long)ls[(size_t)j]));
                        }
                        Rat lhs = lc * f.coeff(lhs_word(shifted, t));
                        // RHS: sum over j >= l with sum (j-l) = t
                        Rat rhs(0);
                        std::function<void(size_t, std::vector<int>&, int)> jloop = [&](size_t jj, std::vector<int>& js, int tt) {
                            if (jj == (size_t)d) {
                                if (tt != 0) return;
                                std::vector<int> sh2 = c;
                                Rat coef(1);
                                for (int q = 0; q < d; ++q) {
                                    sh2[(size_t)q] += js[(size_t)q];
                                    coef *= Rat(binomial((unsigned long)(js[(size_t)q] + c[(size_t)q] - 1),
                                                         (unsigned long)js[(size_t)q])) *
                                            Rat(binomial((unsigned long)js[(size_t)q],
                                                         (unsigned long)ls[(size_t)q])) *
                                            Rat((js[(size_t)q] - ls[(size_t)q]) % 2 ? -1 : 1);
                                }
                                rhs += coef * f.coeff(lhs_word(sh2, 0));
                                return;
                            }
                            for (int j = ls[jj]; j - ls[jj] <= tt; ++j) {
                                js[jj] = j;
                                jloop(jj + 1, js, tt - (j - ls[jj]));
                            }
                        };
                        std::vector<int> js((size_t)d, 0);
                        jloop(0, js, t);
                        if (lhs != rhs) { ok = false; wit = fmt("c=", Composition(c).str(), " t=", t); return; }
                    }
                    return;
                }
                for (int l = 0; wt + used + l <= W; ++l) {
                    ls[i] = l;
                    loop(i + 1, ls, used + l);
                }
            };
            std::vector<int> ls((size_t)d, 0);
            loop(0, ls, 0);
        }
        push(out, L, "character-shift-identity cutoff=6", ok, wit);
    }
    // derivative link: (1/(s-1)!) (d/dT)^{s-1} j_T(w') has T^m coefficient
    // C(m+s-1, s-1) e0^{m+s-1} e1 w'
    {
        bool ok = true;
        std::string wit;
        int wcap = 7;
        for (int s = 1; s <= 3; ++s)
            for (auto& w2 : yspan_words(2)) {
                ELT jw = jlie_T(w2, wcap, 6);
                // differentiate s-1 times, divide (s-1)!
                ELT deriv;
                for (auto& [w, c] : jw.t) {
                    TPoly d2(c.trunc);
                    for (int i = s - 1; i < (int)c.c.size(); ++i) {
                        Rat coef = c.c[(size_t)i] * Rat(binomial((unsigned long)i, (unsigned long)(s - 1)));
                        if (!is_zero(coef)) {
                            d2.c.resize(std::max(d2.c.size(), (size_t)(i - s + 2)), Rat(0));
                            d2.c[(size_t)(i - s + 1)] = coef;
                        }
                    }
                    d2.shrink();
                    if (!d2.is_zero()) deriv.add(w, d2);
                }
                ELT expect;
                for (int m = 0; m + s + w2.weight() <= wcap; ++m)
                    expect.add(Word(std::string((size_t)(m + s - 1), '0') + "1" + w2.s),
                               TPoly::var(6, Rat(binomial((unsigned long)(m + s - 1), (unsigned long)(s - 1))), m));
                if (!(deriv == expect)) { ok = false; wit = fmt("s=", s, " w'=", w2.str()); }
            }
        push(out, L, "derivative-link", ok, wit);
    }
    // antipode symmetry of the conjugated coefficients:
    // h[u] = -(-1)^{|u|} h[rev u] for Lie h
    {
        int W = 6;
        TruncSeries h = conjugate_e1(random_grouplike(W, cfg.seed + 51));
        bool ok = true;
        std::string wit;
        for (int n = 1; n <= W; ++n)
            for (auto& u : words_of(n)) {
                Rat lhs = h.coeff(u);
                Rat rhs = -Rat(n % 2 ? -1 : 1) * h.coeff(u.reversed());
                if (lhs != rhs) { ok = false; wit = u.str(); }
            }
        push(out, L, "conjugate-reversal-symmetry cutoff=6", ok, wit);
    }
    return out;
}

} // namespace fmzv::checks
