// word-level invariant suite: product axioms, antipodes, Hopf law,
// Radford freeness smoke test, the universal weight-one solution, base
// change and the exponential flow law, and the commutative-variable view.

#include "checks_util.hpp"

namespace fmzv::checks {

namespace {

using EL2 = ELin<T2Poly>;

EL2 geometric(const EL2& x, int wmax, int tdeg) {
    // (1 - x)^{-1} = sum x^k for x with positive weight
    EL2 r = EL2::unit(Word(), T2Poly(tdeg, Rat(1)));
    EL2 pw = r;
    for (int k = 1; k <= wmax; ++k) {
        pw = concat(pw, x).truncated(wmax);
        r += pw;
        if (pw.is_zero()) break;
    }
    return r;
}

EL2 w1_lin(int tdeg) {
    EL2 x;
    x.add(e0(), T2Poly::var0(tdeg));
    x.add(e1(), T2Poly::var1(tdeg));
    return x;
}

// substitution w(x*e0, x*e1) for a series image x (concat product), truncated
EL2 subst_prefixed(const Word& w, const EL2& x, int wmax) {
    EL2 acc = EL2::unit(Word(), T2Poly(0, Rat(1)));
    for (char ch : w.s) {
        EL2 img = concat(x, EL2::unit(ch == '0' ? e0() : e1(), T2Poly(0, Rat(1))));
        acc = concat(acc, img).truncated(wmax);
    }
    return acc;
}

// full column rank over Q of the stacked map x -> (x sh e0, x sh e1) on weight n
bool shuffle_w1_injective(int n) {
    auto wn = words_of(n);
    auto wn1 = words_of(n + 1);
    std::map<Word, int> row_of;
    for (size_t i = 0; i < wn1.size(); ++i) row_of[wn1[i]] = (int)i;
    size_t rows = 2 * wn1.size(), cols = wn.size();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols, Rat(0)));
    for (size_t j = 0; j < cols; ++j) {
        for (auto& [w, c] : shuffle_words(wn[j], e0()).t) m[(size_t)row_of[w]][j] += c;
        for (auto& [w, c] : shuffle_words(wn[j], e1()).t) m[wn1.size() + (size_t)row_of[w]][j] += c;
    }
    // column rank by elimination
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && is_zero(m[piv][col])) ++piv;
        if (piv == rows) return false;
        std::swap(m[rank], m[piv]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || is_zero(m[i][col])) continue;
            Rat q = m[i][col] / m[rank][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= q * m[rank][j];
        }
        ++rank;
    }
    return rank == cols;
}

} // namespace

std::vector<Verdict> words_invariants(const RunConfig& cfg) {
    std::vector<Verdict> out;
    const std::string L = "words";
    int wb = std::min(cfg.wmax + 1, 6);

    // shuffle: unital, commutative, associative (exhaustive, total weight <= wb)
    {
        bool ok = true;
        std::string wit;
        for (int a = 0; a <= wb && ok; ++a)
            for (auto& u : words_of(a)) {
                auto one = shuffle_words(u, Word());
                if (!(one == ELinQ::unit(u, Rat(1)))) { ok = false; wit = "unit at " + u.str(); }
            }
        for (int a = 1; a <= wb - 1 && ok; ++a)
            for (int b = 1; a + b <= wb && ok; ++b)
                for (auto& u : words_of(a))
                    for (auto& v : words_of(b))
                        if (!(shuffle_words(u, v) == shuffle_words(v, u))) {
                            ok = false;
                            wit = "comm " + u.str() + "," + v.str();
                            break;
                        }
        for (int a = 1; a + 2 <= wb && ok; ++a)
            for (int b = 1; a + b + 1 <= wb && ok; ++b)
                for (int c = 1; a + b + c <= wb && ok; ++c)
                    for (auto& u : words_of(a))
                        for (auto& v : words_of(b))
                            for (auto& w : words_of(c)) {
                                ELinQ l = shuffle_lin(shuffle_words(u, v), ELinQ::unit(w, Rat(1)));
                                ELinQ r = shuffle_lin(ELinQ::unit(u, Rat(1)), shuffle_words(v, w));
                                if (!(l == r)) {
                                    ok = false;
                                    wit = "assoc " + u.str() + "," + v.str() + "," + w.str();
                                }
                            }
        push(out, L, fmt("shuffle-axioms wmax=", wb), ok, wit);
    }
    // stuffle: unital, commutative, associative on compositions
    {
        bool ok = true;
        std::string wit;
        auto comps = compositions_upto(wb, 1);
        for (auto& u : comps) {
            if (!(stuffle_comps(u, Composition()) == YLinQ::unit(u, Rat(1)))) {
                ok = false;
                wit = "unit " + u.str();
            }
        }
        for (auto& u : comps)
            for (auto& v : comps) {
                if (u.weight() + v.weight() > wb) continue;
                if (!(stuffle_comps(u, v) == stuffle_comps(v, u))) {
                    ok = false;
                    wit = "comm " + u.str() + ";" + v.str();
                }
            }
        for (auto& u : comps)
            for (auto& v : comps)
                for (auto& w : comps) {
                    if (u.weight() + v.weight() + w.weight() > wb) continue;
                    YLinQ l = stuffle_lin(stuffle_comps(u, v), YLinQ::unit(w, Rat(1)));
                    YLinQ r = stuffle_lin(YLinQ::unit(u, Rat(1)), stuffle_comps(v, w));
                    if (!(l == r)) { ok = false; wit = "assoc " + u.str() + ";" + v.str() + ";" + w.str(); }
                }
        push(out, L, fmt("stuffle-axioms wmax=", wb), ok, wit);
    }
    // both stuffle antipode evaluators agree; Hopf antipode law in both algebras
    {
        bool ok = true;
        std::string wit;
        for (auto& c : compositions_upto(wb))
            if (!(antipode_st_closed(c) == antipode_st_rec(c))) {
                ok = false;
                wit = "antipode evaluators differ at " + c.str();
            }
        push(out, L, fmt("antipode-st-two-evaluators wmax=", wb), ok, wit);

        ok = true;
        for (auto& c : compositions_upto(wb, 1)) {
            YLinQ acc;
            for (auto& [u, v] : decat(c))
                acc += stuffle_lin(antipode_st_rec(u), YLinQ::unit(v, Rat(1)));
            if (!acc.is_zero()) { ok = false; wit = "stuffle Hopf law at " + c.str(); }
        }
        for (int n = 1; n <= wb; ++n)
            for (auto& w : words_of(n)) {
                ELinQ acc;
                for (auto& [u, v] : decat(w))
                    acc += shuffle_lin(antipode_sh(ELinQ::unit(u, Rat(1))), ELinQ::unit(v, Rat(1)));
                if (!acc.is_zero()) { ok = false; wit = "shuffle Hopf law at " + w.str(); }
            }
        push(out, L, fmt("hopf-antipode-law wmax=", wb), ok, wit);
    }
    // antipode consistency with the block-contraction elements
    {
        bool ok = true;
        std::string wit;
        for (auto& c : compositions_upto(std::min(wb, 5), 1)) {
            YLinQ lhs = antipode_st_rec(c);
            Rat sign = c.depth() % 2 ? Rat(-1) : Rat(1);
            YLinQ rhs = sign * z_element(c.reversed());
            if (!(lhs == rhs)) { ok = false; wit = c.str(); }
        }
        push(out, L, "z-element-antipode-consistency wmax=5", ok, wit);
    }
    // Radford freeness smoke test
    {
        bool ok = true;
        std::string wit;
        for (int n = 1; n <= std::min(cfg.wmax, 5) && ok; ++n)
            if (!shuffle_w1_injective(n)) { ok = false; wit = fmt("rank drop at weight ", n); }
        // random polynomial-coefficient instances
        std::mt19937_64 rng(cfg.seed ^ 0xabcdef);
        std::uniform_int_distribution<int> pick(-3, 3);
        int tdeg = 6;
        for (int n = 1; n <= std::min(cfg.wmax, 5) && ok; ++n) {
            EL2 x;
            for (auto& w : words_of(n)) {
                T2Poly c(tdeg);
                c.add({0, 0}, Rat(pick(rng)));
                c.add({1, 0}, Rat(pick(rng)));
                c.add({0, 1}, Rat(pick(rng)));
                if (!c.is_zero()) x.add(w, c);
            }
            if (x.is_zero()) x.add(words_of(n)[0], T2Poly(tdeg, Rat(1)));
            if (shuffle_lin(x, w1_lin(tdeg)).is_zero()) { ok = false; wit = fmt("kernel at weight ", n); }
        }
        push(out, L, "radford-freeness-smoke wmax=5", ok, wit);
    }
    // universal weight-one solution: x = sum_{k<=5} W1^k satisfies
    // x sh w(e0,e1) = w(x e0, x e1) x truncated at weight 5
    {
        int tdeg = 6, wcap = 5;
        EL2 x = geometric(w1_lin(tdeg), wcap, tdeg);
        bool ok = true;
        std::string wit;
        for (int n = 0; n <= 4 && ok; ++n)
            for (auto& w : words_of(n)) {
                EL2 lhs = shuffle_lin(x, EL2::unit(w, T2Poly(0, Rat(1)))).truncated(wcap);
                EL2 rhs = concat(subst_prefixed(w, x, wcap), x).truncated(wcap);
                if (!(lhs == rhs)) { ok = false; wit = "w=" + w.str(); break; }
            }
        push(out, L, "universal-weight-one-solution wmax=4 cutoff=5", ok, wit);
    }
    // base change: (1-W1)^{-1} = (1-T0 e0)^{-1} + (1-T0 e0)^{-1} T1 e1 (1-W1)^{-1}
    {
        int tdeg = 7, wcap = 6;
        EL2 full = geometric(w1_lin(tdeg), wcap, tdeg);
        EL2 g0 = geometric(EL2::unit(e0(), T2Poly::var0(tdeg)), wcap, tdeg);
        EL2 mid = concat(concat(g0, EL2::unit(e1(), T2Poly::var1(tdeg))), full).truncated(wcap);
        push(out, L, "base-change cutoff=6", full == (g0 + mid), "");
    }
    // exponential flow law: (T.E0) sh (U.E0) = (T+U).E0 with E0 = (1+e0)^{-1}
    {
        int tdeg = 7, wcap = 6;
        auto scaled_e0_series = [&](bool both) {
            // both=false: T-scaled; both=true: (T+U)-scaled
            EL2 r;
            for (int l = 0; l <= wcap; ++l) {
                T2Poly c(tdeg);
                // (-1)^l (T or T+U)^l
                for (int i = 0; i <= l; ++i) {
                    if (!both && i != l) continue;
                    Rat b = Rat(binomial((unsigned long)l, (unsigned long)i)) * (l % 2 ? -1 : 1);
                    c.add({i, l - i}, b);
                }
                r.add(Word(std::string((size_t)l, '0')), c);
            }
            return r;
        };
        EL2 te0; // sum (-T0)^l e0^l
        EL2 ue0; // sum (-T1)^l e0^l
        for (int l = 0; l <= wcap; ++l) {
            T2Poly a(tdeg), b(tdeg);
            a.add({l, 0}, Rat(l % 2 ? -1 : 1));
            b.add({0, l}, Rat(l % 2 ? -1 : 1));
            te0.add(Word(std::string((size_t)l, '0')), a);
            ue0.add(Word(std::string((size_t)l, '0')), b);
        }
        EL2 lhs = shuffle_lin(te0, ue0).truncated(wcap);
        EL2 rhs = scaled_e0_series(true);
        push(out, L, "exp-flow-law cutoff=6", lhs == rhs, "");
    }
    // iota composition law: iota_T o iota_U = iota_{T+U} (bivariate, trunc)
    {
        int tdeg = 5, wcap = std::min(cfg.wmax, 5);
        auto iota_t2 = [&](const Composition& c, int var, bool sum_vars) {
            YLin<T2Poly> acc = YLin<T2Poly>::unit(Composition(), T2Poly(tdeg, Rat(1)));
            for (int s : c.parts) {
                YLin<T2Poly> next;
                for (auto& [u, k] : acc.t)
                    for (int l = 0; u.weight() + s + l <= wcap && l <= tdeg; ++l) {
                        T2Poly coef(tdeg);
                        Rat b = Rat(binomial((unsigned long)(l + s - 1), (unsigned long)l)) * (l % 2 ? -1 : 1);
                        if (sum_vars) {
                            for (int i = 0; i <= l; ++i)
                                coef.add({i, l - i}, b * Rat(binomial((unsigned long)l, (unsigned long)i)));
                        } else {
                            coef.add(var == 0 ? std::pair<int, int>{l, 0} : std::pair<int, int>{0, l}, b);
                        }
                        T2Poly kk = k * coef;
                        if (!kk.is_zero()) next.add(u + Composition(std::vector<int>{s + l}), kk);
                    }
                acc = std::move(next);
            }
            return acc;
        };
        bool ok = true;
        std::string wit;
        for (auto& c : compositions_upto(wcap, 1)) {
            // apply iota_{T0} to each key of iota_{T1}(c)
            YLin<T2Poly> comp2;
            for (auto& [u, k] : iota_t2(c, 1, false).t)
                for (auto& [u2, k2] : iota_t2(u, 0, false).t) comp2.add(u2, k * k2);
            YLin<T2Poly> direct = iota_t2(c, 0, true);
            if (!(comp2.truncated(wcap) == direct.truncated(wcap))) { ok = false; wit = c.str(); }
        }
        push(out, L, fmt("iota-composition-law wmax=", wcap), ok, wit);
    }
    // commutative view round trip and the shift identity (depth 2)
    {
        std::mt19937_64 rng(cfg.seed ^ 0x5117);
        std::uniform_int_distribution<int> pick(-5, 5);
        bool ok = true;
        std::string wit;
        int wcap = std::min(cfg.wmax, 5);
        // random depth-2 functional on convergent words
        std::map<Composition, Rat> f;
        for (auto& c : compositions_upto(wcap, 1))
            if (c.depth() == 2) f[c] = Rat(pick(rng));
        // route 1: pairing with the multi-shift image; route 2: commutative shift
        for (auto& c0 : compositions_upto(3, 2)) {
            if (c0.depth() != 2) continue;
            int s2 = c0.parts[0], s1 = c0.parts[1];
            for (int l2 = 0; l2 + c0.weight() <= wcap; ++l2)
                for (int l1 = 0; l1 + l2 + c0.weight() <= wcap; ++l1) {
                    Rat route1 = Rat(binomial((unsigned long)(l2 + s2 - 1), (unsigned long)l2)) *
                                 Rat(binomial((unsigned long)(l1 + s1 - 1), (unsigned long)l1)) *
                                 f[Composition(std::vector<int>{s2 + l2, s1 + l1})];
                    // route 2: coefficient of x2^{s2-1} x1^{s1-1} T2^{l2} T1^{l1} in
                    // fbar(x2+T2, x1+T1) = sum f[(a2,a1)] (x2+T2)^{a2-1}(x1+T1)^{a1-1}
                    Rat route2(0);
                    for (auto& [cc, fc] : f) {
                        int a2 = cc.parts[0], a1 = cc.parts[1];
                        if (a2 - 1 < s2 - 1 + 0 || a1 - 1 < s1 - 1) continue;
                        if (a2 - 1 - (s2 - 1) != l2 || a1 - 1 - (s1 - 1) != l1) continue;
                        route2 += fc * Rat(binomial((unsigned long)(a2 - 1), (unsigned long)(s2 - 1))) *
                                  Rat(binomial((unsigned long)(a1 - 1), (unsigned long)(s1 - 1)));
                    }
                    if (route1 != route2) { ok = false; wit = "at " + c0.str(); }
                }
        }
        // to_commutative round trip
        for (auto& c : compositions_upto(4, 2)) {
            if (c.depth() != 2) continue;
            Word w = comp_to_word(c);
            auto mono = word_exponents(w, 2);
            if (!(exponents_word(mono) == w)) { ok = false; wit = "roundtrip " + w.str(); }
        }
        push(out, L, "commutative-view-shift", ok, wit);
    }
    // derivation reconstruction law
    {
        bool ok = true;
        std::string wit;
        for (int n = 1; n <= wb; ++n)
            for (auto& w : words_of(n)) {
                ELinQ x = ELinQ::unit(w, Rat(1));
                ELinQ rec = concat(ELinQ::unit(e0(), Rat(1)), derive_left('0', x)) +
                            concat(ELinQ::unit(e1(), Rat(1)), derive_left('1', x));
                ELinQ rec2 = concat(derive_right('0', x), ELinQ::unit(e0(), Rat(1))) +
                             concat(derive_right('1', x), ELinQ::unit(e1(), Rat(1)));
                if (!(rec == x) || !(rec2 == x)) { ok = false; wit = w.str(); }
            }
        push(out, L, fmt("derivation-reconstruction wmax=", wb), ok, wit);
    }
    return out;
}

} // namespace fmzv::checks
