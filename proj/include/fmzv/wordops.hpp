#pragma once

// Products, coproducts, antipodes and transfer maps on the two word algebras.

#include "fmzv/lincomb.hpp"

#include <functional>

namespace fmzv {

inline Rat scaled(const Rat& x, const Rat& q) { return x * q; }
inline TPoly scaled(const TPoly& x, const Rat& q) {
    TPoly r = x;
    for (auto& c : r.c) c *= q;
    r.shrink();
    return r;
}
inline T2Poly scaled(const T2Poly& x, const Rat& q) {
    T2Poly r(x.trunc);
    if (fmzv::is_zero(q)) return r;
    for (auto& [m, c] : x.c) r.c.emplace(m, c * q);
    return r;
}
inline ModPM scaled(const ModPM& x, const Rat& q) {
    if (x.pm == 0) return x;
    Int den = q.get_den(), inv;
    if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), x.pm.get_mpz_t()))
        throw error("ModPM scale: non-unit denominator");
    return ModPM(x.pm, x.r * (q.get_num() % x.pm) * inv);
}

// ---- shuffle ----
inline const ELinQ& shuffle_words(const Word& u, const Word& v) {
    static thread_local std::map<std::pair<std::string, std::string>, ELinQ> memo;
    auto key = std::make_pair(u.s, v.s);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    ELinQ r;
    if (u.empty()) r.add(v, Rat(1));
    else if (v.empty()) r.add(u, Rat(1));
    else {
        Word u1(u.s.substr(1)), v1(v.s.substr(1));
        for (auto& [w, c] : shuffle_words(u1, v).t) r.add(Word(u.s.substr(0, 1) + w.s), c);
        for (auto& [w, c] : shuffle_words(u, v1).t) r.add(Word(v.s.substr(0, 1) + w.s), c);
    }
    return memo.emplace(key, std::move(r)).first->second;
}

template <class R>
ELin<R> shuffle_lin(const ELin<R>& a, const ELin<R>& b) {
    ELin<R> r;
    for (auto& [u, cu] : a.t)
        for (auto& [v, cv] : b.t)
            for (auto& [w, m] : shuffle_words(u, v).t) r.add(w, scaled(cu * cv, m));
    return r;
}

// ---- stuffle ----
inline const YLinQ& stuffle_comps(const Composition& a, const Composition& b) {
    static thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, YLinQ> memo;
    auto key = std::make_pair(a.parts, b.parts);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    YLinQ r;
    if (a.empty()) r.add(b, Rat(1));
    else if (b.empty()) r.add(a, Rat(1));
    else {
        Composition a1 = a.drop_top(), b1 = b.drop_top();
        auto prepend = [](int s, const YLinQ& x) {
            YLinQ out;
            for (auto& [c, k] : x.t) out.add(Composition(std::vector<int>{s}) + c, k);
            return out;
        };
        r += prepend(a.parts[0], stuffle_comps(a1, b));
        r += prepend(b.parts[0], stuffle_comps(a, b1));
        r += prepend(a.parts[0] + b.parts[0], stuffle_comps(a1, b1));
    }
    return memo.emplace(key, std::move(r)).first->second;
}

template <class R>
YLin<R> stuffle_lin(const YLin<R>& a, const YLin<R>& b) {
    YLin<R> r;
    for (auto& [u, cu] : a.t)
        for (auto& [v, cv] : b.t)
            for (auto& [w, m] : stuffle_comps(u, v).t) r.add(w, scaled(cu * cv, m));
    return r;
}

// ---- antipodes ----
template <class R>
ELin<R> antipode_sh(const ELin<R>& x) {
    ELin<R> r;
    for (auto& [w, c] : x.t)
        r.add(w.reversed(), w.weight() % 2 ? -c : c);
    return r;
}

// sum over splittings of the argument tuple into consecutive blocks, each
// block contracted to y_{block sum}, blocks kept in place
inline YLinQ z_element(const Composition& c) {
    YLinQ r;
    int d = c.depth();
    if (d == 0) { r.add(c, Rat(1)); return r; }
    for (long mask = 0; mask < (1L << (d - 1)); ++mask) {
        std::vector<int> parts;
        int acc = c.parts[0];
        for (int i = 1; i < d; ++i) {
            if (mask & (1L << (i - 1))) { parts.push_back(acc); acc = c.parts[i]; }
            else acc += c.parts[i];
        }
        parts.push_back(acc);
        r.add(Composition(std::move(parts)), Rat(1));
    }
    return r;
}

// closed form: S(y_{s_d}...y_{s_1}) = (-1)^d z_{s_1,...,s_d}
inline YLinQ antipode_st_closed(const Composition& c) {
    Rat sign = c.depth() % 2 ? Rat(-1) : Rat(1);
    return sign * z_element(c.reversed());
}

// recursive factorization evaluator: S(w) = -sum_{w=uv, u proper prefix} S(u) * v
inline const YLinQ& antipode_st_rec(const Composition& c) {
    static thread_local std::map<std::vector<int>, YLinQ> memo;
    auto it = memo.find(c.parts);
    if (it != memo.end()) return it->second;
    YLinQ r;
    if (c.empty()) r.add(c, Rat(1));
    else {
        for (int cut = 0; cut < c.depth(); ++cut) {
            Composition u(std::vector<int>(c.parts.begin(), c.parts.begin() + cut));
            Composition v(std::vector<int>(c.parts.begin() + cut, c.parts.end()));
            const YLinQ& su = antipode_st_rec(u);
            YLinQ sv_term = stuffle_lin(su, YLinQ::unit(v, Rat(1)));
            r -= sv_term;
        }
    }
    return memo.emplace(c.parts, std::move(r)).first->second;
}

template <class R>
YLin<R> antipode_st(const YLin<R>& x) {
    YLin<R> r;
    for (auto& [c, k] : x.t)
        for (auto& [c2, m] : antipode_st_closed(c).t) r.add(c2, scaled(k, m));
    return r;
}

// ---- deconcatenation ----
inline std::vector<std::pair<Word, Word>> decat(const Word& w) {
    std::vector<std::pair<Word, Word>> out;
    for (int i = 0; i <= w.weight(); ++i)
        out.emplace_back(Word(w.s.substr(0, i)), Word(w.s.substr(i)));
    return out;
}
inline std::vector<std::pair<Composition, Composition>> decat(const Composition& c) {
    std::vector<std::pair<Composition, Composition>> out;
    for (int i = 0; i <= c.depth(); ++i)
        out.emplace_back(Composition(std::vector<int>(c.parts.begin(), c.parts.begin() + i)),
                         Composition(std::vector<int>(c.parts.begin() + i, c.parts.end())));
    return out;
}

// ---- derivations ----
template <class R>
ELin<R> derive_left(char letter, const ELin<R>& x) {
    ELin<R> r;
    for (auto& [w, c] : x.t)
        if (!w.empty() && w.s.front() == letter) r.add(Word(w.s.substr(1)), c);
    return r;
}
template <class R>
ELin<R> derive_right(char letter, const ELin<R>& x) {
    ELin<R> r;
    for (auto& [w, c] : x.t)
        if (!w.empty() && w.s.back() == letter) r.add(Word(w.s.substr(0, w.s.size() - 1)), c);
    return r;
}

// ---- letter substitution, images weight-homogeneous of weight 1 ----
template <class R>
ELin<R> substitute(const ELin<R>& x, const ELin<R>& img0, const ELin<R>& img1) {
    for (auto* img : {&img0, &img1})
        for (auto& [w, c] : img->t)
            if (w.weight() != 1) throw error("substitute: images must be weight 1");
    ELin<R> r;
    for (auto& [w, c] : x.t) {
        ELin<R> acc = ELin<R>::unit(Word(), c);
        for (char ch : w.s) acc = concat(acc, ch == '0' ? img0 : img1);
        r += acc;
    }
    return r;
}

// w(e0,e1) -> w(e0+e1,-e1), letterwise expansion with integer signs
template <class R>
ELin<R> dual_substitute(const ELin<R>& x) {
    ELin<R> out;
    for (auto& [w, c] : x.t) {
        std::map<Word, long> cur{{Word(), 1}};
        for (char ch : w.s) {
            std::map<Word, long> next;
            for (auto& [u, k] : cur) {
                if (ch == '0') {
                    next[u + e0()] += k;
                    next[u + e1()] += k;
                } else {
                    next[u + e1()] -= k;
                }
            }
            cur = std::move(next);
        }
        for (auto& [u, k] : cur)
            if (k != 0) out.add(u, scaled(c, Rat(k)));
    }
    return out;
}

// ---- inv: anti-morphism with inv(y_n) = (-1)^n y_n ----
template <class R>
YLin<R> inv_map(const YLin<R>& x) {
    YLin<R> r;
    for (auto& [c, k] : x.t)
        r.add(c.reversed(), c.weight() % 2 ? -k : k);
    return r;
}

// ---- transfer maps ----
// iota_{*,T}(y_s) = sum_l (-T)^l C(l+s-1,l) y_{s+l}, concatenation morphism,
// truncated by total weight. Numeric T.
inline YLinQ iota_star_T(const Composition& c, const Rat& tval, int wmax) {
    YLinQ acc = YLinQ::unit(Composition(), Rat(1));
    for (int s : c.parts) {
        YLinQ next;
        for (auto& [u, k] : acc.t) {
            for (int l = 0; u.weight() + s + l <= wmax; ++l) {
                Rat coef = k * rpow(-tval, l) * Rat(binomial((unsigned long)(l + s - 1), (unsigned long)l));
                if (!is_zero(coef)) next.add(u + Composition(std::vector<int>{s + l}), coef);
            }
        }
        acc = std::move(next);
    }
    return acc;
}
inline YLinQ iota_star_T(const YLinQ& x, const Rat& tval, int wmax) {
    YLinQ r;
    for (auto& [c, k] : x.t) r += k * iota_star_T(c, tval, wmax);
    return r;
}

// symbolic T version over Q[T]/(T^{D+1})
inline YLin<TPoly> iota_star_T_sym(const Composition& c, int wmax, int tdeg) {
    YLin<TPoly> acc = YLin<TPoly>::unit(Composition(), TPoly(tdeg, Rat(1)));
    for (int s : c.parts) {
        YLin<TPoly> next;
        for (auto& [u, k] : acc.t) {
            for (int l = 0; u.weight() + s + l <= wmax && l <= tdeg; ++l) {
                Rat b = Rat(binomial((unsigned long)(l + s - 1), (unsigned long)l)) * (l % 2 ? -1 : 1);
                TPoly coef = k * TPoly::var(tdeg, b, l);
                if (!coef.is_zero()) next.add(u + Composition(std::vector<int>{s + l}), coef);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

// j^Lie_T(w) = sum_l T^l e0^l e1 w, truncated by weight
template <class R>
ELin<TPoly> jlie_T(const ELin<TPoly>& x, int wmax, int tdeg) {
    ELin<TPoly> r;
    for (auto& [w, c] : x.t)
        for (int l = 0; l + 1 + w.weight() <= wmax && l <= tdeg; ++l) {
            TPoly tl = TPoly::var(tdeg, Rat(1), l) * c;
            if (!tl.is_zero()) r.add(Word(std::string((size_t)l, '0') + "1" + w.s), tl);
        }
    return r;
}
inline ELin<TPoly> jlie_T(const Word& w, int wmax, int tdeg) {
    return jlie_T<TPoly>(ELin<TPoly>::unit(w, TPoly(tdeg, Rat(1))), wmax, tdeg);
}
inline ELinQ jlie_T_num(const ELinQ& x, const Rat& tval, int wmax) {
    ELinQ r;
    for (auto& [w, c] : x.t)
        for (int l = 0; l + 1 + w.weight() <= wmax; ++l) {
            Rat coef = c * rpow(tval, l);
            if (!is_zero(coef)) r.add(Word(std::string((size_t)l, '0') + "1" + w.s), coef);
        }
    return r;
}

// iota(w) = w * 1/(1-e0)
inline ELinQ iota_plain(const Word& w, int wmax) {
    ELinQ r;
    for (int l = 0; w.weight() + l <= wmax; ++l)
        r.add(Word(w.s + std::string((size_t)l, '0')), Rat(1));
    return r;
}

// isym_{T,U}(w) = 1/(1-T e0) e1 w 1/(1-U e0), T=T0, U=T1
inline ELin<T2Poly> isym_TU(const Word& w, int wmax, int tdeg) {
    ELin<T2Poly> r;
    for (int l = 0; l + 1 + w.weight() <= wmax && l <= tdeg; ++l)
        for (int m = 0; l + m + 1 + w.weight() <= wmax && l + m <= tdeg; ++m) {
            T2Poly c(tdeg);
            c.add({l, m}, Rat(1));
            r.add(Word(std::string((size_t)l, '0') + "1" + w.s + std::string((size_t)m, '0')), c);
        }
    return r;
}

// partial_drop: 1 -> 0, y_{u_n}...y_{u_1} -> y_{u_{n-1}}...y_{u_1}
template <class R>
YLin<R> partial_drop(const YLin<R>& x) {
    YLin<R> r;
    for (auto& [c, k] : x.t)
        if (!c.empty()) r.add(c.drop_top(), k);
    return r;
}

// ---- commutative-variable view (fixed depth) ----
// e0^{a_d} e1 e0^{a_{d-1}} e1 ... e1 e0^{a_0}  <->  exponents (a_d,...,a_0)
inline std::vector<int> word_exponents(const Word& w, int depth) {
    std::vector<int> a;
    int run = 0;
    for (char ch : w.s) {
        if (ch == '0') ++run;
        else { a.push_back(run); run = 0; }
    }
    a.push_back(run);
    if ((int)a.size() != depth + 1) throw error("word depth mismatch in commutative view");
    return a;
}
inline Word exponents_word(const std::vector<int>& a) {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        s.append((size_t)a[i], '0');
        if (i + 1 < a.size()) s.push_back('1');
    }
    return Word(std::move(s));
}
template <class R>
std::map<std::vector<int>, R> to_commutative(const ELin<R>& x, int depth) {
    std::map<std::vector<int>, R> out;
    for (auto& [w, c] : x.t) {
        if (w.depth() != depth) throw error("to_commutative: depth mismatch");
        out[word_exponents(w, depth)] = c;
    }
    return out;
}

} // namespace fmzv
