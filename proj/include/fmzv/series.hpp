#pragma once

// Weight-truncated noncommutative power series over Q in e0,e1.
// parts[n] holds the weight-n component; arithmetic silently truncates
// above the cutoff.

#include "fmzv/wordops.hpp"

#include <optional>
#include <random>

namespace fmzv {

struct TruncSeries {
    int cutoff = 0;
    std::vector<ELinQ> parts; // size cutoff+1

    TruncSeries() : parts(1) {}
    explicit TruncSeries(int W) : cutoff(W), parts((size_t)W + 1) {}
    static TruncSeries scalar(int W, const Rat& c) {
        TruncSeries f(W);
        if (!is_zero(c)) f.parts[0].add(Word(), c);
        return f;
    }
    static TruncSeries one(int W) { return scalar(W, Rat(1)); }
    static TruncSeries letter(int W, const Word& w, const Rat& c = Rat(1)) {
        TruncSeries f(W);
        if (w.weight() <= W) f.parts[(size_t)w.weight()].add(w, c);
        return f;
    }
    static TruncSeries from_lin(int W, const ELinQ& x) {
        TruncSeries f(W);
        for (auto& [w, c] : x.t)
            if (w.weight() <= W) f.parts[(size_t)w.weight()].add(w, c);
        return f;
    }

    Rat coeff(const Word& w) const {
        if (w.weight() > cutoff) return Rat(0);
        return parts[(size_t)w.weight()].coeff(w);
    }
    Rat constant_term() const { return parts[0].coeff(Word()); }
    bool is_zero() const {
        for (auto& p : parts)
            if (!p.is_zero()) return false;
        return true;
    }
    ELinQ flat() const {
        ELinQ x;
        for (auto& p : parts) x += p;
        return x;
    }
    TruncSeries with_cutoff(int W) const {
        TruncSeries f(W);
        for (int n = 0; n <= std::min(W, cutoff); ++n) f.parts[(size_t)n] = parts[(size_t)n];
        return f;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::max(a.cutoff, b.cutoff));
        for (int n = 0; n <= r.cutoff; ++n) {
            if (n <= a.cutoff) r.parts[(size_t)n] += a.parts[(size_t)n];
            if (n <= b.cutoff) r.parts[(size_t)n] += b.parts[(size_t)n];
        }
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::max(a.cutoff, b.cutoff));
        for (int n = 0; n <= r.cutoff; ++n) {
            if (n <= a.cutoff) r.parts[(size_t)n] += a.parts[(size_t)n];
            if (n <= b.cutoff) r.parts[(size_t)n] -= b.parts[(size_t)n];
        }
        return r;
    }
    TruncSeries operator-() const {
        TruncSeries r(cutoff);
        for (int n = 0; n <= cutoff; ++n) r.parts[(size_t)n] = -parts[(size_t)n];
        return r;
    }
    friend TruncSeries operator*(const Rat& s, const TruncSeries& a) {
        TruncSeries r(a.cutoff);
        for (int n = 0; n <= a.cutoff; ++n) r.parts[(size_t)n] = s * a.parts[(size_t)n];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::min(a.cutoff, b.cutoff));
        for (int i = 0; i <= std::min(a.cutoff, r.cutoff); ++i) {
            if (a.parts[(size_t)i].is_zero()) continue;
            for (int j = 0; i + j <= r.cutoff && j <= b.cutoff; ++j)
                r.parts[(size_t)(i + j)] += concat(a.parts[(size_t)i], b.parts[(size_t)j]);
        }
        return r;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        int W = std::max(a.cutoff, b.cutoff);
        for (int n = 0; n <= W; ++n) {
            const ELinQ za{}, zb{};
            const ELinQ& pa = n <= a.cutoff ? a.parts[(size_t)n] : za;
            const ELinQ& pb = n <= b.cutoff ? b.parts[(size_t)n] : zb;
            if (!(pa == pb)) return false;
        }
        return true;
    }
    std::string str() const {
        std::string out;
        for (auto& p : parts)
            for (auto& [w, c] : p.t) {
                if (!out.empty()) out += " + ";
                out += "(" + to_string(c) + ")*" + w.str();
            }
        return out.empty() ? "0" : out;
    }
};

inline TruncSeries inverse(const TruncSeries& f) {
    Rat c = f.constant_term();
    if (is_zero(c)) throw error("inverse: constant term is not a unit");
    // f = c(1 - x) with x of positive weight; f^{-1} = (1/c) sum x^k
    TruncSeries x = TruncSeries::one(f.cutoff) - (Rat(1) / c) * f;
    TruncSeries r = TruncSeries::one(f.cutoff), pw = TruncSeries::one(f.cutoff);
    for (int k = 1; k <= f.cutoff; ++k) {
        pw = pw * x;
        r = r + pw;
    }
    return (Rat(1) / c) * r;
}

inline TruncSeries conc_exp(const TruncSeries& x) {
    if (!is_zero(x.constant_term())) throw error("conc_exp needs zero constant term");
    TruncSeries r = TruncSeries::one(x.cutoff), pw = TruncSeries::one(x.cutoff);
    Rat fact(1);
    for (int k = 1; k <= x.cutoff; ++k) {
        pw = pw * x;
        fact *= k;
        r = r + (Rat(1) / fact) * pw;
    }
    return r;
}

inline TruncSeries conc_log(const TruncSeries& f) {
    if (f.constant_term() != Rat(1)) throw error("conc_log needs constant term 1");
    TruncSeries x = f - TruncSeries::one(f.cutoff);
    TruncSeries r(f.cutoff), pw = TruncSeries::one(f.cutoff);
    for (int k = 1; k <= f.cutoff; ++k) {
        pw = pw * x;
        r = r + (Rat(k % 2 ? 1 : -1) / Rat(k)) * pw;
    }
    return r;
}

inline TruncSeries bch(const TruncSeries& x, const TruncSeries& y) {
    return conc_log(conc_exp(x) * conc_exp(y));
}
// C~(x,y) = C(x,y) - x - y
inline TruncSeries bch_tilde(const TruncSeries& x, const TruncSeries& y) {
    return bch(x, y) - x - y;
}

// substitute series images for the letters; images must have zero constant term
inline TruncSeries subst_series(const TruncSeries& f, const TruncSeries& img0, const TruncSeries& img1) {
    if (!is_zero(img0.constant_term()) || !is_zero(img1.constant_term()))
        throw error("subst_series: letter images need zero constant term");
    int W = f.cutoff;
    TruncSeries r = TruncSeries::scalar(W, f.constant_term());
    // memo for word images, built letter by letter
    std::map<std::string, TruncSeries> memo;
    memo[""] = TruncSeries::one(W);
    std::function<const TruncSeries&(const std::string&)> img = [&](const std::string& w) -> const TruncSeries& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        const TruncSeries& pre = img(w.substr(0, w.size() - 1));
        TruncSeries val = pre * (w.back() == '0' ? img0 : img1);
        return memo.emplace(w, std::move(val)).first->second;
    };
    for (int n = 1; n <= W; ++n)
        for (auto& [w, c] : f.parts[(size_t)n].t) r = r + c * img(w.s);
    return r;
}

// f(e0,e1) -> f(a,b) for weight-1 letter images given as LinCombs
inline TruncSeries subst_letters(const TruncSeries& f, const ELinQ& img0, const ELinQ& img1) {
    TruncSeries r(f.cutoff);
    for (int n = 0; n <= f.cutoff; ++n)
        for (auto& [w, c] : f.parts[(size_t)n].t) {
            ELinQ acc = ELinQ::unit(Word(), c);
            for (char ch : w.s) acc = concat(acc, ch == '0' ? img0 : img1);
            for (auto& [u, k] : acc.t) r.parts[(size_t)u.weight()].add(u, k);
        }
    return r;
}

inline ELinQ einf_lin() {
    ELinQ x;
    x.add(e0(), Rat(-1));
    x.add(e1(), Rat(-1));
    return x;
}
inline ELinQ e0_lin() { return ELinQ::unit(e0(), Rat(1)); }
inline ELinQ e1_lin() { return ELinQ::unit(e1(), Rat(1)); }

// f(e1,e0), f(e0,einf), f(einf,e0), f(e1,einf), f(einf,e1)
inline TruncSeries swap01(const TruncSeries& f) { return subst_letters(f, e1_lin(), e0_lin()); }

struct Witness {
    Word u, v;
    Rat got, expect;
    std::string str() const {
        return "u=" + u.str() + " v=" + v.str() + " got=" + to_string(got) + " expected=" + to_string(expect);
    }
};

// character test: grouplike iff f[empty]=1 and f[u sh v] = f[u] f[v]
inline std::optional<Witness> grouplike_witness(const TruncSeries& f) {
    if (f.constant_term() != Rat(1))
        return Witness{Word(), Word(), f.constant_term(), Rat(1)};
    for (int a = 1; a < f.cutoff; ++a)
        for (int b = 1; a + b <= f.cutoff; ++b)
            for (auto& u : words_of(a))
                for (auto& v : words_of(b)) {
                    Rat lhs(0);
                    for (auto& [w, m] : shuffle_words(u, v).t) lhs += m * f.coeff(w);
                    Rat rhs = f.coeff(u) * f.coeff(v);
                    if (lhs != rhs) return Witness{u, v, lhs, rhs};
                }
    return std::nullopt;
}
inline bool is_grouplike(const TruncSeries& f) { return !grouplike_witness(f).has_value(); }

// infinitesimal character test: Lie iff h[empty]=0 and h[u sh v] = 0
inline std::optional<Witness> lie_witness(const TruncSeries& h) {
    if (!is_zero(h.constant_term()))
        return Witness{Word(), Word(), h.constant_term(), Rat(0)};
    for (int a = 1; a < h.cutoff; ++a)
        for (int b = 1; a + b <= h.cutoff; ++b)
            for (auto& u : words_of(a))
                for (auto& v : words_of(b)) {
                    Rat lhs(0);
                    for (auto& [w, m] : shuffle_words(u, v).t) lhs += m * h.coeff(w);
                    if (!is_zero(lhs)) return Witness{u, v, lhs, Rat(0)};
                }
    return std::nullopt;
}
inline bool is_lie(const TruncSeries& h) { return !lie_witness(h).has_value(); }

// f^{-1} e1 f; weight-n part of the result only needs f up to weight n-1
inline TruncSeries conjugate_e1(const TruncSeries& f) {
    if (f.constant_term() != Rat(1)) throw error("conjugate_e1 needs f[empty]=1");
    return inverse(f) * TruncSeries::letter(f.cutoff, e1()) * f;
}

// Ihara group law g o f = g . f(e0, g^{-1} e1 g)
inline TruncSeries ihara(const TruncSeries& g, const TruncSeries& f) {
    TruncSeries hg = conjugate_e1(g);
    TruncSeries e0s = TruncSeries::letter(f.cutoff, e0());
    return g * subst_series(f, e0s, hg);
}
// Lie version: h2 o h1 = h1(e0, h2)
inline TruncSeries lie_ihara(const TruncSeries& h2, const TruncSeries& h1) {
    TruncSeries e0s = TruncSeries::letter(h1.cutoff, e0());
    return subst_series(h1, e0s, h2);
}

// ---- deterministic random Lie / grouplike elements ----
// left-normed bracket of the letters of w: [w1,[w2,[...,wk]]]
inline TruncSeries bracket_monomial(int W, const Word& w) {
    if (w.empty()) throw error("bracket of empty word");
    TruncSeries r = TruncSeries::letter(W, Word(w.s.substr(w.s.size() - 1)));
    for (int i = (int)w.s.size() - 2; i >= 0; --i) {
        TruncSeries x = TruncSeries::letter(W, Word(w.s.substr((size_t)i, 1)));
        r = x * r - r * x;
    }
    return r;
}

struct RandomOpts {
    bool zero_e1 = false;       // kill the e1 coefficient (so f[e1^n]=0 after exp)
    bool zero_e0 = false;       // kill the e0 coefficient
    bool zero_weight1 = false;  // kill both weight-1 coefficients
};

inline TruncSeries random_lie(int W, uint64_t seed, RandomOpts opts = {}) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 12345);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3), letter(0, 1);
    TruncSeries r(W);
    for (int n = 1; n <= W; ++n) {
        int picks = n == 1 ? 2 : 3;
        for (int j = 0; j < picks; ++j) {
            std::string w;
            for (int i = 0; i < n; ++i) w.push_back(letter(rng) ? '1' : '0');
            Rat c = rat(num(rng), den(rng));
            if (is_zero(c)) c = Rat(1);
            r = r + c * bracket_monomial(W, Word(std::move(w)));
        }
    }
    if (opts.zero_e1 || opts.zero_weight1) r.parts[1].add(e1(), -r.parts[1].coeff(e1()));
    if (opts.zero_e0 || opts.zero_weight1) r.parts[1].add(e0(), -r.parts[1].coeff(e0()));
    return r;
}

inline TruncSeries random_grouplike(int W, uint64_t seed, RandomOpts opts = {}) {
    return conc_exp(random_lie(W, seed, opts));
}

// Lie(v_m(f)) letter images: e1 -> f^{-1} e1 f,
// einf -> e^{(m/2)e0} f(e0,einf)^{-1} einf f(e0,einf) e^{-(m/2)e0},
// e0 -> e0 + (1/m) C~(m.img(e1), m.img(einf))  (e0 itself when m=0).
struct VmImages {
    TruncSeries img0, img1, imginf;
};
inline VmImages vm_images(const TruncSeries& f, const Rat& m) {
    int W = f.cutoff;
    TruncSeries finf = subst_letters(f, e0_lin(), einf_lin());
    TruncSeries img1 = conjugate_e1(f);
    TruncSeries einf_s = TruncSeries::from_lin(W, einf_lin());
    TruncSeries conj_inf = inverse(finf) * einf_s * finf;
    TruncSeries imginf, img0;
    if (is_zero(m)) {
        imginf = conj_inf;
        img0 = TruncSeries::letter(W, e0());
    } else {
        TruncSeries half = conc_exp((m / 2) * TruncSeries::letter(W, e0()));
        imginf = half * conj_inf * inverse(half);
        img0 = TruncSeries::letter(W, e0()) + (Rat(1) / m) * bch_tilde(m * img1, m * imginf);
    }
    return {img0, img1, imginf};
}
inline TruncSeries apply_v_m(const TruncSeries& f, const Rat& m, const TruncSeries& target) {
    VmImages im = vm_images(f, m);
    return subst_series(target, im.img0, im.img1);
}

// residues left-hand side; zero iff the residues equation holds.
// m = 0: e0 + f^{-1}e1 f + f_inf^{-1} einf f_inf
// m != 0: e0 + h1 + hinf + (1/m) C~(m h1, m hinf)
inline TruncSeries residues_lhs(const TruncSeries& f, const TruncSeries& f_inf, const Rat& m) {
    int W = f.cutoff;
    TruncSeries einf_s = TruncSeries::from_lin(W, einf_lin());
    TruncSeries h1 = conjugate_e1(f);
    TruncSeries conj_inf = inverse(f_inf) * einf_s * f_inf;
    TruncSeries e0s = TruncSeries::letter(W, e0());
    if (is_zero(m)) return e0s + h1 + conj_inf;
    TruncSeries half = conc_exp((m / 2) * e0s);
    TruncSeries hinf = half * conj_inf * inverse(half);
    return e0s + h1 + hinf + (Rat(1) / m) * bch_tilde(m * h1, m * hinf);
}

} // namespace fmzv
