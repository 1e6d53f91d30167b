// depth-drop phenomena: split formulas expressing conjugated coefficients
// through grouplike coefficients, the depth-1/2 specializations on solved
// instances, the Bernoulli closed form for depth-2 residues, the vanishing
// families in the residue ring, and the antipode combination membership.

#include "fmzv/cycles.hpp"

#include "checks_util.hpp"

namespace fmzv::checks {

namespace {

// h[w] = sum over e1-splits w = u e1 v of (-1)^{|u|} f[rev u] f[v]
// (grouplike antipode eliminates f^{-1})
Rat e1_split_formula(const TruncSeries& f, const Word& w) {
    Rat r(0);
    for (size_t i = 0; i < w.s.size(); ++i) {
        if (w.s[i] != '1') continue;
        Word u(w.s.substr(0, i)), v(w.s.substr(i + 1));
        Rat sign = Rat(u.weight() % 2 ? -1 : 1);
        r += sign * f.coeff(u.reversed()) * f.coeff(v);
    }
    return r;
}

// h[w] = -[w == e0] + sum over all letter-splits w = u x v of
// (-1)^{|u|} finf[rev u] finf[v]
Rat letter_split_formula(const TruncSeries& finf, const Word& w) {
    Rat r = w == e0() ? Rat(-1) : Rat(0);
    for (size_t i = 0; i < w.s.size(); ++i) {
        Word u(w.s.substr(0, i)), v(w.s.substr(i + 1));
        Rat sign = Rat(u.weight() % 2 ? -1 : 1);
        r += sign * finf.coeff(u.reversed()) * finf.coeff(v);
    }
    return r;
}

// e0^{a} e1 e0^{s_d - 1} e1 ... e0^{s_1 - 1} e1 and the e1 e1-ended shape
Word bold_word(int lead, const std::vector<int>& s_desc, int trailing_ones = 0) {
    std::string w(std::size_t(lead), '0');
    w.push_back('1');
    for (int part : s_desc) {
        w.append((size_t)(part - 1), '0');
        w.push_back('1');
    }
    w.append((size_t)trailing_ones, '1');
    return Word(std::move(w));
}

// membership of a rational vector in the span of given vectors (Gauss)
bool in_span(std::vector<std::vector<Rat>> basis, const std::vector<Rat>& target) {
    size_t dim = target.size();
    std::vector<std::vector<Rat>> rows; // transpose: each row = coordinate, augmented
    for (size_t i = 0; i < dim; ++i) {
        std::vector<Rat> row(basis.size() + 1, Rat(0));
        for (size_t j = 0; j < basis.size(); ++j) row[j] = basis[j][i];
        row[basis.size()] = target[i];
        rows.push_back(std::move(row));
    }
    size_t rank = 0;
    for (size_t col = 0; col < basis.size() && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && is_zero(rows[piv][col])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || is_zero(rows[i][col])) continue;
            Rat q = rows[i][col] / rows[rank][col];
            for (size_t j = col; j <= basis.size(); ++j) rows[i][j] -= q * rows[rank][j];
        }
        ++rank;
    }
    // rows below the rank have zero left-hand side after full elimination
    for (size_t i = rank; i < rows.size(); ++i)
        if (!is_zero(rows[i][basis.size()])) return false;
    return true;
}

} // namespace

std::vector<Verdict> depth_drop(const RunConfig& cfg) {
    std::vector<Verdict> out;
    const std::string L = "depth-drop";
    int W = 7;

    // split formulas on random grouplike instances
    {
        bool ok_f = true, ok_inf = true;
        std::string wit_f, wit_inf;
        for (uint64_t seed = cfg.seed; seed < cfg.seed + 5; ++seed) {
            TruncSeries f = random_grouplike(W, seed, {.zero_weight1 = true});
            TruncSeries h = conjugate_e1(f);
            TruncSeries finf = random_grouplike(W - 1, seed + 100, {.zero_weight1 = true});
            TruncSeries hinf = -TruncSeries::letter(W - 1, e0()) -
                               inverse(finf) * TruncSeries::from_lin(W - 1, einf_lin()) * finf;
            // shape 1: e0^{a} e1 e0^{s2-1} e1 e0^{s1-1} e1 ; shape 2: ...e1 e1
            for (int a = 1; a <= 3; ++a)
                for (auto& c : compositions_upto(W - a - 1, 1)) {
                    Word w1 = bold_word(a, c.parts);
                    if (w1.weight() <= W && h.coeff(w1) != e1_split_formula(f, w1)) {
                        ok_f = false;
                        wit_f = fmt("seed=", seed, " w=", w1.str());
                    }
                    if (w1.weight() <= W - 1 && hinf.coeff(w1) != letter_split_formula(finf, w1)) {
                        ok_inf = false;
                        wit_inf = fmt("seed=", seed, " w=", w1.str());
                    }
                    Word w2 = bold_word(a, c.parts, 1);
                    if (w2.weight() <= W && h.coeff(w2) != e1_split_formula(f, w2)) {
                        ok_f = false;
                        wit_f = fmt("seed=", seed, " w=", w2.str());
                    }
                    if (w2.weight() <= W - 1 && hinf.coeff(w2) != letter_split_formula(finf, w2)) {
                        ok_inf = false;
                        wit_inf = fmt("seed=", seed, " w=", w2.str());
                    }
                }
            // grouplike power vanishing used by the display shapes
            for (int kk = 1; kk <= 3; ++kk) {
                if (!is_zero(f.coeff(Word(std::string((size_t)kk, '0'))))) { ok_f = false; wit_f = "e0-power"; }
                if (!is_zero(f.coeff(Word(std::string((size_t)kk, '1'))))) { ok_f = false; wit_f = "e1-power"; }
            }
        }
        push(out, L, "split-formula-conjugate seeds=5 cutoff=7", ok_f, wit_f);
        push(out, L, "split-formula-einf seeds=5 cutoff=7", ok_inf, wit_inf);
    }
    // depth 1 and 2 on the solved m=0 instance
    {
        int Ws = std::min(cfg.wmax + 1, 6);
        CycleSolution s0 = solve_cycles(Ws, Rat(0), cfg.solver_cap);
        TruncSeries h = conjugate_e1(s0.f);
        bool ok = true;
        std::string wit;
        for (int s = 1; s + 2 <= Ws; ++s) {
            Word w("1" + std::string((size_t)(s - 1), '0') + "1");
            if (!is_zero(h.coeff(w))) { ok = false; wit = fmt("s=", s); }
        }
        push(out, L, "depth1-vanishing-solved-m0", ok, wit);

        ok = true;
        for (int s2 = 1; s2 <= Ws; ++s2)
            for (int s1 = 1; s1 + s2 + 1 <= Ws; ++s1) {
                Word w("1" + std::string((size_t)(s2 - 1), '0') + "1" + std::string((size_t)(s1 - 1), '0') + "1");
                Rat lhs = h.coeff(w);
                Rat rhs = Rat(s1 % 2 ? -1 : 1) *
                          Rat(binomial((unsigned long)(s1 + s2), (unsigned long)s1)) *
                          s0.f.coeff(Word(std::string((size_t)(s1 + s2 - 1), '0') + "1"));
                if (lhs != rhs) { ok = false; wit = fmt("s2=", s2, " s1=", s1); }
            }
        push(out, L, "depth2-closed-form-solved-m0", ok, wit);

        // depth-2 specialization of the general depth-drop formula agrees
        // with the closed form: Pascal combination of the two shift sums
        ok = true;
        for (int s2 = 1; s2 <= Ws; ++s2)
            for (int s1 = 1; s1 + s2 + 1 <= Ws; ++s1) {
                Rat a = Rat((s1 + s2) % 2 ? -1 : 1) * Rat(s2 % 2 ? -1 : 1) *
                        Rat(binomial((unsigned long)(s2 + s1 - 1), (unsigned long)s2));
                Rat b = Rat(s1 % 2 ? -1 : 1) *
                        Rat(binomial((unsigned long)(s1 + s2 - 1), (unsigned long)s1));
                Rat coef = a + b;
                Rat closed = Rat(s1 % 2 ? -1 : 1) *
                             Rat(binomial((unsigned long)(s1 + s2), (unsigned long)s1));
                if (coef != closed) { ok = false; wit = fmt("pascal s2=", s2, " s1=", s1); }
            }
        push(out, L, "depth2-formula-vs-closed-form", ok, wit);
    }
    // depth-3 observation: membership modulo products of depth<=1 coefficients
    {
        int Ws = 6;
        CycleSolution s0 = solve_cycles(Ws, Rat(0), cfg.solver_cap);
        TruncSeries h = conjugate_e1(s0.f);
        // h[e1 w e1-shape] of depth 4 words vs the module generated by
        // monomials in f[e0^{a-1}e1]; report only
        bool member = true;
        for (auto& c : compositions_of(4)) {
            if (c.depth() != 3) continue;
            Word w = Word("1") + comp_to_word(c);
            Rat val = h.coeff(w);
            // module of weight-5... products of f-depth-1 coefficients of
            // total weight 5: f[e0^4 e1]=:x5 only (odd zeta analogue), plus
            // x2 x3 etc. with x2 = f[e0 e1] = 0 on this solution
            Rat x5 = s0.f.coeff(Word("00001"));
            Rat x3 = s0.f.coeff(Word("001"));
            Rat x2 = s0.f.coeff(Word("01"));
            // span over Q of {x5, x2*x3}; x2 = 0 here so membership means
            // val is a rational multiple of x5
            if (!is_zero(val) && is_zero(x5) && is_zero(x2 * x3)) member = false;
        }
        push(out, L, "depth3-membership-observation", member, "");
    }
    // Bernoulli closed form for depth-2 residues:
    // H_p(s2,s1) = (-1)^{s2} C(s1+s2, s2) B_{p-s1-s2}/(s1+s2) mod p
    {
        bool ok = true;
        std::string wit;
        for (int wt = 2; wt <= 8; ++wt)
            for (int s2 = 1; s2 < wt; ++s2) {
                int s1 = wt - s2;
                for (long p : primes_in(wt + 2, std::min(cfg.p_hi, 100L))) {
                    Composition c(std::vector<int>{s2, s1});
                    HarmonicTable ht(p, {c});
                    Int lhs = mod_pm(ht.H(p, c), Int(p), 1);
                    Rat br = Rat(s2 % 2 ? -1 : 1) *
                             Rat(binomial((unsigned long)wt, (unsigned long)s2)) *
                             bernoulli((size_t)(p - wt)) / Rat(wt);
                    Int rhs = mod_pm(br, Int(p), 1);
                    if (lhs != rhs) { ok = false; wit = fmt("p=", p, " s2=", s2, " s1=", s1); }
                }
            }
        push(out, L, fmt("bernoulli-depth2 wt<=8 p<=", std::min(cfg.p_hi, 100L)), ok, wit);
    }
    // residue-ring vanishing: zeta_A(s2,s1) = 0 for even weight, and
    // zeta_A(1, 2s-1) = 0
    {
        bool ok = true;
        std::string wit;
        for (auto [s2, s1] : std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {3, 1}, {2, 2}, {2, 4}, {3, 3}}) {
            Composition c(std::vector<int>{s2, s1});
            for (auto& [p, r] : zeta_A(c, 2, std::min(cfg.p_hi, 100L)))
                if (r != 0) { ok = false; wit = fmt("even-wt p=", p, " c=", c.str()); }
        }
        for (int s = 1; s <= 3; ++s) {
            Composition c(std::vector<int>{1, 2 * s - 1});
            for (auto& [p, r] : zeta_A(c, 2, std::min(cfg.p_hi, 100L)))
                if (r != 0) { ok = false; wit = fmt("(1,odd) p=", p, " c=", c.str()); }
        }
        push(out, L, "residue-ring-vanishing", ok, wit);
    }
    // antipode combination drops two depths after stuffle reduction:
    // (-1)^d [rev c + sum_i contract_i(rev c)] + c - y_{s_d} * drop(c)
    //   - (c minus last) * y_{s_1}  lies in the span of stuffle products of
    // >= 2 words, each of depth <= d-2
    {
        bool ok = true;
        std::string wit;
        for (auto& c : std::vector<Composition>{comp({1, 1, 1}), comp({2, 1, 1}), comp({1, 2, 1}),
                                                comp({1, 1, 2}), comp({1, 1, 1, 1})}) {
            int d = c.depth();
            std::vector<int> asc(c.parts.rbegin(), c.parts.rend()); // (s_1,...,s_d)
            YLinQ X;
            Rat sd = Rat(d % 2 ? -1 : 1);
            X.add(c.reversed(), sd);
            for (int i = 0; i + 1 < d; ++i) {
                std::vector<int> m = asc;
                m[(size_t)i] += m[(size_t)i + 1];
                m.erase(m.begin() + i + 1);
                X.add(Composition(m), sd);
            }
            X.add(c, Rat(1));
            Composition top(std::vector<int>{c.parts[0]});
            Composition last(std::vector<int>{c.parts[(size_t)d - 1]});
            Composition midl(std::vector<int>(c.parts.begin(), c.parts.end() - 1));
            X -= stuffle_comps(top, c.drop_top());
            X -= stuffle_comps(midl, last);
            // span of stuffle monomials in nonempty words of depth <= d-2,
            // total weight = wt(c)
            int n = c.weight();
            std::vector<Composition> smalls;
            for (auto& u : compositions_upto(n, 1))
                if (u.depth() <= d - 2) smalls.push_back(u);
            std::vector<YLinQ> gens;
            std::function<void(size_t, int, int, YLinQ)> build = [&](size_t i, int wt, int factors, YLinQ acc) {
                if (wt == n && factors >= 1) gens.push_back(acc);
                if (wt >= n) return;
                for (size_t j = i; j < smalls.size(); ++j) {
                    if (wt + smalls[j].weight() > n) continue;
                    build(j, wt + smalls[j].weight(), factors + 1, stuffle_lin(acc, YLinQ::unit(smalls[j], Rat(1))));
                }
            };
            build(0, 0, 0, YLinQ::unit(Composition(), Rat(1)));
            // coordinates over all compositions of weight n
            auto all = compositions_of(n);
            std::map<Composition, size_t> pos;
            for (size_t i = 0; i < all.size(); ++i) pos[all[i]] = i;
            auto vec = [&](const YLinQ& x) {
                std::vector<Rat> v(all.size(), Rat(0));
                for (auto& [u, k] : x.t) v[pos.at(u)] = k;
                return v;
            };
            std::vector<std::vector<Rat>> basis;
            for (auto& g : gens) basis.push_back(vec(g));
            if (!in_span(std::move(basis), vec(X))) { ok = false; wit = c.str(); }
        }
        push(out, L, "antipode-combination-depth-drop", ok, wit);
    }
    return out;
}

} // namespace fmzv::checks
