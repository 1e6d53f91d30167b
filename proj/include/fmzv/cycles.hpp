#pragma once

// Degree-by-degree rational solver for the 2-cycle and 3-cycle (hexagon)
// equations with parameter m, under the associator normalization
// f[e0]=f[e1]=0 and grouplikeness imposed per weight. Free parameters
// (non-pivot word coordinates, word-lex order) are set to 1.

#include "fmzv/series.hpp"

namespace fmzv {

inline TruncSeries two_cycle_lhs(const TruncSeries& f) {
    return f * swap01(f) - TruncSeries::one(f.cutoff);
}

inline TruncSeries hexagon_lhs(const TruncSeries& f, const Rat& m) {
    int W = f.cutoff;
    TruncSeries e0s = TruncSeries::letter(W, e0());
    TruncSeries e1s = TruncSeries::letter(W, e1());
    TruncSeries einf_s = TruncSeries::from_lin(W, einf_lin());
    TruncSeries E0 = conc_exp((m / 2) * e0s), E1 = conc_exp((m / 2) * e1s), EI = conc_exp((m / 2) * einf_s);
    TruncSeries f_inf0 = subst_letters(f, einf_lin(), e0_lin());
    TruncSeries f_1inf = subst_letters(f, e1_lin(), einf_lin());
    return E0 * f_inf0 * EI * f_1inf * E1 * f - TruncSeries::one(W);
}

struct CycleSolution {
    TruncSeries f;
    Rat m;
    std::vector<std::pair<int, std::vector<Word>>> free_words; // per weight
};

namespace detail {

// row-reduce [A|b] in place; returns pivot column per row. Columns are
// eliminated in increasing index order so free columns are deterministic.
inline std::vector<Rat> solve_pin_free(std::vector<std::vector<Rat>>& rows, int cols,
                                       std::vector<int>& free_cols_out) {
    size_t rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < cols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && is_zero(rows[piv][(size_t)col])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        Rat inv = Rat(1) / rows[rank][(size_t)col];
        for (int j = col; j <= cols; ++j) rows[rank][(size_t)j] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || is_zero(rows[i][(size_t)col])) continue;
            Rat q = rows[i][(size_t)col];
            for (int j = col; j <= cols; ++j) rows[i][(size_t)j] -= q * rows[rank][(size_t)j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (size_t i = rank; i < rows.size(); ++i)
        if (!is_zero(rows[i][(size_t)cols])) throw error("cycle solver: inconsistent system");
    std::vector<bool> is_pivot((size_t)cols, false);
    for (int c : pivot_col) is_pivot[(size_t)c] = true;
    std::vector<Rat> x((size_t)cols, Rat(0));
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[(size_t)c]) { x[(size_t)c] = Rat(1); free_cols_out.push_back(c); }
    for (size_t i = 0; i < rank; ++i) {
        Rat val = rows[i][(size_t)cols];
        for (int c = pivot_col[i] + 1; c < cols; ++c)
            if (!is_zero(rows[i][(size_t)c])) val -= rows[i][(size_t)c] * x[(size_t)c];
        x[(size_t)pivot_col[i]] = val;
    }
    return x;
}

// expansion of a word under a weight-1 letter substitution, integer signs
inline ELinQ sub_word(const Word& w, const ELinQ& img0, const ELinQ& img1) {
    ELinQ acc = ELinQ::unit(Word(), Rat(1));
    for (char ch : w.s) acc = concat(acc, ch == '0' ? img0 : img1);
    return acc;
}

} // namespace detail

inline CycleSolution solve_cycles(int W, const Rat& m, int cap = 8) {
    if (W > cap) throw error("solve_cycles: weight above configured cap");
    CycleSolution sol;
    sol.m = m;
    sol.f = TruncSeries::one(W);
    for (int n = 2; n <= W; ++n) {
        auto wn = words_of(n);
        int cols = (int)wn.size();
        std::map<Word, int> col_of;
        for (int i = 0; i < cols; ++i) col_of[wn[(size_t)i]] = i;
        std::vector<std::vector<Rat>> rows;
        auto new_row = [&]() -> std::vector<Rat>& {
            rows.emplace_back((size_t)cols + 1, Rat(0));
            return rows.back();
        };
        // grouplike rows
        for (int a = 1; 2 * a <= n; ++a) {
            int b = n - a;
            for (auto& u : words_of(a))
                for (auto& v : words_of(b)) {
                    if (a == b && v < u) continue;
                    auto& row = new_row();
                    for (auto& [w, c] : shuffle_words(u, v).t) row[(size_t)col_of[w]] += c;
                    row[(size_t)cols] = sol.f.coeff(u) * sol.f.coeff(v);
                }
        }
        // known parts at weight n with x_n = 0
        TruncSeries fn = sol.f.with_cutoff(n);
        ELinQ b2 = two_cycle_lhs(fn).parts[(size_t)n];
        ELinQ b3 = hexagon_lhs(fn, m).parts[(size_t)n];
        // 2-cycle rows: x(e0,e1) + x(e1,e0) + b2 = 0
        {
            std::map<Word, std::vector<std::pair<int, Rat>>> rowmap;
            for (int i = 0; i < cols; ++i) {
                const Word& w = wn[(size_t)i];
                rowmap[w].emplace_back(i, Rat(1));
                std::string sw = w.s;
                for (auto& ch : sw) ch = ch == '0' ? '1' : '0';
                rowmap[Word(sw)].emplace_back(i, Rat(1));
            }
            for (auto& w : wn) {
                auto& row = new_row();
                for (auto& [i, c] : rowmap[w]) row[(size_t)i] += c;
                row[(size_t)cols] = -b2.coeff(w);
            }
        }
        // hexagon rows: x(einf,e0) + x(e1,einf) + x(e0,e1) + b3 = 0
        {
            std::map<Word, std::vector<std::pair<int, Rat>>> rowmap;
            for (int i = 0; i < cols; ++i) {
                const Word& w = wn[(size_t)i];
                rowmap[w].emplace_back(i, Rat(1));
                for (auto& [w2, c] : detail::sub_word(w, einf_lin(), e0_lin()).t)
                    rowmap[w2].emplace_back(i, c);
                for (auto& [w2, c] : detail::sub_word(w, e1_lin(), einf_lin()).t)
                    rowmap[w2].emplace_back(i, c);
            }
            for (auto& w : wn) {
                auto& row = new_row();
                auto it = rowmap.find(w);
                if (it != rowmap.end())
                    for (auto& [i, c] : it->second) row[(size_t)i] += c;
                row[(size_t)cols] = -b3.coeff(w);
            }
        }
        std::vector<int> free_cols;
        std::vector<Rat> x;
        try {
            x = detail::solve_pin_free(rows, cols, free_cols);
        } catch (const error&) {
            throw error("solve_cycles: infeasible at weight " + std::to_string(n));
        }
        std::vector<Word> freew;
        for (int c : free_cols) freew.push_back(wn[(size_t)c]);
        sol.free_words.emplace_back(n, std::move(freew));
        for (int i = 0; i < cols; ++i)
            if (!is_zero(x[(size_t)i])) sol.f.parts[(size_t)n].add(wn[(size_t)i], x[(size_t)i]);
    }
    if (!two_cycle_lhs(sol.f).is_zero())
        throw error("solve_cycles: 2-cycle residual nonzero");
    if (!hexagon_lhs(sol.f, m).is_zero())
        throw error("solve_cycles: 3-cycle residual nonzero");
    return sol;
}

} // namespace fmzv
