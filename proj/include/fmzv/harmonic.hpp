#pragma once

// Exact multiple harmonic sums H_n(c) for 1 <= n <= N over an index set
// closed under dropping the leftmost part:
//   H_1(c) = 0 for nonempty c, H_n(empty) = 1,
//   H_{n+1}(s_d,...,s_1) = H_n(s_d,...,s_1) + H_n(s_{d-1},...,s_1)/n^{s_d}.

#include "fmzv/lincomb.hpp"

#include <set>

namespace fmzv {

class HarmonicTable {
  public:
    HarmonicTable(long N, std::vector<Composition> indices) : N_(N) {
        std::set<Composition> idx(indices.begin(), indices.end());
        idx.insert(Composition());
        for (bool grew = true; grew;) {
            grew = false;
            for (auto& c : std::vector<Composition>(idx.begin(), idx.end()))
                if (!c.empty() && idx.insert(c.drop_top()).second) grew = true;
        }
        for (auto& c : idx) tab_.emplace(c, std::vector<Rat>((size_t)N + 1, Rat(0)));
        auto& unit = tab_.at(Composition());
        for (long n = 1; n <= N; ++n) unit[(size_t)n] = Rat(1);
        // fill by increasing n; within one n any order works since only
        // H_n-values feed H_{n+1}
        std::vector<const Composition*> order;
        for (auto& [c, v] : tab_)
            if (!c.empty()) order.push_back(&c);
        for (long n = 1; n < N; ++n) {
            Rat np(n);
            for (auto* c : order) {
                Rat drop = tab_.at(c->drop_top())[(size_t)n];
                Rat& next = tab_.at(*c)[(size_t)n + 1];
                next = tab_.at(*c)[(size_t)n];
                if (!is_zero(drop)) next += drop / rpow(np, c->parts[0]);
            }
        }
    }

    long nmax() const { return N_; }
    bool has(const Composition& c) const { return tab_.count(c) != 0; }
    const Rat& H(long n, const Composition& c) const {
        if (n < 1 || n > N_) throw error("HarmonicTable: n out of range");
        auto it = tab_.find(c);
        if (it == tab_.end()) throw error("HarmonicTable: index not in table: " + c.str());
        return it->second[(size_t)n];
    }
    Rat H(long n, const YLinQ& x) const {
        Rat r(0);
        for (auto& [c, k] : x.t) r += k * H(n, c);
        return r;
    }
    // Taylor coefficient c_n of Li_c: H_n(drop)/n^{s_top}; zero for n<1
    Rat li_coeff(long n, const Composition& c) const {
        if (c.empty()) throw error("li_coeff of empty index");
        if (n < 1) return Rat(0);
        Rat drop = H(n, c.drop_top());
        if (is_zero(drop)) return Rat(0);
        return drop / rpow(Rat(n), c.parts[0]);
    }
    std::vector<Composition> indices() const {
        std::vector<Composition> out;
        for (auto& [c, v] : tab_) out.push_back(c);
        return out;
    }

  private:
    long N_;
    std::map<Composition, std::vector<Rat>> tab_;
};

// zeta_{f^{-k}}(c) = (p^k)^{wt(c)} H_{p^k}(c) as an exact rational; the table
// must have been built with N = p^k.
inline Rat zeta_exact(const HarmonicTable& ht, long pk, const Composition& c) {
    return rpow(Rat(pk), c.weight()) * ht.H(pk, c);
}
inline Rat zeta_exact(const HarmonicTable& ht, long pk, const YLinQ& x) {
    Rat r(0);
    for (auto& [c, k] : x.t) r += k * zeta_exact(ht, pk, c);
    return r;
}

// expansion of 1/(1+y_1) = sum_l (-1)^l y_1^l up to l = lmax
inline YLinQ one_over_one_plus_y1(int lmax) {
    YLinQ r;
    for (int l = 0; l <= lmax; ++l)
        r.add(Composition(std::vector<int>((size_t)l, 1)), Rat(l % 2 ? -1 : 1));
    return r;
}

} // namespace fmzv
