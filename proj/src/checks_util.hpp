#pragma once

// shared helpers for the identity checkers

#include "fmzv/checks.hpp"
#include "fmzv/harmonic.hpp"
#include "fmzv/padic.hpp"
#include "fmzv/series.hpp"

#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace fmzv::checks {

inline YLinQ ylin_from_elin(const ELinQ& x) {
    YLinQ r;
    for (auto& [w, c] : x.t) r.add(word_to_comp(w), c);
    return r;
}
inline ELinQ elin_from_ylin(const YLinQ& x) {
    ELinQ r;
    for (auto& [c, k] : x.t) r.add(comp_to_word(c), k);
    return r;
}

// w(e0+e1,-e1) expanded over compositions
inline YLinQ tau_comps(const Composition& c) {
    return ylin_from_elin(dual_substitute(ELinQ::unit(comp_to_word(c), Rat(1))));
}

// (iota_{*,T=t} o inv)(c) truncated by total weight
inline YLinQ itilde(const Composition& c, const Rat& t, int wmax) {
    Rat sign = c.weight() % 2 ? Rat(-1) : Rat(1);
    return sign * iota_star_T(c.reversed(), t, wmax);
}

// shuffle of two compositions, expressed over compositions
inline YLinQ shuffle_comps(const Composition& a, const Composition& b) {
    YLinQ r;
    for (auto& [w, m] : shuffle_words(comp_to_word(a), comp_to_word(b)).t)
        r.add(word_to_comp(w), m);
    return r;
}

// per-(p,k) evaluator for zeta_{f^{-k}}; exact rationals for small p^k, the
// precision-tracked p-adic table otherwise
class FiniteEval {
  public:
    FiniteEval(long p, int k, const std::vector<Composition>& indices, int abs_target)
        : p_(p), k_(k) {
        pk_ = 1;
        for (int i = 0; i < k; ++i) pk_ *= p;
        int maxwt = 0;
        for (auto& c : indices) maxwt = std::max(maxwt, c.weight());
        prec_ = abs_target + (k - 1) * maxwt + 4;
        if (pk_ <= 400) exact_.emplace(pk_, indices);
        else padic_.emplace(p, k, indices, prec_);
    }
    long p() const { return p_; }
    long pk() const { return pk_; }
    PadicTrunc zeta(const Composition& c) const {
        if (exact_) return PadicTrunc::from_rat(zeta_exact(*exact_, pk_, c), p_, prec_);
        return padic_->zeta(c);
    }
    PadicTrunc zeta(const YLinQ& x) const {
        PadicTrunc r = PadicTrunc::zero(p_, prec_);
        for (auto& [c, k] : x.t) r = r + PadicTrunc::from_rat(k, p_, prec_) * zeta(c);
        return r;
    }

  private:
    long p_, pk_;
    int k_, prec_;
    std::optional<HarmonicTable> exact_;
    std::optional<PadicHarmonic> padic_;
};

inline std::vector<Composition> collect_indices(const std::vector<YLinQ>& lins) {
    std::set<Composition> idx;
    for (auto& x : lins)
        for (auto& [c, k] : x.t) idx.insert(c);
    return {idx.begin(), idx.end()};
}

template <class... Args>
std::string fmt(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

inline void push(std::vector<Verdict>& out, const std::string& law, const std::string& params,
                 bool ok, const std::string& wit = {}) {
    out.push_back(ok ? Verdict::ok(law, params) : Verdict::fail(law, params, wit));
}

} // namespace fmzv::checks
