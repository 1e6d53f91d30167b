#pragma once

// Bernoulli numbers (B_1 = -1/2 convention) and the power-sum polynomials
// Q_u with Q_u(n) = sum_{0<m<n} m^u.

#include "fmzv/rational.hpp"

#include <mutex>

namespace fmzv {

class BernoulliCache {
  public:
    static const Rat& get(size_t n) {
        static BernoulliCache inst;
        std::lock_guard<std::mutex> lock(inst.mu_);
        while (inst.b_.size() <= n) inst.extend();
        return inst.b_[n];
    }

  private:
    BernoulliCache() { b_.push_back(Rat(1)); }
    void extend() {
        // sum_{k<=n} C(n+1,k) B_k = 0 for n >= 1
        size_t n = b_.size();
        Rat s(0);
        for (size_t k = 0; k < n; ++k) s += Rat(binomial(n + 1, k)) * b_[k];
        b_.push_back(-s / Rat(binomial(n + 1, n)));
    }
    std::vector<Rat> b_;
    std::mutex mu_;
};

inline Rat bernoulli(size_t n) { return BernoulliCache::get(n); }

// Q_u(T) = sum_{k=1}^{u+1} (1/(u+1)) C(u+1,k) B_{u+1-k} T^k; index 0..u+1
inline std::vector<Rat> bernoulli_sum_poly(size_t u) {
    std::vector<Rat> q(u + 2, Rat(0));
    for (size_t k = 1; k <= u + 1; ++k)
        q[k] = Rat(binomial(u + 1, k)) * bernoulli(u + 1 - k) / Rat((long)(u + 1));
    return q;
}

inline Rat eval_poly(const std::vector<Rat>& q, const Rat& x) {
    Rat r(0);
    for (size_t i = q.size(); i-- > 0;) r = r * x + q[i];
    return r;
}

// c_m = zeta(2m)/zeta(2)^m, exact from Bernoulli numbers:
// zeta(2m) = (-1)^{m+1} B_{2m} (2pi)^{2m} / (2 (2m)!)  so the pi powers cancel.
inline Rat even_zeta_ratio(size_t m) {
    auto zeta_even_over_pi = [](size_t mm) {
        Rat num = bernoulli(2 * mm) * rpow(Rat(2), (long)(2 * mm));
        Rat den = Rat(2) * Rat(factorial(2 * mm));
        Rat v = num / den;
        return (mm % 2 == 0) ? -v : v; // (-1)^{m+1}
    };
    return zeta_even_over_pi(m) / rpow(zeta_even_over_pi(1), (long)m);
}

} // namespace fmzv
