#pragma once

#include "fmzv/rational.hpp"

namespace fmzv {

struct RunConfig {
    int wmax = 5;        // weight bound for word grids
    int tdeg = 5;        // truncation degree for formal T
    long p_lo = 2;       // prime window a..b (inclusive); the weight+1
    long p_hi = 50;      //   exclusion is applied per law unless allow_small
    bool allow_small_primes = false;
    int k = 1;           // Frobenius power for finite laws (checks use 1..k)
    int padic_M = 4;     // p-adic precision for mod-p^M laws
    uint64_t seed = 1;
    int n_max = 100;     // exact-table bound for stuffle-type laws
    int jobs = 1;
    int solver_cap = 8;

    void validate() const {
        if (wmax < 1 || tdeg < 0 || padic_M < 1 || n_max < 2 || jobs < 1)
            throw error("config: bounds must be positive");
        if (p_lo < 2 || p_hi < p_lo) throw error("config: bad prime window");
    }
    std::vector<long> window(int weight_excl) const {
        std::vector<long> out;
        for (long p : primes_in(p_lo, p_hi))
            if (allow_small_primes || p > weight_excl + 1) out.push_back(p);
        return out;
    }
};

} // namespace fmzv
