#pragma once

// Coefficient domains for linear combinations of words: exact rationals,
// truncated polynomials in T, truncated bivariate polynomials in T0,T1,
// and residues mod p^M. All operations are exact; truncation is a ring
// quotient by (T^{D+1}) resp. total degree > D.

#include "fmzv/rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace fmzv {

// ---- univariate Q[T]/(T^{D+1}) ----
struct TPoly {
    int trunc = 0;                 // keep degrees 0..trunc
    std::vector<Rat> c;           // c[i] = coefficient of T^i

    TPoly() = default;
    explicit TPoly(int D) : trunc(D) {}
    TPoly(int D, const Rat& x) : trunc(D) {
        if (!fmzv::is_zero(x)) c.assign(1, x);
    }
    static TPoly var(int D, const Rat& scale = Rat(1), int deg = 1) {
        TPoly p(D);
        if (deg <= D) {
            p.c.assign(deg + 1, Rat(0));
            p.c[deg] = scale;
        }
        return p;
    }
    void shrink() {
        while (!c.empty() && fmzv::is_zero(c.back())) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    Rat coeff(int i) const { return i < (int)c.size() ? c[i] : Rat(0); }

    friend TPoly operator+(const TPoly& a, const TPoly& b) {
        TPoly r(std::max(a.trunc, b.trunc));
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff((int)i) + b.coeff((int)i);
        r.shrink();
        return r;
    }
    friend TPoly operator-(const TPoly& a, const TPoly& b) {
        TPoly r(std::max(a.trunc, b.trunc));
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff((int)i) - b.coeff((int)i);
        r.shrink();
        return r;
    }
    TPoly operator-() const {
        TPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        TPoly r(std::max(a.trunc, b.trunc));
        if (a.c.empty() || b.c.empty()) return r;
        r.c.assign(std::min((size_t)r.trunc + 1, a.c.size() + b.c.size() - 1), Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (fmzv::is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size() && i + j <= (size_t)r.trunc; ++j)
                r.c[i + j] += a.c[i] * b.c[j];
        }
        r.shrink();
        return r;
    }
    friend bool operator==(const TPoly& a, const TPoly& b) {
        size_t n = std::max(a.c.size(), b.c.size());
        for (size_t i = 0; i < n; ++i)
            if (a.coeff((int)i) != b.coeff((int)i)) return false;
        return true;
    }
    std::string str() const {
        if (c.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c.size(); ++i) {
            if (fmzv::is_zero(c[i])) continue;
            if (!first) os << " + ";
            os << to_string(c[i]);
            if (i >= 1) os << "*T";
            if (i >= 2) os << "^" << i;
            first = false;
        }
        return os.str();
    }
};

inline bool is_zero(const TPoly& x) { return x.is_zero(); }
inline std::string to_string(const TPoly& x) { return x.str(); }

// ---- bivariate Q[T0,T1] truncated at total degree D ----
struct T2Poly {
    int trunc = 0;
    std::map<std::pair<int, int>, Rat> c; // (deg T0, deg T1) -> coeff

    T2Poly() = default;
    explicit T2Poly(int D) : trunc(D) {}
    T2Poly(int D, const Rat& x) : trunc(D) {
        if (!fmzv::is_zero(x)) c[{0, 0}] = x;
    }
    static T2Poly var0(int D, const Rat& s = Rat(1)) {
        T2Poly p(D);
        if (D >= 1) p.c[{1, 0}] = s;
        return p;
    }
    static T2Poly var1(int D, const Rat& s = Rat(1)) {
        T2Poly p(D);
        if (D >= 1) p.c[{0, 1}] = s;
        return p;
    }
    bool is_zero() const { return c.empty(); }
    void add(std::pair<int, int> m, const Rat& x) {
        if (m.first + m.second > trunc) return;
        auto it = c.find(m);
        if (it == c.end()) {
            if (!fmzv::is_zero(x)) c.emplace(m, x);
        } else {
            it->second += x;
            if (fmzv::is_zero(it->second)) c.erase(it);
        }
    }
    friend T2Poly operator+(const T2Poly& a, const T2Poly& b) {
        T2Poly r = a;
        r.trunc = std::max(a.trunc, b.trunc);
        for (auto& [m, x] : b.c) r.add(m, x);
        return r;
    }
    friend T2Poly operator-(const T2Poly& a, const T2Poly& b) {
        T2Poly r = a;
        r.trunc = std::max(a.trunc, b.trunc);
        for (auto& [m, x] : b.c) r.add(m, -x);
        return r;
    }
    T2Poly operator-() const {
        T2Poly r = *this;
        for (auto& [m, x] : r.c) x = -x;
        return r;
    }
    friend T2Poly operator*(const T2Poly& a, const T2Poly& b) {
        T2Poly r(std::max(a.trunc, b.trunc));
        for (auto& [ma, xa] : a.c)
            for (auto& [mb, xb] : b.c)
                r.add({ma.first + mb.first, ma.second + mb.second}, xa * xb);
        return r;
    }
    friend bool operator==(const T2Poly& a, const T2Poly& b) { return a.c == b.c; }
    std::string str() const {
        if (c.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, x] : c) {
            if (!first) os << " + ";
            os << to_string(x);
            if (m.first) os << "*T0^" << m.first;
            if (m.second) os << "*T1^" << m.second;
            first = false;
        }
        return os.str();
    }
};

inline bool is_zero(const T2Poly& x) { return x.is_zero(); }
inline std::string to_string(const T2Poly& x) { return x.str(); }

// ---- Z/p^M ----
struct ModPM {
    Int pm = 0;  // modulus p^M; 0 means "unset", acts as exact integer 0 context
    Int r = 0;

    ModPM() = default;
    ModPM(const Int& modulus, const Int& value) : pm(modulus) {
        r = value % pm;
        if (r < 0) r += pm;
    }
    static ModPM make(long p, int M, const Rat& x) {
        Int pm = ipow(Int(p), (unsigned long)M);
        Int den = x.get_den(), inv;
        if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t()))
            throw error("ModPM: non-unit denominator");
        return ModPM(pm, x.get_num() * inv);
    }
    bool is_zero() const { return r == 0; }
    friend ModPM operator+(const ModPM& a, const ModPM& b) { return ModPM(a.pm != 0 ? a.pm : b.pm, a.r + b.r); }
    friend ModPM operator-(const ModPM& a, const ModPM& b) { return ModPM(a.pm != 0 ? a.pm : b.pm, a.r - b.r); }
    friend ModPM operator*(const ModPM& a, const ModPM& b) { return ModPM(a.pm != 0 ? a.pm : b.pm, a.r * b.r); }
    ModPM operator-() const { return pm != 0 ? ModPM(pm, -r) : ModPM(); }
    friend bool operator==(const ModPM& a, const ModPM& b) { return a.r == b.r && (a.pm == b.pm || a.pm == 0 || b.pm == 0); }
    std::string str() const { return r.get_str() + " (mod " + pm.get_str() + ")"; }
};

inline bool is_zero(const ModPM& x) { return x.is_zero(); }
inline std::string to_string(const ModPM& x) { return x.str(); }

// scalar constructors used by generic code
template <class R> R ring_from(const Rat& x);
template <> inline Rat ring_from<Rat>(const Rat& x) { return x; }

} // namespace fmzv
