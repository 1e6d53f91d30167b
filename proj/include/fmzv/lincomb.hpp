#pragma once

// Finite linear combinations with canonical sorted-key maps, so equality is
// structural. Keys are Words (e-alphabet) or Compositions (y-alphabet).

#include "fmzv/rings.hpp"
#include "fmzv/word.hpp"

#include <map>

namespace fmzv {

template <class K, class R>
struct LinComb {
    std::map<K, R> t;

    LinComb() = default;
    static LinComb unit(const K& k, const R& c) {
        LinComb x;
        if (!is_zero(c)) x.t.emplace(k, c);
        return x;
    }
    bool is_zero() const { return t.empty(); }
    size_t size() const { return t.size(); }

    void add(const K& k, const R& c) {
        if (is_zero(c)) return;
        auto it = t.find(k);
        if (it == t.end()) t.emplace(k, c);
        else {
            it->second = it->second + c;
            if (fmzv::is_zero(it->second)) t.erase(it);
        }
    }
    R coeff(const K& k) const {
        auto it = t.find(k);
        return it == t.end() ? R() : it->second;
    }
    LinComb& operator+=(const LinComb& o) {
        for (auto& [k, c] : o.t) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (auto& [k, c] : o.t) add(k, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }
    LinComb operator-() const {
        LinComb r;
        for (auto& [k, c] : t) r.t.emplace(k, -c);
        return r;
    }
    friend LinComb operator*(const R& s, const LinComb& a) {
        LinComb r;
        if (fmzv::is_zero(s)) return r;
        for (auto& [k, c] : a.t) r.add(k, s * c);
        return r;
    }
    friend bool operator==(const LinComb&, const LinComb&) = default;

    // concatenation product, extended bilinearly
    friend LinComb concat(const LinComb& a, const LinComb& b) {
        LinComb r;
        for (auto& [ka, ca] : a.t)
            for (auto& [kb, cb] : b.t) r.add(ka + kb, ca * cb);
        return r;
    }
    template <class F>
    LinComb<K, R> map_keys(F&& f) const { // f: K -> LinComb with integer-ish coefficients
        LinComb r;
        for (auto& [k, c] : t)
            for (auto& [k2, c2] : f(k).t) r.add(k2, c * c2);
        return r;
    }
    // drop keys with weight above a cutoff
    LinComb truncated(int wmax) const {
        LinComb r;
        for (auto& [k, c] : t)
            if (k.weight() <= wmax) r.t.emplace(k, c);
        return r;
    }
    std::string str() const {
        if (t.empty()) return "0";
        std::string out;
        for (auto& [k, c] : t) {
            if (!out.empty()) out += " + ";
            out += "(" + to_string(c) + ")*" + k.str();
        }
        return out;
    }
};

template <class R> using ELin = LinComb<Word, R>;
template <class R> using YLin = LinComb<Composition, R>;

using ELinQ = ELin<Rat>;
using YLinQ = YLin<Rat>;

template <class K, class R, class R2>
LinComb<K, R2> convert(const LinComb<K, R>& a, const std::function<R2(const R&)>& f) {
    LinComb<K, R2> r;
    for (auto& [k, c] : a.t) r.add(k, f(c));
    return r;
}

} // namespace fmzv
