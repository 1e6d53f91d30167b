#pragma once

// Words over {e0,e1} and compositions (s_d,...,s_1), stored with s_d
// leftmost. A composition corresponds to the word e0^{s_d-1} e1 ... e0^{s_1-1} e1
// and to the y-word y_{s_d}...y_{s_1}; the rightmost part s_1 pairs with the
// innermost summation variable of the harmonic sums.

#include "fmzv/rational.hpp"

#include <compare>
#include <numeric>
#include <sstream>

namespace fmzv {

struct Word {
    std::string s; // over '0','1'; "" is the empty word

    Word() = default;
    explicit Word(std::string letters) : s(std::move(letters)) {
        for (char ch : s)
            if (ch != '0' && ch != '1') throw error("word letters must be 0/1: " + s);
    }
    int weight() const { return (int)s.size(); }
    int depth() const { return (int)std::count(s.begin(), s.end(), '1'); }
    bool empty() const { return s.empty(); }
    friend Word operator+(const Word& a, const Word& b) { return Word(a.s + b.s); }
    Word reversed() const { return Word(std::string(s.rbegin(), s.rend())); }
    friend bool operator==(const Word&, const Word&) = default;
    // graded order: weight first, then lexicographic
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.s.size() != b.s.size()) return a.s.size() <=> b.s.size();
        return a.s <=> b.s;
    }
    std::string str() const { return s.empty() ? "(empty)" : s; }
};

inline Word e0() { return Word("0"); }
inline Word e1() { return Word("1"); }

struct Composition {
    std::vector<int> parts; // (s_d,...,s_1), s_d first; empty = depth 0

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x < 1) throw error("composition parts must be positive");
    }
    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int depth() const { return (int)parts.size(); }
    bool empty() const { return parts.empty(); }
    friend Composition operator+(const Composition& a, const Composition& b) {
        std::vector<int> p = a.parts;
        p.insert(p.end(), b.parts.begin(), b.parts.end());
        return Composition(std::move(p));
    }
    Composition reversed() const {
        return Composition(std::vector<int>(parts.rbegin(), parts.rend()));
    }
    // drop the leftmost letter y_{s_d}
    Composition drop_top() const {
        if (parts.empty()) throw error("drop_top of empty composition");
        return Composition(std::vector<int>(parts.begin() + 1, parts.end()));
    }
    friend bool operator==(const Composition&, const Composition&) = default;
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        if (a.weight() != b.weight()) return a.weight() <=> b.weight();
        return a.parts <=> b.parts;
    }
    std::string str() const {
        if (parts.empty()) return "(empty)";
        std::ostringstream os;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) os << ",";
            os << parts[i];
        }
        return os.str();
    }
};

inline Composition comp(std::initializer_list<int> p) { return Composition(std::vector<int>(p)); }

inline Word comp_to_word(const Composition& c) {
    std::string s;
    for (int part : c.parts) {
        s.append((size_t)(part - 1), '0');
        s.push_back('1');
    }
    return Word(std::move(s));
}

inline Composition word_to_comp(const Word& w) {
    if (w.empty()) return Composition();
    if (w.s.back() != '1') throw error("not a convergent-shape word: " + w.s);
    std::vector<int> parts;
    int run = 0;
    for (char ch : w.s) {
        if (ch == '0') ++run;
        else { parts.push_back(run + 1); run = 0; }
    }
    return Composition(std::move(parts));
}

inline Composition parse_composition(const std::string& text) {
    std::vector<int> parts;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        size_t pos = 0;
        int v;
        try { v = std::stoi(item, &pos); } catch (...) { throw error("bad composition: " + text); }
        if (pos != item.size() || v < 1) throw error("bad composition: " + text);
        parts.push_back(v);
    }
    if (parts.empty()) throw error("bad composition: " + text);
    return Composition(std::move(parts));
}

// all compositions of weight w, in graded-lex order
inline std::vector<Composition> compositions_of(int w) {
    if (w == 0) return {Composition()};
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) { out.emplace_back(cur); return; }
        for (int first = 1; first <= rem; ++first) {
            cur.push_back(first);
            self(self, rem - first);
            cur.pop_back();
        }
    };
    rec(rec, w);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Composition> compositions_upto(int wmax, int wmin = 0) {
    std::vector<Composition> out;
    for (int w = wmin; w <= wmax; ++w) {
        auto c = compositions_of(w);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

inline std::vector<Word> words_of(int n) {
    std::vector<Word> out;
    for (long m = 0; m < (1L << n); ++m) {
        std::string s(n, '0');
        for (int i = 0; i < n; ++i)
            if (m & (1L << i)) s[i] = '1';
        out.emplace_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Word> words_upto(int nmax, int nmin = 0) {
    std::vector<Word> out;
    for (int n = nmin; n <= nmax; ++n) {
        auto w = words_of(n);
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

} // namespace fmzv
