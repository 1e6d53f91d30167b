#pragma once

// Structured outcome of one identity check, plus deterministic report
// serialization (JSON + CSV summary). Reports exclude timings so identical
// (config, seed) runs are byte-identical; wall-clock goes to stderr.

#include "fmzv/rational.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace fmzv {

struct Verdict {
    std::string law;
    std::string params;
    bool pass = false;
    std::string witness; // first differing coefficient/residue when failing

    static Verdict ok(std::string law, std::string params) {
        return {std::move(law), std::move(params), true, {}};
    }
    static Verdict fail(std::string law, std::string params, std::string wit) {
        return {std::move(law), std::move(params), false, std::move(wit)};
    }
};

inline void sort_verdicts(std::vector<Verdict>& vs) {
    std::sort(vs.begin(), vs.end(), [](const Verdict& a, const Verdict& b) {
        if (a.law != b.law) return a.law < b.law;
        return a.params < b.params;
    });
}

inline size_t count_failures(const std::vector<Verdict>& vs) {
    size_t n = 0;
    for (auto& v : vs)
        if (!v.pass) ++n;
    return n;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += ch;
        }
    }
    return out;
}

inline std::string verdicts_to_json(std::vector<Verdict> vs) {
    sort_verdicts(vs);
    std::ostringstream os;
    os << "[\n";
    for (size_t i = 0; i < vs.size(); ++i) {
        os << "  {\"law\": \"" << json_escape(vs[i].law) << "\", \"params\": \""
           << json_escape(vs[i].params) << "\", \"status\": \"" << (vs[i].pass ? "pass" : "fail")
           << "\"";
        if (!vs[i].pass) os << ", \"witness\": \"" << json_escape(vs[i].witness) << "\"";
        os << "}" << (i + 1 < vs.size() ? "," : "") << "\n";
    }
    os << "]\n";
    return os.str();
}

inline std::string verdicts_to_csv(std::vector<Verdict> vs) {
    sort_verdicts(vs);
    std::map<std::string, std::pair<size_t, size_t>> per_law; // law -> (instances, failures)
    for (auto& v : vs) {
        auto& e = per_law[v.law];
        ++e.first;
        if (!v.pass) ++e.second;
    }
    std::ostringstream os;
    os << "law,instances,failures\n";
    for (auto& [law, e] : per_law) os << law << "," << e.first << "," << e.second << "\n";
    return os.str();
}

} // namespace fmzv
