#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "waerden/problem.hpp"

namespace waerden {

/// One published value.  `exact` is false for entries recorded only as a
/// lower bound (the value then is that bound, not the function's value).
struct ReferenceValue {
    ProblemSpec spec;
    long long value = 0;
    bool exact = true;
};

/// The published small-value dataset: the classical table of G, w, M, w1,
/// w*, and w(k;s) at k = 3, plus the known diagonal values.  Read-only;
/// kept separate from anything computed locally so comparisons against the
/// published record stay explicit.
inline const std::vector<ReferenceValue>& reference_values() {
    static const std::vector<ReferenceValue> table = [] {
        std::vector<ReferenceValue> v;
        const auto row = [&v](auto make, std::initializer_list<long long> vals, int s0 = 2) {
            int s = s0;
            for (long long x : vals) v.push_back({make(s++), x, true});
        };
        row([](int s) { return ProblemSpec::g(3, s); }, {5, 9, 11, 17, 22, 33, 37, 48});
        row([](int s) { return ProblemSpec::mixed({3, s}); },
            {6, 9, 18, 22, 32, 46, 58, 77, 97, 114, 135, 160, 186, 218, 238});
        row([](int s) { return ProblemSpec::m(3, s); }, {7, 11, 18, 29, 37, 48});
        row([](int s) { return ProblemSpec::w1(3, s); }, {9, 23, 34, 73, 113, 193});
        row([](int s) { return ProblemSpec::star(3, s); }, {9, 23, 40});
        v.push_back({ProblemSpec::star(3, 5), 75, false});  // published as ">= 75"
        row([](int s) { return ProblemSpec::diagonal(3, s); }, {9, 27, 76});
        v.push_back({ProblemSpec::mixed({4, 4}), 35, true});
        v.push_back({ProblemSpec::mixed({5, 5}), 178, true});
        v.push_back({ProblemSpec::mixed({6, 6}), 1132, true});
        v.push_back({ProblemSpec::diagonal(4, 2), 35, true});
        v.push_back({ProblemSpec::diagonal(5, 2), 178, true});
        v.push_back({ProblemSpec::diagonal(6, 2), 1132, true});
        return v;
    }();
    return table;
}

/// Exact published value for a spec, if the dataset has one.
inline std::optional<long long> reference_lookup(const ProblemSpec& spec) {
    static const std::unordered_map<std::string, long long> index = [] {
        std::unordered_map<std::string, long long> m;
        for (const auto& r : reference_values())
            if (r.exact) m.emplace(r.spec.cache_key(), r.value);
        return m;
    }();
    auto it = index.find(spec.cache_key());
    if (it == index.end()) return std::nullopt;
    return it->second;
}

}  // namespace waerden
