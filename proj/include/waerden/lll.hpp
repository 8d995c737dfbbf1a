#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "waerden/core.hpp"
#include "waerden/lognumber.hpp"

namespace waerden {

/// Parameters of the random (red, blue)-coloring: each position is red with
/// probability p_red = 1 - k^(alpha-1) where alpha = 1/(2m lnln k), natural
/// logarithms throughout.  In the regime the formulas target, p_red lies in
/// (0, 1); tiny k can push the closed form outside [0, 1], in which case
/// sampling degenerates gracefully to a constant color (the comparison
/// u < p_red never or always fires) and every operation stays well defined.
struct SampleParams {
    int k = 0;
    int m = 0;
    double alpha = 0.0;
    double p_red = 0.0;
    std::uint64_t seed = 0;
};

inline SampleParams make_sample_params(int k, int m, std::uint64_t seed) {
    if (k < 3) throw std::invalid_argument("make_sample_params: need k >= 3 so lnln k > 0");
    if (m < 1) throw std::invalid_argument("make_sample_params: need m >= 1");
    SampleParams p;
    p.k = k;
    p.m = m;
    p.seed = seed;
    p.alpha = 1.0 / (2.0 * m * std::log(std::log(static_cast<double>(k))));
    p.p_red = 1.0 - std::pow(static_cast<double>(k), p.alpha - 1.0);
    return p;
}

/// One resampling action: the first violating progression in (diff, first,
/// kind) order, red before blue on ties, together with the round's total
/// violation count.  Emitted to observers just after its elements were
/// recolored.
struct ResampleStep {
    std::uint64_t round = 0;  // 1-based resample index
    char kind = 'r';          // 'r': red k-AP; 'b': blue m-AP
    int first = 0;
    int diff = 0;
    int length = 0;
    int violations = 0;  // all violating progressions seen this round
};

struct ResampleReport {
    bool success = false;
    std::uint64_t rounds = 0;                 // resamples performed
    std::optional<Coloring> final_coloring;   // present iff success
    std::vector<int> violations_history;      // count before each resample
};

using ResampleObserver = std::function<void(const ResampleStep&, const Coloring&)>;

namespace detail {

/// 53-bit uniform draw in [0, 1).
inline double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

inline void draw_color(Coloring& c, int pos, double p_red, std::mt19937_64& rng) {
    c.set_color(pos, u01(rng) < p_red ? 0 : 1);
}

/// Scans all red k-APs and blue m-APs in (diff, first, kind) order, red
/// before blue on equal (diff, first).  Returns the first violation and the
/// total count.
struct ViolationScan {
    std::optional<ResampleStep> first;
    int count = 0;
};

inline bool mono_at(const Coloring& c, int a, int d, int len, int color) {
    if (a + (len - 1) * d > c.n) return false;
    for (int j = 0; j < len; ++j)
        if (c.color(a + j * d) != color) return false;
    return true;
}

inline ViolationScan scan_violations(const Coloring& c, int k, int m) {
    ViolationScan out;
    auto note = [&out](char kind, int a, int d, int len) {
        ++out.count;
        if (!out.first) {
            ResampleStep step;
            step.kind = kind;
            step.first = a;
            step.diff = d;
            step.length = len;
            out.first = step;
        }
    };
    // A length-1 requirement is violated by any occurrence of the color;
    // these come first, by position, matching find_mixed_violation.
    if (m == 1) {
        for (int pos = 1; pos <= c.n; ++pos)
            if (c.color(pos) == 1) note('b', pos, 0, 1);
    }
    for (int d = 1; d <= c.n - 1; ++d) {
        for (int a = 1; a + d <= c.n; ++a) {
            if (mono_at(c, a, d, k, 0)) note('r', a, d, k);
            if (m >= 2 && mono_at(c, a, d, m, 1)) note('b', a, d, m);
        }
    }
    return out;
}

}  // namespace detail

/// Independently colors [1, n] red (color 0) with probability p.p_red, blue
/// (color 1) otherwise, from a deterministic stream seeded by p.seed.
inline Coloring sample_coloring(const SampleParams& p, int n) {
    if (p.k < 3) throw std::invalid_argument("sample_coloring: need k >= 3");
    if (n < 1) throw std::invalid_argument("sample_coloring: need n >= 1");
    std::mt19937_64 rng(p.seed);
    Coloring c(n, 2);
    for (int pos = 1; pos <= n; ++pos) detail::draw_color(c, pos, p.p_red, rng);
    return c;
}

/// Resampling realization of the Local Lemma coloring: sample [1, n], then
/// while some red k-AP or blue m-AP exists, recolor the elements of the
/// first violating progression in (diff, first, kind) order from the
/// continuing random stream.  The report is a pure function of
/// (params, n, max_rounds); a reported success is re-verified through
/// find_mixed_violation rather than trusted.
inline ResampleReport lll_resample(const SampleParams& p, int n, std::uint64_t max_rounds,
                                   const ResampleObserver& observer = {}) {
    if (p.k < 3) throw std::invalid_argument("lll_resample: need k >= 3");
    if (p.m < 1) throw std::invalid_argument("lll_resample: need m >= 1");
    if (n < 1) throw std::invalid_argument("lll_resample: need n >= 1");
    if (max_rounds < 1) throw std::invalid_argument("lll_resample: need max_rounds >= 1");

    std::mt19937_64 rng(p.seed);
    Coloring c(n, 2);
    for (int pos = 1; pos <= n; ++pos) detail::draw_color(c, pos, p.p_red, rng);

    ResampleReport report;
    while (report.rounds < max_rounds) {
        const auto scan = detail::scan_violations(c, p.k, p.m);
        if (!scan.first) break;
        report.violations_history.push_back(scan.count);
        ResampleStep step = *scan.first;
        step.round = ++report.rounds;
        step.violations = scan.count;
        for (int j = 0; j < step.length; ++j)
            detail::draw_color(c, step.first + j * step.diff, p.p_red, rng);
        if (observer) observer(step, c);
    }
    report.success = !find_mixed_violation(c, {p.k, p.m}).has_value();
    if (report.success) report.final_coloring = c;
    return report;
}

struct Thm25Conditions {
    bool cond5 = false;                 // k^(1/(2m lnln k)) > (m - 1/(2 lnln k)) ln k
    bool cond6 = false;                 // 6 < ln k / lnln k
    LogNumber sufficient_threshold;     // e^(e^(m^3))
};

/// Evaluates the two feasibility inequalities behind the sampling argument
/// (natural logarithms) plus the sufficient-size threshold e^(e^(m^3)).
inline Thm25Conditions thm25_conditions(int k, int m) {
    if (k < 3) throw std::invalid_argument("thm25_conditions: need k >= 3 so lnln k > 0");
    if (m < 3) throw std::invalid_argument("thm25_conditions: need m >= 3");
    const double lnk = std::log(static_cast<double>(k));
    const double lnlnk = std::log(lnk);
    Thm25Conditions out;
    const double lhs_ln = lnk / (2.0 * m * lnlnk);
    const double rhs = (m - 1.0 / (2.0 * lnlnk)) * lnk;
    out.cond5 = rhs <= 0.0 || lhs_ln > std::log(rhs);
    out.cond6 = 6.0 < lnk / lnlnk;
    const double cube = static_cast<double>(m) * m * m;
    out.sufficient_threshold = LogNumber::tower(std::exp(1.0), 2, cube);
    return out;
}

}  // namespace waerden
