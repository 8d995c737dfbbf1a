#pragma once

#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "waerden/lognumber.hpp"
#include "waerden/problem.hpp"

namespace waerden {

/// Stand-ins for the unspecified positive constants appearing in several
/// bounds.  Defaults of 1 make the formulas concrete; entries carrying them
/// are labeled constant-dependent and their anchor comparisons are
/// informational only.
struct BoundConstants {
    double c = 1.0;
    double d = 1.0;

    bool valid() const { return c > 0 && d > 0; }
};

enum class BoundKind { Lower, Upper };

struct AnchorComparison {
    long long exact = 0;
    bool consistent = false;    // Lower: bound <= exact; Upper: bound >= exact
    bool informational = false; // true when the bound depends on a chosen constant
};

/// Structural form of an iterated exponential, kept so towers can be
/// reported without being materialized.
struct TowerDescriptor {
    int base = 2;
    int height = 0;
    double top = 0;
};

struct BoundEntry {
    std::string name;
    BoundKind kind = BoundKind::Lower;
    std::string statement;
    ProblemSpec subject;
    bool applicable = true;
    bool constant_dependent = false;
    std::optional<LogNumber> value;
    std::optional<TowerDescriptor> tower;
    std::optional<AnchorComparison> anchor;
    std::string note;
};

struct BoundReport {
    std::vector<BoundEntry> entries;
};

/// Resolves an exact value for a spec, if one is known (cache or reference).
using ExactLookup = std::function<std::optional<long long>(const ProblemSpec&)>;

namespace detail {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline std::string fmt(const char* pattern, long long a, long long b = 0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

inline void attach_anchor(BoundEntry& e, const ExactLookup& exact) {
    if (!e.applicable || !e.value || !exact) return;
    auto known = exact(e.subject);
    if (!known) return;
    const LogNumber ex = LogNumber::from_value(static_cast<double>(*known));
    AnchorComparison cmp;
    cmp.exact = *known;
    cmp.consistent = e.kind == BoundKind::Lower ? *e.value <= ex : *e.value >= ex;
    cmp.informational = e.constant_dependent;
    e.anchor = cmp;
}

}  // namespace detail

/// Every closed-form lower bound, evaluated at (k, mors) where each formula
/// reads the second parameter in its own role (m or s).  Inapplicable
/// entries are flagged, never omitted.
inline BoundReport lower_bounds(int k, int mors, BoundConstants consts = {},
                                const ExactLookup& exact = {}) {
    if (!consts.valid()) throw std::invalid_argument("lower_bounds: constants must be positive");
    BoundReport report;

    {
        BoundEntry e;
        e.name = "berlekamp";
        e.kind = BoundKind::Lower;
        e.subject = ProblemSpec::mixed({k, k});
        e.statement = detail::fmt("(k-1)*2^(k-1) <= w(k,k) at k=%lld", k);
        e.applicable = k >= 2 && detail::is_prime(k - 1);
        if (!e.applicable) e.note = "requires k-1 prime";
        if (e.applicable)
            e.value = LogNumber::from_ln(std::log(static_cast<double>(k - 1)) +
                                         (k - 1) * std::log(2.0));
        report.entries.push_back(e);
    }
    {
        BoundEntry e;
        e.name = "wdiag_lower_rankin";
        e.kind = BoundKind::Lower;
        e.subject = ProblemSpec::diagonal(k, mors);
        const int z = k >= 1 ? std::bit_width(static_cast<unsigned>(k)) - 1 : 0;
        e.statement = detail::fmt("w(k;s) > s^(d*(log s)^z), z=floor(log2 k)=%lld at k=%lld", z, k);
        e.constant_dependent = true;
        e.applicable = k >= 3 && mors >= 2;
        e.note = "holds for sufficiently large s";
        if (e.applicable)
            e.value = LogNumber::from_ln(consts.d * std::pow(std::log(static_cast<double>(mors)),
                                                             static_cast<double>(z + 1)));
        report.entries.push_back(e);
    }
    {
        BoundEntry e;
        e.name = "w_lower_lll";
        e.kind = BoundKind::Lower;
        e.subject = ProblemSpec::mixed({k, mors});
        e.statement = detail::fmt("w(k,m) > k^(m-1-1/(log log k)) at k=%lld, m=%lld", k, mors);
        e.applicable = k >= 3 && mors >= 3;
        e.note = "proved for fixed m and sufficiently large k";
        if (e.applicable) {
            const double lnk = std::log(static_cast<double>(k));
            e.value = LogNumber::from_ln((mors - 1 - 1.0 / std::log(lnk)) * lnk);
        }
        report.entries.push_back(e);
    }
    {
        BoundEntry e;
        e.name = "alon_zaks";
        e.kind = BoundKind::Lower;
        e.subject = ProblemSpec::g(k, mors);
        e.statement = detail::fmt("G(k,s) > s^(k-c*sqrt(k)) at k=%lld, s=%lld", k, mors);
        e.constant_dependent = true;
        e.applicable = k >= 3 && mors >= 2;
        e.note = "the constant c depends on s";
        if (e.applicable)
            e.value = LogNumber::from_ln((k - consts.c * std::sqrt(static_cast<double>(k))) *
                                         std::log(static_cast<double>(mors)));
        report.entries.push_back(e);
    }
    {
        BoundEntry e;
        e.name = "graham_lower";
        e.kind = BoundKind::Lower;
        e.subject = ProblemSpec::w1(3, mors);
        e.statement = detail::fmt("s^(c*log s) < w1(3,s) at s=%lld", mors);
        e.constant_dependent = true;
        e.applicable = mors >= 2;
        if (e.applicable) {
            const double lns = std::log(static_cast<double>(mors));
            e.value = LogNumber::from_ln(consts.c * lns * lns);
        }
        report.entries.push_back(e);
    }

    for (auto& e : report.entries) detail::attach_anchor(e, exact);
    return report;
}

/// Every closed-form upper bound, evaluated at kors where each formula
/// reads the parameter in its own role (k or s).
inline BoundReport upper_bounds(int kors, BoundConstants consts = {},
                                const ExactLookup& exact = {}) {
    if (!consts.valid()) throw std::invalid_argument("upper_bounds: constants must be positive");
    BoundReport report;
    const double lnp = std::log(static_cast<double>(kors));

    {
        BoundEntry e;
        e.name = "w1_upper_green_tao";
        e.kind = BoundKind::Upper;
        e.subject = ProblemSpec::w1(4, kors);
        e.statement = detail::fmt("w1(4,s) < e^(s^(c*log s)) at s=%lld", kors);
        e.constant_dependent = true;
        e.applicable = kors >= 2;
        e.note = "the proof pins d = c^(-2) to the r_4 density constant; recorded symbolically";
        if (e.applicable)
            e.value = LogNumber::exp_of(LogNumber::power(kors, consts.c * lnp));
        report.entries.push_back(e);
    }
    {
        BoundEntry e;
        e.name = "w_upper_green_tao";
        e.kind = BoundKind::Upper;
        e.subject = ProblemSpec::mixed({kors, 4});
        e.statement = detail::fmt("w(k,4) < e^(k^(d*log k)) at k=%lld", kors);
        e.constant_dependent = true;
        e.applicable = kors >= 2;
        if (e.applicable)
            e.value = LogNumber::exp_of(LogNumber::power(kors, consts.d * lnp));
        report.entries.push_back(e);
    }
    {
        BoundEntry e;
        e.name = "wdiag_upper_green_tao";
        e.kind = BoundKind::Upper;
        e.subject = ProblemSpec::diagonal(4, kors);
        e.statement = detail::fmt("w(4;s) < e^(s^(d*log s)) at s=%lld", kors);
        e.constant_dependent = true;
        e.applicable = kors >= 2;
        if (e.applicable)
            e.value = LogNumber::exp_of(LogNumber::power(kors, consts.d * lnp));
        report.entries.push_back(e);
    }
    {
        BoundEntry e;
        e.name = "graham_upper";
        e.kind = BoundKind::Upper;
        e.subject = ProblemSpec::w1(3, kors);
        e.statement = detail::fmt("w1(3,s) < s^(d*s^2) at s=%lld", kors);
        e.constant_dependent = true;
        e.applicable = kors >= 2;
        if (e.applicable)
            e.value = LogNumber::from_ln(consts.d * kors * static_cast<double>(kors) * lnp);
        report.entries.push_back(e);
    }
    {
        BoundEntry e;
        e.name = "gowers";
        e.kind = BoundKind::Upper;
        e.subject = ProblemSpec::mixed({kors, kors});
        e.statement = detail::fmt("w(k,k) < 2^2^2^2^2^(k+9) at k=%lld", kors);
        e.applicable = kors >= 2;
        if (e.applicable) {
            e.tower = TowerDescriptor{2, 5, static_cast<double>(kors + 9)};
            e.value = LogNumber::tower(2, 5, static_cast<double>(kors + 9));
        }
        report.entries.push_back(e);
    }

    for (auto& e : report.entries) detail::attach_anchor(e, exact);
    return report;
}

/// Analytic facts used as ingredients; reported as text, never verified.
struct ImportedFormula {
    std::string name;
    std::string text;
};

inline std::vector<ImportedFormula> imported_formulas() {
    return {
        {"r4_density", "r_4(n) < n*e^(-c*sqrt(log log n)) for all n >= 3"},
        {"hypergraph_chi", "chi_k(n) < (2*n*log n / r_k(n))*(1+o(1))"},
        {"rankin_density", "r_k(n) > n*e^(-c*(log n)^(1/(z+1))), z = floor(log2 k)"},
    };
}

}  // namespace waerden
