#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "waerden/problem.hpp"
#include "waerden/search.hpp"
#include "waerden/solver.hpp"

namespace waerden {

// ---------------------------------------------------------------------------
// Inequality harness: instance-checks the known relations between the
// families against already-computed values.  It never solves anything
// itself; a missing value degrades the check to Unknown.
// ---------------------------------------------------------------------------

enum class IneqStatus { Holds, Fails, Unknown };

inline const char* to_string(IneqStatus st) {
    switch (st) {
        case IneqStatus::Holds: return "HOLDS";
        case IneqStatus::Fails: return "FAILS";
        default: return "UNKNOWN";
    }
}

struct InequalityCheck {
    std::string name;
    int k = 0;
    int s = 0;
    std::string statement;
    std::optional<long long> lhs;
    std::optional<long long> rhs;
    IneqStatus status = IneqStatus::Unknown;
    bool informational = false;  // context only; never counted as pass/fail
};

/// Resolves the exact value of a spec from a cache/reference snapshot.
using ValueSource = std::function<std::optional<long long>(const ProblemSpec&)>;

namespace detail {

inline std::string ineq_text(const char* fmt_, long long k, long long s) {
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt_, k, s);
    return buf;
}

}  // namespace detail

/// All implemented relations instantiated at (k, s) for s in [s_lo, s_hi].
inline std::vector<InequalityCheck> check_inequalities(int k, int s_lo, int s_hi,
                                                       const ValueSource& values) {
    if (k < 2 || s_lo < 1 || s_hi < s_lo) throw std::invalid_argument("check_inequalities: bad range");
    if (!values) throw std::invalid_argument("check_inequalities: need a value source");
    std::vector<InequalityCheck> out;

    for (int s = s_lo; s <= s_hi; ++s) {
        const auto w_mixed = values(ProblemSpec::mixed({k, s}));
        const auto w1v = values(ProblemSpec::w1(k, s));
        const auto gv = values(ProblemSpec::g(k, s));
        const auto mv = values(ProblemSpec::m(k, s));
        const auto starv = values(ProblemSpec::star(k, s));
        const auto diagv = values(ProblemSpec::diagonal(k, s));
        const auto g2s = values(ProblemSpec::g(k, 2 * s - 1));
        const auto w1_2s = values(ProblemSpec::w1(k, 2 * s - 1));
        const auto m_big = values(ProblemSpec::m(s * (k - 1) + 1, s));
        const auto g_big = values(ProblemSpec::g(s * (k - 1) + 1, 2 * s - 1));

        const auto scale = [](std::optional<long long> v,
                              long long factor) -> std::optional<long long> {
            if (!v) return std::nullopt;
            return *v * factor;
        };
        const auto shift = [](std::optional<long long> v,
                              long long add) -> std::optional<long long> {
            if (!v) return std::nullopt;
            return *v + add;
        };

        const auto push = [&](const char* name, const char* fmt_, std::optional<long long> lhs,
                              std::optional<long long> rhs, bool greater_equal = false) {
            InequalityCheck c;
            c.name = name;
            c.k = k;
            c.s = s;
            c.statement = detail::ineq_text(fmt_, k, s);
            c.lhs = lhs;
            c.rhs = rhs;
            if (lhs && rhs)
                c.status = (greater_equal ? *lhs >= *rhs : *lhs <= *rhs) ? IneqStatus::Holds
                                                                         : IneqStatus::Fails;
            out.push_back(std::move(c));
        };

        push("PROP31_I", "w1(%lld,%lld) <= s*M(k,s)", w1v, scale(mv, s));
        push("PROP31_II", "w1(%lld,%lld) <= s*G(k,s)", w1v, scale(gv, s));
        push("PROP31_III", "w1(%lld,%lld) <= w(k;s) + s", w1v, shift(diagv, s));
        push("THM34_I", "G(%lld,%lld) <= s*M(k,s)", gv, scale(mv, s));
        push("THM34_II", "M(%lld,%lld) <= G(k,2s-1)", mv, g2s);
        push("THM34_III", "G(%lld,%lld) <= w(k;s)", gv, diagv);
        push("THM34_IV", "M(%lld,%lld) <= w(k;s)", mv, diagv);
        push("THM34_V", "w(%lld;%lld) <= M(s(k-1)+1,s)", diagv, m_big);
        push("THM34_VI", "w(%lld;%lld) <= G(s(k-1)+1,2s-1)", diagv, g_big);
        push("PROP36_I", "w(%lld,%lld) <= w1(k,s)", w_mixed, w1v);
        push("PROP36_II_A", "M(%lld,%lld) <= w*(k;s)", mv, starv);
        push("PROP36_II_B", "w*(%lld;%lld) <= w(k;s)", starv, diagv);
        {
            InequalityCheck c;
            c.name = "PROP36_III";
            c.k = k;
            c.s = s;
            c.statement = detail::ineq_text(
                "G(%lld,%lld) < c*s*M(k,s) for an absolute constant c (asymptotic; not instance-checkable)",
                k, s);
            c.informational = true;
            out.push_back(std::move(c));
        }
        push("PROP36_IV", "w1(%lld,2*%lld-1) >= s*(M(k,s)-1)+1", w1_2s,
             mv ? std::optional<long long>(s * (*mv - 1) + 1) : std::nullopt,
             /*greater_equal=*/true);

        if (k == 3) {
            // The conjectured ordering G <= w <= M <= w1 <= w* <= w(3;s):
            // compare consecutive known links; all six known and unviolated
            // is a HOLDS, any violated link is a FAILS.
            const std::optional<long long> chain[] = {gv, w_mixed, mv, w1v, starv, diagv};
            InequalityCheck c;
            c.name = "CONJECTURE_CHAIN";
            c.k = k;
            c.s = s;
            c.statement = detail::ineq_text(
                "G(%lld,%lld) <= w(3,s) <= M(3,s) <= w1(3,s) <= w*(3,s) <= w(3;s)", k, s);
            bool violated = false;
            bool complete = true;
            std::optional<long long> prev;
            for (const auto& link : chain) {
                if (!link) {
                    complete = false;
                    continue;
                }
                if (prev && *prev > *link) {
                    violated = true;
                    c.lhs = prev;
                    c.rhs = link;
                    break;
                }
                prev = link;
            }
            if (violated)
                c.status = IneqStatus::Fails;
            else if (complete) {
                c.status = IneqStatus::Holds;
                c.lhs = chain[0];
                c.rhs = chain[5];
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// The block/residue characterization of 3-APs and its brute-force check.
// Blocks here are 1-based intervals B_i = [(i-1)s+1, is]; the residue of v
// is the unique member of {1..s} congruent to v.
// ---------------------------------------------------------------------------

struct ModularTriple {
    int x = 0, y = 0, z = 0;     // the raw triple, x < y < z
    int rx = 0, ry = 0, rz = 0;  // residues in [1, s]
    int i1 = 0, i2 = 0, i3 = 0;  // 1-based block indices
};

struct Lemma32Result {
    bool agree = true;
    std::optional<ModularTriple> counterexample;
    long long triples_checked = 0;
};

namespace detail {

// Block-index patterns: an ap+ steps (d, d+1) allowing d = 0, an ap- steps
// (d, d-1) with d >= 1.
inline bool ap_plus(int b1, int b2) { return b1 >= 0 && b2 == b1 + 1; }
inline bool ap_minus(int b1, int b2) { return b1 >= 1 && b2 == b1 - 1; }

inline bool ap_mod_but_not_ap(int a1, int a2, int s) {
    return a1 != a2 && ((a2 - a1) % s + s) % s == 0;
}

// The three clauses of the characterization, on residues (rx, ry, rz) and
// block indices (i1, i2, i3) of a triple x < y < z.
inline bool triple_matches(int rx, int ry, int rz, int i1, int i2, int i3, int s) {
    const int a1 = ry - rx, a2 = rz - ry;
    const int b1 = i2 - i1, b2 = i3 - i2;
    if (a1 == a2 && b1 == b2 && (a1 > 0 || b1 > 0)) return true;               // (i)
    if (rx < ry && ap_mod_but_not_ap(a1, a2, s) && ap_plus(b1, b2)) return true;   // (ii)
    if (rx > ry && ap_mod_but_not_ap(a1, a2, s) && ap_minus(b1, b2)) return true;  // (iii)
    return false;
}

}  // namespace detail

/// Compares the clause characterization against direct AP-ness over every
/// triple 1 <= x < y < z <= s * block_count.
inline Lemma32Result lemma32_check(int s, int block_count) {
    if (s < 2) throw std::invalid_argument("lemma32_check: requires s >= 2");
    if (block_count < 1) throw std::invalid_argument("lemma32_check: requires block_count >= 1");
    const int n = s * block_count;
    Lemma32Result res;
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            for (int z = y + 1; z <= n; ++z) {
                ++res.triples_checked;
                const bool is_ap = z - y == y - x;
                ModularTriple t;
                t.x = x, t.y = y, t.z = z;
                t.i1 = (x - 1) / s + 1, t.i2 = (y - 1) / s + 1, t.i3 = (z - 1) / s + 1;
                t.rx = x - (t.i1 - 1) * s, t.ry = y - (t.i2 - 1) * s, t.rz = z - (t.i3 - 1) * s;
                const bool by_clauses =
                    detail::triple_matches(t.rx, t.ry, t.rz, t.i1, t.i2, t.i3, s);
                if (by_clauses != is_ap) {
                    res.agree = false;
                    res.counterexample = t;
                    return res;
                }
            }
    return res;
}

// ---------------------------------------------------------------------------
// The coloring reformulation of M(3, s): M(3,s) equals the least n such
// that every chi: [1,n] -> [1,s] admits a triple a < b < c that is
//   (i)   an AP with chi(b)-chi(a) = chi(c)-chi(b),
//   (ii)  an ap+ whose colors are an AP mod s but not an AP, chi(a)<chi(b),
//   (iii) an ap- whose colors are an AP mod s but not an AP, chi(a)>chi(b).
// Both sides are computed independently and compared.
// ---------------------------------------------------------------------------

struct Prop33Result {
    std::optional<long long> via_blocks;     // absent = budget exhausted
    std::optional<long long> via_colorings;  // absent = budget exhausted
    bool equal = false;
    std::uint64_t nodes = 0;
};

namespace detail {

// Does assigning color cc (in [1,s]) to position c complete a forbidden
// triple with some earlier pair under coloring chi (1-based, colors [1,s])?
inline bool completes_prop33_triple(const std::vector<int>& chi, int c, int cc, int s) {
    for (int b = 2; b < c; ++b) {
        const int cb = chi[static_cast<std::size_t>(b)];
        for (int a = 1; a < b; ++a) {
            const int ca = chi[static_cast<std::size_t>(a)];
            const int a1 = cb - ca, a2 = cc - cb;
            if (c - b == b - a && a1 == a2) return true;  // (i)
            if (!ap_mod_but_not_ap(a1, a2, s)) continue;
            if (ca < cb && ap_plus(b - a, c - b)) return true;   // (ii)
            if (ca > cb && ap_minus(b - a, c - b)) return true;  // (iii)
        }
    }
    return false;
}

// Least n such that no coloring of [1,n] avoids all forbidden triples,
// by depth-first search over avoiding prefixes.
inline std::optional<long long> prop33_via_colorings(int s, const SearchBudget& budget,
                                                     std::uint64_t& nodes) {
    SearchControl ctl(budget);
    for (int n = 1;; ++n) {
        if (budget.max_n && n > *budget.max_n) return std::nullopt;
        std::vector<int> chi(static_cast<std::size_t>(n) + 1, 0);
        std::uint64_t local = 0;
        // returns 1 = avoider found, 0 = none, -1 = aborted
        const std::function<int(int)> dfs = [&](int pos) -> int {
            if (pos > n) return 1;
            for (int c = 1; c <= s; ++c) {
                ++local;
                if ((local & 0xfff) == 0 && ctl.note_nodes(0x1000)) return -1;
                if (completes_prop33_triple(chi, pos, c, s)) continue;
                chi[static_cast<std::size_t>(pos)] = c;
                const int sub = dfs(pos + 1);
                chi[static_cast<std::size_t>(pos)] = 0;
                if (sub != 0) return sub;
            }
            return 0;
        };
        const int outcome = dfs(1);
        nodes += local;
        if (outcome == -1) return std::nullopt;
        if (outcome == 0) return n;
    }
}

}  // namespace detail

inline Prop33Result prop33_crosscheck(int s, const SearchBudget& budget = {}) {
    if (s < 2) throw std::invalid_argument("prop33_crosscheck: requires s >= 2");
    Prop33Result res;
    const SolveResult blocks = solve(ProblemSpec::m(3, s), budget);
    res.nodes += blocks.nodes;
    if (blocks.status == SolveStatus::Solved) res.via_blocks = blocks.value->value;
    res.via_colorings = detail::prop33_via_colorings(s, budget, res.nodes);
    res.equal = res.via_blocks && res.via_colorings && *res.via_blocks == *res.via_colorings;
    return res;
}

}  // namespace waerden
