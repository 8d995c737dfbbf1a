#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace waerden {

/// Arithmetic progression first, first+diff, ..., first+(length-1)*diff
/// with diff >= 1 and length >= 2.  Single integers never appear as
/// Progression values; occurrence-style violations are reported as runs
/// of length one.
struct Progression {
    int first = 1;
    int diff = 1;
    int length = 2;

    int term(int j) const { return first + j * diff; }
    int last() const { return term(length - 1); }
    bool operator==(const Progression&) const = default;
};

/// An s-coloring of [1, n].  Colors are 0-based: colors[i-1] in [0, s).
struct Coloring {
    int n = 0;
    int s = 1;
    std::vector<std::uint8_t> colors;

    Coloring() = default;
    Coloring(int n_, int s_) : n(n_), s(s_), colors(static_cast<std::size_t>(n_ > 0 ? n_ : 0), 0) {}

    int color(int pos) const { return colors[static_cast<std::size_t>(pos - 1)]; }
    void set_color(int pos, int c) { colors[static_cast<std::size_t>(pos - 1)] = static_cast<std::uint8_t>(c); }

    bool valid() const {
        if (n < 0 || s < 1 || colors.size() != static_cast<std::size_t>(n)) return false;
        for (std::uint8_t c : colors)
            if (c >= s) return false;
        return true;
    }

    Coloring reversed() const {
        Coloring r = *this;
        std::reverse(r.colors.begin(), r.colors.end());
        return r;
    }

    bool operator==(const Coloring&) const = default;
};

/// A finite set of nonnegative integers in strictly increasing order.
/// Most families use positive elements; block transversals may contain 0.
struct IntegerSet {
    std::vector<int> elements;

    IntegerSet() = default;
    explicit IntegerSet(std::vector<int> e) : elements(std::move(e)) {}

    int size() const { return static_cast<int>(elements.size()); }

    bool valid() const {
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if (elements[i] < 0) return false;
            if (i > 0 && elements[i] <= elements[i - 1]) return false;
        }
        return true;
    }

    bool contains(int x) const {
        return std::binary_search(elements.begin(), elements.end(), x);
    }

    bool operator==(const IntegerSet&) const = default;
};

/// Classification of a strictly increasing triple x < y < z:
///   AP       z - y == y - x
///   AP_PLUS  (x, x+d, x+2d+1) for some d >= 1
///   AP_MINUS (x, x+d, x+2d-1) for some d >= 2
/// The classes are mutually exclusive; everything else is NONE.
struct TripleClass {
    enum Kind { AP, AP_PLUS, AP_MINUS, NONE };
    Kind kind = NONE;
    int x = 0;  // first term, meaningful unless NONE
    int d = 0;  // defining difference, meaningful unless NONE
};

inline TripleClass classify_triple(int x, int y, int z) {
    if (!(x < y && y < z)) throw std::invalid_argument("classify_triple: need x < y < z");
    const int dy = y - x;
    const int dz = z - y;
    if (dz == dy) return {TripleClass::AP, x, dy};
    if (dz == dy + 1 && dy >= 1) return {TripleClass::AP_PLUS, x, dy};
    if (dz == dy - 1 && dy >= 2) return {TripleClass::AP_MINUS, x, dy};
    return {TripleClass::NONE, 0, 0};
}

/// A concrete witness that a coloring or set fails some requirement.
///   MONO_AP   monochromatic progression (color set)
///   COLOR_AP  progression whose color sequence is arithmetic, color_diff != 0
///   RUN       run_length consecutive integers of one color (run_length == 1
///             encodes a forbidden occurrence of that color)
///   SET_AP    progression contained in an integer set
struct Violation {
    enum Kind { MONO_AP, COLOR_AP, RUN, SET_AP };
    Kind kind = MONO_AP;
    std::optional<Progression> progression;
    int color = -1;
    int color_diff = 0;
    int run_start = 0;
    int run_length = 0;

    static Violation mono(Progression p, int c) {
        Violation v;
        v.kind = MONO_AP;
        v.progression = p;
        v.color = c;
        return v;
    }
    static Violation color_ap(Progression p, int delta) {
        Violation v;
        v.kind = COLOR_AP;
        v.progression = p;
        v.color_diff = delta;
        return v;
    }
    static Violation run(int start, int length, int c) {
        Violation v;
        v.kind = RUN;
        v.run_start = start;
        v.run_length = length;
        v.color = c;
        return v;
    }
    static Violation set_ap(Progression p) {
        Violation v;
        v.kind = SET_AP;
        v.progression = p;
        return v;
    }
};

/// Outcome of re-checking a certificate: clean, or dirty with the witness
/// violation that was found.
struct Verdict {
    bool clean = true;
    std::optional<Violation> violation;

    static Verdict ok() { return {}; }
    static Verdict dirty(Violation v) { return {false, std::move(v)}; }
};

/// All k-term progressions inside [1, n], in lexicographic (first, diff)
/// order.  Requires k >= 2; degenerate single-element progressions are the
/// callers' business.
inline std::vector<Progression> enumerate_aps(int n, int k) {
    if (k < 2) throw std::invalid_argument("enumerate_aps: need k >= 2");
    std::vector<Progression> out;
    if (n < k) return out;
    for (int a = 1; a <= n; ++a)
        for (int d = 1; a + (k - 1) * d <= n; ++d)
            out.push_back({a, d, k});
    return out;
}

namespace detail {

// Scans progressions in (diff, first) order and reports the first one whose
// terms all satisfy pred(pos).  Deterministic order keeps test output stable.
template <typename Pred>
std::optional<Progression> first_ap_where(int n, int k, Pred&& pred) {
    for (int d = 1; (k - 1) * d <= n - 1; ++d) {
        for (int a = 1; a + (k - 1) * d <= n; ++a) {
            bool all = true;
            for (int j = 0; j < k; ++j) {
                if (!pred(a + j * d)) {
                    all = false;
                    break;
                }
            }
            if (all) return Progression{a, d, k};
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// First monochromatic k-AP of any color, scanning (diff, first) ascending.
inline std::optional<Violation> find_mono_ap(const Coloring& c, int k) {
    if (k < 2) throw std::invalid_argument("find_mono_ap: need k >= 2");
    for (int d = 1; (k - 1) * d <= c.n - 1; ++d) {
        for (int a = 1; a + (k - 1) * d <= c.n; ++a) {
            const int col = c.color(a);
            bool all = true;
            for (int j = 1; j < k; ++j) {
                if (c.color(a + j * d) != col) {
                    all = false;
                    break;
                }
            }
            if (all) return Violation::mono({a, d, k}, col);
        }
    }
    return std::nullopt;
}

/// Mixed condition: color i must not contain a lengths[i]-term AP.
/// A length-1 requirement is met by any occurrence of color i and is
/// reported as a run of length one (progressions need two terms).
/// Scan order: single occurrences by (position, color), then APs by
/// (diff, first, color).
inline std::optional<Violation> find_mixed_violation(const Coloring& c,
                                                     const std::vector<int>& lengths) {
    if (static_cast<int>(lengths.size()) != c.s)
        throw std::invalid_argument("find_mixed_violation: one length per color");
    for (int len : lengths)
        if (len < 1) throw std::invalid_argument("find_mixed_violation: lengths must be >= 1");

    bool any_unit = false;
    for (int len : lengths) any_unit = any_unit || (len == 1);
    if (any_unit) {
        for (int pos = 1; pos <= c.n; ++pos) {
            const int col = c.color(pos);
            if (lengths[static_cast<std::size_t>(col)] == 1)
                return Violation::run(pos, 1, col);
        }
    }

    for (int d = 1; d <= c.n - 1; ++d) {
        for (int a = 1; a + d <= c.n; ++a) {
            for (int i = 0; i < c.s; ++i) {
                const int k = lengths[static_cast<std::size_t>(i)];
                if (k < 2 || a + (k - 1) * d > c.n) continue;
                bool all = true;
                for (int j = 0; j < k; ++j) {
                    if (c.color(a + j * d) != i) {
                        all = false;
                        break;
                    }
                }
                if (all) return Violation::mono({a, d, k}, i);
            }
        }
    }
    return std::nullopt;
}

/// Longest run of consecutive integers with the given color.
inline int longest_run(const Coloring& c, int color) {
    int best = 0;
    int cur = 0;
    for (int pos = 1; pos <= c.n; ++pos) {
        if (c.color(pos) == color) {
            ++cur;
            best = std::max(best, cur);
        } else {
            cur = 0;
        }
    }
    return best;
}

/// Hybrid condition on a 2-coloring: no k-AP of color 0 and no run of
/// s_run consecutive integers of color 1.  APs are scanned first in
/// (diff, first) order, then runs by start position.
inline std::optional<Violation> find_w1_violation(const Coloring& c, int k, int s_run) {
    if (c.s != 2) throw std::invalid_argument("find_w1_violation: needs a 2-coloring");
    if (k < 2 || s_run < 1) throw std::invalid_argument("find_w1_violation: need k >= 2, s >= 1");
    auto ap = detail::first_ap_where(c.n, k, [&](int pos) { return c.color(pos) == 0; });
    if (ap) return Violation::mono(*ap, 0);
    int cur = 0;
    for (int pos = 1; pos <= c.n; ++pos) {
        cur = (c.color(pos) == 1) ? cur + 1 : 0;
        if (cur >= s_run) return Violation::run(pos - s_run + 1, s_run, 1);
    }
    return std::nullopt;
}

/// First k-AP whose color sequence is arithmetic, scanning (diff, first)
/// ascending.  A zero color difference is a monochromatic progression and
/// is reported as MONO_AP; otherwise COLOR_AP with the signed difference.
inline std::optional<Violation> find_color_ap(const Coloring& c, int k) {
    if (k < 2) throw std::invalid_argument("find_color_ap: need k >= 2");
    for (int d = 1; (k - 1) * d <= c.n - 1; ++d) {
        for (int a = 1; a + (k - 1) * d <= c.n; ++a) {
            const int delta = c.color(a + d) - c.color(a);
            bool arithmetic = true;
            for (int j = 2; j < k; ++j) {
                if (c.color(a + j * d) - c.color(a + (j - 1) * d) != delta) {
                    arithmetic = false;
                    break;
                }
            }
            if (!arithmetic) continue;
            if (delta == 0) return Violation::mono({a, d, k}, c.color(a));
            return Violation::color_ap({a, d, k}, delta);
        }
    }
    return std::nullopt;
}

/// Exhaustive check for a k-AP inside a set, scanning (diff, first)
/// ascending over element pairs.
inline std::optional<Progression> set_has_ap(const IntegerSet& x, int k) {
    if (k < 2) throw std::invalid_argument("set_has_ap: need k >= 2");
    if (x.size() < k) return std::nullopt;
    const int lo = x.elements.front();
    const int hi = x.elements.back();
    for (int d = 1; (k - 1) * d <= hi - lo; ++d) {
        for (int a : x.elements) {
            if (a + (k - 1) * d > hi) break;
            bool all = true;
            for (int j = 1; j < k; ++j) {
                if (!x.contains(a + j * d)) {
                    all = false;
                    break;
                }
            }
            if (all) return Progression{a, d, k};
        }
    }
    return std::nullopt;
}

}  // namespace waerden
