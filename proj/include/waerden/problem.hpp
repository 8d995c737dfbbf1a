#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace waerden {

/// The eight computable families.
///   WMixed     w(k_1,...,k_s): color i must avoid a k_i-term AP
///   WDiagonal  w(k; s): every color avoids a k-term AP
///   W1         w_1(k, s): no k-AP of color 0, no s consecutive of color 1
///   G          least n so that every n-element set with gaps <= s has a k-AP
///   M          least n so that every transversal of the blocks
///              [(i-1)s, is-1], i = 1..n, has a k-AP
///   WStar      w*(k; s): no k-AP whose color sequence is arithmetic
///   R          r_k(n): largest k-AP-free subset of [1, n]
///   Chi        chi_k(m): fewest colors on [1, m] with no monochromatic k-AP
enum class Family { WMixed, WDiagonal, W1, G, M, WStar, R, Chi };

struct ProblemSpec {
    Family family = Family::WMixed;
    std::vector<int> lengths;  // WMixed only
    int k = 0;                 // every family except WMixed
    int s = 0;                 // color count / max gap / block width
    int interval = 0;          // R: n, Chi: m

    static ProblemSpec mixed(std::vector<int> lengths_) {
        ProblemSpec p;
        p.family = Family::WMixed;
        p.lengths = std::move(lengths_);
        return p;
    }
    static ProblemSpec diagonal(int k, int s) { return param3(Family::WDiagonal, k, s); }
    static ProblemSpec w1(int k, int s) { return param3(Family::W1, k, s); }
    static ProblemSpec g(int k, int s) { return param3(Family::G, k, s); }
    static ProblemSpec m(int k, int s) { return param3(Family::M, k, s); }
    static ProblemSpec star(int k, int s) { return param3(Family::WStar, k, s); }
    static ProblemSpec r(int k, int n) {
        ProblemSpec p;
        p.family = Family::R;
        p.k = k;
        p.interval = n;
        return p;
    }
    static ProblemSpec chi(int k, int m) {
        ProblemSpec p;
        p.family = Family::Chi;
        p.k = k;
        p.interval = m;
        return p;
    }

    bool coloring_family() const {
        return family == Family::WMixed || family == Family::WDiagonal ||
               family == Family::W1 || family == Family::WStar;
    }
    bool set_family() const { return family == Family::G || family == Family::M; }

    /// Number of colors a witness coloring carries.
    int color_count() const {
        switch (family) {
            case Family::WMixed: return static_cast<int>(lengths.size());
            case Family::WDiagonal:
            case Family::WStar: return s;
            case Family::W1: return 2;
            default: return 0;
        }
    }

    /// Longest forbidden progression; trivial witnesses exist below it.
    int max_length() const {
        switch (family) {
            case Family::WMixed: {
                int m = 1;
                for (int v : lengths) m = std::max(m, v);
                return m;
            }
            default: return k;
        }
    }

    bool valid() const {
        switch (family) {
            case Family::WMixed:
                if (lengths.empty()) return false;
                for (int v : lengths)
                    if (v < 1) return false;
                return true;
            case Family::WDiagonal:
            case Family::WStar: return k >= 2 && s >= 1;
            case Family::W1: return k >= 2 && s >= 1;
            case Family::G:
            case Family::M: return k >= 2 && s >= 1;
            case Family::R:
            case Family::Chi: return k >= 2 && interval >= 1;
        }
        return false;
    }

    /// Display key mirroring the usual notation, e.g. w(3,4), w(3;4),
    /// w1(3,4), G(3,4), M(3,4), w*(3;4), r_3(20), chi_3(20).
    std::string key() const {
        std::ostringstream os;
        switch (family) {
            case Family::WMixed: {
                os << "w(";
                for (std::size_t i = 0; i < lengths.size(); ++i)
                    os << (i ? "," : "") << lengths[i];
                os << ")";
                break;
            }
            case Family::WDiagonal: os << "w(" << k << ";" << s << ")"; break;
            case Family::W1: os << "w1(" << k << "," << s << ")"; break;
            case Family::G: os << "G(" << k << "," << s << ")"; break;
            case Family::M: os << "M(" << k << "," << s << ")"; break;
            case Family::WStar: os << "w*(" << k << ";" << s << ")"; break;
            case Family::R: os << "r_" << k << "(" << interval << ")"; break;
            case Family::Chi: os << "chi_" << k << "(" << interval << ")"; break;
        }
        return os.str();
    }

    /// Cache key.  Mixed lengths are order-insensitive (swapping colors
    /// relabels witnesses), so the key sorts them.
    std::string cache_key() const {
        if (family != Family::WMixed) return key();
        ProblemSpec sorted = *this;
        std::sort(sorted.lengths.begin(), sorted.lengths.end());
        return sorted.key();
    }

    bool operator==(const ProblemSpec&) const = default;

private:
    static ProblemSpec param3(Family f, int k, int s) {
        ProblemSpec p;
        p.family = f;
        p.k = k;
        p.s = s;
        return p;
    }
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::WMixed: return "w";
        case Family::WDiagonal: return "wdiag";
        case Family::W1: return "w1";
        case Family::G: return "G";
        case Family::M: return "M";
        case Family::WStar: return "wstar";
        case Family::R: return "r";
        case Family::Chi: return "chi";
    }
    return "?";
}

inline std::optional<Family> family_from_name(const std::string& name) {
    if (name == "w") return Family::WMixed;
    if (name == "wdiag") return Family::WDiagonal;
    if (name == "w1") return Family::W1;
    if (name == "G" || name == "g") return Family::G;
    if (name == "M" || name == "m") return Family::M;
    if (name == "wstar") return Family::WStar;
    if (name == "r") return Family::R;
    if (name == "chi") return Family::Chi;
    return std::nullopt;
}

}  // namespace waerden
