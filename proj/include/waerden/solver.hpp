#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "waerden/core.hpp"
#include "waerden/problem.hpp"
#include "waerden/search.hpp"
#include "waerden/verify.hpp"
#include "waerden/version.hpp"

namespace waerden {

namespace detail {

// ---------------------------------------------------------------------------
// Coloring domains.  Slot i is integer i+1; a choice is a color.  Slots fill
// left to right, so every forbidden structure is caught at its last element.
// Instead of scanning backwards per candidate, each push registers the
// structures it completes up to their final term: blocked(x, c) counts the
// (k-1)-term near-misses that the choice (x, c) would finish, making the
// admissibility test a single lookup.  pop mirrors push exactly (it runs
// with the same prefix state), so the counts stay consistent.
// ---------------------------------------------------------------------------

/// w(k_1,...,k_s), and w(k; s) via equal lengths.  Colors of equal length
/// are interchangeable, so a new color may only be introduced if it is the
/// least unused one of its length class (canonical form; keeps witnesses
/// lexicographically least and cuts the tree by a factor of up to s!).
class MixedDomain {
public:
    MixedDomain(std::vector<int> lengths, int n)
        : lengths_(std::move(lengths)),
          n_(n),
          s_(static_cast<int>(lengths_.size())),
          assign_(static_cast<std::size_t>(n) + 1, -1),
          used_(lengths_.size(), 0),
          blocked_(static_cast<std::size_t>(2 * n) * static_cast<std::size_t>(s_), 0),
          rowcnt_(static_cast<std::size_t>(n), 0) {
        prune_rows_ = true;
        for (int k : lengths_)
            if (k < 3) prune_rows_ = false;  // those colors bypass blocked_
    }

    int slots() const { return n_; }

    void candidates(int slot, std::vector<int>& out) {
        out.clear();
        if (dead_ > 0) return;  // some later position has every color blocked
        const int pos = slot + 1;
        const std::uint16_t* row = &blocked_[static_cast<std::size_t>(pos - 1) * s_];
        for (int c = 0; c < s_; ++c) {
            const int k = lengths_[static_cast<std::size_t>(c)];
            if (k == 1) continue;  // any occurrence of this color is forbidden
            if (k == 2 && used_[static_cast<std::size_t>(c)] > 0) continue;
            if (row[c]) continue;
            if (used_[static_cast<std::size_t>(c)] == 0 && !least_unused_of_class(c)) continue;
            out.push_back(c);
        }
    }

    void push(int slot, int c) {
        const int pos = slot + 1;
        assign_[static_cast<std::size_t>(pos)] = static_cast<std::int8_t>(c);
        ++used_[static_cast<std::size_t>(c)];
        register_completions(pos, c, +1);
    }
    void pop(int slot, int c) {
        const int pos = slot + 1;
        register_completions(pos, c, -1);
        --used_[static_cast<std::size_t>(c)];
        assign_[static_cast<std::size_t>(pos)] = -1;
    }

private:
    bool least_unused_of_class(int c) const {
        const int k = lengths_[static_cast<std::size_t>(c)];
        for (int c2 = 0; c2 < c; ++c2)
            if (lengths_[static_cast<std::size_t>(c2)] == k && used_[static_cast<std::size_t>(c2)] == 0)
                return false;
        return true;
    }

    // (pos, c) ends a (k_c - 1)-term monochromatic AP for each difference d
    // whose earlier terms match; the AP's next term pos + d becomes blocked.
    void register_completions(int pos, int c, int delta) {
        const int k = lengths_[static_cast<std::size_t>(c)];
        if (k < 3) return;  // handled via used_ counts
        const int back = k - 2;
        for (int d = 1; pos - back * d >= 1; ++d) {
            bool all = true;
            for (int j = 1; j <= back; ++j) {
                if (assign_[static_cast<std::size_t>(pos - j * d)] != c) {
                    all = false;
                    break;
                }
            }
            if (all) bump(pos + d - 1, c, delta);
        }
    }

    // Registration always targets rows past the current position, so a row
    // with every color blocked can only be ahead of the frontier; one such
    // row makes the whole branch hopeless.
    void bump(int row, int c, int delta) {
        auto& cell = blocked_[static_cast<std::size_t>(row) * s_ + c];
        const bool was = cell != 0;
        cell = static_cast<std::uint16_t>(cell + delta);
        if (!prune_rows_ || row >= n_ || (cell != 0) == was) return;
        if (cell != 0) {
            if (++rowcnt_[static_cast<std::size_t>(row)] == s_) ++dead_;
        } else {
            if (rowcnt_[static_cast<std::size_t>(row)]-- == s_) --dead_;
        }
    }

    std::vector<int> lengths_;
    int n_;
    int s_;
    std::vector<std::int8_t> assign_;  // 1-based
    std::vector<int> used_;
    std::vector<std::uint16_t> blocked_;
    std::vector<std::uint16_t> rowcnt_;  // blocked colors per row, rows < n_
    bool prune_rows_ = false;
    int dead_ = 0;
};

/// w_1(k, s): color 0 avoids k-APs, color 1 avoids runs of length s.
class HybridDomain {
public:
    HybridDomain(int k, int s_run, int n)
        : k_(k),
          s_run_(s_run),
          n_(n),
          assign_(static_cast<std::size_t>(n) + 1, -1),
          blocked_(static_cast<std::size_t>(2 * n) + 1, 0),
          wincnt_(static_cast<std::size_t>(n) + 2, 0) {}

    int slots() const { return n_; }

    void candidates(int slot, std::vector<int>& out) {
        out.clear();
        // A stretch of s consecutive positions blocked for color 0 forces a
        // run of 1s there; a position blocked for 0 is never colored 0, so
        // such a stretch dooms the branch no matter where it sits.
        if (barriers_ > 0) return;
        const int pos = slot + 1;
        if (k_ == 2 ? zeros_.empty() : blocked_[static_cast<std::size_t>(pos)] == 0) out.push_back(0);
        if (!completes_one_run(pos)) out.push_back(1);
    }

    void push(int slot, int c) {
        const int pos = slot + 1;
        assign_[static_cast<std::size_t>(pos)] = static_cast<std::int8_t>(c);
        if (c == 0) {
            register_completions(pos, +1);
            zeros_.push_back(pos);
        }
    }
    void pop(int slot, int c) {
        const int pos = slot + 1;
        if (c == 0) {
            zeros_.pop_back();
            register_completions(pos, -1);
        }
        assign_[static_cast<std::size_t>(pos)] = -1;
    }

private:
    void register_completions(int pos, int delta) {
        if (k_ < 3) return;
        const int back = k_ - 2;
        for (int y : zeros_) {
            const int d = pos - y;
            bool all = true;
            for (int j = 2; j <= back; ++j) {
                if (assign_[static_cast<std::size_t>(pos - j * d)] != 0) {
                    all = false;
                    break;
                }
            }
            if (all) bump(pos + d, delta);
        }
    }

    void bump(int z, int delta) {
        auto& cell = blocked_[static_cast<std::size_t>(z)];
        const bool was = cell != 0;
        cell = static_cast<std::uint16_t>(cell + delta);
        if (z > n_ || (cell != 0) == was) return;
        const int lo = z - s_run_ + 1 > 1 ? z - s_run_ + 1 : 1;
        const int hi = z < n_ - s_run_ + 1 ? z : n_ - s_run_ + 1;
        for (int st = lo; st <= hi; ++st) {
            auto& w = wincnt_[static_cast<std::size_t>(st)];
            if (cell != 0) {
                if (++w == s_run_) ++barriers_;
            } else {
                if (w-- == s_run_) --barriers_;
            }
        }
    }

    bool completes_one_run(int pos) const {
        if (pos < s_run_) return false;
        for (int j = 1; j < s_run_; ++j)
            if (assign_[static_cast<std::size_t>(pos - j)] != 1) return false;
        return true;
    }

    int k_;
    int s_run_;
    int n_;
    std::vector<std::int8_t> assign_;  // 1-based
    std::vector<int> zeros_;           // positions of color 0, increasing
    std::vector<std::uint16_t> blocked_;
    std::vector<std::uint16_t> wincnt_;  // blocked count per window of s_run_
    int barriers_ = 0;                   // windows fully blocked for color 0
};

/// w*(k; s): no k-AP whose colors form an arithmetic sequence (difference 0
/// included, decreasing allowed).  Color values are not interchangeable
/// here, but reversing the palette (c -> s-1-c) preserves the condition, so
/// the first position only takes colors below ceil(s/2).
class StarDomain {
public:
    StarDomain(int k, int s, int n)
        : k_(k),
          s_(s),
          n_(n),
          assign_(static_cast<std::size_t>(n) + 1, -1),
          blocked_(static_cast<std::size_t>(2 * n) * static_cast<std::size_t>(s), 0),
          rowcnt_(static_cast<std::size_t>(n), 0) {}

    int slots() const { return n_; }

    void candidates(int slot, std::vector<int>& out) {
        out.clear();
        if (dead_ > 0) return;  // some later position has every color blocked
        const int pos = slot + 1;
        if (k_ == 2 && pos > 1) return;  // every pair of colors is arithmetic
        const int limit = (pos == 1) ? (s_ + 1) / 2 : s_;
        const std::uint16_t* row = &blocked_[static_cast<std::size_t>(pos - 1) * s_];
        for (int c = 0; c < limit; ++c)
            if (!row[c]) out.push_back(c);
    }

    void push(int slot, int c) {
        const int pos = slot + 1;
        assign_[static_cast<std::size_t>(pos)] = static_cast<std::int8_t>(c);
        register_completions(pos, c, +1);
    }
    void pop(int slot, int c) {
        const int pos = slot + 1;
        register_completions(pos, c, -1);
        assign_[static_cast<std::size_t>(pos)] = -1;
    }

private:
    // (pos, c) ends a (k-1)-term AP whose colors are arithmetic for every d
    // whose colors line up; the continuation color c + (c - chi(pos - d)) at
    // pos + d becomes blocked when it is a real color.
    void register_completions(int pos, int c, int delta) {
        if (k_ < 3) return;
        const int back = k_ - 2;
        for (int d = 1; pos - back * d >= 1; ++d) {
            const int step = c - assign_[static_cast<std::size_t>(pos - d)];
            bool arith = true;
            for (int j = 2; j <= back; ++j) {
                if (assign_[static_cast<std::size_t>(pos - j * d)] != c - j * step) {
                    arith = false;
                    break;
                }
            }
            if (!arith) continue;
            const int next = c + step;
            if (next >= 0 && next < s_) bump(pos + d - 1, next, delta);
        }
    }

    void bump(int row, int c, int delta) {
        auto& cell = blocked_[static_cast<std::size_t>(row) * s_ + c];
        const bool was = cell != 0;
        cell = static_cast<std::uint16_t>(cell + delta);
        if (row >= n_ || (cell != 0) == was) return;
        if (cell != 0) {
            if (++rowcnt_[static_cast<std::size_t>(row)] == s_) ++dead_;
        } else {
            if (rowcnt_[static_cast<std::size_t>(row)]-- == s_) --dead_;
        }
    }

    int k_;
    int s_;
    int n_;
    std::vector<std::int8_t> assign_;  // 1-based
    std::vector<std::uint16_t> blocked_;
    std::vector<std::uint16_t> rowcnt_;  // blocked colors per row, rows < n_
    int dead_ = 0;
};

// ---------------------------------------------------------------------------
// Set domains.  Slot i is the i-th element of the set; a choice is the
// element's value.  Elements arrive in increasing order, so a k-AP is
// complete exactly when its last term is pushed; pushing x therefore
// registers, for each (k-1)-term AP it finishes, the AP's next term as
// blocked.
// ---------------------------------------------------------------------------

template <typename Derived>
class SetDomainBase {
public:
    SetDomainBase(int k, int max_value)
        : k_(k),
          max_value_(max_value),
          member_(static_cast<std::size_t>(max_value) + 1, 0),
          blocked_(2 * (static_cast<std::size_t>(max_value) + 1), 0) {}

    void push(int, int x) {
        register_completions(x, +1);
        elements_.push_back(x);
        member_[static_cast<std::size_t>(x)] = 1;
    }
    void pop(int, int x) {
        member_[static_cast<std::size_t>(x)] = 0;
        elements_.pop_back();
        register_completions(x, -1);
    }

protected:
    bool blocked(int x) const { return blocked_[static_cast<std::size_t>(x)] != 0; }

    int k_;
    int max_value_;
    std::vector<int> elements_;
    std::vector<std::uint8_t> member_;

private:
    void register_completions(int x, int delta) {
        if (k_ == 2) {
            // any second element is forbidden: block everything above x
            for (std::size_t t = static_cast<std::size_t>(x) + 1; t < blocked_.size(); ++t)
                bump(t, delta);
            return;
        }
        const int back = k_ - 2;
        for (int y : elements_) {
            const int d = x - y;
            bool all = true;
            for (int j = 2; j <= back; ++j) {
                const int t = x - j * d;
                if (t < 0 || !member_[static_cast<std::size_t>(t)]) {
                    all = false;
                    break;
                }
            }
            if (all) bump(static_cast<std::size_t>(x + d), delta);
        }
    }

    void bump(std::size_t z, int delta) {
        auto& cell = blocked_[z];
        const bool was = cell != 0;
        cell = static_cast<std::uint16_t>(cell + delta);
        if ((cell != 0) != was)
            static_cast<Derived*>(this)->flipped(static_cast<int>(z), cell != 0);
    }

    std::vector<std::uint16_t> blocked_;
};

/// G(k, s): sets {1 = x_1 < x_2 < ...} with consecutive gaps at most s.
/// Witnesses are normalized to start at 1 (shifting a witness preserves it).
/// The set domains stay deliberately lean: measured runs show their search
/// states virtually never recur, so state caching buys nothing while its
/// bookkeeping dominates the per-node cost.
class GapSetDomain : public SetDomainBase<GapSetDomain> {
public:
    GapSetDomain(int k, int s, int n)
        : SetDomainBase(k, 1 + (n > 1 ? (n - 1) * s : 0)), s_(s), n_(n) {}

    int slots() const { return n_; }

    void candidates(int slot, std::vector<int>& out) {
        out.clear();
        if (slot == 0) {
            out.push_back(1);
            return;
        }
        const int prev = elements_.back();
        for (int x = prev + 1; x <= prev + s_; ++x)
            if (!blocked(x)) out.push_back(x);
    }

    void flipped(int, bool) {}

private:
    int s_;
    int n_;
};

/// M(k, s): one element from each block [(i-1)s, is-1]; the first block
/// starts at 0 and 0 is a legal element.
class BlockSetDomain : public SetDomainBase<BlockSetDomain> {
public:
    BlockSetDomain(int k, int s, int n)
        : SetDomainBase(k, n * s > 0 ? n * s - 1 : 0), s_(s), n_(n) {}

    int slots() const { return n_; }

    void candidates(int slot, std::vector<int>& out) {
        out.clear();
        const int lo = slot * s_;
        const int hi = lo + s_ - 1;
        for (int x = lo; x <= hi; ++x)
            if (!blocked(x)) out.push_back(x);
    }

    void flipped(int, bool) {}

private:
    int s_;
    int n_;
};

// ---------------------------------------------------------------------------

struct SearchDriver {
    const ProblemSpec& spec;
    int n;

    template <typename Fn>
    auto with_domain(Fn&& fn) const {
        switch (spec.family) {
            case Family::WMixed:
                return fn([&, s = spec] { return MixedDomain(s.lengths, n); });
            case Family::WDiagonal:
                return fn([&, s = spec] { return MixedDomain(std::vector<int>(static_cast<std::size_t>(s.s), s.k), n); });
            case Family::W1:
                return fn([&, s = spec] { return HybridDomain(s.k, s.s, n); });
            case Family::WStar:
                return fn([&, s = spec] { return StarDomain(s.k, s.s, n); });
            case Family::G:
                return fn([&, s = spec] { return GapSetDomain(s.k, s.s, n); });
            case Family::M:
                return fn([&, s = spec] { return BlockSetDomain(s.k, s.s, n); });
            default:
                throw std::invalid_argument("witness searches cover coloring and set families only");
        }
    }
};

inline Coloring choices_to_coloring(const std::vector<int>& choices, int s) {
    Coloring c(static_cast<int>(choices.size()), s);
    for (std::size_t i = 0; i < choices.size(); ++i)
        c.colors[i] = static_cast<std::uint8_t>(choices[i]);
    return c;
}

inline IntegerSet choices_to_set(const std::vector<int>& choices) {
    return IntegerSet{choices};
}

inline RawSearchResult search_at(const ProblemSpec& spec, int n, SearchControl& ctl, int threads) {
    SearchDriver driver{spec, n};
    return driver.with_domain(
        [&](auto&& factory) { return run_search(factory, ctl, threads); });
}

/// Tries to extend a known witness of size n-1 by one slot: replays it into
/// a fresh domain of size n and asks for admissible choices at the last
/// slot.  Cheap, and sound because every forbidden structure checked at a
/// slot ends at that slot.
inline std::optional<std::vector<int>> extend_witness(const ProblemSpec& spec, int n,
                                                      const std::vector<int>& prev) {
    if (static_cast<int>(prev.size()) != n - 1) return std::nullopt;
    SearchDriver driver{spec, n};
    return driver.with_domain([&](auto&& factory) -> std::optional<std::vector<int>> {
        auto dom = factory();
        for (std::size_t i = 0; i < prev.size(); ++i) dom.push(static_cast<int>(i), prev[i]);
        std::vector<int> cands;
        dom.candidates(n - 1, cands);
        if (cands.empty()) return std::nullopt;
        auto ext = prev;
        ext.push_back(cands.front());
        return ext;
    });
}

}  // namespace detail

struct WitnessOutcome {
    SearchStatus status = SearchStatus::NoWitness;
    std::optional<Coloring> coloring;
    std::optional<IntegerSet> set;
    std::uint64_t nodes = 0;
};

/// Complete search for one good witness on [1, n] (or a size-n set).
/// Deterministic: for a fixed spec and n the reported witness is the
/// lexicographically least admissible one regardless of thread count.
inline WitnessOutcome witness_search(const ProblemSpec& spec, int n,
                                     const SearchBudget& budget = {}) {
    if (!spec.valid()) throw std::invalid_argument("witness_search: invalid spec");
    if (!spec.coloring_family() && !spec.set_family())
        throw std::invalid_argument("witness_search: coloring and set families only");
    if (n < 1) throw std::invalid_argument("witness_search: need n >= 1");
    SearchControl ctl(budget);
    auto raw = detail::search_at(spec, n, ctl, budget.threads);
    WitnessOutcome out;
    out.status = raw.status;
    out.nodes = ctl.nodes.load();
    if (raw.status == SearchStatus::WitnessFound) {
        if (spec.set_family())
            out.set = detail::choices_to_set(raw.witness);
        else
            out.coloring = detail::choices_to_coloring(raw.witness, spec.color_count());
    }
    return out;
}

struct ComputedValue {
    ProblemSpec spec;
    long long value = 0;
    std::optional<Certificate> witness;  // GOOD_WITNESS at value-1 when value >= 2
    double elapsed_seconds = 0;
    std::string solver_version;
    std::uint64_t nodes_explored = 0;
};

enum class SolveStatus { Solved, BudgetExhausted };

struct SolveResult {
    SolveStatus status = SolveStatus::Solved;
    std::optional<ComputedValue> value;
    // best knowledge when the budget ran out: the value is >= lower_bound
    int lower_bound = 1;
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0;
};

namespace detail {

inline Certificate make_witness_certificate(const ProblemSpec& spec, const std::vector<int>& choices) {
    Certificate cert;
    cert.spec = spec;
    cert.n = static_cast<int>(choices.size());
    cert.claim = ClaimKind::GoodWitness;
    if (spec.set_family())
        cert.set = choices_to_set(choices);
    else
        cert.coloring = choices_to_coloring(choices, spec.color_count());
    return cert;
}

}  // namespace detail

/// Exact value of a coloring- or set-family function by ascending n.
/// Each level first tries to extend the previous witness by one slot; a
/// full search only runs when the quick extension fails.  Once the value
/// is known, the witness at value-1 is recomputed from scratch so that the
/// reported witness is always the canonical (lexicographically least) one.
inline SolveResult solve(const ProblemSpec& spec, const SearchBudget& budget = {}) {
    if (!spec.valid()) throw std::invalid_argument("solve: invalid spec");
    if (!spec.coloring_family() && !spec.set_family())
        throw std::invalid_argument("solve: use solve_r / solve_chi for r_k and chi_k");

    const auto t0 = std::chrono::steady_clock::now();
    SearchControl ctl(budget);
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };

    std::vector<int> prev;  // witness of size n-1, grown one level at a time
    int n = 1;
    std::optional<int> value;

    while (true) {
        if (budget.max_n && n > *budget.max_n) {
            SolveResult r;
            r.status = SolveStatus::BudgetExhausted;
            r.lower_bound = n;
            r.nodes = ctl.nodes.load();
            r.elapsed_seconds = elapsed();
            return r;
        }
        if (auto ext = detail::extend_witness(spec, n, prev)) {
            prev = std::move(*ext);
            ++n;
            continue;
        }
        auto raw = detail::search_at(spec, n, ctl, budget.threads);
        if (raw.status == SearchStatus::WitnessFound) {
            prev = std::move(raw.witness);
            ++n;
            continue;
        }
        if (raw.status == SearchStatus::NoWitness) {
            value = n;
            break;
        }
        SolveResult r;
        r.status = SolveStatus::BudgetExhausted;
        r.lower_bound = n;
        r.nodes = ctl.nodes.load();
        r.elapsed_seconds = elapsed();
        return r;
    }

    ComputedValue cv;
    cv.spec = spec;
    cv.value = *value;
    cv.solver_version = std::string(kSolverVersion);
    if (*value >= 2) {
        // canonical witness, independent of the seeded path that got here
        auto raw = detail::search_at(spec, *value - 1, ctl, budget.threads);
        const auto& choices = raw.status == SearchStatus::WitnessFound ? raw.witness : prev;
        if (raw.status == SearchStatus::NoWitness)
            throw std::logic_error("solve: witness vanished below the value");
        cv.witness = detail::make_witness_certificate(spec, choices);
        if (!verify_certificate(*cv.witness).clean)
            throw std::logic_error("solve: produced witness failed verification");
    }
    cv.nodes_explored = ctl.nodes.load();
    cv.elapsed_seconds = elapsed();

    SolveResult r;
    r.status = SolveStatus::Solved;
    r.lower_bound = *value;
    r.value = std::move(cv);
    r.nodes = ctl.nodes.load();
    r.elapsed_seconds = elapsed();
    return r;
}

// ---------------------------------------------------------------------------
// r_k(n): branch and bound over include/exclude decisions, include first.
// ---------------------------------------------------------------------------

struct RResult {
    int size = 0;
    IntegerSet witness;
    std::uint64_t nodes = 0;
};

namespace detail {

struct RSearch {
    int k;
    int n;
    std::vector<std::uint8_t> member;
    std::vector<int> current;
    std::vector<int> best;
    std::uint64_t nodes = 0;

    bool completes_ap(int x) const {
        for (int y : current) {
            const int d = x - y;
            bool all = true;
            for (int j = 2; j < k; ++j) {
                const int t = x - j * d;
                if (t < 1 || !member[static_cast<std::size_t>(t)]) {
                    all = false;
                    break;
                }
            }
            if (all) return true;
        }
        return false;
    }

    void dfs(int pos) {
        if (static_cast<int>(current.size()) + (n - pos + 1) <= static_cast<int>(best.size()))
            return;  // cannot beat the incumbent
        if (pos > n) {
            if (current.size() > best.size()) best = current;
            return;
        }
        ++nodes;
        if (!completes_ap(pos)) {
            current.push_back(pos);
            member[static_cast<std::size_t>(pos)] = 1;
            dfs(pos + 1);
            member[static_cast<std::size_t>(pos)] = 0;
            current.pop_back();
        }
        dfs(pos + 1);
    }
};

}  // namespace detail

/// Largest k-AP-free subset of [1, n], exact.
inline RResult solve_r(int k, int n) {
    if (k < 2 || n < 0) throw std::invalid_argument("solve_r: need k >= 2, n >= 0");
    detail::RSearch s;
    s.k = k;
    s.n = n;
    s.member.assign(static_cast<std::size_t>(n) + 1, 0);
    s.dfs(1);
    RResult out;
    out.size = static_cast<int>(s.best.size());
    out.witness = IntegerSet{s.best};
    out.nodes = s.nodes;
    return out;
}

// ---------------------------------------------------------------------------
// chi_k(m): fewest colors on [1, m] with no monochromatic k-AP.
// ---------------------------------------------------------------------------

struct ChiResult {
    int colors = 0;
    Coloring witness;
    std::uint64_t nodes = 0;
};

inline std::optional<ChiResult> solve_chi(int k, int m, const SearchBudget& budget = {}) {
    if (k < 2 || m < 1) throw std::invalid_argument("solve_chi: need k >= 2, m >= 1");
    std::uint64_t nodes = 0;
    for (int s = 1; s <= m; ++s) {
        auto out = witness_search(ProblemSpec::diagonal(k, s), m, budget);
        nodes += out.nodes;
        if (out.status == SearchStatus::BudgetExhausted) return std::nullopt;
        if (out.status == SearchStatus::WitnessFound) {
            ChiResult r;
            r.colors = s;
            r.witness = *out.coloring;
            r.nodes = nodes;
            return r;
        }
    }
    // s = m always succeeds (all colors distinct), so this is unreachable
    throw std::logic_error("solve_chi: no coloring found up to s = m");
}

// ---------------------------------------------------------------------------
// Enumeration oracle: walks the full s^n (or gap/block) space and checks
// each assignment with the verification primitives.  Refuses instances
// whose state count exceeds the cap.
// ---------------------------------------------------------------------------

namespace detail {

inline double enumeration_states(const ProblemSpec& spec, int n) {
    double base = 0;
    int count = n;
    switch (spec.family) {
        case Family::WMixed:
        case Family::WDiagonal:
        case Family::WStar:
            base = spec.color_count();
            break;
        case Family::W1:
            base = 2;
            break;
        case Family::G:
            base = spec.s;
            count = n > 0 ? n - 1 : 0;
            break;
        case Family::M:
            base = spec.s;
            break;
        default:
            throw std::invalid_argument("naive enumeration: unsupported family");
    }
    double total = 1;
    for (int i = 0; i < count; ++i) {
        total *= base;
        if (total > 1e18) return total;
    }
    return total;
}

inline bool assignment_clean(const ProblemSpec& spec, const std::vector<int>& choices) {
    Certificate cert = make_witness_certificate(spec, choices);
    try {
        return verify_certificate(cert).clean;
    } catch (const CertificateError&) {
        return false;  // e.g. a gap sequence running past the frame
    }
}

}  // namespace detail

inline constexpr double kNaiveStateCap = 1e8;

/// Does any witness of size n exist?  Pure enumeration, no pruning.
inline bool naive_has_witness(const ProblemSpec& spec, int n) {
    if (!spec.valid()) throw std::invalid_argument("naive_has_witness: invalid spec");
    if (n < 1) throw std::invalid_argument("naive_has_witness: need n >= 1");
    if (detail::enumeration_states(spec, n) > kNaiveStateCap)
        throw std::invalid_argument("naive_has_witness: state space over cap");

    if (spec.coloring_family()) {
        const int s = spec.color_count();
        std::vector<int> choices(static_cast<std::size_t>(n), 0);
        while (true) {
            if (detail::assignment_clean(spec, choices)) return true;
            int i = 0;
            while (i < n && ++choices[static_cast<std::size_t>(i)] == s) {
                choices[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == n) return false;
        }
    }
    if (spec.family == Family::G) {
        // all gap sequences in [1, s]^(n-1), first element 1
        std::vector<int> gaps(static_cast<std::size_t>(n > 0 ? n - 1 : 0), 1);
        while (true) {
            std::vector<int> elements{1};
            for (int g : gaps) elements.push_back(elements.back() + g);
            if (detail::assignment_clean(spec, elements)) return true;
            std::size_t i = 0;
            while (i < gaps.size() && ++gaps[i] == spec.s + 1) {
                gaps[i] = 1;
                ++i;
            }
            if (i == gaps.size()) return false;
        }
    }
    if (spec.family == Family::M) {
        std::vector<int> offsets(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<int> elements;
            for (int i = 0; i < n; ++i) elements.push_back(i * spec.s + offsets[static_cast<std::size_t>(i)]);
            if (detail::assignment_clean(spec, elements)) return true;
            std::size_t i = 0;
            while (i < offsets.size() && ++offsets[i] == spec.s) {
                offsets[i] = 0;
                ++i;
            }
            if (i == offsets.size()) return false;
        }
    }
    throw std::invalid_argument("naive_has_witness: unsupported family");
}

/// Exact value by pure enumeration; the cross-check oracle for solve().
inline long long naive_solve(const ProblemSpec& spec) {
    for (int n = 1;; ++n)
        if (!naive_has_witness(spec, n)) return n;
}

}  // namespace waerden
