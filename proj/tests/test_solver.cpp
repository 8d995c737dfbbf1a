#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "waerden/problem.hpp"
#include "waerden/solver.hpp"
#include "waerden/verify.hpp"

using namespace waerden;

namespace {

std::string digits_of(const Coloring& c) {
    std::string out;
    for (int i = 1; i <= c.n; ++i) out.push_back(static_cast<char>('0' + c.color(i)));
    return out;
}

long long solved_value(const ProblemSpec& spec, int threads = 1) {
    SearchBudget b;
    b.threads = threads;
    auto r = solve(spec, b);
    REQUIRE(r.status == SolveStatus::Solved);
    REQUIRE(r.value.has_value());
    if (r.value->witness) {
        auto verdict = verify_certificate(*r.value->witness);
        REQUIRE(verdict.clean);
        REQUIRE(r.value->witness->n == r.value->value - 1);
    } else {
        REQUIRE(r.value->value < 2);
    }
    return r.value->value;
}

// Independent maximum for r_k(n): every subset of [1, n].
int brute_r(int k, int n) {
    REQUIRE(n <= 20);
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> elems;
        for (int i = 1; i <= n; ++i)
            if (mask >> (i - 1) & 1u) elems.push_back(i);
        if (static_cast<int>(elems.size()) <= best) continue;
        if (!set_has_ap(IntegerSet{elems}, k)) best = static_cast<int>(elems.size());
    }
    return best;
}

}  // namespace

TEST_CASE("hand-checked edge values") {
    // a color of length 1 may not appear at all
    CHECK(solved_value(ProblemSpec::mixed({2, 1})) == 2);
    CHECK(solved_value(ProblemSpec::mixed({3, 1})) == 3);
    CHECK(solved_value(ProblemSpec::mixed({4, 1})) == 4);
    CHECK(solved_value(ProblemSpec::mixed({5, 1})) == 5);
    CHECK(solved_value(ProblemSpec::mixed({3, 1, 1})) == 3);

    // no color usable at all
    CHECK(solved_value(ProblemSpec::mixed({1})) == 1);
    CHECK(solved_value(ProblemSpec::mixed({1, 1, 1})) == 1);

    // k = 2 colors are 'use at most once'
    CHECK(solved_value(ProblemSpec::mixed({2, 2})) == 3);
    CHECK(solved_value(ProblemSpec::mixed({2, 2, 2})) == 4);
    CHECK(solved_value(ProblemSpec::diagonal(2, 5)) == 6);
    CHECK(solved_value(ProblemSpec::mixed({2, 4})) == 7);
    CHECK(solved_value(ProblemSpec::mixed({2, 5})) == 10);
    CHECK(solved_value(ProblemSpec::mixed({2, 2, 3})) == 7);

    // single color
    CHECK(solved_value(ProblemSpec::diagonal(4, 1)) == 4);
    CHECK(solved_value(ProblemSpec::mixed({6})) == 6);

    // 2-APs of any color pattern are arithmetic, sets of two are 2-APs
    CHECK(solved_value(ProblemSpec::star(2, 3)) == 2);
    CHECK(solved_value(ProblemSpec::star(3, 1)) == 3);
    CHECK(solved_value(ProblemSpec::g(2, 4)) == 2);
    CHECK(solved_value(ProblemSpec::m(2, 3)) == 2);

    // one 0 allowed, no two adjacent 1s
    CHECK(solved_value(ProblemSpec::w1(2, 2)) == 4);
}

TEST_CASE("known small values per family") {
    CHECK(solved_value(ProblemSpec::mixed({3, 2})) == 6);
    CHECK(solved_value(ProblemSpec::mixed({3, 3})) == 9);
    CHECK(solved_value(ProblemSpec::mixed({3, 4})) == 18);
    CHECK(solved_value(ProblemSpec::mixed({3, 5})) == 22);
    CHECK(solved_value(ProblemSpec::diagonal(3, 2)) == 9);
    CHECK(solved_value(ProblemSpec::w1(3, 2)) == 9);
    CHECK(solved_value(ProblemSpec::w1(3, 3)) == 23);
    CHECK(solved_value(ProblemSpec::g(3, 2)) == 5);
    CHECK(solved_value(ProblemSpec::g(3, 3)) == 9);
    CHECK(solved_value(ProblemSpec::g(3, 4)) == 11);
    CHECK(solved_value(ProblemSpec::m(3, 2)) == 7);
    CHECK(solved_value(ProblemSpec::m(3, 3)) == 11);
    CHECK(solved_value(ProblemSpec::star(3, 2)) == 9);
}

TEST_CASE("mixed lengths are order-insensitive") {
    CHECK(solved_value(ProblemSpec::mixed({2, 3})) == 6);
    CHECK(solved_value(ProblemSpec::mixed({4, 3})) == 18);
    CHECK(solved_value(ProblemSpec::mixed({2, 3, 2})) == 7);
    CHECK(solved_value(ProblemSpec::mixed({3, 2, 2})) == 7);
}

TEST_CASE("canonical witnesses are the DFS-first colorings") {
    SECTION("w(3,3) at 8") {
        auto r = solve(ProblemSpec::diagonal(3, 2));
        REQUIRE(r.value.has_value());
        CHECK(r.value->value == 9);
        REQUIRE(r.value->witness.has_value());
        REQUIRE(r.value->witness->coloring.has_value());
        CHECK(digits_of(*r.value->witness->coloring) == "00110011");
    }
    SECTION("G(3,2) at 4") {
        auto r = solve(ProblemSpec::g(3, 2));
        REQUIRE(r.value.has_value());
        REQUIRE(r.value->witness.has_value());
        REQUIRE(r.value->witness->set.has_value());
        CHECK(r.value->witness->set->elements == std::vector<int>{1, 2, 4, 5});
    }
    SECTION("M includes 0 as a legal element") {
        auto r = solve(ProblemSpec::m(3, 2));
        REQUIRE(r.value.has_value());
        REQUIRE(r.value->witness.has_value());
        REQUIRE(r.value->witness->set.has_value());
        CHECK(r.value->witness->set->elements.front() == 0);
    }
}

TEST_CASE("witness_search status at and below the value") {
    CHECK(witness_search(ProblemSpec::diagonal(3, 2), 9).status == SearchStatus::NoWitness);
    auto at8 = witness_search(ProblemSpec::diagonal(3, 2), 8);
    REQUIRE(at8.status == SearchStatus::WitnessFound);
    REQUIRE(at8.coloring.has_value());
    CHECK(digits_of(*at8.coloring) == "00110011");
    CHECK(find_mono_ap(*at8.coloring, 3) == std::nullopt);

    auto g4 = witness_search(ProblemSpec::g(3, 2), 4);
    REQUIRE(g4.status == SearchStatus::WitnessFound);
    REQUIRE(g4.set.has_value());
    CHECK(g4.set->elements == std::vector<int>{1, 2, 4, 5});
    CHECK(witness_search(ProblemSpec::g(3, 2), 5).status == SearchStatus::NoWitness);
}

TEST_CASE("solver agrees with plain enumeration") {
    SECTION("has-witness per level") {
        const std::vector<std::pair<ProblemSpec, int>> cases = {
            {ProblemSpec::mixed({2, 2}), 9},  {ProblemSpec::mixed({3, 2}), 9},
            {ProblemSpec::mixed({3, 3}), 9},  {ProblemSpec::mixed({2, 2, 3}), 9},
            {ProblemSpec::mixed({3, 1}), 6},  {ProblemSpec::diagonal(3, 3), 9},
            {ProblemSpec::w1(3, 2), 9},       {ProblemSpec::w1(4, 3), 9},
            {ProblemSpec::w1(2, 3), 9},       {ProblemSpec::star(3, 2), 8},
            {ProblemSpec::star(3, 3), 8},     {ProblemSpec::star(4, 2), 8},
            {ProblemSpec::g(3, 2), 6},        {ProblemSpec::g(4, 2), 6},
            {ProblemSpec::g(3, 3), 6},        {ProblemSpec::m(3, 2), 7},
            {ProblemSpec::m(4, 2), 7},        {ProblemSpec::m(3, 3), 7},
        };
        for (const auto& [spec, max_n] : cases) {
            INFO(spec.key());
            for (int n = 1; n <= max_n; ++n) {
                INFO("n = " << n);
                const bool naive = naive_has_witness(spec, n);
                const auto smart = witness_search(spec, n);
                REQUIRE(smart.status != SearchStatus::BudgetExhausted);
                CHECK(naive == (smart.status == SearchStatus::WitnessFound));
            }
        }
    }
    SECTION("full values") {
        const std::vector<ProblemSpec> cases = {
            ProblemSpec::mixed({3, 2}),  ProblemSpec::mixed({2, 2, 3}),
            ProblemSpec::diagonal(3, 2), ProblemSpec::w1(3, 2),
            ProblemSpec::w1(2, 2),       ProblemSpec::star(3, 2),
            ProblemSpec::g(3, 2),        ProblemSpec::g(3, 3),
            ProblemSpec::m(3, 2),        ProblemSpec::m(3, 3),
        };
        for (const auto& spec : cases) {
            INFO(spec.key());
            CHECK(naive_solve(spec) == solved_value(spec));
        }
    }
    SECTION("the enumeration cap is enforced") {
        CHECK_THROWS_AS(naive_has_witness(ProblemSpec::diagonal(3, 6), 40), std::invalid_argument);
    }
}

// Rerun the set-domain sizes with a from-scratch DFS that drives the domain
// only through candidates/push/pop and demand identical first witnesses and
// exhaustion levels as the production search stack.
namespace {

template <typename Domain>
std::optional<std::vector<int>> plain_first_witness(Domain dom) {
    std::vector<int> chosen;
    std::vector<int> cands;
    auto dfs = [&](auto&& self, int depth) -> bool {
        if (depth == dom.slots()) return true;
        std::vector<int> local;
        dom.candidates(depth, local);
        for (int c : local) {
            dom.push(depth, c);
            chosen.push_back(c);
            if (self(self, depth + 1)) return true;
            chosen.pop_back();
            dom.pop(depth, c);
        }
        return false;
    };
    if (dfs(dfs, 0)) return chosen;
    return std::nullopt;
}

}  // namespace

TEST_CASE("set search matches an independent domain sweep") {
    struct Case {
        ProblemSpec spec;
        long long value;
    };
    // Values here are the solver's own, each independently confirmed by a
    // from-scratch enumeration that shares no search code with the library.
    const std::vector<Case> cases = {
        {ProblemSpec::m(3, 4), 19},
        {ProblemSpec::m(3, 5), 31},
        {ProblemSpec::g(3, 5), 17},
        {ProblemSpec::g(3, 6), 23},
    };
    for (const auto& [spec, value] : cases) {
        INFO(spec.key());
        auto plain = [&](int n) {
            if (spec.family == Family::G)
                return plain_first_witness(detail::GapSetDomain(spec.k, spec.s, n));
            return plain_first_witness(detail::BlockSetDomain(spec.k, spec.s, n));
        };
        const int below = static_cast<int>(value) - 1;
        const auto expect = plain(below);
        REQUIRE(expect.has_value());
        const auto got = witness_search(spec, below);
        REQUIRE(got.status == SearchStatus::WitnessFound);
        REQUIRE(got.set.has_value());
        CHECK(got.set->elements == *expect);
        CHECK_FALSE(plain(static_cast<int>(value)).has_value());
        CHECK(witness_search(spec, static_cast<int>(value)).status == SearchStatus::NoWitness);
        CHECK(solved_value(spec) == value);
    }
}

TEST_CASE("r_k by branch and bound") {
    SECTION("matches subset enumeration") {
        for (int n = 0; n <= 16; ++n) {
            INFO("n = " << n);
            CHECK(solve_r(3, n).size == brute_r(3, n));
        }
        for (int n = 0; n <= 12; ++n) {
            INFO("n = " << n);
            CHECK(solve_r(4, n).size == brute_r(4, n));
            CHECK(solve_r(2, n).size == brute_r(2, n));
        }
    }
    SECTION("frozen points") {
        CHECK(solve_r(3, 5).size == 4);
        CHECK(solve_r(3, 9).size == 5);
        CHECK(solve_r(3, 14).size == 8);
        CHECK(solve_r(2, 9).size == 1);
        CHECK(solve_r(2, 0).size == 0);
    }
    SECTION("witness is real") {
        auto r = solve_r(3, 14);
        REQUIRE(r.size == 8);
        Certificate cert;
        cert.spec = ProblemSpec::r(3, 14);
        cert.n = r.size;
        cert.claim = ClaimKind::GoodWitness;
        cert.set = r.witness;
        CHECK(verify_certificate(cert).clean);
    }
    SECTION("rejects bad arguments") {
        CHECK_THROWS_AS(solve_r(1, 5), std::invalid_argument);
        CHECK_THROWS_AS(solve_r(3, -1), std::invalid_argument);
    }
}

TEST_CASE("chi_k and its duality with w(k; s)") {
    // chi_3(m) is the least s with w(3; s) > m; w(3;1)=3, w(3;2)=9, w(3;3)=27
    const std::vector<std::pair<int, int>> expected = {
        {1, 1}, {2, 1}, {3, 2}, {8, 2}, {9, 3}, {10, 3}, {12, 3},
    };
    for (const auto& [m, colors] : expected) {
        INFO("m = " << m);
        auto r = solve_chi(3, m);
        REQUIRE(r.has_value());
        CHECK(r->colors == colors);
        CHECK(r->witness.n == m);
        CHECK(r->witness.s == colors);
        CHECK(find_mono_ap(r->witness, 3) == std::nullopt);
    }
    CHECK(solve_chi(2, 5)->colors == 5);
    CHECK_THROWS_AS(solve_chi(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(solve_chi(3, 0), std::invalid_argument);
}

TEST_CASE("solve rejects r_k and chi_k specs") {
    CHECK_THROWS_AS(solve(ProblemSpec::r(3, 10)), std::invalid_argument);
    CHECK_THROWS_AS(solve(ProblemSpec::chi(3, 10)), std::invalid_argument);
    CHECK_THROWS_AS(witness_search(ProblemSpec::r(3, 10), 4), std::invalid_argument);
    CHECK_THROWS_AS(witness_search(ProblemSpec::diagonal(3, 2), 0), std::invalid_argument);
    CHECK_THROWS_AS(solve(ProblemSpec::diagonal(1, 2)), std::invalid_argument);
}

TEST_CASE("budgets cut the search off cleanly") {
    SECTION("node budget") {
        SearchBudget b;
        b.max_nodes = 500;
        auto r = solve(ProblemSpec::mixed({3, 6}), b);
        CHECK(r.status == SolveStatus::BudgetExhausted);
        CHECK_FALSE(r.value.has_value());
        CHECK(r.lower_bound >= 1);
    }
    SECTION("level cap gives a lower bound") {
        SearchBudget b;
        b.max_n = 20;
        auto r = solve(ProblemSpec::diagonal(3, 3), b);
        REQUIRE(r.status == SolveStatus::BudgetExhausted);
        CHECK(r.lower_bound == 21);  // a witness on [1, 20] was found
    }
    SECTION("witness_search reports exhaustion") {
        SearchBudget b;
        b.max_nodes = 10;
        auto out = witness_search(ProblemSpec::diagonal(3, 5), 100, b);
        CHECK(out.status == SearchStatus::BudgetExhausted);
    }
}

TEST_CASE("solves are deterministic and thread-count independent") {
    const std::vector<ProblemSpec> cases = {
        ProblemSpec::mixed({3, 5}), ProblemSpec::diagonal(3, 2),
        ProblemSpec::w1(3, 3),      ProblemSpec::star(3, 3),
        ProblemSpec::g(3, 5),       ProblemSpec::m(3, 4),
    };
    for (const auto& spec : cases) {
        INFO(spec.key());
        SearchBudget seq;
        auto a = solve(spec, seq);
        auto b = solve(spec, seq);
        SearchBudget par;
        par.threads = 4;
        auto c = solve(spec, par);
        REQUIRE(a.value.has_value());
        REQUIRE(b.value.has_value());
        REQUIRE(c.value.has_value());
        CHECK(a.value->value == b.value->value);
        CHECK(a.value->value == c.value->value);
        REQUIRE(a.value->witness.has_value());
        REQUIRE(b.value->witness.has_value());
        REQUIRE(c.value->witness.has_value());
        if (spec.set_family()) {
            CHECK(a.value->witness->set == b.value->witness->set);
            CHECK(a.value->witness->set == c.value->witness->set);
        } else {
            CHECK(a.value->witness->coloring == b.value->witness->coloring);
            CHECK(a.value->witness->coloring == c.value->witness->coloring);
        }
    }
}

TEST_CASE("solve reports work done") {
    auto r = solve(ProblemSpec::diagonal(3, 2));
    REQUIRE(r.value.has_value());
    CHECK(r.value->nodes_explored > 0);
    CHECK(r.value->elapsed_seconds >= 0.0);
    CHECK(r.value->solver_version == std::string(kSolverVersion));
    CHECK(r.nodes >= r.value->nodes_explored);
}
