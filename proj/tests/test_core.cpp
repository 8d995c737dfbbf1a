// Checks the progression primitives against small independent oracles:
// the expected values below were frozen from exhaustive scans written
// directly in this file, not from the library under test.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "waerden/core.hpp"
#include "waerden/verify.hpp"

using namespace waerden;

namespace {

Coloring coloring_from_digits(const std::string& digits, int s) {
    Coloring c(static_cast<int>(digits.size()), s);
    for (std::size_t i = 0; i < digits.size(); ++i) c.colors[i] = static_cast<std::uint8_t>(digits[i] - '0');
    REQUIRE(c.valid());
    return c;
}

// Oracle: scan every (a, d) pair directly.
bool oracle_has_mono_ap(const Coloring& c, int k) {
    for (int a = 1; a <= c.n; ++a) {
        for (int d = 1; a + (k - 1) * d <= c.n; ++d) {
            int same = 1;
            while (same < k && c.color(a + same * d) == c.color(a)) ++same;
            if (same == k) return true;
        }
    }
    return false;
}

bool oracle_has_color_ap(const Coloring& c, int k) {
    for (int a = 1; a <= c.n; ++a) {
        for (int d = 1; a + (k - 1) * d <= c.n; ++d) {
            bool arith = true;
            for (int j = 2; j < k && arith; ++j)
                arith = c.color(a + j * d) - c.color(a + (j - 1) * d) ==
                        c.color(a + d) - c.color(a);
            if (arith) return true;
        }
    }
    return false;
}

bool oracle_set_has_ap(const std::vector<int>& v, int k) {
    std::set<int> s(v.begin(), v.end());
    for (int a : v)
        for (int b : v) {
            if (b <= a) continue;
            const int d = b - a;
            int len = 2;
            int next = b + d;
            while (s.count(next)) {
                ++len;
                next += d;
            }
            if (len >= k) return true;
        }
    return false;
}

Coloring decode(unsigned bits, int n, int s) {
    Coloring c(n, s);
    for (int i = 0; i < n; ++i) {
        c.colors[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(bits % static_cast<unsigned>(s));
        bits /= static_cast<unsigned>(s);
    }
    return c;
}

}  // namespace

TEST_CASE("enumerate_aps counts and order") {
    auto aps = enumerate_aps(9, 3);
    CHECK(aps.size() == 16);  // sum over d of (9 - 2d) = 7 + 5 + 3 + 1
    CHECK(aps.front() == Progression{1, 1, 3});
    CHECK(aps.back() == Progression{7, 1, 3});
    // lexicographic by (first, diff)
    for (std::size_t i = 1; i < aps.size(); ++i) {
        const bool ordered = aps[i - 1].first < aps[i].first ||
                             (aps[i - 1].first == aps[i].first && aps[i - 1].diff < aps[i].diff);
        CHECK(ordered);
    }
    for (const auto& p : aps) CHECK(p.last() <= 9);

    CHECK(enumerate_aps(3, 4).empty());
    CHECK(enumerate_aps(4, 5).empty());
    CHECK_THROWS_AS(enumerate_aps(5, 1), std::invalid_argument);

    for (int n = 0; n <= 24; ++n) {
        for (int k = 2; k <= 5; ++k) {
            std::size_t expect = 0;
            for (int d = 1; (k - 1) * d <= n - 1; ++d)
                expect += static_cast<std::size_t>(n - (k - 1) * d);
            CHECK(enumerate_aps(n, k).size() == expect);
        }
    }
}

TEST_CASE("find_mono_ap on hand-checked colorings") {
    // R R B B R R B B has no monochromatic 3-AP (checked by scanning all 16).
    auto c = coloring_from_digits("00110011", 2);
    CHECK_FALSE(oracle_has_mono_ap(c, 3));
    CHECK_FALSE(find_mono_ap(c, 3).has_value());

    auto mono = coloring_from_digits("000", 1);
    auto v = find_mono_ap(mono, 3);
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::MONO_AP);
    CHECK(v->progression == Progression{1, 1, 3});
    CHECK(v->color == 0);

    // first violation in (diff, first) order
    auto c2 = coloring_from_digits("0110100", 2);
    auto v2 = find_mono_ap(c2, 3);
    REQUIRE(v2.has_value());
    bool mono_check = true;
    for (int j = 0; j < v2->progression->length; ++j)
        mono_check = mono_check && c2.color(v2->progression->term(j)) == v2->color;
    CHECK(mono_check);
}

TEST_CASE("find_mono_ap agrees with oracle on all small colorings") {
    for (int n = 1; n <= 10; ++n) {
        unsigned total = 1u << n;
        for (unsigned bits = 0; bits < total; ++bits) {
            auto c = decode(bits, n, 2);
            CHECK(find_mono_ap(c, 3).has_value() == oracle_has_mono_ap(c, 3));
        }
    }
    for (int n = 1; n <= 7; ++n) {
        unsigned total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        for (unsigned bits = 0; bits < total; ++bits) {
            auto c = decode(bits, n, 3);
            CHECK(find_mono_ap(c, 3).has_value() == oracle_has_mono_ap(c, 3));
        }
    }
}

TEST_CASE("find_mixed_violation") {
    // lengths (3, 2): color 0 avoids 3-APs, color 1 avoids 2-APs.
    auto c = coloring_from_digits("00100", 2);
    CHECK_FALSE(find_mixed_violation(c, {3, 2}).has_value());

    auto all0 = coloring_from_digits("000", 2);
    auto v = find_mixed_violation(all0, {3, 5});
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::MONO_AP);
    CHECK(v->color == 0);
    CHECK(v->progression == Progression{1, 1, 3});

    // color 1 pair at difference 1
    auto c2 = coloring_from_digits("0110", 2);
    auto v2 = find_mixed_violation(c2, {3, 2});
    REQUIRE(v2.has_value());
    CHECK(v2->color == 1);
    CHECK(v2->progression == Progression{2, 1, 2});

    // (d, a) order: the color-0 progression at d=2 precedes the color-1 pair
    auto c3 = coloring_from_digits("01010", 2);
    auto v3 = find_mixed_violation(c3, {3, 2});
    REQUIRE(v3.has_value());
    CHECK(v3->color == 0);
    CHECK(v3->progression == Progression{1, 2, 3});

    SECTION("length-1 requirement is any occurrence of that color") {
        auto with1 = coloring_from_digits("0010", 2);
        auto occ = find_mixed_violation(with1, {3, 1});
        REQUIRE(occ.has_value());
        CHECK(occ->kind == Violation::RUN);
        CHECK(occ->run_start == 3);
        CHECK(occ->run_length == 1);
        CHECK(occ->color == 1);

        auto without1 = coloring_from_digits("00", 2);
        CHECK_FALSE(find_mixed_violation(without1, {3, 1}).has_value());
    }

    CHECK_THROWS_AS(find_mixed_violation(c, {3, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(find_mixed_violation(c, {3, 0}), std::invalid_argument);
}

TEST_CASE("find_w1_violation") {
    // color 1 on {1,3,6,8}: no 3-AP in color 0, no 2 consecutive of color 1
    auto c = coloring_from_digits("10100101", 2);
    CHECK_FALSE(find_w1_violation(c, 3, 2).has_value());

    auto run = coloring_from_digits("00110", 2);
    auto v = find_w1_violation(run, 3, 2);
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::RUN);
    CHECK(v->run_start == 3);
    CHECK(v->run_length == 2);
    CHECK(v->color == 1);

    auto red = coloring_from_digits("01000", 2);
    auto v2 = find_w1_violation(red, 3, 3);
    REQUIRE(v2.has_value());
    CHECK(v2->kind == Violation::MONO_AP);
    CHECK(v2->color == 0);
    CHECK(v2->progression == Progression{3, 1, 3});

    CHECK_THROWS_AS(find_w1_violation(coloring_from_digits("012", 3), 3, 2),
                    std::invalid_argument);
}

TEST_CASE("find_color_ap") {
    Coloring c(5, 5);
    c.set_color(1, 0);
    c.set_color(2, 1);
    c.set_color(3, 2);
    c.set_color(4, 0);
    c.set_color(5, 4);
    // positions 1,3,5 carry colors 0,2,4
    auto v = find_color_ap(c, 3);
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::COLOR_AP);
    CHECK(v->progression == Progression{1, 1, 3});  // 0,1,2 comes first in (d,a) order
    CHECK(v->color_diff == 1);

    auto mono = coloring_from_digits("1111", 2);
    auto vm = find_color_ap(mono, 3);
    REQUIRE(vm.has_value());
    CHECK(vm->kind == Violation::MONO_AP);
    CHECK(vm->color == 1);

    // decreasing color sequence reports a negative difference
    Coloring dec(3, 3);
    dec.set_color(1, 2);
    dec.set_color(2, 1);
    dec.set_color(3, 0);
    auto vd = find_color_ap(dec, 3);
    REQUIRE(vd.has_value());
    CHECK(vd->color_diff == -1);
}

TEST_CASE("two colors admit no non-monochromatic color AP for k = 3") {
    for (int n = 1; n <= 10; ++n) {
        unsigned total = 1u << n;
        for (unsigned bits = 0; bits < total; ++bits) {
            auto c = decode(bits, n, 2);
            CHECK(find_color_ap(c, 3).has_value() == find_mono_ap(c, 3).has_value());
        }
    }
}

TEST_CASE("find_color_ap agrees with oracle on 3-colorings") {
    for (int n = 1; n <= 7; ++n) {
        unsigned total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        for (unsigned bits = 0; bits < total; ++bits) {
            auto c = decode(bits, n, 3);
            CHECK(find_color_ap(c, 3).has_value() == oracle_has_color_ap(c, 3));
        }
    }
}

TEST_CASE("presence of violations is reflection invariant") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 4000; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const int s = 2 + static_cast<int>(rng() % 3);
        Coloring c(n, s);
        for (auto& col : c.colors) col = static_cast<std::uint8_t>(rng() % static_cast<unsigned>(s));
        Coloring r = c.reversed();
        CHECK(find_mono_ap(c, 3).has_value() == find_mono_ap(r, 3).has_value());
        CHECK(find_color_ap(c, 3).has_value() == find_color_ap(r, 3).has_value());
        if (s == 2) {
            CHECK(find_w1_violation(c, 3, 2).has_value() == find_w1_violation(r, 3, 2).has_value());
            std::vector<int> lens{3, 4};
            CHECK(find_mixed_violation(c, lens).has_value() ==
                  find_mixed_violation(r, lens).has_value());
        }
    }
}

TEST_CASE("set_has_ap") {
    CHECK_FALSE(set_has_ap(IntegerSet{{1, 2, 4, 5}}, 3).has_value());
    auto p = set_has_ap(IntegerSet{{1, 2, 3}}, 3);
    REQUIRE(p.has_value());
    CHECK(*p == Progression{1, 1, 3});
    auto q = set_has_ap(IntegerSet{{2, 4, 6, 7}}, 3);
    REQUIRE(q.has_value());
    CHECK(*q == Progression{2, 2, 3});
    CHECK_FALSE(set_has_ap(IntegerSet{{0, 1, 3, 7}}, 3).has_value());
    CHECK(set_has_ap(IntegerSet{{0, 3, 6}}, 3).has_value());
    CHECK_FALSE(set_has_ap(IntegerSet{{1, 2}}, 3).has_value());

    std::mt19937 rng(11);
    for (int iter = 0; iter < 3000; ++iter) {
        std::set<int> raw;
        const int count = 1 + static_cast<int>(rng() % 9);
        for (int i = 0; i < count; ++i) raw.insert(static_cast<int>(rng() % 30));
        std::vector<int> v(raw.begin(), raw.end());
        const int k = 3 + static_cast<int>(rng() % 2);
        CHECK(set_has_ap(IntegerSet{v}, k).has_value() == oracle_set_has_ap(v, k));
    }
}

TEST_CASE("longest_run") {
    auto c = coloring_from_digits("0110011101", 2);
    CHECK(longest_run(c, 1) == 3);
    CHECK(longest_run(c, 0) == 2);
    CHECK(longest_run(coloring_from_digits("000", 2), 1) == 0);
    CHECK(longest_run(Coloring(0, 2), 0) == 0);
}

TEST_CASE("classify_triple") {
    auto ap = classify_triple(1, 3, 5);
    CHECK(ap.kind == TripleClass::AP);
    CHECK(ap.x == 1);
    CHECK(ap.d == 2);

    auto plus = classify_triple(1, 2, 4);
    CHECK(plus.kind == TripleClass::AP_PLUS);
    CHECK(plus.d == 1);

    auto minus = classify_triple(1, 3, 4);
    CHECK(minus.kind == TripleClass::AP_MINUS);
    CHECK(minus.d == 2);

    CHECK(classify_triple(1, 2, 5).kind == TripleClass::NONE);
    // (x, x+1, x+2d-1) with d=1 collides with x+1; d >= 2 keeps classes disjoint
    CHECK(classify_triple(3, 4, 6).kind == TripleClass::AP_PLUS);
    CHECK_THROWS_AS(classify_triple(2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(classify_triple(1, 5, 3), std::invalid_argument);

    // classes are exclusive and match their defining shapes
    for (int x = 1; x <= 20; ++x)
        for (int y = x + 1; y <= 21; ++y)
            for (int z = y + 1; z <= 22; ++z) {
                auto t = classify_triple(x, y, z);
                const bool is_ap = z - y == y - x;
                const bool is_plus = y - x >= 1 && z == x + 2 * (y - x) + 1;
                const bool is_minus = y - x >= 2 && z == x + 2 * (y - x) - 1;
                CHECK((t.kind == TripleClass::AP) == is_ap);
                CHECK((t.kind == TripleClass::AP_PLUS) == is_plus);
                CHECK((t.kind == TripleClass::AP_MINUS) == is_minus);
                if (t.kind != TripleClass::NONE) {
                    CHECK(t.x == x);
                    CHECK(t.d == y - x);
                }
            }
}

TEST_CASE("verify_certificate accepts good witnesses") {
    Certificate cert;
    cert.spec = ProblemSpec::mixed({3, 3});
    cert.n = 8;
    cert.coloring = coloring_from_digits("00110011", 2);
    CHECK(verify_certificate(cert).clean);

    Certificate diag;
    diag.spec = ProblemSpec::diagonal(3, 2);
    diag.n = 8;
    diag.coloring = coloring_from_digits("00110011", 2);
    CHECK(verify_certificate(diag).clean);

    Certificate g;
    g.spec = ProblemSpec::g(3, 2);
    g.n = 4;
    g.set = IntegerSet{{1, 2, 4, 5}};
    CHECK(verify_certificate(g).clean);

    Certificate m;
    m.spec = ProblemSpec::m(3, 2);
    m.n = 3;
    m.set = IntegerSet{{0, 2, 5}};
    CHECK(verify_certificate(m).clean);

    Certificate r;
    r.spec = ProblemSpec::r(3, 5);
    r.n = 4;
    r.set = IntegerSet{{1, 2, 4, 5}};
    CHECK(verify_certificate(r).clean);

    Certificate chi;
    chi.spec = ProblemSpec::chi(3, 8);
    chi.n = 2;
    chi.coloring = coloring_from_digits("00110011", 2);
    CHECK(verify_certificate(chi).clean);

    Certificate w1;
    w1.spec = ProblemSpec::w1(3, 2);
    w1.n = 8;
    w1.coloring = coloring_from_digits("10100101", 2);
    CHECK(verify_certificate(w1).clean);

    Certificate star;
    star.spec = ProblemSpec::star(3, 2);
    star.n = 8;
    star.coloring = coloring_from_digits("00110011", 2);
    CHECK(verify_certificate(star).clean);
}

TEST_CASE("verify_certificate flags violations") {
    Certificate cert;
    cert.spec = ProblemSpec::diagonal(3, 2);
    cert.n = 9;
    cert.coloring = coloring_from_digits("001100110", 2);
    auto verdict = verify_certificate(cert);
    CHECK_FALSE(verdict.clean);
    REQUIRE(verdict.violation.has_value());
    CHECK(verdict.violation->kind == Violation::MONO_AP);

    Certificate g;
    g.spec = ProblemSpec::g(3, 2);
    g.n = 3;
    g.set = IntegerSet{{1, 2, 3}};
    auto gv = verify_certificate(g);
    CHECK_FALSE(gv.clean);
    CHECK(gv.violation->kind == Violation::SET_AP);
}

TEST_CASE("verify_certificate rejects malformed certificates") {
    Certificate cert;
    cert.spec = ProblemSpec::diagonal(3, 2);
    cert.n = 9;
    cert.coloring = coloring_from_digits("00110011", 2);  // n mismatch
    CHECK_THROWS_AS(verify_certificate(cert), CertificateError);

    Certificate wrong;
    wrong.spec = ProblemSpec::g(3, 2);
    wrong.n = 4;
    wrong.coloring = coloring_from_digits("0011", 2);  // set family wants a set
    CHECK_THROWS_AS(verify_certificate(wrong), CertificateError);

    Certificate gap;
    gap.spec = ProblemSpec::g(3, 2);
    gap.n = 3;
    gap.set = IntegerSet{{1, 2, 6}};  // gap of 4 > s
    CHECK_THROWS_AS(verify_certificate(gap), CertificateError);

    Certificate block;
    block.spec = ProblemSpec::m(3, 2);
    block.n = 3;
    block.set = IntegerSet{{0, 2, 7}};  // third block is [4, 5]
    CHECK_THROWS_AS(verify_certificate(block), CertificateError);

    Certificate extremal;
    extremal.spec = ProblemSpec::diagonal(3, 2);
    extremal.n = 9;
    extremal.claim = ClaimKind::ExtremalAttested;
    extremal.attestation = Attestation{"x", 1, "y"};
    CHECK_THROWS_AS(verify_certificate(extremal), CertificateError);

    Certificate outside;
    outside.spec = ProblemSpec::r(3, 5);
    outside.n = 3;
    outside.set = IntegerSet{{1, 2, 6}};  // 6 outside [1, 5]
    CHECK_THROWS_AS(verify_certificate(outside), CertificateError);
}
