#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_support.hpp"
#include "walks/delta.hpp"
#include "walks/errors.hpp"

using namespace walks;
using walks::testing::ord;
using walks::testing::small_universe;

namespace {

const std::vector<Ordinal>& u0() {
    static const auto u = small_universe(3, 4);
    return u;
}

// Least scanned point where the two branches disagree, if any.
std::optional<Ordinal> brute_first_disagreement(const CSequence& s, const Ordinal& a,
                                                const Ordinal& b,
                                                const std::vector<Ordinal>& scan) {
    const Ordinal& low = std::min(a, b);
    for (const auto& xi : scan) {
        if (!(xi < low)) break;
        if (rho0(s, xi, a) != rho0(s, xi, b)) return xi;
    }
    return std::nullopt;
}

void check_against_scan(const CSequence& s, const Ordinal& a, const Ordinal& b,
                        const std::vector<Ordinal>& scan) {
    INFO(format(a), " vs ", format(b));
    Ordinal d = delta(s, a, b);
    CHECK(d <= std::min(a, b));
    CHECK(delta(s, b, a) == d);
    auto brute = brute_first_disagreement(s, a, b, scan);
    if (brute) CHECK(d <= *brute);
    if (std::binary_search(scan.begin(), scan.end(), d) && d < std::min(a, b)) {
        REQUIRE(brute.has_value());
        CHECK(*brute == d);
    }
    if (d < std::min(a, b)) CHECK(rho0(s, d, a) != rho0(s, d, b));
    if (a != b) {
        const Ordinal& lo = std::min(a, b);
        const Ordinal& hi = std::max(a, b);
        CHECK(d <= successor(lambda(s, lo, hi)));
    }
}

} // namespace

TEST_CASE("delta examples") {
    auto s = canonical_cseq();
    CHECK(delta(*s, ord("w"), ord("w*2")) == ord("0"));
    CHECK(delta(*s, ord("w"), ord("w^2")) == ord("1"));
    CHECK(delta(*s, ord("w^2+3"), ord("w^2+3")) == ord("w^2+3"));
    CHECK(delta(*s, ord("0"), ord("w")) == ord("0"));
    // rho0(xi, 5) and rho0(xi, 7) agree for xi < 5: both walk down by ones
    // through 5, with the longer code from 7.
    CHECK(delta(*s, ord("5"), ord("7")) == ord("0"));
}

TEST_CASE("delta against an exhaustive scan below the smaller ordinal") {
    auto s = canonical_cseq();
    const auto scan = small_universe(3, 6);
    const auto& u = u0();
    std::size_t k = 0;
    for (const auto& b : u) {
        for (const auto& a : u) {
            if (!(a < b)) break;
            if (k++ % 5 != 0 && !(a.is_limit() && b.is_limit())) continue;
            check_against_scan(*s, a, b, scan);
        }
    }
}

TEST_CASE("delta on random pairs below w^4, including a pinned overlay") {
    const auto scan = small_universe(4, 5);
    const auto pool = small_universe(4, 3);
    std::mt19937_64 rng(7);
    SequenceOverride o{ord("w*4"), {ord("w*3+1"), ord("w*3+4")}, ord("w*3+3"), 1};
    auto overlay = overlay_cseq(canonical_cseq(), {o});
    for (auto s : {canonical_cseq(), overlay}) {
        for (int i = 0; i < 60; ++i) {
            const auto& a = pool[rng() % pool.size()];
            const auto& b = pool[rng() % pool.size()];
            check_against_scan(*s, a, b, scan);
        }
    }
}

TEST_CASE("limit branches form an antichain") {
    auto s = canonical_cseq();
    for (const auto& b : u0()) {
        if (!b.is_limit()) continue;
        for (const auto& a : u0()) {
            if (!(a < b)) break;
            if (a.is_limit()) CHECK(delta(*s, a, b) < a);
        }
        // |rho0(xi, b)| = 1 exactly on C_b.
        for (const auto& xi : small_universe(3, 6)) {
            if (!(xi < b)) break;
            CHECK((rho0(*s, xi, b).size() == 1) == s->contains(b, xi));
        }
    }
}

TEST_CASE("node relations and meets") {
    auto s = canonical_cseq();
    TreeNode root{ord("0"), ord("w^2")};
    TreeNode a{ord("w"), ord("w")};
    TreeNode b{ord("w"), ord("w^2")};
    TreeNode c{ord("1"), ord("w")};
    CHECK(node_relate(*s, root, a) == NodeRelation::ABelowB);
    CHECK(node_relate(*s, root, TreeNode{ord("0"), ord("5")}) == NodeRelation::Equal);
    CHECK(node_relate(*s, a, b) == NodeRelation::Incomparable);
    CHECK(node_relate(*s, c, b) == NodeRelation::ABelowB);
    CHECK(node_relate(*s, b, c) == NodeRelation::BBelowA);
    CHECK(node_relate(*s, TreeNode{ord("1"), ord("w^2")}, c) == NodeRelation::Equal);

    TreeNode m = node_meet(*s, a, b);
    CHECK(m.height == ord("1"));
    CHECK(node_equal(*s, m, c));
    CHECK(node_equal(*s, node_meet(*s, c, b), c));
    CHECK(node_equal(*s, node_meet(*s, b, root), root));
}

TEST_CASE("meet is the largest common lower bound") {
    auto s = canonical_cseq();
    const auto pool = small_universe(3, 2);
    for (const auto& x : pool) {
        for (const auto& y : pool) {
            TreeNode a{x, x}, b{y, y};
            TreeNode m = node_meet(*s, a, b);
            CHECK(node_below_or_equal(*s, m, a));
            CHECK(node_below_or_equal(*s, m, b));
            // Nothing strictly above the meet on a's branch is below b.
            for (const auto& h : pool) {
                if (h > m.height && h <= x) CHECK_FALSE(node_below_or_equal(*s, {h, x}, b));
            }
        }
    }
}

TEST_CASE("closure examples") {
    auto s = canonical_cseq();
    ClosureSet c = closure(*s, {ord("w"), ord("w*2")});
    CHECK(c.members == std::vector<Ordinal>{ord("0"), ord("w"), ord("w*2")});
    CHECK(c.rounds == 1);
    c = closure(*s, {ord("w^2+3")});
    CHECK(c.members == std::vector<Ordinal>{ord("w^2+3")});
    CHECK(c.rounds == 0);
    c = closure(*s, {});
    CHECK(c.members.empty());
    CHECK_THROWS_AS(closure(*s, {ord("w^3"), ord("w^3*2+w+1")}, 3), IterationCap);
}

TEST_CASE("closure laws on random bases") {
    auto s = canonical_cseq();
    const auto pool = small_universe(4, 3);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 15; ++i) {
        std::vector<Ordinal> base;
        for (int j = 0; j < 4; ++j) base.push_back(pool[rng() % pool.size()]);
        ClosureSet c = closure(*s, base);
        std::set<Ordinal> m(c.members.begin(), c.members.end());
        for (const auto& x : base) CHECK(m.contains(x));
        CHECK(closure(*s, c.members).members == c.members);
        for (auto hi = m.begin(); hi != m.end(); ++hi) {
            for (auto lo = m.begin(); lo != hi; ++lo) {
                for (const auto& t : trace(*s, *lo, *hi)) CHECK(m.contains(t));
                CHECK(m.contains(delta(*s, *lo, *hi)));
                CHECK(m.contains(lambda(*s, *lo, *hi)));
            }
        }
        // Every member is accounted for by exactly one generation step.
        CHECK(c.steps.size() == c.members.size());
    }
}
