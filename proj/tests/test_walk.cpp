#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_support.hpp"
#include "walks/cseq.hpp"
#include "walks/errors.hpp"

using namespace walks;
using walks::testing::ord;

namespace {

const std::vector<Ordinal>& u0() {
    static const auto u = walks::testing::small_universe(3, 4);
    return u;
}

bool in_trace(const std::vector<Ordinal>& tr, const Ordinal& x) {
    return std::find(tr.begin(), tr.end(), x) != tr.end();
}

} // namespace

TEST_CASE("canonical C-sequence") {
    auto s = canonical_cseq();
    for (std::uint64_t n = 0; n < 6; ++n) CHECK(s->at(ord("w"), n) == Ordinal::natural(n));
    CHECK(s->at(ord("w*2"), 2) == ord("w+2"));
    CHECK(s->at(ord("w^2+5"), 0) == ord("w^2+4"));
    CHECK_THROWS_AS(s->at(ord("w+1"), 1), OutOfRange);
    CHECK_THROWS_AS(s->at(ord("0"), 0), OutOfRange);
}

TEST_CASE("cseq_query examples") {
    auto s = canonical_cseq();
    CseqQuery q = s->query(ord("w"), ord("3"));
    CHECK(q.count == 3);
    CHECK(q.min_above == ord("3"));
    CHECK(q.max_below == ord("2"));

    q = s->query(ord("w*2"), ord("w"));
    CHECK(q.count == 0);
    CHECK(q.min_above == ord("w"));
    CHECK_FALSE(q.max_below.has_value());

    Ordinal g = ord("w^2+w*3");
    q = s->query(successor(g), g);
    CHECK(q.count == 0);
    CHECK(q.min_above == g);
    CHECK_FALSE(q.max_below.has_value());

    CHECK_THROWS_AS(s->query(ord("w"), ord("w")), OutOfRange);
    CHECK_THROWS_AS(s->query(ord("w"), ord("w+1")), OutOfRange);
    CHECK_THROWS_AS(s->query(ord("0"), ord("0")), OutOfRange);
}

TEST_CASE("queries agree with index enumeration on U0") {
    auto s = canonical_cseq();
    for (const auto& a : u0()) {
        if (a.is_zero()) continue;
        for (const auto& xi : u0()) {
            if (!(xi < a)) break;
            std::uint64_t count = 0;
            std::optional<Ordinal> max_below;
            Ordinal min_above;
            for (std::uint64_t n = 0;; ++n) {
                Ordinal x = s->at(a, n);
                if (x >= xi) {
                    min_above = x;
                    break;
                }
                ++count;
                max_below = x;
            }
            CseqQuery q = s->query(a, xi);
            CHECK(q.count == count);
            CHECK(q.min_above == min_above);
            CHECK(q.max_below == max_below);
        }
    }
}

TEST_CASE("walk examples") {
    auto s = canonical_cseq();
    WalkResult w = walk(*s, ord("w"), ord("w*2"));
    CHECK(w.trace == std::vector<Ordinal>{ord("w*2"), ord("w")});
    CHECK(w.rho0 == std::vector<std::uint64_t>{0});
    CHECK(w.lambda == ord("0"));

    w = walk(*s, ord("3"), ord("w"));
    CHECK(w.trace == std::vector<Ordinal>{ord("w"), ord("3")});
    CHECK(w.rho0 == std::vector<std::uint64_t>{3});
    CHECK(w.lambda == ord("2"));

    w = walk(*s, ord("1"), ord("w*2"));
    CHECK(w.trace == std::vector<Ordinal>{ord("w*2"), ord("w"), ord("1")});
    CHECK(w.rho0 == std::vector<std::uint64_t>{0, 1});
    CHECK(w.lambda == ord("0"));

    w = walk(*s, ord("w^2"), ord("w^2"));
    CHECK(w.trace == std::vector<Ordinal>{ord("w^2")});
    CHECK(w.rho0.empty());
    CHECK(w.lambda.is_zero());

    CHECK_THROWS_AS(walk(*s, ord("w+1"), ord("w")), OutOfRange);
}

TEST_CASE("trace shape on every pair of U0") {
    auto s = canonical_cseq();
    std::size_t pairs = 0;
    for (const auto& b : u0()) {
        for (const auto& a : u0()) {
            if (!(a < b)) break;
            ++pairs;
            WalkResult w = walk(*s, a, b);
            CHECK(w.trace.front() == b);
            CHECK(w.trace.back() == a);
            CHECK(std::is_sorted(w.trace.rbegin(), w.trace.rend()));
            CHECK(std::adjacent_find(w.trace.begin(), w.trace.end()) == w.trace.end());
            CHECK(w.rho0.size() + 1 == w.trace.size());
            if (!a.is_zero()) CHECK(w.lambda < a);
        }
    }
    CHECK(pairs == 7750);
}

TEST_CASE("walk decomposition through an intermediate point (alpha >= 1)") {
    auto s = canonical_cseq();
    const auto& u = u0();
    for (std::size_t i = 1; i < u.size(); i += 3) {
        for (std::size_t j = i + 1; j < u.size(); j += 2) {
            for (std::size_t k = j + 1; k < u.size(); k += 5) {
                const Ordinal &a = u[i], &g = u[j], &b = u[k];
                WalkResult ab = walk(*s, a, b), gb = walk(*s, g, b), ag = walk(*s, a, g);
                bool c1 = in_trace(ab.trace, g);
                std::set<Ordinal> lhs(ab.trace.begin(), ab.trace.end());
                std::set<Ordinal> rhs(gb.trace.begin(), gb.trace.end());
                rhs.insert(ag.trace.begin(), ag.trace.end());
                bool c2 = lhs == rhs;
                bool c3 = gb.lambda < a;
                auto joined = gb.rho0;
                joined.insert(joined.end(), ag.rho0.begin(), ag.rho0.end());
                bool c4 = ab.rho0 == joined;
                INFO(format(a), " ", format(g), " ", format(b));
                CHECK(c1 == c2);
                CHECK(c1 == c3);
                CHECK(c1 == c4);
            }
        }
    }
}

TEST_CASE("lambda(alpha, delta) < xi forces alpha onto the trace from delta to xi") {
    auto s = canonical_cseq();
    for (const auto& d : u0()) {
        if (!d.is_limit()) continue;
        for (const auto& xi : u0()) {
            if (!(xi < d)) break;
            auto tr = trace(*s, xi, d);
            for (const auto& a : u0()) {
                if (!(a < d)) break;
                if (a <= xi) continue;
                if (lambda(*s, a, d) < xi) CHECK(in_trace(tr, a));
            }
        }
    }
}

TEST_CASE("overlay C-sequence") {
    auto base = canonical_cseq();
    SequenceOverride o{ord("w"), {ord("5"), ord("7")}, ord("7"), 1};
    auto s = overlay_cseq(base, {o});
    CHECK(s->at(ord("w"), 0) == ord("5"));
    CHECK(s->at(ord("w"), 1) == ord("7"));
    CHECK(s->at(ord("w"), 2) == ord("9"));
    CHECK(s->at(ord("w*2"), 3) == base->at(ord("w*2"), 3));
    CHECK(s->at(ord("w+1"), 0) == ord("w"));
    CHECK(s->query(ord("w"), ord("6")).count == 1);

    // The overlay changes walks: from w to 3 the step is 5.
    CHECK(walk(*s, ord("3"), ord("w")).trace == std::vector<Ordinal>{ord("w"), ord("5"), ord("4"),
                                                                       ord("3")});

    SequenceOverride bad = o;
    bad.prefix = {ord("7"), ord("5")};
    CHECK_THROWS_AS(overlay_cseq(base, {bad}), AxiomViolation);
    bad = o;
    bad.tail_base = ord("w+7");
    CHECK_THROWS_AS(overlay_cseq(base, {bad}), AxiomViolation);
    bad = o;
    bad.prefix = {ord("5"), ord("w")};
    CHECK_THROWS_AS(overlay_cseq(base, {bad}), AxiomViolation);
    bad = o;
    bad.prefix = {ord("5"), ord("20")};
    CHECK_THROWS_AS(overlay_cseq(base, {bad}), AxiomViolation);
    bad = o;
    bad.alpha = ord("w+1");
    CHECK_THROWS_AS(overlay_cseq(base, {bad}), AxiomViolation);
}

TEST_CASE("overlay table JSON") {
    auto table = parse_overrides(
        R"({"alpha": "w*2", "prefix": ["w+1"], "tail": {"kind": "affine", "base": "w", "step": 2}})");
    REQUIRE(table.size() == 1);
    auto s = overlay_cseq(canonical_cseq(), table);
    CHECK(s->at(ord("w*2"), 0) == ord("w+1"));
    CHECK(s->at(ord("w*2"), 1) == ord("w+2"));
    CHECK(s->at(ord("w*2"), 2) == ord("w+4"));
    CHECK(parse_overrides(R"([{"alpha": "w", "prefix": [], "tail": {"kind": "affine", "base": "0"}}])")
              .size() == 1);
    CHECK_THROWS_AS(parse_overrides("{"), ConfigError);
    CHECK_THROWS_AS(parse_overrides(R"({"alpha": "w"})"), ConfigError);
    CHECK_THROWS_AS(
        parse_overrides(R"({"alpha": "w", "prefix": [], "tail": {"kind": "geometric", "base": "0"}})"),
        ConfigError);
}
