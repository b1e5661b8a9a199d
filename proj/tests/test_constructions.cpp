#include <doctest.h>

#include <set>

#include "test_support.hpp"
#include "walks/constructions.hpp"
#include "walks/errors.hpp"

using namespace walks;
using walks::testing::ord;
using walks::testing::small_universe;

namespace {

// Every ordinal is a member: successors included.
class Everything final : public Club {
public:
    bool contains(const Ordinal&) const override { return true; }
    Ordinal next(const Ordinal& xi) const override { return xi; }
    Ordinal pred_sup(const Ordinal& g) const override {
        return g.is_successor() ? predecessor(g) : g;
    }
    std::string descriptor() const override { return "everything"; }
};

const char* kSmallTree = R"({"nodes": [
  {"id": "r", "parent": null, "height": "0", "a": 2},
  {"id": "x", "parent": "r", "height": "1", "a": 3},
  {"id": "y", "parent": "r", "height": "w", "a": 7},
  {"id": "z", "parent": "y", "height": "w+2", "a": 5}
]})";

} // namespace

TEST_CASE("club-adapted C-sequence examples") {
    auto club = make_multiples(1);
    auto s = club_adapted_cseq(club);
    CHECK(s->descriptor() == "club:mult:w");
    CHECK(s->at(ord("w^2"), 0) == ord("w"));
    CHECK(s->at(ord("w^2"), 1) == ord("w*2"));
    CHECK(s->at(ord("w^2+w*3"), 0) == ord("w^2+w*2"));
    CHECK(s->at(ord("w^2+w*3"), 1) == ord("w^2+w*2+1"));
    CHECK(s->at(ord("w^3+5"), 0) == ord("w^3+4"));
    CHECK(s->at(ord("w"), 0) == ord("0"));
    CHECK(s->at(ord("w"), 3) == ord("3"));
    CHECK_THROWS_AS(club_adapted_cseq(std::make_shared<Everything>())->at(ord("w"), 0),
                    ClubNotLimit);
}

TEST_CASE("club-adapted C-sequence axioms on U0 and below w^4") {
    for (auto club : {make_multiples(1), make_multiples(2), make_ind()}) {
        auto s = club_adapted_cseq(club);
        INFO(club->descriptor());
        for (const auto& a : small_universe(4, 3)) {
            if (!a.is_limit()) continue;
            std::vector<Ordinal> xs;
            for (std::uint64_t n = 0; n < 40; ++n) xs.push_back(s->at(a, n));
            for (std::size_t i = 0; i < xs.size(); ++i) {
                CHECK(xs[i] < a);
                if (i > 0) CHECK(xs[i - 1] < xs[i]);
                if (club->is_limit_point(a)) CHECK(club->contains(xs[i]));
            }
            if (!club->is_limit_point(a)) CHECK(xs[0] == club->pred_sup(a));
            // Cofinal: every point of the universe below a is passed.
            for (const auto& xi : small_universe(4, 3)) {
                if (!(xi < a)) break;
                CHECK(s->query(a, xi).min_above < a);
            }
        }
    }
}

TEST_CASE("successor transform") {
    auto base = club_adapted_cseq(make_multiples(1));
    auto d = successor_cseq(base);
    CHECK(base->at(ord("w*2"), 2) == ord("w+2"));
    CHECK(d->at(ord("w*2"), 2) == ord("w+3"));
    CHECK(successor_cseq(canonical_cseq())->at(ord("w"), 0) == ord("1"));
    CHECK(d->at(ord("w^2+1"), 0) == ord("w^2"));
    CHECK(d->descriptor() == "succ:club:mult:w");
    for (const auto& a : small_universe(3, 3)) {
        if (!a.is_limit()) continue;
        for (std::uint64_t n = 0; n < 10; ++n) {
            CHECK(d->at(a, n) == successor(base->at(a, n)));
            CHECK(classify(d->at(a, n)) == OrdinalClass::Successor);
        }
    }
}

TEST_CASE("club-adapted nice sequence") {
    auto club = make_multiples(1);
    auto e = club_adapted_nice(club);
    const Ordinal b = ord("w*2");
    CHECK(e->eval(b, b) == 0);
    CHECK(e->preimage(b, 0) == b);
    CHECK(e->eval(b, ord("w")) < e->eval(b, ord("w+3")));
    // Outside C the canonical sequence is used.
    CHECK(e->eval(ord("w+1"), ord("3")) == canonical_nice()->eval(ord("w+1"), ord("3")));

    const auto small = small_universe(3, 2);
    for (const auto& beta : {ord("w"), ord("w*2"), ord("w^2"), ord("w^2*2+w")}) {
        std::set<Natural> seen;
        for (const auto& x : small) {
            if (x > beta) break;
            Natural v = e->eval(beta, x);
            CHECK(seen.insert(v).second);
            CHECK(e->preimage(beta, v) == x);
            if (!club->contains(x) && x < beta && club->pred_sup(x) != x) {
                CHECK(e->eval(beta, club->pred_sup(x)) < v);
            }
        }
        for (std::uint64_t n : {0, 3, 12}) {
            auto m = e->marks(beta, n);
            CHECK(m.size() == n + 1);
            CHECK(std::binary_search(m.begin(), m.end(), beta));
            for (const auto& x : m) CHECK(e->eval(beta, x) <= n);
        }
    }
    CHECK_THROWS_AS(club_adapted_nice(club, 10)->preimage(ord("w^2"), 50), BudgetExhausted);
}

TEST_CASE("club-adapted specialization") {
    auto base = parse_tree(kSmallTree);
    auto club = make_multiples(1);
    auto t = club_adapted_specialization(*club, base);
    // The root lies outside C and restricts to itself: 2^2.
    CHECK(t.a(t.index_of("r")) == 4);
    CHECK(t.a(t.index_of("x")) == 8);
    CHECK(t.a(t.index_of("y")) == 7);
    CHECK(t.a(t.index_of("z")) == 7 * 7 * 7 * 7 * 7);
    CHECK(t.specialization_violations().empty());

    auto not_prime = parse_tree(R"({"nodes": [{"id": "r", "parent": null, "height": "0", "a": 4}]})");
    CHECK_THROWS_AS(club_adapted_specialization(*club, not_prime), NotPrimeValued);
    auto gap = parse_tree(R"({"nodes": [
      {"id": "r", "parent": null, "height": "0", "a": 2},
      {"id": "x", "parent": "r", "height": "w+1", "a": 3}]})");
    CHECK_THROWS_AS(club_adapted_specialization(*club, gap), RestrictionMissing);
}

TEST_CASE("sample trees") {
    auto s = canonical_cseq();
    auto club = make_multiples(1);
    SampleTree st = build_sample_tree(*s, {ord("w"), ord("w^2")}, {ord("w")}, *club, false);
    bool has_delta_point = false;
    for (const auto& p : st.points) has_delta_point |= p.height == ord("1") && p.branch == ord("w");
    CHECK(has_delta_point);

    SampleTree chain = build_sample_tree(*s, {ord("w^3")}, {ord("w"), ord("w^2+w*2")}, *club, false);
    for (std::size_t i = 0; i < chain.tree.size(); ++i) {
        CHECK(chain.tree.comparable(i, chain.tree.size() - 1));
    }

    SampleTree clash = build_sample_tree(*s, {ord("w^2*2"), ord("w^3")}, {ord("w*2")}, *club, true);
    CHECK(clash.selected.size() == 1);
    CHECK(clash.filtered.size() == 1);

    CHECK_THROWS_AS(build_sample_tree(*s, {ord("w")}, {ord("w^3")}, *club, false),
                    HeightAboveBranch);

    // Nodes agree with the T(rho0) order on their (height, branch) pairs.
    SampleTree big = build_sample_tree(
        *s, {ord("w^3"), ord("w^3+w^2"), ord("w^2*3+w"), ord("w^3*2+w*2")},
        {ord("w*2"), ord("w^2"), ord("w^2+w"), ord("w^2*2")}, *club, false);
    for (std::size_t i = 0; i < big.tree.size(); ++i) {
        for (std::size_t j = 0; j < big.tree.size(); ++j) {
            CHECK(big.tree.below_or_equal(i, j) ==
                  node_below_or_equal(*s, big.points[i], big.points[j]));
            if (i != j) CHECK_FALSE(node_equal(*s, big.points[i], big.points[j]));
        }
    }
    auto adapted = club_adapted_specialization(*club, big.tree);
    CHECK(adapted.specialization_violations().empty());
}
