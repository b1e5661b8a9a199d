#include <doctest.h>

#include "test_support.hpp"
#include "walks/club.hpp"
#include "walks/errors.hpp"

using namespace walks;
using walks::testing::ord;
using walks::testing::small_universe;

namespace {

const std::vector<Ordinal>& u0() {
    static const auto u = small_universe(3, 4);
    return u;
}

std::vector<ClubPtr> instances() {
    return {make_lim(), make_ind(), make_multiples(1), make_multiples(2),
            intersect(make_multiples(1), make_ind())};
}

const std::vector<Ordinal>& universe_with_cap(std::uint64_t cap) {
    static const auto u6 = small_universe(3, 6);
    static const auto u12 = small_universe(3, 12);
    return cap == 6 ? u6 : u12;
}

// Largest member below gamma among ordinals with coefficients <= cap.
Ordinal brute_max_below(const Club& c, const Ordinal& gamma, std::uint64_t cap) {
    Ordinal best;
    for (const auto& x : universe_with_cap(cap)) {
        if (!(x < gamma)) break;
        if (c.contains(x)) best = x;
    }
    return best;
}

} // namespace

TEST_CASE("club examples") {
    CHECK(make_multiples(1)->contains(ord("w*3")));
    CHECK(make_multiples(1)->pred_sup(ord("w+3")) == ord("w"));
    CHECK(make_ind()->is_limit_point(ord("w^w")));
    CHECK_FALSE(make_ind()->is_limit_point(ord("w^2")));
    CHECK(make_ind()->pred_sup(ord("w^2")) == ord("w"));
    CHECK(make_ind()->pred_sup(ord("w")) == ord("0"));
    CHECK(make_multiples(2)->next(ord("w^3+w")) == ord("w^3+w^2"));
    CHECK(make_multiples(2)->pred_sup(ord("w^3+w^2*2")) == ord("w^3+w^2"));
    CHECK(make_multiples(2)->is_limit_point(ord("w^3")));
    CHECK(make_lim()->pred_sup(ord("0")) == ord("0"));
    CHECK_FALSE(make_lim()->is_limit_point(ord("0")));
}

TEST_CASE("intersection examples") {
    CHECK(intersect(make_multiples(1), make_lim())->contains(ord("w*2")));
    // w^2*2 is not a power of w; the least common member above w^2+1 is w^3.
    CHECK(intersect(make_multiples(2), make_ind())->next(ord("w^2+1")) == ord("w^3"));
    CHECK_THROWS_AS(intersect(make_multiples(2), make_ind(), 1)->next(ord("w^2+1")),
                    FuelExhausted);
    CHECK(intersect(make_multiples(2), make_multiples(1))->pred_sup(ord("w^2+w")) == ord("w^2"));
    CHECK(intersect(make_multiples(1), make_ind())->pred_sup(ord("w^2*3")) == ord("w^2"));
    // A limit point of both factors cannot be settled by finite alternation.
    CHECK_THROWS_AS(intersect(make_multiples(1), make_lim(), 4)->pred_sup(ord("w^2")),
                    FuelExhausted);
    CHECK_THROWS_AS(intersect(make_lim(), make_ind(), 0), ConfigError);
}

TEST_CASE("club invariants on U0") {
    for (const auto& c : instances()) {
        INFO(c->descriptor());
        for (const auto& g : u0()) {
            INFO(format(g));
            if (c->contains(g)) {
                CHECK(g.is_limit());
                CHECK(c->next(g) == g);
            }
            Ordinal n = c->next(g);
            CHECK(n >= g);
            CHECK(c->contains(n));
            CHECK(c->next(n) == n);
            Ordinal p = c->pred_sup(g);
            CHECK(p <= g);
            if (!p.is_zero()) CHECK(c->contains(p));
        }
    }
}

TEST_CASE("pred_sup and limit points against enumeration") {
    for (const auto& c : {make_lim(), make_ind(), make_multiples(2)}) {
        INFO(c->descriptor());
        for (const auto& g : u0()) {
            INFO(format(g));
            Ordinal small = brute_max_below(*c, g, 6);
            Ordinal large = brute_max_below(*c, g, 12);
            Ordinal expected = small == large ? small : g;
            CHECK(c->pred_sup(g) == expected);
            CHECK(c->is_limit_point(g) == (!g.is_zero() && c->pred_sup(g) == g));

            bool dense = !g.is_zero();
            for (const auto& xi : u0()) {
                if (!(xi < g)) break;
                bool between = false;
                for (const auto& m : universe_with_cap(12)) {
                    if (m > xi && m < g && c->contains(m)) {
                        between = true;
                        break;
                    }
                }
                dense = dense && between;
            }
            CHECK(c->is_limit_point(g) == dense);
        }
    }
}

TEST_CASE("club descriptors") {
    CHECK(parse_club("lim")->descriptor() == "lim");
    CHECK(parse_club("ind")->descriptor() == "ind");
    CHECK(parse_club("mult:w")->descriptor() == "mult:w");
    CHECK(parse_club("mult:w^3")->contains(ord("w^3*2")));
    CHECK_FALSE(parse_club("mult:w^3")->contains(ord("w^3+w^2")));
    auto c = parse_club("intersect(mult:w^2,intersect(lim,ind))");
    CHECK(c->descriptor() == "intersect(mult:w^2,intersect(lim,ind))");
    CHECK(c->contains(ord("w^2")));
    CHECK_THROWS_AS(parse_club("mult:w*2"), ConfigError);
    CHECK_THROWS_AS(parse_club("stationary"), ConfigError);
    CHECK_THROWS_AS(parse_club("intersect(lim)"), ConfigError);
}
