#include "walks/delta.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "walks/errors.hpp"

namespace walks {

namespace {

bool codes_differ(const CSequence& s, const Ordinal& xi, const Ordinal& gamma,
                  const Ordinal& other) {
    return rho0(s, xi, gamma) != rho0(s, xi, other);
}

} // namespace

std::optional<Ordinal> first_disagreement(const CSequence& s, const Ordinal& gamma,
                                          const Ordinal& other, const std::optional<Ordinal>& lo) {
    assert(gamma < other);
    if (gamma.is_zero()) return std::nullopt;

    Ordinal low;
    if (lo) {
        low = *lo;
    } else {
        if (codes_differ(s, Ordinal::zero(), gamma, other)) return Ordinal::zero();
        low = Ordinal::zero();
    }
    if (!(successor(low) < gamma)) return std::nullopt;

    const Ordinal mu = lambda(s, gamma, other);

    // Below mu: the heads of both codes are step functions that only change
    // at elements of C_gamma or C_other, so scan piece by piece.
    if (low < mu) {
        std::vector<Ordinal> breaks;
        for (const auto& x : s.elements_through(gamma, mu)) {
            if (x > low) breaks.push_back(x);
        }
        for (const auto& x : s.elements_through(other, mu)) {
            if (x > low) breaks.push_back(x);
        }
        breaks.push_back(mu);
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

        Ordinal a = low;
        for (const auto& b : breaks) {
            Ordinal open_start = successor(a);
            if (open_start < b) {
                CseqQuery qg = s.query(gamma, open_start);
                CseqQuery qo = s.query(other, open_start);
                if (qg.count != qo.count) return open_start;
                if (qg.min_above != qo.min_above) {
                    const bool g_first = qg.min_above < qo.min_above;
                    const Ordinal& lower = g_first ? qg.min_above : qo.min_above;
                    const Ordinal& upper = g_first ? qo.min_above : qg.min_above;
                    auto d = first_disagreement(s, lower, upper, a);
                    if (d && *d < b) return d;
                }
            }
            if (codes_differ(s, b, gamma, other)) return b;
            a = b;
        }
    }

    // Above mu the walk from `other` passes through gamma, so the code is
    // strictly longer there and every point disagrees.
    Ordinal first = successor(std::max(low, mu));
    if (first < gamma) return first;
    return std::nullopt;
}

Ordinal delta(const CSequence& s, const Ordinal& alpha, const Ordinal& beta) {
    if (alpha == beta) return alpha;
    const bool ordered = alpha < beta;
    const Ordinal& lower = ordered ? alpha : beta;
    const Ordinal& upper = ordered ? beta : alpha;
    auto d = first_disagreement(s, lower, upper);
    if (!d) return lower;
    assert(codes_differ(s, *d, lower, upper));
    return *d;
}

std::string_view to_string(NodeRelation r) {
    switch (r) {
    case NodeRelation::Equal: return "equal";
    case NodeRelation::ABelowB: return "a_below_b";
    case NodeRelation::BBelowA: return "b_below_a";
    case NodeRelation::Incomparable: return "incomparable";
    }
    return "?";
}

bool node_below_or_equal(const CSequence& s, const TreeNode& a, const TreeNode& b) {
    if (a.height > b.height) return false;
    if (a.height.is_zero()) return true;
    return delta(s, a.branch, b.branch) >= a.height;
}

bool node_equal(const CSequence& s, const TreeNode& a, const TreeNode& b) {
    return a.height == b.height && node_below_or_equal(s, a, b);
}

NodeRelation node_relate(const CSequence& s, const TreeNode& a, const TreeNode& b) {
    const bool ab = node_below_or_equal(s, a, b);
    const bool ba = node_below_or_equal(s, b, a);
    if (ab && ba) return NodeRelation::Equal;
    if (ab) return NodeRelation::ABelowB;
    if (ba) return NodeRelation::BBelowA;
    return NodeRelation::Incomparable;
}

TreeNode node_meet(const CSequence& s, const TreeNode& a, const TreeNode& b) {
    Ordinal h = std::min(a.height, b.height);
    if (!h.is_zero()) h = std::min(h, delta(s, a.branch, b.branch));
    return {h, a.branch};
}

ClosureSet closure(const CSequence& s, const std::vector<Ordinal>& base, std::size_t cap) {
    ClosureSet out;
    std::set<Ordinal> members(base.begin(), base.end());
    out.base.assign(members.begin(), members.end());
    if (members.size() > cap) throw IterationCap("base exceeds the closure cap");
    for (const auto& x : out.base) out.steps.push_back({x, "base", std::nullopt, std::nullopt, 0});

    std::set<Ordinal> fresh = members;
    std::size_t round = 0;
    while (!fresh.empty()) {
        ++round;
        std::set<Ordinal> added;
        auto offer = [&](const Ordinal& v, const char* rule, const Ordinal& lo, const Ordinal& hi) {
            if (members.contains(v) || added.contains(v)) return;
            added.insert(v);
            out.steps.push_back({v, rule, lo, hi, round});
            if (members.size() + added.size() > cap) {
                throw IterationCap("closure exceeded " + std::to_string(cap) + " members");
            }
        };
        // Pairs of distinct members with at least one member new last round.
        for (auto hi = members.begin(); hi != members.end(); ++hi) {
            for (auto lo = members.begin(); lo != hi; ++lo) {
                if (!fresh.contains(*lo) && !fresh.contains(*hi)) continue;
                WalkResult w = walk(s, *lo, *hi);
                for (const auto& t : w.trace) offer(t, "trace", *lo, *hi);
                offer(delta(s, *lo, *hi), "delta", *lo, *hi);
                offer(w.lambda, "lambda", *lo, *hi);
            }
        }
        if (added.empty()) {
            --round;
            break;
        }
        members.insert(added.begin(), added.end());
        fresh = std::move(added);
    }
    out.rounds = round;
    out.members.assign(members.begin(), members.end());
    return out;
}

} // namespace walks
