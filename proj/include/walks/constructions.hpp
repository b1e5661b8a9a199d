#pragma once
// Structures adapted to a club C: a C-sequence whose walks between limit
// points of C stay inside C, its successor transform, a nice sequence that
// emits club predecessors first, and a specialization whose primes mark the
// levels in C. Plus a builder for finite pieces of T(rho0).

#include <cstdint>
#include <vector>

#include "walks/brackets.hpp"
#include "walks/club.hpp"
#include "walks/delta.hpp"

namespace walks {

// C_{a+1} = {a}. For a in C': C_a(n) = next(C, max(a[n], C_a(n-1)) + 1).
// For other limits: C_a(0) = pred_sup(C, a), C_a(n+1) = max(a[n+1], C_a(n)+1).
// Throws ClubNotLimit when a queried member of C is a successor.
CSequencePtr club_adapted_cseq(ClubPtr club);

// D_a(n) = C_a(n) + 1 at limits; successors unchanged.
CSequencePtr successor_cseq(CSequencePtr base);

inline constexpr std::uint64_t kDefaultEmissionBudget = 4'000'000;

// For beta in C, e_beta(xi) is the rank of xi in the emission order: beta,
// then ordinals by increasing code, each gamma not in C preceded by
// pred_sup(C, gamma). For beta not in C, the canonical nice sequence.
// `budget` bounds the codes scanned (BudgetExhausted).
NicePtr club_adapted_nice(ClubPtr club, std::uint64_t budget = kDefaultEmissionBudget);

// a(s) = f(s) when height(s) is in C, otherwise f(s|d)^f(s) with
// d = pred_sup(C, height(s)); f is the a of `base` and must be prime valued.
SpecializedTree club_adapted_specialization(const Club& club, const SpecializedTree& base);

struct SampleTree {
    SpecializedTree tree;
    std::vector<TreeNode> points;                 // (height, branch) per node
    std::vector<SpecializedTree::Index> selected; // nodes at the requested heights
    std::vector<SpecializedTree::Index> filtered; // dropped for a repeated height
};

// Nodes (h, b) of T(rho0) for b in branches and h in the requested heights,
// all pairwise deltas, 0, and iterated club predecessors; identified when
// delta(b, b') >= h. f assigns distinct primes. With distinct_heights only
// the first selected node at each height is kept. Throws HeightAboveBranch
// when a requested height exceeds every branch.
SampleTree build_sample_tree(const CSequence& s, const std::vector<Ordinal>& branches,
                             const std::vector<Ordinal>& heights, const Club& club,
                             bool distinct_heights);

// "canonical", "club:<club>", "succ:<cseq>", "overlay:<path>" (an override
// table over the canonical sequence). Throws ConfigError.
CSequencePtr parse_cseq(std::string_view descriptor);
// "canonical", "club:<club>", "table:<path>".
NicePtr parse_nice(std::string_view descriptor);
// "canonical".
RealsPtr parse_reals(std::string_view descriptor);

} // namespace walks
