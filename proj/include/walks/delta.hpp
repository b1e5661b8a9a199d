#pragma once

// First disagreement of the branches xi -> rho0(xi, beta) of the tree
// T(rho0), the node algebra of that tree, and the finite closure S(X).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "walks/cseq.hpp"

namespace walks {

// Largest eta <= min(alpha, beta) with rho0(xi, alpha) = rho0(xi, beta) for
// every xi < eta. Symmetric; delta(a, a) = a.
Ordinal delta(const CSequence& s, const Ordinal& alpha, const Ordinal& beta);

// Least xi with lo < xi < gamma (every xi < gamma when lo is empty) such
// that rho0(xi, gamma) != rho0(xi, other), where gamma < other.
std::optional<Ordinal> first_disagreement(const CSequence& s, const Ordinal& gamma,
                                          const Ordinal& other,
                                          const std::optional<Ordinal>& lo = std::nullopt);

// The node rho0_branch restricted to height.
struct TreeNode {
    Ordinal height;
    Ordinal branch;
};

enum class NodeRelation { Equal, ABelowB, BBelowA, Incomparable };

std::string_view to_string(NodeRelation r);

bool node_equal(const CSequence& s, const TreeNode& a, const TreeNode& b);
bool node_below_or_equal(const CSequence& s, const TreeNode& a, const TreeNode& b);
NodeRelation node_relate(const CSequence& s, const TreeNode& a, const TreeNode& b);
TreeNode node_meet(const CSequence& s, const TreeNode& a, const TreeNode& b);

struct ClosureStep {
    Ordinal value;
    std::string rule;  // "base", "trace", "delta" or "lambda"
    std::optional<Ordinal> from_low;
    std::optional<Ordinal> from_high;
    std::size_t round = 0;
};

struct ClosureSet {
    std::vector<Ordinal> base;
    std::vector<Ordinal> members;  // increasing
    std::vector<ClosureStep> steps;
    std::size_t rounds = 0;        // productive rounds until the fixpoint
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

// Smallest superset of X closed under traces, delta and lambda of pairs of
// distinct members. Throws IterationCap past `cap` members.
ClosureSet closure(const CSequence& s, const std::vector<Ordinal>& base,
                   std::size_t cap = kDefaultClosureCap);

} // namespace walks
