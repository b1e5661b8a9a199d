#pragma once
// The three square-bracket operations and the structures they read.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walks/cseq.hpp"
#include "walks/tree.hpp"

namespace walks {

// Injections e_beta : beta+1 -> N with e_beta(beta) = 0.
class NiceSequence {
public:
    virtual ~NiceSequence() = default;
    // Requires xi <= beta (OutOfRange otherwise).
    virtual Natural eval(const Ordinal& beta, const Ordinal& xi) const = 0;
    // The xi <= beta with eval(beta, xi) = n, if any.
    virtual std::optional<Ordinal> preimage(const Ordinal& beta, const Natural& n) const = 0;
    virtual std::string descriptor() const = 0;
    // F_n(beta) = {xi <= beta : eval(beta, xi) <= n}, increasing.
    virtual std::vector<Ordinal> marks(const Ordinal& beta, std::uint64_t n) const;
};
using NicePtr = std::shared_ptr<const NiceSequence>;

// eval(beta, xi) = code(xi)+1 below code(beta), code(xi) above it.
NicePtr canonical_nice();

// An explicit table of values for a single beta. Ordinals not in the table
// get max + 1 + code(xi). Throws ConfigError on tables that are not
// injective, miss beta -> 0, or list ordinals above beta.
NicePtr table_nice(Ordinal beta, std::vector<std::pair<Ordinal, Natural>> pairs);
// {"beta": "<ordinal>", "pairs": [["<ordinal>", nat], ...]}
NicePtr parse_nice_table(const std::string& json_text);
NicePtr load_nice_table(const std::string& path);

inline constexpr std::uint64_t kDefaultBitBudget = 1'000'000;

// Distinct reals r_alpha, read bit by bit.
class RealFamily {
public:
    virtual ~RealFamily() = default;
    virtual bool bit(const Ordinal& alpha, std::uint64_t n) const = 0;
    virtual std::string descriptor() const = 0;
    // Least n with different bits. alpha != beta (OutOfRange otherwise);
    // BudgetExhausted after `budget` positions.
    virtual std::uint64_t delta_r(const Ordinal& alpha, const Ordinal& beta,
                                  std::uint64_t budget = kDefaultBitBudget) const;
};
using RealsPtr = std::shared_ptr<const RealFamily>;

// Binary digits of code(alpha), least significant first.
RealsPtr canonical_reals();

struct BracketForms {
    Ordinal delta;
    Ordinal via_difference;    // min(Tr(delta, beta) \ alpha)
    Ordinal via_intersection;  // min(Tr(alpha, beta) ∩ Tr(delta, beta))
};

// Both displayed forms of [alpha beta]_C, computed independently.
BracketForms bracket_c_forms(const CSequence& s, const Ordinal& alpha, const Ordinal& beta);
// Requires alpha < beta. Throws AxiomViolation if the two forms disagree.
Ordinal bracket_c(const CSequence& s, const Ordinal& alpha, const Ordinal& beta);

// min(F_m(beta) \ alpha) with m = delta_r(alpha, beta). Requires alpha < beta.
Ordinal bracket_re(const RealFamily& r, const NiceSequence& e, const Ordinal& alpha,
                   const Ordinal& beta);

// The least z on [t|height(s), t] with a(z) <= a(s ∧ t), or t. Requires
// height(s) <= height(t) and s != t.
SpecializedTree::Index bracket_tree(const SpecializedTree& tree, SpecializedTree::Index s,
                                    SpecializedTree::Index t);

} // namespace walks
