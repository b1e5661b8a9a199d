#pragma once

// C-sequences and walks along them.
//
// A C-sequence assigns to every ordinal alpha >= 1 a set C_alpha: the
// singleton {gamma} when alpha = gamma+1, and a strictly increasing
// omega-sequence cofinal in alpha when alpha is a limit. Implementations
// only need to enumerate C_alpha in increasing order; the bounded queries
// used by walks are derived from that enumeration.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "walks/ordinal.hpp"

namespace walks {

struct CseqQuery {
    std::uint64_t count = 0;           // |C_alpha ∩ xi|
    Ordinal min_above;                 // min(C_alpha \ xi), the step of a walk
    std::optional<Ordinal> max_below;  // max(C_alpha ∩ xi)

    friend bool operator==(const CseqQuery&, const CseqQuery&) = default;
};

class CSequence {
public:
    // Visitor returns false to stop the enumeration.
    using Visitor = std::function<bool(const Ordinal&)>;

    virtual ~CSequence() = default;

    // Visits C_alpha(0), C_alpha(1), ... in increasing order.
    virtual void enumerate(const Ordinal& alpha, const Visitor& visit) const = 0;
    virtual std::string descriptor() const = 0;

    // C_alpha(n). For successor alpha only n = 0 exists.
    Ordinal at(const Ordinal& alpha, std::uint64_t n) const;

    // The three bounded queries at once. Requires 1 <= alpha and xi < alpha;
    // throws OutOfRange otherwise.
    CseqQuery query(const Ordinal& alpha, const Ordinal& xi) const;

    // Elements of C_alpha that are <= bound (bound < alpha).
    std::vector<Ordinal> elements_through(const Ordinal& alpha, const Ordinal& bound) const;

    bool contains(const Ordinal& alpha, const Ordinal& xi) const;
};

using CSequencePtr = std::shared_ptr<const CSequence>;

// C_alpha(n) = fund_seq(alpha, n) at limits.
CSequencePtr canonical_cseq();

// An explicit omega-sequence for one limit ordinal: a finite prefix followed
// by the affine tail n -> base + step*n (natural step, absolute index n).
struct SequenceOverride {
    Ordinal alpha;
    std::vector<Ordinal> prefix;
    Ordinal tail_base;
    std::uint64_t tail_step = 1;
};

// Uses the override at the listed ordinals and `base` elsewhere. Throws
// AxiomViolation when an override is not increasing, not below alpha, or its
// tail is not cofinal in alpha.
CSequencePtr overlay_cseq(CSequencePtr base, std::vector<SequenceOverride> table);

// Reads an override table from JSON: one object or an array of objects of
// the form {"alpha": "...", "prefix": [...], "tail": {"kind": "affine",
// "base": "...", "step": 1}}.
std::vector<SequenceOverride> load_overrides(const std::string& path);
std::vector<SequenceOverride> parse_overrides(const std::string& json_text);

struct WalkResult {
    std::vector<Ordinal> trace;       // beta = trace.front() > ... > trace.back() = alpha
    std::vector<std::uint64_t> rho0;  // |C_{beta_i} ∩ alpha| for every step
    Ordinal lambda;                   // max of max(C_{beta_i} ∩ alpha); 0 if all empty
};

// Walk from beta down to alpha. Requires alpha <= beta.
WalkResult walk(const CSequence& s, const Ordinal& alpha, const Ordinal& beta);

// Just the upper trace, as a set.
std::vector<Ordinal> trace(const CSequence& s, const Ordinal& alpha, const Ordinal& beta);
std::vector<std::uint64_t> rho0(const CSequence& s, const Ordinal& alpha, const Ordinal& beta);
Ordinal lambda(const CSequence& s, const Ordinal& alpha, const Ordinal& beta);

} // namespace walks
