#pragma once
// Explicit finite trees with a natural-valued map a on the nodes.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walks/ordinal.hpp"

namespace walks {

struct TreeNodeSpec {
    std::string id;
    std::optional<std::string> parent;
    Ordinal height;
    Natural a;
};

class SpecializedTree {
public:
    using Index = std::size_t;

    // Checks the shape: unique root, known parents, no cycles, heights
    // strictly increasing along edges. Throws TreeFormatError. The map a is
    // not checked here; see specialization_violations().
    explicit SpecializedTree(std::vector<TreeNodeSpec> nodes);

    std::size_t size() const { return nodes_.size(); }
    const TreeNodeSpec& node(Index i) const { return nodes_[i]; }
    const std::vector<TreeNodeSpec>& nodes() const { return nodes_; }
    Index index_of(const std::string& id) const;  // TreeFormatError if unknown
    std::optional<Index> parent(Index i) const { return parent_[i]; }
    Index root() const { return root_; }

    const Ordinal& height(Index i) const { return nodes_[i].height; }
    const Natural& a(Index i) const { return nodes_[i].a; }

    // Ancestors of t including t, from the root up.
    std::vector<Index> chain(Index t) const;
    bool below_or_equal(Index s, Index t) const;
    bool comparable(Index s, Index t) const { return below_or_equal(s, t) || below_or_equal(t, s); }
    // t restricted to gamma <= height(t); RestrictionMissing when no node of
    // the chain below t has that height.
    Index restrict(Index t, const Ordinal& gamma) const;
    // Deepest common ancestor.
    Index meet(Index s, Index t) const;
    // {z <=_T t : a(z) <= m}, from the root up.
    std::vector<Index> low_marks(Index t, const Natural& m) const;

    // Comparable distinct pairs sharing an a-value.
    std::vector<std::pair<Index, Index>> specialization_violations() const;

    // Same shape, new a-values (one per node, in node order).
    SpecializedTree with_values(std::vector<Natural> a) const;

private:
    std::vector<TreeNodeSpec> nodes_;
    std::vector<std::optional<Index>> parent_;
    std::vector<std::size_t> depth_;
    Index root_ = 0;
};

// {"nodes": [{"id": str, "parent": str|null, "height": "<ordinal>", "a": nat}]}
// "a" may be a JSON number or a decimal string. Rejects trees whose a is not
// a specialization.
SpecializedTree parse_tree(const std::string& json_text);
SpecializedTree load_tree(const std::string& path);
std::string tree_to_json(const SpecializedTree& t);

} // namespace walks
