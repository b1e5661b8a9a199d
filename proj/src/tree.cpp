#include "walks/tree.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

#include "walks/errors.hpp"

namespace walks {

SpecializedTree::SpecializedTree(std::vector<TreeNodeSpec> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw TreeFormatError("tree has no nodes");
    std::map<std::string, Index> by_id;
    for (Index i = 0; i < nodes_.size(); ++i) {
        if (!by_id.emplace(nodes_[i].id, i).second) {
            throw TreeFormatError("duplicate node id " + nodes_[i].id);
        }
    }
    parent_.resize(nodes_.size());
    std::optional<Index> root;
    for (Index i = 0; i < nodes_.size(); ++i) {
        const auto& p = nodes_[i].parent;
        if (!p) {
            if (root) throw TreeFormatError("more than one root");
            root = i;
            continue;
        }
        auto it = by_id.find(*p);
        if (it == by_id.end()) throw TreeFormatError("unknown parent " + *p);
        if (!(nodes_[it->second].height < nodes_[i].height)) {
            throw TreeFormatError("height does not increase from " + *p + " to " + nodes_[i].id);
        }
        parent_[i] = it->second;
    }
    if (!root) throw TreeFormatError("no root");
    root_ = *root;
    // Heights strictly increase along edges, so every parent chain ends at
    // the root without cycles.
    depth_.assign(nodes_.size(), 0);
    for (Index i = 0; i < nodes_.size(); ++i) {
        std::size_t d = 0;
        for (auto p = parent_[i]; p; p = parent_[*p]) ++d;
        depth_[i] = d;
    }
}

SpecializedTree::Index SpecializedTree::index_of(const std::string& id) const {
    for (Index i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].id == id) return i;
    }
    throw TreeFormatError("unknown node " + id);
}

std::vector<SpecializedTree::Index> SpecializedTree::chain(Index t) const {
    std::vector<Index> out(depth_[t] + 1);
    std::optional<Index> cur = t;
    for (std::size_t k = out.size(); k-- > 0;) {
        out[k] = *cur;
        cur = parent_[*cur];
    }
    return out;
}

bool SpecializedTree::below_or_equal(Index s, Index t) const {
    if (depth_[s] > depth_[t]) return false;
    Index cur = t;
    while (depth_[cur] > depth_[s]) cur = *parent_[cur];
    return cur == s;
}

SpecializedTree::Index SpecializedTree::restrict(Index t, const Ordinal& gamma) const {
    if (gamma > height(t)) {
        throw OutOfRange("cannot restrict " + nodes_[t].id + " to " + format(gamma) +
                         " above its height");
    }
    std::optional<Index> cur = t;
    while (cur && height(*cur) > gamma) cur = parent_[*cur];
    if (!cur || height(*cur) != gamma) {
        throw RestrictionMissing(nodes_[t].id + " has no restriction to height " + format(gamma));
    }
    return *cur;
}

SpecializedTree::Index SpecializedTree::meet(Index s, Index t) const {
    while (depth_[s] > depth_[t]) s = *parent_[s];
    while (depth_[t] > depth_[s]) t = *parent_[t];
    while (s != t) {
        s = *parent_[s];
        t = *parent_[t];
    }
    return s;
}

std::vector<SpecializedTree::Index> SpecializedTree::low_marks(Index t, const Natural& m) const {
    std::vector<Index> out;
    for (Index z : chain(t)) {
        if (a(z) <= m) out.push_back(z);
    }
    return out;
}

std::vector<std::pair<SpecializedTree::Index, SpecializedTree::Index>>
SpecializedTree::specialization_violations() const {
    std::vector<std::pair<Index, Index>> out;
    for (Index t = 0; t < nodes_.size(); ++t) {
        for (Index z : chain(t)) {
            if (z != t && a(z) == a(t)) out.emplace_back(z, t);
        }
    }
    return out;
}

SpecializedTree SpecializedTree::with_values(std::vector<Natural> a) const {
    if (a.size() != nodes_.size()) throw OutOfRange("one value per node is required");
    SpecializedTree copy = *this;
    for (Index i = 0; i < nodes_.size(); ++i) copy.nodes_[i].a = std::move(a[i]);
    return copy;
}

namespace {

Natural natural_from_json(const nlohmann::json& j) {
    if (j.is_number_unsigned()) return Natural(j.get<std::uint64_t>());
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Natural(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto text = j.get<std::string>();
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
            throw TreeFormatError("not a natural number: " + text);
        }
        return Natural(text);
    }
    throw TreeFormatError("not a natural number: " + j.dump());
}

} // namespace

SpecializedTree parse_tree(const std::string& json_text) {
    std::vector<TreeNodeSpec> nodes;
    try {
        auto doc = nlohmann::json::parse(json_text);
        for (const auto& n : doc.at("nodes")) {
            TreeNodeSpec spec;
            spec.id = n.at("id").get<std::string>();
            if (!n.at("parent").is_null()) spec.parent = n.at("parent").get<std::string>();
            spec.height = parse(n.at("height").get<std::string>());
            spec.a = natural_from_json(n.at("a"));
            nodes.push_back(std::move(spec));
        }
    } catch (const nlohmann::json::exception& e) {
        throw TreeFormatError(std::string("malformed tree file: ") + e.what());
    }
    SpecializedTree tree(std::move(nodes));
    auto bad = tree.specialization_violations();
    if (!bad.empty()) {
        throw TreeFormatError("comparable nodes " + tree.node(bad[0].first).id + " and " +
                              tree.node(bad[0].second).id + " share a = " +
                              tree.a(bad[0].first).str());
    }
    return tree;
}

SpecializedTree load_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open tree file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_tree(buf.str());
}

std::string tree_to_json(const SpecializedTree& t) {
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (const auto& n : t.nodes()) {
        nlohmann::ordered_json j;
        j["id"] = n.id;
        j["parent"] = n.parent ? nlohmann::ordered_json(*n.parent) : nlohmann::ordered_json();
        j["height"] = format(n.height);
        if (n.a <= std::numeric_limits<std::uint64_t>::max()) {
            j["a"] = n.a.convert_to<std::uint64_t>();
        } else {
            j["a"] = n.a.str();
        }
        nodes.push_back(std::move(j));
    }
    nlohmann::ordered_json doc;
    doc["nodes"] = std::move(nodes);
    return doc.dump();
}

} // namespace walks
