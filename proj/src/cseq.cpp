#include "walks/cseq.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "walks/errors.hpp"

namespace walks {

Ordinal CSequence::at(const Ordinal& alpha, std::uint64_t n) const {
    if (alpha.is_zero()) throw OutOfRange("C_0 is empty");
    if (alpha.is_successor() && n > 0) {
        throw OutOfRange("C_" + format(alpha) + " has a single element");
    }
    std::optional<Ordinal> found;
    std::uint64_t index = 0;
    enumerate(alpha, [&](const Ordinal& x) {
        if (index++ == n) {
            found = x;
            return false;
        }
        return true;
    });
    if (!found) throw OutOfRange("C_" + format(alpha) + " has no element " + std::to_string(n));
    return *found;
}

CseqQuery CSequence::query(const Ordinal& alpha, const Ordinal& xi) const {
    if (alpha.is_zero()) throw OutOfRange("C-sequence queries need alpha >= 1");
    if (!(xi < alpha)) {
        throw OutOfRange("query point " + format(xi) + " is not below " + format(alpha));
    }
    CseqQuery q;
    bool found = false;
    enumerate(alpha, [&](const Ordinal& x) {
        if (x < xi) {
            ++q.count;
            q.max_below = x;
            return true;
        }
        q.min_above = x;
        found = true;
        return false;
    });
    // Cofinality guarantees an element >= xi for every xi < alpha.
    if (!found) {
        throw AxiomViolation("C_" + format(alpha) + " has no element >= " + format(xi) +
                             " in " + descriptor());
    }
    return q;
}

std::vector<Ordinal> CSequence::elements_through(const Ordinal& alpha, const Ordinal& bound) const {
    if (!(bound < alpha)) throw OutOfRange("bound must lie below alpha");
    std::vector<Ordinal> out;
    enumerate(alpha, [&](const Ordinal& x) {
        if (x > bound) return false;
        out.push_back(x);
        return true;
    });
    return out;
}

bool CSequence::contains(const Ordinal& alpha, const Ordinal& xi) const {
    if (!(xi < alpha)) return false;
    return query(alpha, xi).min_above == xi;
}

namespace {

class CanonicalCSequence final : public CSequence {
public:
    void enumerate(const Ordinal& alpha, const Visitor& visit) const override {
        switch (alpha.classify()) {
        case OrdinalClass::Zero:
            return;
        case OrdinalClass::Successor:
            visit(predecessor(alpha));
            return;
        case OrdinalClass::Limit:
            for (std::uint64_t n = 0;; ++n) {
                if (!visit(fund_seq(alpha, n))) return;
            }
        }
    }

    std::string descriptor() const override { return "canonical"; }
};

Ordinal tail_value(const SequenceOverride& o, std::uint64_t n) {
    return add(o.tail_base, Ordinal::natural(o.tail_step * n));
}

void validate(const SequenceOverride& o) {
    const std::string where = "override at " + format(o.alpha);
    if (!o.alpha.is_limit()) throw AxiomViolation(where + ": alpha must be a limit");
    if (o.tail_step == 0) throw AxiomViolation(where + ": tail step must be >= 1");
    if (add(o.tail_base, Ordinal::omega()) != o.alpha) {
        throw AxiomViolation(where + ": tail " + format(o.tail_base) + "+n is not cofinal");
    }
    for (std::size_t i = 0; i < o.prefix.size(); ++i) {
        if (!(o.prefix[i] < o.alpha)) {
            throw AxiomViolation(where + ": prefix element " + format(o.prefix[i]) +
                                 " is not below alpha");
        }
        if (i > 0 && !(o.prefix[i - 1] < o.prefix[i])) {
            throw AxiomViolation(where + ": prefix not strictly increasing");
        }
    }
    if (!o.prefix.empty() && !(o.prefix.back() < tail_value(o, o.prefix.size()))) {
        throw AxiomViolation(where + ": tail does not continue above the prefix");
    }
}

class OverlayCSequence final : public CSequence {
public:
    OverlayCSequence(CSequencePtr base, std::vector<SequenceOverride> table)
        : base_(std::move(base)) {
        for (auto& o : table) {
            validate(o);
            Ordinal key = o.alpha;
            table_.insert_or_assign(std::move(key), std::move(o));
        }
    }

    void enumerate(const Ordinal& alpha, const Visitor& visit) const override {
        auto it = table_.find(alpha);
        if (it == table_.end()) {
            base_->enumerate(alpha, visit);
            return;
        }
        const auto& o = it->second;
        for (const auto& x : o.prefix) {
            if (!visit(x)) return;
        }
        for (std::uint64_t n = o.prefix.size();; ++n) {
            if (!visit(tail_value(o, n))) return;
        }
    }

    std::string descriptor() const override { return "overlay:" + base_->descriptor(); }

private:
    CSequencePtr base_;
    std::map<Ordinal, SequenceOverride> table_;
};

SequenceOverride override_from_json(const nlohmann::json& j) {
    try {
        SequenceOverride o;
        o.alpha = parse(j.at("alpha").get<std::string>());
        for (const auto& x : j.at("prefix")) o.prefix.push_back(parse(x.get<std::string>()));
        const auto& tail = j.at("tail");
        if (tail.at("kind").get<std::string>() != "affine") {
            throw ConfigError("unsupported tail kind " + tail.at("kind").dump());
        }
        o.tail_base = parse(tail.at("base").get<std::string>());
        o.tail_step = tail.value("step", std::uint64_t{1});
        return o;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed override table: ") + e.what());
    }
}

} // namespace

CSequencePtr canonical_cseq() {
    static const CSequencePtr instance = std::make_shared<CanonicalCSequence>();
    return instance;
}

CSequencePtr overlay_cseq(CSequencePtr base, std::vector<SequenceOverride> table) {
    return std::make_shared<OverlayCSequence>(std::move(base), std::move(table));
}

std::vector<SequenceOverride> parse_overrides(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("override table is not JSON: ") + e.what());
    }
    std::vector<SequenceOverride> out;
    if (doc.is_array()) {
        for (const auto& j : doc) out.push_back(override_from_json(j));
    } else {
        out.push_back(override_from_json(doc));
    }
    return out;
}

std::vector<SequenceOverride> load_overrides(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open override table " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_overrides(buf.str());
}

WalkResult walk(const CSequence& s, const Ordinal& alpha, const Ordinal& beta) {
    if (alpha > beta) {
        throw OutOfRange("walk needs alpha <= beta, got " + format(alpha) + " > " + format(beta));
    }
    WalkResult r;
    r.trace.push_back(beta);
    Ordinal current = beta;
    while (current != alpha) {
        CseqQuery q = s.query(current, alpha);
        r.rho0.push_back(q.count);
        if (q.max_below && *q.max_below > r.lambda) r.lambda = *q.max_below;
        assert(q.min_above < current);
        current = std::move(q.min_above);
        r.trace.push_back(current);
    }
    return r;
}

std::vector<Ordinal> trace(const CSequence& s, const Ordinal& alpha, const Ordinal& beta) {
    return walk(s, alpha, beta).trace;
}

std::vector<std::uint64_t> rho0(const CSequence& s, const Ordinal& alpha, const Ordinal& beta) {
    return walk(s, alpha, beta).rho0;
}

Ordinal lambda(const CSequence& s, const Ordinal& alpha, const Ordinal& beta) {
    return walk(s, alpha, beta).lambda;
}

} // namespace walks
