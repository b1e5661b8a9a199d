#include "walks/brackets.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "walks/delta.hpp"
#include "walks/errors.hpp"

namespace walks {

std::vector<Ordinal> NiceSequence::marks(const Ordinal& beta, std::uint64_t n) const {
    std::vector<Ordinal> out;
    for (std::uint64_t k = 0; k <= n; ++k) {
        if (auto x = preimage(beta, k)) out.push_back(std::move(*x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t RealFamily::delta_r(const Ordinal& alpha, const Ordinal& beta,
                                  std::uint64_t budget) const {
    if (alpha == beta) throw OutOfRange("delta_r needs distinct ordinals");
    for (std::uint64_t n = 0; n < budget; ++n) {
        if (bit(alpha, n) != bit(beta, n)) return n;
    }
    throw BudgetExhausted("reals of " + format(alpha) + " and " + format(beta) + " agree on the first " +
                          std::to_string(budget) + " bits");
}

namespace {

void require_at_most(const Ordinal& beta, const Ordinal& xi) {
    if (xi > beta) throw OutOfRange(format(xi) + " is above " + format(beta));
}

class CanonicalNice final : public NiceSequence {
public:
    Natural eval(const Ordinal& beta, const Ordinal& xi) const override {
        require_at_most(beta, xi);
        if (xi == beta) return 0;
        Natural c = code(xi);
        return c < code(beta) ? Natural(c + 1) : c;
    }

    std::optional<Ordinal> preimage(const Ordinal& beta, const Natural& n) const override {
        if (n == 0) return beta;
        auto x = try_decode(n <= code(beta) ? Natural(n - 1) : n);
        if (x && *x < beta) return x;
        return std::nullopt;
    }

    std::string descriptor() const override { return "canonical"; }
};

class TableNice final : public NiceSequence {
public:
    TableNice(Ordinal beta, std::vector<std::pair<Ordinal, Natural>> pairs) : beta_(std::move(beta)) {
        for (auto& [xi, v] : pairs) {
            if (xi > beta_) throw ConfigError("table lists " + format(xi) + " above beta");
            if (!values_.emplace(xi, v).second) {
                throw ConfigError("table lists " + format(xi) + " twice");
            }
            if (!inverse_.emplace(v, xi).second) {
                throw ConfigError("table value " + v.str() + " is used twice");
            }
            max_ = std::max(max_, v);
        }
        auto it = values_.find(beta_);
        if (it == values_.end() || it->second != 0) {
            throw ConfigError("table must map beta to 0");
        }
    }

    Natural eval(const Ordinal& beta, const Ordinal& xi) const override {
        check_beta(beta);
        require_at_most(beta, xi);
        auto it = values_.find(xi);
        if (it != values_.end()) return it->second;
        return max_ + 1 + code(xi);
    }

    std::optional<Ordinal> preimage(const Ordinal& beta, const Natural& n) const override {
        check_beta(beta);
        if (n <= max_) {
            auto it = inverse_.find(n);
            if (it == inverse_.end()) return std::nullopt;
            return it->second;
        }
        auto x = try_decode(n - max_ - 1);
        if (x && *x <= beta_ && !values_.contains(*x)) return x;
        return std::nullopt;
    }

    std::string descriptor() const override { return "table:" + format(beta_); }

private:
    Ordinal beta_;
    std::map<Ordinal, Natural> values_;
    std::map<Natural, Ordinal> inverse_;
    Natural max_ = 0;

    void check_beta(const Ordinal& beta) const {
        if (beta != beta_) {
            throw OutOfRange("table nice sequence is defined only at " + format(beta_));
        }
    }
};

class CanonicalReals final : public RealFamily {
public:
    bool bit(const Ordinal& alpha, std::uint64_t n) const override {
        Natural c = code(alpha);
        if (c == 0 || n > boost::multiprecision::msb(c)) return false;
        return boost::multiprecision::bit_test(c, static_cast<unsigned>(n));
    }

    std::uint64_t delta_r(const Ordinal& alpha, const Ordinal& beta,
                          std::uint64_t budget) const override {
        if (alpha == beta) throw OutOfRange("delta_r needs distinct ordinals");
        Natural diff = code(alpha) ^ code(beta);
        std::uint64_t n = boost::multiprecision::lsb(diff);
        if (n >= budget) {
            throw BudgetExhausted("first differing bit lies past the budget of " +
                                  std::to_string(budget));
        }
        return n;
    }

    std::string descriptor() const override { return "canonical"; }
};

} // namespace

NicePtr canonical_nice() {
    static const NicePtr instance = std::make_shared<CanonicalNice>();
    return instance;
}

NicePtr table_nice(Ordinal beta, std::vector<std::pair<Ordinal, Natural>> pairs) {
    return std::make_shared<TableNice>(std::move(beta), std::move(pairs));
}

NicePtr parse_nice_table(const std::string& json_text) {
    try {
        auto doc = nlohmann::json::parse(json_text);
        Ordinal beta = parse(doc.at("beta").get<std::string>());
        std::vector<std::pair<Ordinal, Natural>> pairs;
        for (const auto& p : doc.at("pairs")) {
            if (!p.is_array() || p.size() != 2) throw ConfigError("pairs must be [ordinal, nat]");
            pairs.emplace_back(parse(p[0].get<std::string>()), Natural(p[1].get<std::uint64_t>()));
        }
        return table_nice(std::move(beta), std::move(pairs));
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed nice table: ") + e.what());
    }
}

NicePtr load_nice_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open nice table " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_nice_table(buf.str());
}

RealsPtr canonical_reals() {
    static const RealsPtr instance = std::make_shared<CanonicalReals>();
    return instance;
}

BracketForms bracket_c_forms(const CSequence& s, const Ordinal& alpha, const Ordinal& beta) {
    if (!(alpha < beta)) {
        throw OutOfRange("bracket needs alpha < beta, got " + format(alpha) + ", " + format(beta));
    }
    BracketForms f;
    f.delta = delta(s, alpha, beta);
    auto from_delta = trace(s, f.delta, beta);
    // Traces are listed in decreasing order.
    for (const auto& x : from_delta) {
        if (x < alpha) break;
        f.via_difference = x;
    }
    auto from_alpha = trace(s, alpha, beta);
    std::sort(from_delta.begin(), from_delta.end());
    std::sort(from_alpha.begin(), from_alpha.end());
    std::vector<Ordinal> common;
    std::set_intersection(from_delta.begin(), from_delta.end(), from_alpha.begin(),
                          from_alpha.end(), std::back_inserter(common));
    f.via_intersection = common.front();
    return f;
}

Ordinal bracket_c(const CSequence& s, const Ordinal& alpha, const Ordinal& beta) {
    BracketForms f = bracket_c_forms(s, alpha, beta);
    if (f.via_difference != f.via_intersection) {
        throw AxiomViolation("bracket forms disagree at (" + format(alpha) + ", " + format(beta) +
                             "): " + format(f.via_difference) + " vs " +
                             format(f.via_intersection));
    }
    return f.via_difference;
}

Ordinal bracket_re(const RealFamily& r, const NiceSequence& e, const Ordinal& alpha,
                   const Ordinal& beta) {
    if (!(alpha < beta)) {
        throw OutOfRange("bracket needs alpha < beta, got " + format(alpha) + ", " + format(beta));
    }
    auto marks = e.marks(beta, r.delta_r(alpha, beta));
    auto it = std::lower_bound(marks.begin(), marks.end(), alpha);
    if (it == marks.end()) {
        throw AxiomViolation("F_n(" + format(beta) + ") misses beta in " + e.descriptor());
    }
    return *it;
}

SpecializedTree::Index bracket_tree(const SpecializedTree& tree, SpecializedTree::Index s,
                                    SpecializedTree::Index t) {
    if (s == t) throw OutOfRange("bracket needs distinct nodes");
    const Ordinal& hs = tree.height(s);
    if (hs > tree.height(t)) {
        throw OutOfRange("node " + tree.node(s).id + " is higher than " + tree.node(t).id);
    }
    tree.restrict(t, hs);
    const Natural& m = tree.a(tree.meet(s, t));
    for (auto z : tree.chain(t)) {
        if (tree.height(z) >= hs && tree.a(z) <= m) return z;
    }
    return t;
}

} // namespace walks
