#include "walks/constructions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include <boost/multiprecision/miller_rabin.hpp>

#include "walks/errors.hpp"

namespace walks {

namespace {

const Ordinal& require_limit_member(const Club& c, const Ordinal& x) {
    if (!x.is_zero() && !x.is_limit()) {
        throw ClubNotLimit(c.descriptor() + " has the successor member " + format(x));
    }
    return x;
}

class ClubAdaptedCSequence final : public CSequence {
public:
    explicit ClubAdaptedCSequence(ClubPtr club) : club_(std::move(club)) {}

    void enumerate(const Ordinal& alpha, const Visitor& visit) const override {
        switch (alpha.classify()) {
        case OrdinalClass::Zero:
            return;
        case OrdinalClass::Successor:
            visit(predecessor(alpha));
            return;
        case OrdinalClass::Limit:
            break;
        }
        const Club& c = *club_;
        Ordinal cur = require_limit_member(c, c.pred_sup(alpha));
        if (cur == alpha) {
            std::optional<Ordinal> prev;
            for (std::uint64_t n = 0;; ++n) {
                Ordinal f = fund_seq(alpha, n);
                if (prev && *prev > f) f = *prev;
                prev = require_limit_member(c, c.next(successor(f)));
                if (!visit(*prev)) return;
            }
        }
        if (!visit(cur)) return;
        for (std::uint64_t n = 1;; ++n) {
            cur = std::max(fund_seq(alpha, n), successor(cur));
            if (!visit(cur)) return;
        }
    }

    std::string descriptor() const override { return "club:" + club_->descriptor(); }

private:
    ClubPtr club_;
};

class SuccessorCSequence final : public CSequence {
public:
    explicit SuccessorCSequence(CSequencePtr base) : base_(std::move(base)) {}

    void enumerate(const Ordinal& alpha, const Visitor& visit) const override {
        if (!alpha.is_limit()) {
            base_->enumerate(alpha, visit);
            return;
        }
        base_->enumerate(alpha, [&](const Ordinal& x) { return visit(successor(x)); });
    }

    std::string descriptor() const override { return "succ:" + base_->descriptor(); }

private:
    CSequencePtr base_;
};

// Valid codes in increasing order, shared by every emission.
class CodeOrder {
public:
    // Makes sure codes below `limit` have been scanned.
    void extend_to(std::uint64_t limit) {
        std::lock_guard lock(mutex_);
        for (; scanned_ < limit; ++scanned_) {
            if (auto a = try_decode(Natural(scanned_))) ordinals_.push_back({scanned_, std::move(*a)});
        }
    }

    // The i-th valid (code, ordinal) pair, if scanned already.
    std::optional<std::pair<std::uint64_t, Ordinal>> get(std::size_t i) const {
        std::lock_guard lock(mutex_);
        if (i < ordinals_.size()) return ordinals_[i];
        return std::nullopt;
    }

    std::uint64_t scanned() const {
        std::lock_guard lock(mutex_);
        return scanned_;
    }

private:
    mutable std::mutex mutex_;
    std::vector<std::pair<std::uint64_t, Ordinal>> ordinals_;
    std::uint64_t scanned_ = 0;
};

CodeOrder& code_order() {
    static CodeOrder instance;
    return instance;
}

struct Emission {
    std::vector<Ordinal> order;
    std::map<Ordinal, std::uint64_t> rank;
    std::size_t next_code_rank = 0;
};

class ClubAdaptedNice final : public NiceSequence {
public:
    ClubAdaptedNice(ClubPtr club, std::uint64_t budget) : club_(std::move(club)), budget_(budget) {}

    Natural eval(const Ordinal& beta, const Ordinal& xi) const override {
        if (!in_club(beta)) return canonical_nice()->eval(beta, xi);
        if (xi > beta) throw OutOfRange(format(xi) + " is above " + format(beta));
        std::lock_guard lock(mutex_);
        Emission& e = emission(beta);
        while (!e.rank.contains(xi)) step(beta, e);
        return e.rank.at(xi);
    }

    std::optional<Ordinal> preimage(const Ordinal& beta, const Natural& n) const override {
        if (!in_club(beta)) return canonical_nice()->preimage(beta, n);
        std::lock_guard lock(mutex_);
        Emission& e = emission(beta);
        while (e.order.size() <= n) step(beta, e);
        return e.order[n.convert_to<std::size_t>()];
    }

    std::vector<Ordinal> marks(const Ordinal& beta, std::uint64_t n) const override {
        if (!in_club(beta)) return canonical_nice()->marks(beta, n);
        std::vector<Ordinal> out;
        {
            std::lock_guard lock(mutex_);
            Emission& e = emission(beta);
            while (e.order.size() <= n) step(beta, e);
            out.assign(e.order.begin(), e.order.begin() + static_cast<std::ptrdiff_t>(n + 1));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::string descriptor() const override { return "club:" + club_->descriptor(); }

private:
    ClubPtr club_;
    std::uint64_t budget_;
    mutable std::mutex mutex_;
    mutable std::map<Ordinal, Emission> cache_;

    bool in_club(const Ordinal& beta) const {
        if (!club_->contains(beta)) return false;
        require_limit_member(*club_, beta);
        return true;
    }

    Emission& emission(const Ordinal& beta) const {
        auto [it, fresh] = cache_.try_emplace(beta);
        if (fresh) {
            it->second.order.push_back(beta);
            it->second.rank.emplace(beta, 0);
        }
        return it->second;
    }

    static void emit(Emission& e, const Ordinal& x) {
        if (e.rank.emplace(x, e.order.size()).second) e.order.push_back(x);
    }

    // Emits at least one new ordinal below beta.
    void step(const Ordinal& beta, Emission& e) const {
        auto& codes = code_order();
        const std::size_t before = e.order.size();
        while (e.order.size() == before) {
            auto entry = codes.get(e.next_code_rank);
            if (!entry) {
                codes.extend_to(std::min(budget_, std::max<std::uint64_t>(1024, codes.scanned() * 2)));
                entry = codes.get(e.next_code_rank);
            }
            if (!entry || entry->first >= budget_) {
                throw BudgetExhausted("emission for " + format(beta) + " needs codes past " +
                                      std::to_string(budget_));
            }
            const Ordinal* gamma = &entry->second;
            ++e.next_code_rank;
            if (*gamma >= beta) continue;
            if (!club_->contains(*gamma)) {
                emit(e, require_limit_member(*club_, club_->pred_sup(*gamma)));
            }
            emit(e, *gamma);
        }
    }
};

bool is_prime(const Natural& n) {
    if (n < 2) return false;
    return boost::multiprecision::miller_rabin_test(n, 25);
}

std::vector<Natural> first_primes(std::size_t count) {
    std::vector<Natural> out;
    std::vector<std::uint64_t> small;
    for (std::uint64_t k = 2; out.size() < count; ++k) {
        bool prime = true;
        for (auto p : small) {
            if (p * p > k) break;
            if (k % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) {
            small.push_back(k);
            out.emplace_back(k);
        }
    }
    return out;
}

} // namespace

CSequencePtr club_adapted_cseq(ClubPtr club) {
    return std::make_shared<ClubAdaptedCSequence>(std::move(club));
}

CSequencePtr successor_cseq(CSequencePtr base) {
    return std::make_shared<SuccessorCSequence>(std::move(base));
}

NicePtr club_adapted_nice(ClubPtr club, std::uint64_t budget) {
    return std::make_shared<ClubAdaptedNice>(std::move(club), budget);
}

SpecializedTree club_adapted_specialization(const Club& club, const SpecializedTree& base) {
    std::vector<Natural> a(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (!is_prime(base.a(i))) {
            throw NotPrimeValued("node " + base.node(i).id + " has f = " + base.a(i).str());
        }
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
        const Ordinal& h = base.height(i);
        if (club.contains(h)) {
            a[i] = base.a(i);
            continue;
        }
        auto below = base.restrict(i, club.pred_sup(h));
        if (base.a(i) > 1'000'000) throw Overflow("exponent " + base.a(i).str() + " is too large");
        a[i] = boost::multiprecision::pow(base.a(below), base.a(i).convert_to<unsigned>());
    }
    return base.with_values(std::move(a));
}

SampleTree build_sample_tree(const CSequence& s, const std::vector<Ordinal>& branches,
                             const std::vector<Ordinal>& heights, const Club& club,
                             bool distinct_heights) {
    std::vector<Ordinal> bs(branches);
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    if (bs.empty()) throw ConfigError("sample tree needs at least one branch");
    for (const auto& h : heights) {
        if (h > bs.back()) {
            throw HeightAboveBranch("height " + format(h) + " exceeds every branch");
        }
    }

    const std::size_t nb = bs.size();
    std::vector<std::vector<Ordinal>> d(nb, std::vector<Ordinal>(nb));
    std::set<Ordinal> levels(heights.begin(), heights.end());
    levels.insert(Ordinal::zero());
    for (std::size_t i = 0; i < nb; ++i) {
        d[i][i] = bs[i];
        for (std::size_t j = 0; j < i; ++j) {
            d[i][j] = d[j][i] = delta(s, bs[i], bs[j]);
            levels.insert(d[i][j]);
        }
    }
    for (std::vector<Ordinal> frontier(levels.begin(), levels.end()); !frontier.empty();) {
        std::vector<Ordinal> added;
        for (const auto& h : frontier) {
            Ordinal p = club.pred_sup(h);
            if (levels.insert(p).second) added.push_back(p);
        }
        frontier = std::move(added);
    }

    std::vector<TreeNodeSpec> specs;
    std::vector<TreeNode> points;
    std::map<std::pair<Ordinal, std::size_t>, std::size_t> index;  // (height, rep) -> node
    std::vector<std::optional<std::size_t>> last(nb);               // node of branch i so far
    auto primes = first_primes(levels.size() * nb);
    for (const auto& h : levels) {
        for (std::size_t i = 0; i < nb; ++i) {
            if (bs[i] < h) continue;
            std::size_t rep = i;
            for (std::size_t j = 0; j < i; ++j) {
                if (bs[j] >= h && d[i][j] >= h) {
                    rep = j;
                    break;
                }
            }
            auto [it, fresh] = index.try_emplace({h, rep}, specs.size());
            if (fresh) {
                TreeNodeSpec spec;
                spec.id = format(h) + "@" + format(bs[rep]);
                if (last[i]) spec.parent = specs[*last[i]].id;
                spec.height = h;
                spec.a = primes[specs.size()];
                specs.push_back(std::move(spec));
                points.push_back({h, bs[rep]});
            }
            last[i] = it->second;
        }
    }

    SampleTree out{SpecializedTree(std::move(specs)), std::move(points), {}, {}};
    std::set<Ordinal> requested(heights.begin(), heights.end());
    std::set<Ordinal> used;
    for (std::size_t k = 0; k < out.tree.size(); ++k) {
        const Ordinal& h = out.tree.height(k);
        if (!requested.contains(h)) continue;
        if (distinct_heights && !used.insert(h).second) {
            out.filtered.push_back(k);
        } else {
            out.selected.push_back(k);
        }
    }
    return out;
}

CSequencePtr parse_cseq(std::string_view descriptor) {
    if (descriptor == "canonical") return canonical_cseq();
    if (descriptor.starts_with("club:")) return club_adapted_cseq(parse_club(descriptor.substr(5)));
    if (descriptor.starts_with("succ:")) return successor_cseq(parse_cseq(descriptor.substr(5)));
    if (descriptor.starts_with("overlay:")) {
        return overlay_cseq(canonical_cseq(), load_overrides(std::string(descriptor.substr(8))));
    }
    throw ConfigError("unknown C-sequence descriptor \"" + std::string(descriptor) + "\"");
}

NicePtr parse_nice(std::string_view descriptor) {
    if (descriptor == "canonical") return canonical_nice();
    if (descriptor.starts_with("club:")) return club_adapted_nice(parse_club(descriptor.substr(5)));
    if (descriptor.starts_with("table:")) return load_nice_table(std::string(descriptor.substr(6)));
    throw ConfigError("unknown nice-sequence descriptor \"" + std::string(descriptor) + "\"");
}

RealsPtr parse_reals(std::string_view descriptor) {
    if (descriptor == "canonical") return canonical_reals();
    throw ConfigError("unknown real-family descriptor \"" + std::string(descriptor) + "\"");
}

} // namespace walks
