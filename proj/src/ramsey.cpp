#include "walks/ramsey.hpp"

#include <bit>
#include <map>
#include <random>

#include "walks/errors.hpp"

namespace walks {

std::vector<Ordinal> universe(std::uint64_t max_exp, std::uint64_t coeff_cap) {
    if (max_exp == 0 || coeff_cap == 0) throw ConfigError("universe bounds must be >= 1");
    std::vector<std::uint64_t> digits(max_exp, 0);  // digits[e] = coefficient of w^e
    std::vector<Ordinal> out;
    while (true) {
        std::vector<Ordinal::Term> terms;
        for (std::size_t e = max_exp; e-- > 0;) {
            if (digits[e] != 0) {
                terms.push_back({std::make_shared<const Ordinal>(Ordinal::natural(e)), digits[e]});
            }
        }
        out.push_back(Ordinal::from_terms(std::move(terms)));
        std::size_t i = 0;
        while (i < max_exp && digits[i] == coeff_cap) digits[i++] = 0;
        if (i == max_exp) break;
        ++digits[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Ordinal> stratified_sample(const SampleSpec& spec) {
    std::map<std::vector<Ordinal>, std::vector<Ordinal>> strata;
    std::size_t pool = 0;
    for (auto& a : universe(spec.max_exp, spec.coeff_cap)) {
        if (spec.exclude_zero && a.is_zero()) continue;
        if (spec.below && !(a < *spec.below)) continue;
        if (spec.at_least && a < *spec.at_least) continue;
        if (spec.club) {
            bool keep = spec.limit_points ? spec.club->is_limit_point(a) : spec.club->contains(a);
            if (!keep) continue;
        }
        std::vector<Ordinal> support;
        for (const auto& t : a.terms()) support.push_back(t.exp());
        strata[std::move(support)].push_back(std::move(a));
        ++pool;
    }
    if (pool == 0) throw EmptyAfterFilter("no ordinal of the universe passes the filters");

    std::mt19937_64 rng(spec.seed);
    std::vector<std::vector<Ordinal>*> order;
    for (auto& [key, members] : strata) {
        for (std::size_t i = members.size(); i > 1; --i) {
            std::swap(members[i - 1], members[rng() % i]);
        }
        order.push_back(&members);
    }
    std::vector<Ordinal> out;
    const std::size_t want = std::min(spec.size, pool);
    for (std::size_t round = 0; out.size() < want; ++round) {
        for (auto* members : order) {
            if (round < members->size() && out.size() < want) out.push_back((*members)[round]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BracketGraph build_graph(std::string operation, std::string target, std::vector<std::string> labels,
                         const std::function<bool(std::size_t, std::size_t)>& edge) {
    BracketGraph g{std::move(operation), std::move(target), std::move(labels), {}};
    const std::size_t n = g.labels.size();
    g.adjacency.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool e = false;
            try {
                e = edge(i, j);
            } catch (const Error& err) {
                err.rethrow_with("pair (" + g.labels[i] + ", " + g.labels[j] + ")");
            }
            g.adjacency[i][j] = g.adjacency[j][i] = e;
        }
    }
    return g;
}

std::string_view to_string(GraphKind k) {
    switch (k) {
    case GraphKind::Complete: return "complete";
    case GraphKind::Independent: return "independent";
    case GraphKind::Mixed: return "mixed";
    }
    return "?";
}

namespace {

using Mask = std::uint32_t;

void bron_kerbosch(const std::vector<Mask>& nbr, Mask r, Mask p, Mask x, Mask& best) {
    if (p == 0 && x == 0) {
        if (std::popcount(r) > std::popcount(best)) best = r;
        return;
    }
    if (std::popcount(r) + std::popcount(p) <= std::popcount(best)) return;
    const int pivot = std::countr_zero(p | x);
    for (Mask cand = p & ~nbr[pivot]; cand != 0; cand &= cand - 1) {
        const int v = std::countr_zero(cand);
        const Mask bit = Mask{1} << v;
        bron_kerbosch(nbr, r | bit, p & nbr[v], x & nbr[v], best);
        p &= ~bit;
        x |= bit;
    }
}

std::vector<std::size_t> exact_clique(const BracketGraph& g, bool complement) {
    const std::size_t n = g.size();
    std::vector<Mask> nbr(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && g.edge(i, j) != complement) nbr[i] |= Mask{1} << j;
        }
    }
    Mask best = 0;
    const Mask all = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
    bron_kerbosch(nbr, 0, all, 0, best);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (best >> i & 1) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> greedy_clique(const BracketGraph& g, bool complement) {
    const std::size_t n = g.size();
    auto adj = [&](std::size_t i, std::size_t j) { return i != j && g.edge(i, j) != complement; };
    std::vector<std::size_t> order(n);
    std::vector<std::size_t> degree(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
        for (std::size_t j = 0; j < n; ++j) degree[i] += adj(i, j);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    std::vector<bool> in(n, false);
    auto extend = [&] {
        for (auto v : order) {
            if (in[v]) continue;
            bool ok = true;
            for (std::size_t u = 0; u < n && ok; ++u) ok = !in[u] || adj(u, v);
            if (ok) in[v] = true;
        }
    };
    extend();
    // One-swap moves: drop the single member blocking v, then extend again.
    for (bool improved = true; improved;) {
        improved = false;
        const auto before = std::count(in.begin(), in.end(), true);
        for (std::size_t v = 0; v < n && !improved; ++v) {
            if (in[v]) continue;
            std::vector<std::size_t> blocking;
            for (std::size_t u = 0; u < n; ++u) {
                if (in[u] && !adj(u, v)) blocking.push_back(u);
            }
            if (blocking.size() != 1) continue;
            auto trial = in;
            in[blocking[0]] = false;
            in[v] = true;
            extend();
            if (std::count(in.begin(), in.end(), true) > before) {
                improved = true;
            } else {
                in = std::move(trial);
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (in[i]) out.push_back(i);
    }
    return out;
}

} // namespace

GraphClassification classify_graph(const BracketGraph& g) {
    const std::size_t n = g.size();
    std::size_t edges = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) edges += g.edge(i, j);
    }
    GraphClassification c;
    const std::size_t pairs = n * (n - (n > 0)) / 2;
    if (edges == pairs) {
        c.kind = GraphKind::Complete;
    } else if (edges == 0) {
        c.kind = GraphKind::Independent;
    }
    if (n <= kExactCliqueLimit) {
        c.clique = exact_clique(g, false);
        c.independent = exact_clique(g, true);
    } else {
        c.clique = greedy_clique(g, false);
        c.independent = greedy_clique(g, true);
        c.exact = false;
    }
    return c;
}

std::vector<std::pair<Ordinal, std::uint64_t>> value_spectrum(
    const std::vector<Ordinal>& sample, const std::function<Ordinal(const Ordinal&, const Ordinal&)>& f) {
    std::vector<Ordinal> xs(sample);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::map<Ordinal, std::uint64_t> tally;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) ++tally[f(xs[i], xs[j])];
    }
    return {tally.begin(), tally.end()};
}

Json Report::to_json() const {
    Json j;
    j["suite"] = suite;
    j["config"] = config;
    j["checked"] = checked;
    Json vs = Json::array();
    for (const auto& v : violations) {
        vs.push_back(Json{{"inputs", v.inputs}, {"expected", v.expected}, {"actual", v.actual}});
    }
    j["violations"] = std::move(vs);
    j["elapsed_ms"] = elapsed_ms;
    j["seed"] = seed;
    j["version"] = version;
    if (stats) j["stats"] = *stats;
    return j;
}

} // namespace walks
