#include <chrono>
#include <map>
#include <random>
#include <set>

#include <boost/multiprecision/miller_rabin.hpp>

#include "walks/constructions.hpp"
#include "walks/errors.hpp"
#include "walks/ramsey.hpp"

namespace walks {

namespace {

struct Outcome {
    std::uint64_t checked = 0;
    std::vector<Violation> violations;

    void check(bool ok, const Json& inputs, std::string expected, std::string actual) {
        ++checked;
        if (!ok) violations.push_back({inputs, std::move(expected), std::move(actual)});
    }
};

// Runs body(i, outcome) for every item, in parallel, merging by item order.
// A library error inside an item counts as a violation of that item.
template <class Inputs, class Body>
Outcome run_items(std::size_t n, unsigned jobs, Inputs&& inputs, Body&& body) {
    auto parts = parallel_map(n, jobs, [&](std::size_t i) {
        Outcome o;
        try {
            body(i, o);
        } catch (const Error& e) {
            o.check(false, inputs(i), "no error", e.what());
        }
        return o;
    });
    Outcome all;
    for (auto& p : parts) {
        all.checked += p.checked;
        for (auto& v : p.violations) all.violations.push_back(std::move(v));
    }
    return all;
}

Json pair_json(const Ordinal& a, const Ordinal& b) {
    return Json{{"alpha", format(a)}, {"beta", format(b)}};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<Ordinal>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + format(xs[i]);
    return out + "]";
}

std::string join(const std::vector<std::uint64_t>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "]";
}

bool contains(const std::vector<Ordinal>& xs, const Ordinal& x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

struct Params {
    std::uint64_t max_exp;
    std::uint64_t coeff_cap;
    std::uint64_t size;
    std::uint64_t seed;
    unsigned jobs;
    std::string cseq;
    std::string club;
};

Params resolve(const SuiteConfig& c, std::uint64_t max_exp, std::uint64_t cap, std::uint64_t size,
               std::string cseq = "canonical", std::string club = "mult:w") {
    return {c.max_exp.value_or(max_exp), c.coeff_cap.value_or(cap), c.sample_size.value_or(size),
            c.seed, std::max(1u, c.jobs), c.cseq.value_or(std::move(cseq)),
            c.club.value_or(std::move(club))};
}

Json universe_json(const Params& p) {
    return Json{{"max_exp", p.max_exp}, {"coeff_cap", p.coeff_cap}};
}

// All index pairs i < j of n items, grouped by j.
std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) out.emplace_back(i, j);
    }
    return out;
}

// Random pairs a < b of distinct members of pool.
std::vector<std::pair<Ordinal, Ordinal>> random_pairs(const std::vector<Ordinal>& pool, std::size_t n,
                                                      std::mt19937_64& rng) {
    if (pool.size() < 2) throw ConfigError("need at least two ordinals to draw pairs");
    std::vector<std::pair<Ordinal, Ordinal>> out;
    while (out.size() < n) {
        const auto& a = pool[rng() % pool.size()];
        const auto& b = pool[rng() % pool.size()];
        if (a == b) continue;
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    return out;
}

Report trace_laws(const SuiteConfig& c, Report& r) {
    Params p = resolve(c, 3, 4, 0);
    r.config = Json{{"universe", universe_json(p)}, {"cseq", p.cseq}};
    auto s = parse_cseq(p.cseq);
    const auto u = universe(p.max_exp, p.coeff_cap);
    auto out = run_items(
        u.size(), p.jobs, [&](std::size_t j) { return Json{{"beta", format(u[j])}}; },
        [&](std::size_t j, Outcome& o) {
            const Ordinal& b = u[j];
            for (std::size_t i = 0; i < j; ++i) {
                const Ordinal& a = u[i];
                WalkResult w = walk(*s, a, b);
                bool shape = w.trace.front() == b && w.trace.back() == a;
                for (std::size_t k = 1; k < w.trace.size(); ++k) shape &= w.trace[k] < w.trace[k - 1];
                bool lengths = w.rho0.size() + 1 == w.trace.size();
                bool lam = a.is_zero() || w.lambda < a;
                o.check(shape && lengths && lam, pair_json(a, b),
                        "Tr decreasing from beta to alpha, |rho0| = |Tr|-1, lambda < alpha",
                        "trace=" + join(w.trace) + " rho0=" + join(w.rho0) +
                            " lambda=" + format(w.lambda));
            }
        });
    r.checked = out.checked;
    r.violations = std::move(out.violations);
    return r;
}

Report juntar_trazas(const SuiteConfig& c, Report& r) {
    Params p = resolve(c, 4, 3, 60);
    SampleSpec spec;
    spec.max_exp = p.max_exp;
    spec.coeff_cap = p.coeff_cap;
    spec.exclude_zero = true;
    spec.size = p.size;
    spec.seed = p.seed;
    r.config = Json{{"universe", universe_json(p)}, {"sample_size", p.size},
                    {"exclude_zero", true}, {"cseq", p.cseq}};
    auto s = parse_cseq(p.cseq);
    const auto xs = stratified_sample(spec);
    const std::size_t n = xs.size();
    // walks[j][i] = walk from xs[j] down to xs[i], i < j.
    auto walks = parallel_map(n, p.jobs, [&](std::size_t j) {
        std::vector<WalkResult> row;
        for (std::size_t i = 0; i < j; ++i) row.push_back(walk(*s, xs[i], xs[j]));
        return row;
    });
    std::vector<std::uint64_t> on_trace(n, 0);
    auto out = run_items(
        n, p.jobs, [&](std::size_t k) { return Json{{"beta", format(xs[k])}}; },
        [&](std::size_t k, Outcome& o) {
            for (std::size_t j = 0; j < k; ++j) {
                for (std::size_t i = 0; i < j; ++i) {
                    const WalkResult& ab = walks[k][i];
                    const WalkResult& gb = walks[k][j];
                    const WalkResult& ag = walks[j][i];
                    bool c1 = contains(ab.trace, xs[j]);
                    std::set<Ordinal> lhs(ab.trace.begin(), ab.trace.end());
                    std::set<Ordinal> rhs(gb.trace.begin(), gb.trace.end());
                    rhs.insert(ag.trace.begin(), ag.trace.end());
                    bool c2 = lhs == rhs;
                    bool c3 = gb.lambda < xs[i];
                    auto joined = gb.rho0;
                    joined.insert(joined.end(), ag.rho0.begin(), ag.rho0.end());
                    bool c4 = ab.rho0 == joined;
                    on_trace[k] += c1;
                    o.check(c1 == c2 && c2 == c3 && c3 == c4,
                            Json{{"alpha", format(xs[i])}, {"gamma", format(xs[j])},
                                 {"beta", format(xs[k])}},
                            "the four conditions agree",
                            "gamma_on_trace=" + yes_no(c1) + " union=" + yes_no(c2) +
                                " lambda_below=" + yes_no(c3) + " rho0_concat=" + yes_no(c4));
                }
            }
        });
    std::uint64_t total = 0;
    for (auto t : on_trace) total += t;
    r.checked = out.checked;
    r.violations = std::move(out.violations);
    r.stats = Json{{"sample", n}, {"triples_with_gamma_on_trace", total}};
    return r;
}

// If lambda(alpha, delta) < xi < alpha < delta then alpha lies on Tr(xi, delta);
// the alphas include a tail of the fundamental sequence of delta.
Report lambda_convergence(const SuiteConfig& c, Report& r) {
    Params p = resolve(c, 3, 4, 16);
    r.config = Json{{"universe", universe_json(p)}, {"fund_seq_terms", p.size}, {"cseq", p.cseq}};
    auto s = parse_cseq(p.cseq);
    const auto u = universe(p.max_exp, p.coeff_cap);
    std::vector<Ordinal> limits;
    for (const auto& a : u) {
        if (a.is_limit()) limits.push_back(a);
    }
    auto out = run_items(
        limits.size(), p.jobs, [&](std::size_t k) { return Json{{"delta", format(limits[k])}}; },
        [&](std::size_t k, Outcome& o) {
            const Ordinal& d = limits[k];
            std::set<Ordinal> alphas;
            for (const auto& a : u) {
                if (a < d) alphas.insert(a);
            }
            for (std::uint64_t n = 0; n < p.size; ++n) alphas.insert(fund_seq(d, n));
            std::map<Ordinal, Ordinal> lam;
            for (const auto& a : alphas) lam.emplace(a, lambda(*s, a, d));
            for (const auto& xi : alphas) {
                auto tr = trace(*s, xi, d);
                std::vector<Ordinal> off;
                for (auto it = alphas.upper_bound(xi); it != alphas.end(); ++it) {
                    if (lam.at(*it) < xi && !contains(tr, *it)) off.push_back(*it);
                }
                o.check(off.empty(), Json{{"xi", format(xi)}, {"delta", format(d)}},
                        "lambda(alpha, delta) < xi implies alpha in Tr(xi, delta)",
                        "not on trace: " + join(off));
            }
        });
    r.checked = out.checked;
    r.violations = std::move(out.violations);
    return r;
}

Report delta_oracle(const SuiteConfig& c, Report& r) {
    Params p = resolve(c, 4, 3, 500);
    constexpr std::size_t kPoints = 50;
    constexpr std::uint64_t kPointCap = 6;
    r.config = Json{{"universe", universe_json(p)}, {"pairs", p.size},
                    {"points_per_pair", kPoints}, {"point_coeff_cap", kPointCap}, {"cseq", p.cseq}};
    auto s = parse_cseq(p.cseq);
    std::mt19937_64 rng(p.seed);
    const auto pairs = random_pairs(universe(p.max_exp, p.coeff_cap), p.size, rng);
    std::vector<std::vector<std::uint64_t>> draws(pairs.size(), std::vector<std::uint64_t>(kPoints));
    for (auto& d : draws) {
        for (auto& x : d) x = rng();
    }
    const auto points = universe(p.max_exp, kPointCap);
    std::vector<std::uint64_t> compared(pairs.size(), 0);
    auto out = run_items(
        pairs.size(), p.jobs,
        [&](std::size_t k) { return pair_json(pairs[k].first, pairs[k].second); },
        [&](std::size_t k, Outcome& o) {
            const auto& [a, b] = pairs[k];
            const Json in = pair_json(a, b);
            const Ordinal d = delta(*s, a, b);
            o.check(delta(*s, b, a) == d, in, "symmetric", "delta(b,a)=" + format(delta(*s, b, a)));
            o.check(d <= a, in, "delta <= min", "delta=" + format(d));
            const Ordinal lam = lambda(*s, a, b);
            o.check(d <= successor(lam), in, "delta <= lambda+1",
                    "delta=" + format(d) + " lambda=" + format(lam));
            if (d < a) {
                o.check(rho0(*s, d, a) != rho0(*s, d, b), in, "disagreement at delta",
                        "rho0 agree at " + format(d));
            }
            std::vector<Ordinal> probe;
            for (const auto& x : closure(*s, {a, b}).members) {
                if (x < d) probe.push_back(x);
            }
            auto end = std::lower_bound(points.begin(), points.end(), d);
            const auto below = static_cast<std::size_t>(end - points.begin());
            if (below > 0) {
                for (auto x : draws[k]) probe.push_back(points[x % below]);
            }
            for (const auto& xi : probe) {
                ++compared[k];
                auto ra = rho0(*s, xi, a);
                auto rb = rho0(*s, xi, b);
                if (ra != rb) {
                    o.check(false, Json{{"alpha", format(a)}, {"beta", format(b)}, {"xi", format(xi)}},
                            "agreement below delta=" + format(d), join(ra) + " vs " + join(rb));
                }
            }
        });
    std::uint64_t total = 0;
    for (auto t : compared) total += t;
    r.checked = out.checked;
    r.violations = std::move(out.violations);
    r.stats = Json{{"points_compared", total}};
    return r;
}

Report antichain(const SuiteConfig& c, Report& r) {
    Params p = resolve(c, 3, 4, 20);
    constexpr std::uint64_t kPointCap = 8;
    r.config = Json{{"universe", universe_json(p)}, {"points_per_alpha", p.size},
                    {"point_coeff_cap", kPointCap}, {"cseq", p.cseq}};
    auto s = parse_cseq(p.cseq);
    std::vector<Ordinal> limits;
    for (auto& a : universe(p.max_exp, p.coeff_cap)) {
        if (a.is_limit()) limits.push_back(std::move(a));
    }
    const auto points = universe(p.max_exp, kPointCap);
    std::mt19937_64 rng(p.seed);
    std::vector<std::vector<std::uint64_t>> draws(limits.size(), std::vector<std::uint64_t>(p.size));
    for (auto& d : draws) {
        for (auto& x : d) x = rng();
    }
    auto out = run_items(
        limits.size(), p.jobs, [&](std::size_t j) { return Json{{"beta", format(limits[j])}}; },
        [&](std::size_t j, Outcome& o) {
            const Ordinal& b = limits[j];
            for (std::size_t i = 0; i < j; ++i) {
                Ordinal d = delta(*s, limits[i], b);
                o.check(d < limits[i], pair_json(limits[i], b), "delta < min", "delta=" + format(d));
            }
            // Half the points on C_b, half drawn below b.
            std::vector<Ordinal> xis;
            for (std::uint64_t n = 0; n < (p.size + 1) / 2; ++n) xis.push_back(s->at(b, n));
            const auto below = static_cast<std::size_t>(
                std::lower_bound(points.begin(), points.end(), b) - points.begin());
            for (std::size_t n = xis.size(); n < p.size; ++n) xis.push_back(points[draws[j][n] % below]);
            for (const auto& xi : xis) {
                bool single = rho0(*s, xi, b).size() == 1;
                bool member = s->contains(b, xi);
                o.check(single == member, Json{{"alpha", format(b)}, {"xi", format(xi)}},
                        "|rho0(xi, alpha)| = 1 iff xi in C_alpha",
                        "length_one=" + yes_no(single) + " member=" + yes_no(member));
            }
        });
    r.checked = out.checked;
    r.violations = std::move(out.violations);
    return r;
}

std::vector<Ordinal> limit_point_sample(const Params& p, const ClubPtr& club) {
    SampleSpec spec;
    spec.max_exp = p.max_exp;
    spec.coeff_cap = p.coeff_cap;
    spec.club = club;
    spec.limit_points = true;
    spec.size = p.size;
    spec.seed = p.seed;
    return stratified_sample(spec);
}

Report bracket_in_club(const SuiteConfig& c, Report& r, bool successor_form) {
    Params p = resolve(c, 4, 8, 40);
    auto club = parse_club(p.club);
    auto base = club_adapted_cseq(club);
    auto s = successor_form ? successor_cseq(base) : base;
    r.config = Json{{"universe", universe_json(p)}, {"sample_size", p.size},
                    {"sample_filter", "limit points"}, {"club", p.club}, {"cseq", s->descriptor()}};
    const auto xs = limit_point_sample(p, club);
    auto out = run_items(
        xs.size(), p.jobs, [&](std::size_t j) { return Json{{"beta", format(xs[j])}}; },
        [&](std::size_t j, Outcome& o) {
            for (std::size_t i = 0; i < j; ++i) {
                const Ordinal &a = xs[i], &b = xs[j];
                if (!successor_form) {
                    auto tr = trace(*s, a, b);
                    std::vector<Ordinal> outside;
                    for (const auto& x : tr) {
                        if (!club->contains(x)) outside.push_back(x);
                    }
                    o.check(outside.empty(), pair_json(a, b), "Tr(alpha, beta) inside C",
                            "outside=" + join(outside));
                }
                Ordinal v = bracket_c(*s, a, b);
                o.check(club->contains(v), pair_json(a, b), "bracket in C", format(v));
            }
        });
    r.checked = out.checked;
    r.violations = std::move(out.violations);
    r.stats = Json{{"sample", xs.size()}};
    return r;
}

Report theorem8_re(const SuiteConfig& c, Report& r) {
    Params p = resolve(c, 4, 3, 40);
    auto club = parse_club(p.club);
    auto e = club_adapted_nice(club);
    auto reals = canonical_reals();
    r.config = Json{{"universe", universe_json(p)}, {"sample_size", p.size},
                    {"sample_filter", "members"}, {"club", p.club}, {"nice", e->descriptor()},
                    {"reals", reals->descriptor()}};
    SampleSpec spec;
    spec.max_exp = p.max_exp;
    spec.coeff_cap = p.coeff_cap;
    spec.club = club;
    spec.size = p.size;
    spec.seed = p.seed;
    const auto xs = stratified_sample(spec);
    std::vector<std::uint64_t> max_delta(xs.size(), 0);
    auto out = run_items(
        xs.size(), p.jobs, [&](std::size_t j) { return Json{{"beta", format(xs[j])}}; },
        [&](std::size_t j, Outcome& o) {
            for (std::size_t i = 0; i < j; ++i) {
                const Ordinal &a = xs[i], &b = xs[j];
                max_delta[j] = std::max(max_delta[j], reals->delta_r(a, b));
                Ordinal v = bracket_re(*reals, *e, a, b);
                o.check(club->contains(v) && a <= v && v <= b, pair_json(a, b),
                        "bracket in C and in [alpha, beta]", format(v));
            }
        });
    r.checked = out.checked;
    r.violations = std::move(out.violations);
    r.stats = Json{{"sample", xs.size()},
                   {"max_delta_r", *std::max_element(max_delta.begin(), max_delta.end())}};
    return r;
}

Report theorem8_tree(const SuiteConfig& c, Report& r) {
    Params p = resolve(c, 4, 3, 24);
    constexpr std::size_t kBranches = 6;
    auto club = parse_club(p.club);
    auto s = parse_cseq(p.cseq);
    if (p.max_exp < 2) throw ConfigError("theorem8-tree needs max_exp >= 2");
    // Branches in the top block [w^(m-1)*cap, w^m), heights in C below them.
    const Ordinal top = Ordinal::omega_power(Ordinal::natural(p.max_exp - 1), p.coeff_cap);
    SampleSpec bspec;
    bspec.max_exp = p.max_exp;
    bspec.coeff_cap = p.coeff_cap;
    bspec.at_least = top;
    bspec.size = kBranches;
    bspec.seed = p.seed;
    SampleSpec hspec;
    hspec.max_exp = p.max_exp;
    hspec.coeff_cap = p.coeff_cap;
    hspec.club = club;
    hspec.below = top;
    hspec.size = p.size;
    hspec.seed = p.seed + 1;
    const auto branches = stratified_sample(bspec);
    const auto heights = stratified_sample(hspec);
    r.config = Json{{"universe", universe_json(p)}, {"branches", kBranches}, {"heights", p.size},
                    {"distinct_heights", true}, {"club", p.club}, {"cseq", p.cseq}};

    SampleTree st = build_sample_tree(*s, branches, heights, *club, true);
    SpecializedTree t = club_adapted_specialization(*club, st.tree);
    Outcome o;
    o.check(st.selected.size() >= 20, Json::object(), ">= 20 selected nodes",
            std::to_string(st.selected.size()));
    for (std::size_t i = 0; i < t.size(); ++i) {
        const Json in{{"node", t.node(i).id}};
        bool prime = boost::multiprecision::miller_rabin_test(t.a(i), 25);
        bool member = club->contains(t.height(i));
        o.check(prime == member, in, "a(s) prime iff height in C",
                "prime=" + yes_no(prime) + " member=" + yes_no(member));
        for (auto z : t.chain(i)) {
            if (z == i) continue;
            o.check(t.a(z) != t.a(i), Json{{"lower", t.node(z).id}, {"upper", t.node(i).id}},
                    "distinct a on comparable nodes", "shared value");
        }
    }
    const auto& sel = st.selected;
    auto pairs = index_pairs(sel.size());
    auto node_pair = [&](std::size_t k) {
        auto [x, y] = pairs[k];
        auto lo = sel[x], hi = sel[y];
        if (t.height(lo) > t.height(hi)) std::swap(lo, hi);
        return std::pair{lo, hi};
    };
    auto out = run_items(
        pairs.size(), p.jobs,
        [&](std::size_t k) {
            auto [lo, hi] = node_pair(k);
            return Json{{"s", t.node(lo).id}, {"t", t.node(hi).id}};
        },
        [&](std::size_t k, Outcome& oi) {
            auto [lo, hi] = node_pair(k);
            auto z = bracket_tree(t, lo, hi);
            oi.check(club->contains(t.height(z)) && t.below_or_equal(z, hi) &&
                         t.height(z) >= t.height(lo),
                     Json{{"s", t.node(lo).id}, {"t", t.node(hi).id}},
                     "height of [s t] in C, on [t|height(s), t]", t.node(z).id);
        });
    r.checked = o.checked + out.checked;
    r.violations = std::move(o.violations);
    for (auto& v : out.violations) r.violations.push_back(std::move(v));
    r.stats = Json{{"nodes", t.size()}, {"selected", sel.size()}, {"filtered", st.filtered.size()}};
    return r;
}

Report closure_suite(const SuiteConfig& c, Report& r) {
    Params p = resolve(c, 4, 3, 100);
    constexpr std::size_t kBaseSize = 4;
    r.config = Json{{"universe", universe_json(p)}, {"bases", p.size}, {"base_size", kBaseSize},
                    {"cap", kDefaultClosureCap}, {"cseq", p.cseq}};
    auto s = parse_cseq(p.cseq);
    const auto pool = universe(p.max_exp, p.coeff_cap);
    std::mt19937_64 rng(p.seed);
    std::vector<std::vector<Ordinal>> bases(p.size);
    for (auto& b : bases) {
        for (std::size_t k = 0; k < kBaseSize; ++k) b.push_back(pool[rng() % pool.size()]);
    }
    std::vector<std::uint64_t> sizes(bases.size(), 0), rounds(bases.size(), 0);
    auto out = run_items(
        bases.size(), p.jobs, [&](std::size_t k) { return Json{{"base", join(bases[k])}}; },
        [&](std::size_t k, Outcome& o) {
            const Json in{{"base", join(bases[k])}};
            ClosureSet cl = closure(*s, bases[k]);
            sizes[k] = cl.members.size();
            rounds[k] = cl.rounds;
            const auto& m = cl.members;
            auto has = [&](const Ordinal& x) { return std::binary_search(m.begin(), m.end(), x); };
            bool base_in = std::all_of(bases[k].begin(), bases[k].end(), has);
            o.check(base_in, in, "base inside closure", join(m));
            std::vector<std::string> missing;
            for (std::size_t j = 0; j < m.size(); ++j) {
                for (std::size_t i = 0; i < j; ++i) {
                    WalkResult w = walk(*s, m[i], m[j]);
                    for (const auto& x : w.trace) {
                        if (!has(x)) missing.push_back("Tr:" + format(x));
                    }
                    if (!has(w.lambda)) missing.push_back("lambda:" + format(w.lambda));
                    Ordinal d = delta(*s, m[i], m[j]);
                    if (!has(d)) missing.push_back("delta:" + format(d));
                }
            }
            std::string shown;
            for (const auto& x : missing) shown += (shown.empty() ? "" : " ") + x;
            o.check(missing.empty(), in, "closed under Tr, delta, lambda", shown);
            o.check(closure(*s, m).members == m, in, "closure idempotent", join(m));
        });
    r.checked = out.checked;
    r.violations = std::move(out.violations);
    r.stats = Json{{"closure_sizes", sizes},
                   {"rounds", rounds},
                   {"max_size", *std::max_element(sizes.begin(), sizes.end())}};
    return r;
}

Report bracket_forms(const SuiteConfig& c, Report& r) {
    Params p = resolve(c, 4, 3, 200);
    r.config = Json{{"universe", universe_json(p)}, {"pairs", p.size}, {"cseq", p.cseq}};
    auto s = parse_cseq(p.cseq);
    std::mt19937_64 rng(p.seed);
    const auto pairs = random_pairs(universe(p.max_exp, p.coeff_cap), p.size, rng);
    auto out = run_items(
        pairs.size(), p.jobs,
        [&](std::size_t k) { return pair_json(pairs[k].first, pairs[k].second); },
        [&](std::size_t k, Outcome& o) {
            const auto& [a, b] = pairs[k];
            BracketForms f = bracket_c_forms(*s, a, b);
            o.check(f.via_difference == f.via_intersection && a <= f.via_difference &&
                        f.via_difference <= b,
                    pair_json(a, b), "forms agree inside [alpha, beta]",
                    format(f.via_difference) + " vs " + format(f.via_intersection));
        });
    r.checked = out.checked;
    r.violations = std::move(out.violations);
    return r;
}

// Largest clique (complement: independent set) by scanning every subset.
std::size_t brute_max(const std::vector<std::vector<bool>>& adj, bool complement) {
    const std::size_t n = adj.size();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            for (std::size_t j = i + 1; j < n && ok; ++j) {
                if ((mask >> i & 1) && (mask >> j & 1)) ok = adj[i][j] != complement;
            }
        }
        if (ok) best = size;
    }
    return best;
}

bool is_clique(const BracketGraph& g, const std::vector<std::size_t>& vs, bool complement) {
    for (std::size_t a = 0; a < vs.size(); ++a) {
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
            if (g.edge(vs[a], vs[b]) == complement) return false;
        }
    }
    return true;
}

Report graph_oracle(const SuiteConfig& c, Report& r) {
    Params p = resolve(c, 0, 0, 200);
    r.config = Json{{"graphs", p.size}, {"max_vertices", kExactCliqueLimit}};
    std::mt19937_64 rng(p.seed);
    std::vector<std::vector<std::vector<bool>>> graphs(p.size);
    for (auto& adj : graphs) {
        const std::size_t n = 1 + rng() % kExactCliqueLimit;
        const std::uint64_t density = rng() % 101;
        adj.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = rng() % 100 < density;
        }
    }
    auto out = run_items(
        graphs.size(), p.jobs, [&](std::size_t k) { return Json{{"graph", k}}; },
        [&](std::size_t k, Outcome& o) {
            const auto& adj = graphs[k];
            const std::size_t n = adj.size();
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
            auto g = build_graph("random", "edge", labels, [&](std::size_t i, std::size_t j) { return adj[i][j]; });
            auto cls = classify_graph(g);
            const std::size_t clique = brute_max(adj, false);
            const std::size_t indep = brute_max(adj, true);
            GraphKind kind = clique == n ? GraphKind::Complete
                             : indep == n ? GraphKind::Independent : GraphKind::Mixed;
            if (n == 1) kind = GraphKind::Complete;
            const Json in{{"graph", k}, {"vertices", n}};
            o.check(cls.kind == kind, in, std::string(to_string(kind)), std::string(to_string(cls.kind)));
            o.check(cls.exact && cls.clique.size() == clique && is_clique(g, cls.clique, false), in,
                    "max clique " + std::to_string(clique), std::to_string(cls.clique.size()));
            o.check(cls.independent.size() == indep && is_clique(g, cls.independent, true), in,
                    "max independent set " + std::to_string(indep),
                    std::to_string(cls.independent.size()));
        });
    r.checked = out.checked;
    r.violations = std::move(out.violations);
    return r;
}

Report roundtrip(const SuiteConfig& c, Report& r) {
    Params p = resolve(c, 3, 4, 0);
    r.config = Json{{"universe", universe_json(p)}};
    Outcome o;
    for (const auto& a : universe(p.max_exp, p.coeff_cap)) {
        const std::string text = format(a);
        bool ok = false;
        std::string actual;
        try {
            Ordinal back = parse(text);
            ok = back == a && decode(code(a)) == a;
            actual = format(back);
        } catch (const Error& e) {
            actual = e.what();
        }
        o.check(ok, Json{{"ordinal", text}}, "parse(format(a)) = a = decode(code(a))", actual);
    }
    r.checked = o.checked;
    r.violations = std::move(o.violations);
    return r;
}

using SuiteFn = Report (*)(const SuiteConfig&, Report&);

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> suites = {
        {"trace-laws", trace_laws},
        {"juntar-trazas", juntar_trazas},
        {"lambda-convergence", lambda_convergence},
        {"delta-oracle", delta_oracle},
        {"antichain", antichain},
        {"closure", closure_suite},
        {"theorem8-c", [](const SuiteConfig& c, Report& r) { return bracket_in_club(c, r, false); }},
        {"theorem8-re", theorem8_re},
        {"theorem8-tree", theorem8_tree},
        {"successor-cseq", [](const SuiteConfig& c, Report& r) { return bracket_in_club(c, r, true); }},
        {"bracket-forms", bracket_forms},
        {"graph-oracle", graph_oracle},
        {"roundtrip", roundtrip},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "trace-laws", "juntar-trazas", "lambda-convergence", "delta-oracle", "antichain",
        "closure", "theorem8-c", "theorem8-re", "theorem8-tree", "successor-cseq",
        "bracket-forms", "graph-oracle", "roundtrip"};
    return names;
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
    auto it = registry().find(name);
    if (it == registry().end()) throw UnknownSuite("no suite named \"" + name + "\"");
    Report r;
    r.suite = name;
    r.seed = config.seed;
    r.version = WALKS_VERSION;
    const auto start = std::chrono::steady_clock::now();
    it->second(config, r);
    r.elapsed_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                  std::chrono::steady_clock::now() - start)
                                                  .count());
    return r;
}

} // namespace walks
