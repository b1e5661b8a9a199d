#include "cli.hpp"

#include <charconv>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "walks/constructions.hpp"
#include "walks/errors.hpp"
#include "walks/ramsey.hpp"

namespace walks::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, std::string, std::less<>> kFlagHelp = {
    {"cseq", "C-sequence: canonical, club:<club>, succ:<cseq>, overlay:<path>"},
    {"club", "club: lim, ind, mult:w^k, intersect(a,b)"},
    {"nice", "nice sequence: canonical, club:<club>, table:<path>"},
    {"reals", "family of reals: canonical"},
    {"tree-file", "specialized tree JSON file"},
    {"alpha", "ordinal, e.g. \"w^2*3+1\""},
    {"beta", "ordinal"},
    {"s", "tree node id"},
    {"t", "tree node id"},
    {"target", "edge target: a club, or not:<club>"},
    {"sample-size", "number of sampled ordinals"},
    {"max-exp", "universe: exponents below this"},
    {"coeff-cap", "universe: coefficients up to this"},
    {"seed", "random seed"},
    {"jobs", "worker threads"},
    {"out", "write the JSON document to this file"},
    {"config", "JSON file of flag values; explicit flags win"},
    {"branches", "comma-separated branch ordinals"},
    {"heights", "comma-separated node heights"},
    {"distinct-heights", "keep one selected node per height"},
};

// The flags registered on one subcommand, with values from the command line
// or, failing that, the config file.
class Flags {
public:
    void add(CLI::App* app, std::initializer_list<std::string_view> names) {
        for (auto n : names) {
            std::string name(n);
            const auto& help = kFlagHelp.at(name);
            if (name == "distinct-heights") {
                options_[name] = app->add_flag("--" + name, help);
            } else {
                options_[name] = app->add_option("--" + name, values_[name], help);
            }
        }
    }

    void load_config() {
        if (!from_cli("config")) return;
        const auto& path = values_.at("config");
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open config file '" + path + "'");
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::exception& e) {
            throw ConfigError("config file '" + path + "': " + e.what());
        }
        if (!j.is_object()) throw ConfigError("config file '" + path + "' must hold a JSON object");
        for (const auto& [key, value] : j.items()) {
            if (!kFlagHelp.contains(key) || key == "config") {
                throw ConfigError("config file '" + path + "': unknown key '" + key + "'");
            }
            if (!options_.contains(key) || from_cli(key)) continue;
            if (value.is_string()) {
                values_[key] = value.get<std::string>();
            } else if (value.is_boolean()) {
                values_[key] = value.get<bool>() ? "true" : "false";
            } else if (value.is_number_unsigned()) {
                values_[key] = std::to_string(value.get<std::uint64_t>());
            } else {
                throw ConfigError("config file '" + path + "': key '" + key +
                                  "' must be a string, boolean or natural number");
            }
            configured_.insert(key);
        }
    }

    bool has(const std::string& name) const {
        return options_.contains(name) && (from_cli(name) || configured_.contains(name));
    }

    std::string str(const std::string& name, const std::string& fallback) const {
        return has(name) ? values_.at(name) : fallback;
    }

    std::optional<std::string> maybe(const std::string& name) const {
        if (!has(name)) return std::nullopt;
        return values_.at(name);
    }

    std::string required(const std::string& name) const {
        if (!has(name)) throw UsageError("--" + name + " is required");
        return values_.at(name);
    }

    std::uint64_t natural(const std::string& name, std::uint64_t fallback) const {
        return has(name) ? to_natural(name, values_.at(name)) : fallback;
    }

    std::optional<std::uint64_t> maybe_natural(const std::string& name) const {
        if (!has(name)) return std::nullopt;
        return to_natural(name, values_.at(name));
    }

    Ordinal ordinal(const std::string& name) const { return parse(required(name)); }

    std::vector<Ordinal> ordinals(const std::string& name) const {
        std::vector<Ordinal> out;
        std::stringstream in(required(name));
        for (std::string item; std::getline(in, item, ',');) out.push_back(parse(item));
        return out;
    }

    bool flag(const std::string& name) const {
        if (!options_.contains(name)) return false;
        if (options_.at(name)->count() > 0) return true;
        return configured_.contains(name) && values_.at(name) == "true";
    }

private:
    bool from_cli(const std::string& name) const {
        auto it = options_.find(name);
        return it != options_.end() && it->second->count() > 0;
    }

    static std::uint64_t to_natural(const std::string& name, const std::string& text) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
            throw UsageError("--" + name + " expects a natural number, got '" + text + "'");
        }
        return v;
    }

    std::map<std::string, std::string> values_;
    std::map<std::string, CLI::Option*> options_;
    std::set<std::string> configured_;
};

Json ordinal_list(const std::vector<Ordinal>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(format(x));
    return out;
}

Json number_or_string(const Natural& n) {
    if (n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
    return n.str();
}

struct Result {
    Json doc;
    int code = kExitOk;
};

Result run_ord(const Flags& f) {
    const Ordinal a = f.ordinal("alpha");
    Json j;
    j["value"] = format(a);
    j["class"] = to_string(classify(a));
    j["code"] = number_or_string(code(a));
    j["indecomposable"] = is_indecomposable(a);
    if (f.has("beta")) {
        const Ordinal b = f.ordinal("beta");
        j["beta"] = format(b);
        j["compare"] = to_string(compare(a, b));
        j["sum"] = format(add(a, b));
    }
    return {j};
}

Result run_walk(const Flags& f) {
    auto s = parse_cseq(f.str("cseq", "canonical"));
    const auto w = walk(*s, f.ordinal("alpha"), f.ordinal("beta"));
    return {Json{{"trace", ordinal_list(w.trace)}, {"rho0", w.rho0}, {"lambda", format(w.lambda)}}};
}

// Delta, re-verified: agreement at every closure point below it and
// disagreement at it when it is below both arguments.
Result run_delta(const Flags& f, std::ostream& err) {
    auto s = parse_cseq(f.str("cseq", "canonical"));
    const Ordinal a = f.ordinal("alpha");
    const Ordinal b = f.ordinal("beta");
    const Ordinal d = delta(*s, a, b);
    const Ordinal& lo = std::min(a, b);
    const Ordinal& hi = std::max(a, b);
    std::uint64_t checked = 0;
    int code = kExitOk;
    for (const auto& xi : closure(*s, {a, b}).members) {
        if (!(xi < d)) break;
        ++checked;
        if (rho0(*s, xi, lo) != rho0(*s, xi, hi)) {
            err << "walks-lab: rho0 disagrees at " << format(xi) << " below delta\n";
            code = kExitViolations;
        }
    }
    if (d < lo) {
        ++checked;
        if (rho0(*s, d, lo) == rho0(*s, d, hi)) {
            err << "walks-lab: rho0 agrees at delta\n";
            code = kExitViolations;
        }
    }
    return {Json{{"alpha", format(a)}, {"beta", format(b)}, {"delta", format(d)}, {"checked_points", checked}},
            code};
}

Result run_closure(const Flags& f, const std::vector<std::string>& base_text) {
    if (base_text.empty()) throw UsageError("closure needs at least one base ordinal");
    auto s = parse_cseq(f.str("cseq", "canonical"));
    std::vector<Ordinal> base;
    for (const auto& t : base_text) base.push_back(parse(t));
    const auto c = closure(*s, base);
    return {Json{{"base", ordinal_list(c.base)}, {"members", ordinal_list(c.members)}, {"rounds", c.rounds}}};
}

Result run_bracket_c(const Flags& f) {
    auto s = parse_cseq(f.str("cseq", "canonical"));
    return {Json{{"value", format(bracket_c(*s, f.ordinal("alpha"), f.ordinal("beta")))}}};
}

Result run_bracket_re(const Flags& f) {
    auto e = parse_nice(f.str("nice", "canonical"));
    auto r = parse_reals(f.str("reals", "canonical"));
    return {Json{{"value", format(bracket_re(*r, *e, f.ordinal("alpha"), f.ordinal("beta")))}}};
}

Result run_bracket_tree(const Flags& f) {
    const auto tree = load_tree(f.required("tree-file"));
    const auto v = bracket_tree(tree, tree.index_of(f.required("s")), tree.index_of(f.required("t")));
    return {Json{{"value", tree.node(v).id}, {"height", format(tree.height(v))}}};
}

Result run_tree(const Flags& f) {
    auto s = parse_cseq(f.str("cseq", "canonical"));
    auto club = parse_club(f.str("club", "mult:w"));
    const auto sample = build_sample_tree(*s, f.ordinals("branches"), f.ordinals("heights"), *club,
                                          f.flag("distinct-heights"));
    const auto adapted = club_adapted_specialization(*club, sample.tree);
    Json nodes = Json::array();
    for (std::size_t i = 0; i < adapted.size(); ++i) {
        const auto& n = adapted.node(i);
        Json node{{"id", n.id}};
        node["parent"] = n.parent ? Json(*n.parent) : Json(nullptr);
        node["height"] = format(n.height);
        node["branch"] = format(sample.points[i].branch);
        node["f"] = number_or_string(sample.tree.a(i));
        node["a"] = number_or_string(n.a);
        nodes.push_back(std::move(node));
    }
    auto ids = [&](const std::vector<SpecializedTree::Index>& xs) {
        Json out = Json::array();
        for (auto i : xs) out.push_back(adapted.node(i).id);
        return out;
    };
    return {Json{{"club", club->descriptor()},
                 {"nodes", std::move(nodes)},
                 {"selected", ids(sample.selected)},
                 {"filtered", ids(sample.filtered)}}};
}

// Values of bracket_c over the pairs of a sample and, with --target, the
// graph of pairs whose value lies in the target.
Result run_spectrum(const Flags& f) {
    auto s = parse_cseq(f.str("cseq", "canonical"));
    SampleSpec spec;
    spec.max_exp = f.natural("max-exp", 4);
    spec.coeff_cap = f.natural("coeff-cap", 3);
    spec.size = f.natural("sample-size", 12);
    spec.seed = f.natural("seed", 1);
    if (auto club = f.maybe("club")) {
        spec.club = parse_club(*club);
        spec.limit_points = true;
    }
    const auto jobs = static_cast<unsigned>(f.natural("jobs", 1));
    const auto sample = stratified_sample(spec);
    const std::size_t n = sample.size();

    // values[j][i] = bracket_c(sample[i], sample[j]) for i < j
    auto values = parallel_map(n, jobs, [&](std::size_t j) {
        std::vector<Ordinal> row;
        for (std::size_t i = 0; i < j; ++i) row.push_back(bracket_c(*s, sample[i], sample[j]));
        return row;
    });
    std::map<Ordinal, std::uint64_t> tally;
    for (const auto& row : values) {
        for (const auto& v : row) ++tally[v];
    }
    Json spectrum = Json::array();
    for (const auto& [v, count] : tally) spectrum.push_back(Json{{"value", format(v)}, {"count", count}});

    Json config{{"cseq", s->descriptor()},
                {"max_exp", spec.max_exp},
                {"coeff_cap", spec.coeff_cap},
                {"sample_size", spec.size},
                {"seed", spec.seed}};
    config["club"] = spec.club ? Json(spec.club->descriptor()) : Json(nullptr);
    Json doc{{"config", std::move(config)}, {"sample", ordinal_list(sample)}, {"spectrum", std::move(spectrum)}};

    if (auto target = f.maybe("target")) {
        const bool negate = target->starts_with("not:");
        auto club = parse_club(negate ? std::string_view(*target).substr(4) : std::string_view(*target));
        std::vector<std::string> labels;
        for (const auto& x : sample) labels.push_back(format(x));
        const auto g = build_graph("bracket_c", *target, labels, [&](std::size_t i, std::size_t j) {
            return club->contains(values[j][i]) != negate;
        });
        const auto c = classify_graph(g);
        std::uint64_t edges = 0;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < j; ++i) edges += g.edge(i, j);
        }
        auto pick = [&](const std::vector<std::size_t>& idx) {
            Json out = Json::array();
            for (auto i : idx) out.push_back(labels[i]);
            return out;
        };
        doc["graph"] = Json{{"target", *target},
                            {"edges", edges},
                            {"kind", to_string(c.kind)},
                            {"clique", pick(c.clique)},
                            {"independent", pick(c.independent)},
                            {"exact", c.exact}};
    }
    return {doc};
}

SuiteConfig suite_config(const Flags& f) {
    SuiteConfig c;
    c.max_exp = f.maybe_natural("max-exp");
    c.coeff_cap = f.maybe_natural("coeff-cap");
    c.sample_size = f.maybe_natural("sample-size");
    c.seed = f.natural("seed", 1);
    c.jobs = static_cast<unsigned>(f.natural("jobs", 1));
    c.cseq = f.maybe("cseq");
    c.club = f.maybe("club");
    return c;
}

Result run_verify(const Flags& f, const std::string& suite) {
    const auto config = suite_config(f);
    if (suite != "all") {
        const auto report = run_suite(suite, config);
        return {report.to_json(), report.passed() ? kExitOk : kExitViolations};
    }
    Json reports = Json::array();
    bool passed = true;
    for (const auto& name : suite_names()) {
        const auto report = run_suite(name, config);
        passed = passed && report.passed();
        reports.push_back(report.to_json());
    }
    return {Json{{"suites", std::move(reports)}, {"passed", passed}}, passed ? kExitOk : kExitViolations};
}

void emit(const Json& doc, const Flags& f, std::ostream& out) {
    const std::string text = doc.dump() + "\n";
    if (auto path = f.maybe("out")) {
        std::ofstream file(*path);
        if (!file) throw ConfigError("cannot write '" + *path + "'");
        file << text;
    } else {
        out << text;
    }
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Walks on ordinals: traces, delta, brackets and verification suites", "walks-lab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", WALKS_VERSION);

    std::deque<Flags> flags;
    struct Action {
        Flags* flags;
        std::function<Result(const Flags&)> run;
    };
    std::map<CLI::App*, Action> actions;
    auto command = [&](CLI::App* parent, const std::string& name, const std::string& help,
                       std::initializer_list<std::string_view> names, std::function<Result(const Flags&)> run) {
        auto* sub = parent->add_subcommand(name, help);
        auto& f = flags.emplace_back();
        f.add(sub, names);
        f.add(sub, {"out", "config"});
        actions[sub] = {&f, std::move(run)};
        return sub;
    };

    command(&app, "ord", "parse, classify and code an ordinal", {"alpha", "beta"}, run_ord);
    command(&app, "walk", "walk from beta down to alpha", {"cseq", "alpha", "beta"}, run_walk);
    command(&app, "delta", "delta(alpha, beta), re-verified", {"cseq", "alpha", "beta"},
            [&](const Flags& f) { return run_delta(f, err); });
    std::vector<std::string> base;
    command(&app, "closure", "closure of a finite set", {"cseq"},
            [&](const Flags& f) { return run_closure(f, base); })
        ->add_option("base", base, "base ordinals");
    auto* bracket = app.add_subcommand("bracket", "bracket operations");
    bracket->require_subcommand(1);
    command(bracket, "c", "bracket of a C-sequence", {"cseq", "alpha", "beta"}, run_bracket_c);
    command(bracket, "re", "bracket of reals and a nice sequence", {"nice", "reals", "alpha", "beta"},
            run_bracket_re);
    command(bracket, "tree", "bracket in a specialized tree", {"tree-file", "s", "t"}, run_bracket_tree);
    command(&app, "tree", "finite piece of T(rho0) with the club-adapted specialization",
            {"cseq", "club", "branches", "heights", "distinct-heights"}, run_tree);
    command(&app, "spectrum", "bracket values over a sample, and the graph of a target",
            {"cseq", "club", "target", "sample-size", "max-exp", "coeff-cap", "seed", "jobs"}, run_spectrum);
    std::string suite;
    command(&app, "verify", "run a verification suite, or all of them",
            {"cseq", "club", "sample-size", "max-exp", "coeff-cap", "seed", "jobs"},
            [&](const Flags& f) { return run_verify(f, suite); })
        ->add_option("suite", suite, "suite name or 'all'")
        ->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    for (auto& [sub, action] : actions) {
        if (!sub->parsed()) continue;
        try {
            action.flags->load_config();
            const auto result = action.run(*action.flags);
            emit(result.doc, *action.flags, out);
            return result.code;
        } catch (const UsageError& e) {
            err << "walks-lab: " << e.what() << "\n";
        } catch (const Error& e) {
            err << "walks-lab: " << e.what() << "\n";
        } catch (const Json::exception& e) {
            err << "walks-lab: " << e.what() << "\n";
        }
        return kExitUsage;
    }
    err << "walks-lab: no subcommand\n";
    return kExitUsage;
}

} // namespace walks::cli
