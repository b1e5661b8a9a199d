#pragma once
// Finite samples, the graphs G(F, X) they induce, clique search, and the
// named verification suites.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "walks/club.hpp"
#include "walks/ordinal.hpp"

namespace walks {

using Json = nlohmann::ordered_json;

// Every ordinal with natural exponents < max_exp and coefficients <= cap,
// increasing.
std::vector<Ordinal> universe(std::uint64_t max_exp, std::uint64_t coeff_cap);

struct SampleSpec {
    std::uint64_t max_exp = 4;
    std::uint64_t coeff_cap = 3;
    ClubPtr club;                   // keep members of the club
    bool limit_points = false;      // keep limit points of the club instead
    std::optional<Ordinal> below;   // keep ordinals < below
    std::optional<Ordinal> at_least;
    bool exclude_zero = false;
    std::size_t size = 40;
    std::uint64_t seed = 1;
};

// Draws round-robin from strata of equal CNF support (the set of exponents
// present), each shuffled by the seed. Returns the whole filtered universe
// when it has at most `size` elements. Increasing. Throws EmptyAfterFilter.
std::vector<Ordinal> stratified_sample(const SampleSpec& spec);

struct BracketGraph {
    std::string operation;
    std::string target;
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> adjacency;

    std::size_t size() const { return labels.size(); }
    bool edge(std::size_t i, std::size_t j) const { return adjacency[i][j]; }
};

// Evaluates edge(i, j) once for every i < j and mirrors it. Library errors
// are rethrown with the offending pair named.
BracketGraph build_graph(std::string operation, std::string target, std::vector<std::string> labels,
                         const std::function<bool(std::size_t, std::size_t)>& edge);

enum class GraphKind { Complete, Independent, Mixed };
std::string_view to_string(GraphKind k);

struct GraphClassification {
    GraphKind kind = GraphKind::Mixed;
    std::vector<std::size_t> clique;
    std::vector<std::size_t> independent;
    bool exact = true;  // false: the sets are lower bounds only
};

inline constexpr std::size_t kExactCliqueLimit = 12;

// Bron-Kerbosch up to kExactCliqueLimit vertices, greedy plus one-swap
// local search beyond.
GraphClassification classify_graph(const BracketGraph& g);

// Tally of f(a, b) over the pairs a < b of the sample, by increasing value.
std::vector<std::pair<Ordinal, std::uint64_t>> value_spectrum(
    const std::vector<Ordinal>& sample, const std::function<Ordinal(const Ordinal&, const Ordinal&)>& f);

// Runs f(0), ..., f(n-1) on up to `jobs` threads; results in index order.
template <class F>
auto parallel_map(std::size_t n, unsigned jobs, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
    std::vector<decltype(f(std::size_t{}))> out(n);
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i; (i = next++) < n;) out[i] = f(i);
            } catch (...) {
                errors[w] = std::current_exception();
                next = n;
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

struct Violation {
    Json inputs;
    std::string expected;
    std::string actual;
};

struct Report {
    std::string suite;
    Json config;
    std::uint64_t checked = 0;
    std::vector<Violation> violations;
    std::uint64_t elapsed_ms = 0;
    std::uint64_t seed = 0;
    std::string version;
    std::optional<Json> stats;

    bool passed() const { return violations.empty(); }
    Json to_json() const;
};

// Unset fields take the suite's own defaults.
struct SuiteConfig {
    std::optional<std::uint64_t> max_exp;
    std::optional<std::uint64_t> coeff_cap;
    std::optional<std::uint64_t> sample_size;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    std::optional<std::string> cseq;  // descriptor, see parse_cseq
    std::optional<std::string> club;  // descriptor, see parse_club
};

const std::vector<std::string>& suite_names();
// Throws UnknownSuite, ConfigError.
Report run_suite(const std::string& name, const SuiteConfig& config);

} // namespace walks
