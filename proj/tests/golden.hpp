#pragma once
// Golden CLI invocations: run in-process, mask the volatile report fields,
// compare against the stored bytes. Shared by test_cli and the acceptance
// binary.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace walks::golden {

struct Case {
    std::string name;
    std::vector<std::string> args;
    int exit = 0;
};

struct Outcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<Case> load_cases() {
    auto j = nlohmann::json::parse(read_file(std::string(WALKS_GOLDEN_DIR) + "/cases.json"));
    std::vector<Case> out;
    for (const auto& c : j) {
        Case k{c.at("name"), {}, c.at("exit")};
        for (std::string a : c.at("args")) {
            if (auto p = a.find("@DATA@"); p != std::string::npos) a.replace(p, 6, WALKS_TEST_DATA_DIR);
            k.args.push_back(a);
        }
        out.push_back(std::move(k));
    }
    return out;
}

inline void mask(nlohmann::ordered_json& j) {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            if (k == "elapsed_ms") v = 0;
            else if (k == "version") v = "";
            else mask(v);
        }
    } else if (j.is_array()) {
        for (auto& v : j) mask(v);
    }
}

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

inline Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::dispatch(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Masked stdout; empty when it is not JSON.
inline std::string masked(const std::string& text) {
    auto j = nlohmann::ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) return "";
    mask(j);
    return j.dump() + "\n";
}

inline std::string golden_path(const std::string& name) {
    return std::string(WALKS_GOLDEN_DIR) + "/" + name + ".json";
}

// With `update`, rewrites the golden file instead of comparing.
inline Outcome check(const Case& c, bool update = false) {
    const auto r = run(c.args);
    const auto got = masked(r.out);
    if (r.code != c.exit) return {c.name, false, "exit " + std::to_string(r.code) + ": " + r.err};
    if (update) {
        std::ofstream(golden_path(c.name), std::ios::binary) << got;
        return {c.name, true, "updated"};
    }
    const auto want = read_file(golden_path(c.name));
    if (got != want) return {c.name, false, "output differs: " + got};
    return {c.name, true, ""};
}

} // namespace walks::golden
