#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cliquelab/errors.hpp"

namespace cliquelab {

// One resolved nondeterministic choice: a vertex (Part 2 interdictions, merge
// key selection) or a vertex pair (Part 1 interdictions, merge absorptions).
struct Choice {
    enum class Kind { vertex, pair };
    Kind kind = Kind::vertex;
    int a = -1;
    int b = -1; // pair only, a < b

    static Choice vertex(int v) { return {Kind::vertex, v, -1}; }
    static Choice pair(int u, int v) {
        return {Kind::pair, std::min(u, v), std::max(u, v)};
    }

    friend bool operator==(const Choice&, const Choice&) = default;

    std::string to_string() const;
};

enum class SearchMode { adversarial, optimistic };

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t cap = 0;
    bool cap_hit = false;
};

// Resolves ties at the algorithms' choice points. Candidates always arrive in
// canonical order (ascending ids / lexicographic pairs). LowestId takes the
// first; Scripted consumes a prerecorded list, failing loudly when an entry
// is not among the offered candidates, and falls back to LowestId once the
// script runs out. Every pick is logged, so a finished run replays from its
// own log byte for byte.
class ChoicePolicy {
public:
    enum class Kind { lowest_id, scripted };

    static ChoicePolicy lowest_id() { return ChoicePolicy(Kind::lowest_id, {}); }
    static ChoicePolicy scripted(std::vector<Choice> script) {
        return ChoicePolicy(Kind::scripted, std::move(script));
    }

    int pick_vertex(const std::vector<int>& candidates);
    std::pair<int, int> pick_pair(const std::vector<std::pair<int, int>>& candidates);

    Kind kind() const { return kind_; }
    const std::vector<Choice>& log() const { return log_; }
    bool script_exhausted() const { return next_ >= script_.size(); }

private:
    ChoicePolicy(Kind kind, std::vector<Choice> script)
        : kind_(kind), script_(std::move(script)) {}

    Kind kind_;
    std::vector<Choice> script_;
    std::size_t next_ = 0;
    std::vector<Choice> log_;
};

// Line-oriented script form: "vertex V" / "pair U V", '#' comments allowed.
std::string serialize_script(const std::vector<Choice>& choices);
std::vector<Choice> parse_script(const std::string& text);

} // namespace cliquelab
