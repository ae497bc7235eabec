#include "cliquelab/choice.hpp"

#include <algorithm>
#include <sstream>

namespace cliquelab {

std::string Choice::to_string() const {
    if (kind == Kind::vertex) return "vertex " + std::to_string(a);
    return "pair " + std::to_string(a) + " " + std::to_string(b);
}

int ChoicePolicy::pick_vertex(const std::vector<int>& candidates) {
    if (candidates.empty()) throw domain_error("no vertex candidates to pick from");
    int picked = candidates.front();
    if (kind_ == Kind::scripted && next_ < script_.size()) {
        const Choice& c = script_[next_++];
        if (c.kind != Choice::Kind::vertex)
            throw replay_error("script expected a vertex choice, got '" + c.to_string() + "'");
        if (std::find(candidates.begin(), candidates.end(), c.a) == candidates.end())
            throw replay_error("scripted choice '" + c.to_string() +
                               "' is not among the offered candidates");
        picked = c.a;
    }
    log_.push_back(Choice::vertex(picked));
    return picked;
}

std::pair<int, int> ChoicePolicy::pick_pair(const std::vector<std::pair<int, int>>& candidates) {
    if (candidates.empty()) throw domain_error("no pair candidates to pick from");
    std::pair<int, int> picked = candidates.front();
    if (kind_ == Kind::scripted && next_ < script_.size()) {
        const Choice& c = script_[next_++];
        if (c.kind != Choice::Kind::pair)
            throw replay_error("script expected a pair choice, got '" + c.to_string() + "'");
        std::pair<int, int> want{c.a, c.b};
        if (std::find(candidates.begin(), candidates.end(), want) == candidates.end())
            throw replay_error("scripted choice '" + c.to_string() +
                               "' is not among the offered candidates");
        picked = want;
    }
    log_.push_back(Choice::pair(picked.first, picked.second));
    return picked;
}

std::string serialize_script(const std::vector<Choice>& choices) {
    std::ostringstream out;
    for (const auto& c : choices) out << c.to_string() << '\n';
    return out.str();
}

std::vector<Choice> parse_script(const std::string& text) {
    std::vector<Choice> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string verb;
        if (!(ls >> verb) || verb[0] == '#') continue;
        if (verb == "vertex") {
            int v;
            if (!(ls >> v)) throw parse_error("expected 'vertex V'", line_no);
            out.push_back(Choice::vertex(v));
        } else if (verb == "pair") {
            int u, v;
            if (!(ls >> u >> v)) throw parse_error("expected 'pair U V'", line_no);
            if (u == v) throw parse_error("pair endpoints must differ", line_no);
            out.push_back(Choice::pair(u, v));
        } else {
            throw parse_error("unknown choice verb '" + verb + "'", line_no);
        }
        std::string extra;
        if (ls >> extra && extra[0] != '#')
            throw parse_error("trailing tokens after choice", line_no);
    }
    return out;
}

} // namespace cliquelab
