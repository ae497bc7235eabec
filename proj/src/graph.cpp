#include "cliquelab/graph.hpp"

#include <algorithm>
#include <sstream>

namespace cliquelab {

void Graph::add_vertex(int v) {
    if (v < 0) throw domain_error("vertex ids must be nonnegative");
    adj_.try_emplace(v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw domain_error("self-loop on vertex " + std::to_string(u));
    add_vertex(u);
    add_vertex(v);
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void Graph::set_label(int v, std::string label) {
    add_vertex(v);
    labels_[v] = std::move(label);
}

bool Graph::has_edge(int u, int v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
}

int Graph::edge_count() const {
    int deg_sum = 0;
    for (const auto& [v, nbrs] : adj_) deg_sum += static_cast<int>(nbrs.size());
    return deg_sum / 2;
}

std::vector<int> Graph::vertices() const {
    std::vector<int> out;
    out.reserve(adj_.size());
    for (const auto& [v, nbrs] : adj_) out.push_back(v);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (const auto& [v, nbrs] : adj_)
        for (int w : nbrs)
            if (v < w) out.emplace_back(v, w);
    return out;
}

const std::set<int>& Graph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw domain_error("unknown vertex " + std::to_string(v));
    return it->second;
}

std::string Graph::label(int v) const {
    auto it = labels_.find(v);
    return it != labels_.end() ? it->second : std::to_string(v);
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

// Whitespace-separated tokens, trailing \r tolerated.
std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) {
        if (!t.empty() && t.back() == '\r') t.pop_back();
        if (!t.empty()) toks.push_back(t);
    }
    return toks;
}

int parse_int(const std::string& tok, int line_no, const std::string& what) {
    try {
        size_t pos = 0;
        int value = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw parse_error("expected integer for " + what + ", got '" + tok + "'", line_no);
    }
}

Graph parse_dimacs(const std::string& text) {
    Graph g;
    bool have_header = false;
    int n = 0;
    auto lines = split_lines(text);
    for (size_t i = 0; i < lines.size(); ++i) {
        int line_no = static_cast<int>(i) + 1;
        const std::string& line = lines[i];
        if (blank(line)) continue;
        auto toks = tokenize(line);
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header) throw parse_error("duplicate problem line", line_no);
            if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
                throw parse_error("malformed header, expected 'p edge N M'", line_no);
            n = parse_int(toks[2], line_no, "vertex count");
            parse_int(toks[3], line_no, "edge count");
            if (n < 0) throw parse_error("negative vertex count", line_no);
            for (int v = 0; v < n; ++v) g.add_vertex(v);
            have_header = true;
        } else if (toks[0] == "e") {
            if (!have_header) throw parse_error("edge line before problem line", line_no);
            if (toks.size() != 3) throw parse_error("malformed edge line, expected 'e u v'", line_no);
            int u = parse_int(toks[1], line_no, "edge endpoint");
            int v = parse_int(toks[2], line_no, "edge endpoint");
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error("edge references vertex out of range 1.." + std::to_string(n), line_no);
            if (u == v) throw parse_error("self-loop on vertex " + std::to_string(u), line_no);
            g.add_edge(u - 1, v - 1);
        } else {
            throw parse_error("unknown directive '" + toks[0] + "'", line_no);
        }
    }
    if (!have_header) throw parse_error("missing 'p edge N M' header", static_cast<int>(lines.size()) + 1);
    return g;
}

Graph parse_edge_list(const std::string& text) {
    Graph g;
    bool have_header = false;
    int n = -1;
    auto lines = split_lines(text);
    for (size_t i = 0; i < lines.size(); ++i) {
        int line_no = static_cast<int>(i) + 1;
        const std::string& line = lines[i];
        if (blank(line)) continue;
        auto toks = tokenize(line);
        if (toks[0][0] == '#') continue;
        if (toks[0] == "n") {
            if (have_header) throw parse_error("duplicate header", line_no);
            if (toks.size() != 2) throw parse_error("malformed header, expected 'n N'", line_no);
            n = parse_int(toks[1], line_no, "vertex count");
            if (n < 0) throw parse_error("negative vertex count", line_no);
            for (int v = 0; v < n; ++v) g.add_vertex(v);
            have_header = true;
            continue;
        }
        if (toks.size() != 2) throw parse_error("malformed edge line, expected 'u v'", line_no);
        int u = parse_int(toks[0], line_no, "edge endpoint");
        int v = parse_int(toks[1], line_no, "edge endpoint");
        if (u < 0 || v < 0) throw parse_error("negative vertex id", line_no);
        if (have_header && (u >= n || v >= n))
            throw parse_error("edge references vertex out of range 0.." + std::to_string(n - 1), line_no);
        if (u == v) throw parse_error("self-loop on vertex " + std::to_string(u), line_no);
        g.add_edge(u, v);
    }
    return g;
}

int id_span(const Graph& g) {
    auto vs = g.vertices();
    return vs.empty() ? 0 : vs.back() + 1;
}

} // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
    case GraphFormat::dimacs: return parse_dimacs(text);
    case GraphFormat::edge_list: return parse_edge_list(text);
    case GraphFormat::dot: throw domain_error("dot is write-only");
    }
    throw domain_error("unknown graph format");
}

int degree(const Graph& g, int v) {
    return static_cast<int>(g.neighbors(v).size());
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (!g.has_vertex(v))
            throw domain_error("set member " + std::to_string(v) + " not in graph");
    for (auto it = s.begin(); it != s.end(); ++it) {
        auto jt = it;
        for (++jt; jt != s.end(); ++jt)
            if (!g.has_edge(*it, *jt)) return false;
    }
    return true;
}

Graph remove_vertices(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (!g.has_vertex(v))
            throw domain_error("cannot remove unknown vertex " + std::to_string(v));
    Graph out;
    for (int v : g.vertices()) {
        if (s.count(v)) continue;
        out.add_vertex(v);
        if (g.has_label(v)) out.set_label(v, g.label(v));
        for (int w : g.neighbors(v))
            if (!s.count(w) && v < w) out.add_edge(v, w);
    }
    return out;
}

std::string serialize_graph(const Graph& g, GraphFormat format, const VertexSet* highlight) {
    std::ostringstream out;
    switch (format) {
    case GraphFormat::dimacs: {
        out << "p edge " << id_span(g) << ' ' << g.edge_count() << '\n';
        for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
        break;
    }
    case GraphFormat::edge_list: {
        out << "n " << id_span(g) << '\n';
        for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
        break;
    }
    case GraphFormat::dot: {
        auto marked = [&](int v) { return highlight && highlight->count(v) != 0; };
        out << "graph cliquelab {\n";
        for (int v : g.vertices()) {
            out << "  " << v << " [label=\"" << g.label(v) << "\"";
            if (marked(v)) out << ", color=red, style=filled, fillcolor=\"#ffcccc\"";
            out << "];\n";
        }
        for (const auto& [u, v] : g.edges()) {
            out << "  " << u << " -- " << v;
            if (marked(u) && marked(v)) out << " [color=red]";
            out << ";\n";
        }
        out << "}\n";
        break;
    }
    }
    return out.str();
}

} // namespace cliquelab
