#include "krecon/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "krecon/errors.hpp"

namespace krecon {

namespace {

struct Line {
    int number;
    std::vector<std::string_view> tokens;
    std::string_view text;  // comment-stripped, trimmed
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<Line> content_lines(std::string_view text, int first_line = 1) {
    std::vector<Line> out;
    int number = first_line - 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = text.find('\n', pos);
        std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        raw = trim(raw);
        if (!raw.empty()) {
            Line line{number, {}, raw};
            std::size_t i = 0;
            while (i < raw.size()) {
                while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
                std::size_t j = i;
                while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
                if (j > i) line.tokens.push_back(raw.substr(i, j - i));
                i = j;
            }
            out.push_back(std::move(line));
        }
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return out;
}

int parse_int(const Line& line, std::string_view tok, const char* what) {
    int value = 0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw ParseError(line.number, std::string("expected integer ") + what);
    return value;
}

Vertex parse_vertex(const Line& line, std::string_view tok, int n) {
    const int v = parse_int(line, tok, "vertex id");
    if (v < 0 || v >= n) throw ParseError(line.number, "vertex id " + std::to_string(v) + " out of range");
    return v;
}

void expect_header(const std::vector<Line>& lines, std::string_view magic, int eof_line) {
    if (lines.empty()) throw ParseError(eof_line, "missing header '" + std::string(magic) + "'");
    const Line& first = lines.front();
    if (first.tokens.size() != 2 || std::string(first.tokens[0]) + " " + std::string(first.tokens[1]) != magic)
        throw ParseError(first.number, "expected header '" + std::string(magic) + "'");
}

Graph parse_graph_lines(const std::vector<Line>& lines, int eof_line) {
    expect_header(lines, "graph v1", eof_line);
    std::optional<Graph> g;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto& t = line.tokens;
        if (t[0] == "n") {
            if (g) throw ParseError(line.number, "duplicate 'n' line");
            if (t.size() != 2) throw ParseError(line.number, "malformed 'n' line");
            const int n = parse_int(line, t[1], "vertex count");
            if (n < 0) throw ParseError(line.number, "negative vertex count");
            g.emplace(n);
        } else if (t[0] == "e") {
            if (!g) throw ParseError(line.number, "edge before 'n' line");
            if (t.size() != 3) throw ParseError(line.number, "malformed edge line");
            const Vertex u = parse_vertex(line, t[1], g->n());
            const Vertex v = parse_vertex(line, t[2], g->n());
            if (u == v) throw ParseError(line.number, "self-loop");
            if (g->has_edge(u, v)) throw ParseError(line.number, "duplicate pair");
            g->add_edge(u, v);
        } else if (t[0] == "label") {
            if (!g) throw ParseError(line.number, "label before 'n' line");
            if (t.size() < 3) throw ParseError(line.number, "malformed label line");
            const Vertex v = parse_vertex(line, t[1], g->n());
            if (g->labels().count(v)) throw ParseError(line.number, "duplicate label");
            // The label is everything after the id, inner whitespace preserved.
            const auto after_id = line.text.find(t[1], t[0].size()) + t[1].size();
            g->set_label(v, std::string(trim(line.text.substr(after_id))));
        } else {
            throw ParseError(line.number, "unrecognized line '" + std::string(line.text) + "'");
        }
    }
    if (!g) throw ParseError(eof_line, "missing 'n' line");
    return *g;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    const auto lines = content_lines(text);
    const int eof_line = static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 1;
    return parse_graph_lines(lines, eof_line);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph v1\n" << "n " << g.n() << "\n";
    for (const auto& [v, label] : g.labels()) out << "label " << v << " " << label << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

KSetInstance parse_instance(std::string_view text) {
    const auto lines = content_lines(text);
    const int eof_line = static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 1;
    expect_header(lines, "kset v1", eof_line);
    std::optional<int> n, k;
    std::optional<bool> complete;
    std::vector<VertexSet> connected, disconnected;
    std::set<VertexSet> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto& t = line.tokens;
        if (t[0] == "n" || t[0] == "k") {
            auto& slot = t[0] == "n" ? n : k;
            if (slot) throw ParseError(line.number, "duplicate '" + std::string(t[0]) + "' line");
            if (t.size() != 2) throw ParseError(line.number, "malformed '" + std::string(t[0]) + "' line");
            if (!connected.empty() || !disconnected.empty())
                throw ParseError(line.number, "header field after set lines");
            slot = parse_int(line, t[1], t[0] == "n" ? "vertex count" : "subset size");
        } else if (t[0] == "mode") {
            if (complete) throw ParseError(line.number, "duplicate 'mode' line");
            if (t.size() != 2 || (t[1] != "complete" && t[1] != "partial"))
                throw ParseError(line.number, "mode must be 'complete' or 'partial'");
            complete = t[1] == "complete";
        } else if (t[0] == "C" || t[0] == "D") {
            if (!n || !k || !complete) throw ParseError(line.number, "set line before n, k and mode");
            if (t[0] == "D" && *complete) throw ParseError(line.number, "D lines are forbidden in complete mode");
            if (static_cast<int>(t.size()) - 1 != *k)
                throw ParseError(line.number, "set has " + std::to_string(t.size() - 1) + " vertices, expected k=" +
                                                  std::to_string(*k));
            VertexSet s;
            for (std::size_t j = 1; j < t.size(); ++j) s.push_back(parse_vertex(line, t[j], *n));
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw ParseError(line.number, "repeated vertex in set");
            if (!seen.insert(s).second) throw ParseError(line.number, "duplicate set");
            (t[0] == "C" ? connected : disconnected).push_back(std::move(s));
        } else {
            throw ParseError(line.number, "unrecognized line '" + std::string(line.text) + "'");
        }
    }
    if (!n || !k || !complete) throw ParseError(eof_line, "missing n, k or mode line");
    if (*k < 2 || *k > *n) throw ParseError(eof_line, "k must satisfy 2 <= k <= n");
    try {
        return *complete ? KSetInstance::complete(*n, *k, connected)
                         : KSetInstance::partial(*n, *k, connected, disconnected);
    } catch (const InvalidParameter& e) {
        throw ParseError(eof_line, e.what());
    }
}

std::string serialize_instance(const KSetInstance& inst) {
    std::ostringstream out;
    out << "kset v1\n"
        << "n " << inst.n() << "\n"
        << "k " << inst.k() << "\n"
        << "mode " << (inst.is_complete() ? "complete" : "partial") << "\n";
    auto emit = [&](char tag, const std::vector<VertexSet>& sets) {
        for (const auto& s : sets) {
            out << tag;
            for (Vertex v : s) out << ' ' << v;
            out << '\n';
        }
    };
    emit('C', inst.connected_sets());
    if (!inst.is_complete()) emit('D', inst.disconnected_sets());
    return out.str();
}

std::vector<Graph> parse_graph_stream(std::string_view text) {
    std::vector<Graph> out;
    const auto lines = content_lines(text);
    std::vector<Line> block;
    const int eof_line = static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 1;
    auto flush = [&](int at) {
        if (block.empty()) throw ParseError(at, "empty graph block");
        out.push_back(parse_graph_lines(block, at));
        block.clear();
    };
    for (const Line& line : lines) {
        if (line.text == "---") {
            flush(line.number);
        } else {
            block.push_back(line);
        }
    }
    if (!block.empty()) flush(eof_line);
    return out;
}

std::string serialize_graph_stream(const std::vector<Graph>& graphs) {
    std::string out;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (i) out += "---\n";
        out += serialize_graph(graphs[i]);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidParameter("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidParameter("cannot write '" + path + "'");
    out << contents;
}

}  // namespace krecon
