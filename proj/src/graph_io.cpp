#include "confault/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include "confault/errors.hpp"
#include "json.hpp"

namespace confault {

namespace {

using nlohmann::json;

LoadedGraph build(int n, std::vector<std::pair<int, int>> pairs) {
    std::vector<std::pair<int, int>> sorted = pairs;
    std::sort(sorted.begin(), sorted.end());
    const auto unique_end = std::unique(sorted.begin(), sorted.end());
    const int duplicates = static_cast<int>(sorted.end() - unique_end);
    return {Digraph::from_edge_list(n, pairs), duplicates};
}

LoadedGraph parse_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError("invalid JSON at byte " + std::to_string(err.byte) + ": " + err.what());
    }
    if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("missing integer field \"n\"");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw ParseError("missing array field \"edges\"");

    const int n = doc["n"].get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const json& item : doc["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw ParseError("each edge must be a [tail, head] pair of integers");
        pairs.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return build(n, std::move(pairs));
}

// Minimal tokenizer for the DOT subset: integers, identifiers, punctuation
// and '->', with '//' line comments.
struct DotScanner {
    const std::string& text;
    size_t pos = 0;
    int line = 1;

    explicit DotScanner(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("DOT parse error at line " + std::to_string(line) + ": " + msg);
    }

    void skip_blank() {
        while (pos < text.size()) {
            const char c = text[pos];
            if (c == '\n') {
                ++line;
                ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    bool done() {
        skip_blank();
        return pos >= text.size();
    }

    char peek() {
        skip_blank();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool accept_arrow() {
        skip_blank();
        if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
            pos += 2;
            return true;
        }
        return false;
    }

    std::string word() {
        skip_blank();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected an identifier or number");
        return text.substr(start, pos - start);
    }

    int number() {
        const std::string w = word();
        for (char c : w)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail("expected an integer vertex id, got \"" + w + "\"");
        try {
            return std::stoi(w);
        } catch (const std::exception&) {
            fail("vertex id \"" + w + "\" out of range");
        }
    }
};

LoadedGraph parse_dot(const std::string& text) {
    DotScanner sc(text);
    if (sc.word() != "digraph") sc.fail("expected the keyword \"digraph\"");
    if (sc.peek() != '{') sc.word();  // optional graph name
    if (!sc.accept('{')) sc.fail("expected '{'");

    int max_vertex = 0;
    std::vector<std::pair<int, int>> pairs;
    while (true) {
        if (sc.accept('}')) break;
        if (sc.done()) sc.fail("missing closing '}'");
        int v = sc.number();
        max_vertex = std::max(max_vertex, v);
        while (sc.accept_arrow()) {
            const int w = sc.number();
            max_vertex = std::max(max_vertex, w);
            pairs.emplace_back(v, w);
            v = w;
        }
        sc.accept(';');
    }
    if (!sc.done()) sc.fail("trailing content after '}'");
    if (max_vertex == 0) sc.fail("no vertices declared");
    return build(max_vertex, std::move(pairs));
}

}  // namespace

LoadedGraph parse_graph_text(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_json(text) : parse_dot(text);
    }
    throw ParseError("empty graph document");
}

LoadedGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str());
}

std::string graph_to_json(const Digraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.tail, e.head});
    json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = edges;
    return doc.dump(2) + "\n";
}

void write_graph_file(const Digraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << graph_to_json(g);
    if (!out) throw IoError("failed writing " + path);
}

}  // namespace confault
