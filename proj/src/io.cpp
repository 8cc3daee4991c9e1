#include "ricci/io.hpp"

#include <fstream>
#include <sstream>

namespace ricci {

namespace {

struct Line {
    int number = 0;
    std::string text;
};

// Next line with content; nullopt at end of stream.
std::optional<Line> next_content_line(std::istream& in, int& lineno) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        if (raw.find_first_not_of(" \t\r") != std::string::npos)
            return Line{lineno, raw};
    }
    return std::nullopt;
}

std::vector<long long> parse_ints(const Line& line, std::size_t expected) {
    std::istringstream ss(line.text);
    std::vector<long long> out;
    long long v = 0;
    while (ss >> v)
        out.push_back(v);
    std::string rest;
    if (!ss.eof() && ss.fail()) {
        ss.clear();
        ss >> rest;
    }
    if (!rest.empty() || out.size() != expected)
        throw ParseError("line " + std::to_string(line.number) + ": expected " +
                         std::to_string(expected) + " integers, got '" + line.text + "'");
    return out;
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    int lineno = 0;
    auto header = next_content_line(in, lineno);
    if (!header)
        throw ParseError("empty input, expected a 'n m' header");
    auto nm = parse_ints(*header, 2);
    long long n = nm[0], m = nm[1];
    if (n < 0 || m < 0)
        throw ParseError("line " + std::to_string(header->number) +
                         ": vertex and edge counts must be nonnegative");
    if (n > 1'000'000)
        throw ParseError("line " + std::to_string(header->number) + ": vertex count too large");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        auto line = next_content_line(in, lineno);
        if (!line)
            throw ParseError("expected " + std::to_string(m) + " edges, found " +
                             std::to_string(i));
        auto uv = parse_ints(*line, 2);
        if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
            throw ParseError("line " + std::to_string(line->number) + ": vertex out of range [0, " +
                             std::to_string(n) + ")");
        if (uv[0] == uv[1])
            throw ParseError("line " + std::to_string(line->number) + ": loop at vertex " +
                             std::to_string(uv[0]));
        edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
    }
    if (auto extra = next_content_line(in, lineno))
        throw ParseError("line " + std::to_string(extra->number) + ": unexpected content after " +
                         std::to_string(m) + " edges");
    return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON must be an object with 'n' and 'edges'");
    if (!j["n"].is_number_integer())
        throw ParseError("'n' must be an integer");
    long long n = j["n"].get<long long>();
    if (n < 0 || n > 1'000'000)
        throw ParseError("'n' out of range");
    if (!j["edges"].is_array())
        throw ParseError("'edges' must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("each edge must be a two-integer array");
        long long u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint out of range [0, " + std::to_string(n) + ")");
        if (u == v)
            throw ParseError("loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

nlohmann::ordered_json graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

Graph parse_graph_text(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("bad JSON: ") + e.what());
        }
        return graph_from_json(j);
    }
    std::istringstream ss(text);
    return parse_edge_list(ss);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_text(buffer.str());
}

nlohmann::ordered_json rational_to_json(const Rational& r) {
    nlohmann::ordered_json j;
    static const BigInt kMax = (BigInt(1) << 63) - 1;
    static const BigInt kMin = -(BigInt(1) << 63);
    if (r.num() >= kMin && r.num() <= kMax && r.den() <= kMax) {
        j["num"] = r.num().convert_to<long long>();
        j["den"] = r.den().convert_to<long long>();
    } else {
        j["num"] = r.num().str();
        j["den"] = r.den().str();
    }
    j["decimal"] = r.decimal();
    return j;
}

} // namespace ricci
