#include "mkc/graph_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mkc/errors.hpp"

namespace mkc {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_index(std::string_view tok, std::size_t& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

bool parse_real(std::string_view tok, double& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size() && std::isfinite(out);
}

std::string shortest(double w) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), w);
    return std::string(buf.data(), ptr);
}

// Qualitative palette, cycled when there are more blocks than colours.
constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

WeightedGraph parse_edge_list(std::string_view text) {
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (!n) {
            if (!line.starts_with("n=")) throw ParseError(line_no, "expected header 'n=<int>'");
            std::size_t value = 0;
            if (!parse_index(trim(line.substr(2)), value)) throw ParseError(line_no, "bad vertex count");
            n = value;
            continue;
        }

        const auto tok = split_ws(line);
        if (tok.size() < 2 || tok.size() > 3) throw ParseError(line_no, "expected 'u v [w]'");
        Edge e;
        if (!parse_index(tok[0], e.u) || !parse_index(tok[1], e.v)) throw ParseError(line_no, "bad vertex index");
        if (tok.size() == 3 && !parse_real(tok[2], e.w)) throw ParseError(line_no, "bad weight");
        if (e.u >= *n || e.v >= *n) {
            throw ParseError(line_no, "vertex out of range (n=" + std::to_string(*n) + ")");
        }
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!seen.insert({e.u, e.v}).second) throw ParseError(line_no, "duplicate edge");
        edges.push_back(e);
    }
    if (!n) throw ParseError(line_no, "missing header 'n=<int>'");
    return WeightedGraph(*n, std::move(edges));
}

std::string emit_edge_list(const WeightedGraph& g) {
    std::ostringstream os;
    os << "n=" << g.order() << '\n';
    for (const auto& e : g.edges()) {
        os << e.u << ' ' << e.v;
        if (e.w != 1.0 || e.is_loop()) os << ' ' << shortest(e.w);
        os << '\n';
    }
    return os.str();
}

WeightedGraph parse_graph_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned()) {
        throw ParseError(1, "JSON graph needs an unsigned integer field 'n'");
    }
    const auto n = doc["n"].get<std::size_t>();
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    if (doc.contains("edges")) {
        const auto& list = doc["edges"];
        if (!list.is_array()) throw ParseError(1, "'edges' must be an array");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto& item = list[i];
            // Report the edge index (1-based) in place of a line number.
            const auto where = i + 1;
            if (!item.is_array() || item.size() < 2 || item.size() > 3 || !item[0].is_number_unsigned() ||
                !item[1].is_number_unsigned() || (item.size() == 3 && !item[2].is_number())) {
                throw ParseError(where, "edge must be [u, v] or [u, v, w]");
            }
            Edge e{item[0].get<Vertex>(), item[1].get<Vertex>(), item.size() == 3 ? item[2].get<double>() : 1.0};
            if (e.u >= n || e.v >= n) throw ParseError(where, "vertex out of range (n=" + std::to_string(n) + ")");
            if (e.u > e.v) std::swap(e.u, e.v);
            if (!seen.insert({e.u, e.v}).second) throw ParseError(where, "duplicate edge");
            edges.push_back(e);
        }
    }
    return WeightedGraph(n, std::move(edges));
}

std::string emit_graph_json(const WeightedGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.w});
    return nlohmann::json{{"n", g.order()}, {"edges", edges}}.dump();
}

WeightedGraph parse_graph(std::string_view text) {
    const auto body = trim(text);
    if (!body.empty() && body.front() == '{') return parse_graph_json(text);
    return parse_edge_list(text);
}

std::string emit_dot(const WeightedGraph& g, const std::optional<VertexPartition>& partition) {
    if (partition && partition->order() != g.order()) {
        throw ContractError("partition order differs from graph order");
    }
    std::ostringstream os;
    os << "graph G {\n";
    if (partition) os << "  node [style=filled];\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        os << "  " << v;
        if (partition) {
            const auto b = partition->block_of(v);
            os << " [block=" << b << ", fillcolor=\"" << kPalette[b % kPalette.size()] << "\"]";
        }
        os << ";\n";
    }
    for (const auto& e : g.edges()) {
        os << "  " << e.u << " -- " << e.v;
        if (e.w != 1.0) os << " [weight=" << shortest(e.w) << ", label=\"" << shortest(e.w) << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

VertexPartition parse_partition_spec(std::string_view spec, std::size_t n) {
    std::vector<std::vector<Vertex>> blocks;
    std::size_t pos = 0;
    const auto body = trim(spec);
    if (body.empty()) throw ParseError(1, "empty partition spec");
    while (pos <= body.size()) {
        auto semi = body.find(';', pos);
        if (semi == std::string_view::npos) semi = body.size();
        auto block_text = trim(body.substr(pos, semi - pos));
        pos = semi + 1;
        std::vector<Vertex> block;
        std::size_t p = 0;
        while (!block_text.empty() && p <= block_text.size()) {
            auto comma = block_text.find(',', p);
            if (comma == std::string_view::npos) comma = block_text.size();
            const auto tok = trim(block_text.substr(p, comma - p));
            p = comma + 1;
            Vertex v = 0;
            if (!parse_index(tok, v)) throw ParseError(1, "bad vertex '" + std::string(tok) + "' in partition spec");
            block.push_back(v);
        }
        blocks.push_back(std::move(block));
    }
    return VertexPartition(n, std::move(blocks));
}

std::string format_partition_spec(const VertexPartition& p) {
    std::string out;
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        if (b) out += ';';
        bool first = true;
        for (Vertex v : p.block(b)) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        }
    }
    return out;
}

}  // namespace mkc
