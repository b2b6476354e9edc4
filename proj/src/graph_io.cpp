#include "turan/graph_io.hpp"

namespace turan {

namespace {

constexpr int kBias = 63;

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    // Upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
    int acc = 0;
    int bits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
    return out;
}

Graph from_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw GraphError("empty graph6 string");
    for (char c : text) {
        if (c < 63 || c > 126) throw GraphError("invalid graph6 character");
    }

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != 126) {
        n = text[0] - kBias;
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == 126) throw GraphError("graph6 order too large");
        n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
        pos = 4;
    }
    if (n > kMaxVertices) throw GraphError("graph6 order exceeds 64 vertices");

    const long slots = n * (n - 1) / 2;
    const std::size_t expected = pos + static_cast<std::size_t>((slots + 5) / 6);
    if (text.size() != expected) throw GraphError("graph6 length does not match vertex count");

    Graph g(static_cast<int>(n));
    long k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            const int chunk = text[pos + static_cast<std::size_t>(k / 6)] - kBias;
            if ((chunk >> (5 - k % 6)) & 1) g.add_edge(u, v);
        }
    }
    if (k % 6 != 0) {
        const int chunk = text.back() - kBias;
        if ((chunk & ((1 << (6 - k % 6)) - 1)) != 0) throw GraphError("graph6 padding bits not zero");
    }
    return g;
}

nlohmann::json to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw GraphError("graph JSON must have \"n\" and \"edges\"");
    }
    const auto& n = j.at("n");
    if (!n.is_number_integer()) throw GraphError("\"n\" must be an integer");
    Graph g(n.get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw GraphError("each edge must be a pair of integers");
        }
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

}  // namespace turan
