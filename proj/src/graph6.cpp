#include "specrig/graph6.hpp"

#include <fstream>

#include "specrig/errors.hpp"

namespace specrig {

namespace {

constexpr int kMaxOrder = 10000;
constexpr char kHeader[] = ">>graph6<<";

} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.n();
    if (n > kMaxOrder) throw parameter_error("graph too large for graph6 output");
    std::string s;
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else {
        s.push_back(126);
        s.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        s.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        s.push_back(static_cast<char>((n & 0x3f) + 63));
    }
    int group = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                s.push_back(static_cast<char>(group + 63));
                group = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) s.push_back(static_cast<char>((group << (6 - nbits)) + 63));
    return s;
}

Graph from_graph6(const std::string& line) {
    size_t pos = 0;
    if (line.rfind(kHeader, 0) == 0) pos = sizeof(kHeader) - 1;
    const auto next = [&]() -> int {
        if (pos >= line.size()) throw parse_error("truncated graph6 string");
        unsigned char c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126) throw parse_error("invalid graph6 byte");
        return c - 63;
    };

    long n;
    int first = next();
    if (first < 63) {
        n = first;
    } else { // first == 63, i.e. byte 126
        int a = next();
        if (a == 63) throw parse_error("graph6 order beyond supported range");
        n = (static_cast<long>(a) << 12) | (next() << 6) | next();
    }
    if (n > kMaxOrder) throw parse_error("graph6 order beyond supported range");

    std::vector<Edge> edges;
    int group = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (nbits == 0) {
                group = next();
                nbits = 6;
            }
            if (group & (1 << (nbits - 1))) edges.push_back({u, v});
            --nbits;
        }
    }
    if (nbits > 0 && (group & ((1 << nbits) - 1)) != 0)
        throw parse_error("nonzero padding bits in graph6 string");
    if (pos != line.size()) throw parse_error("trailing bytes after graph6 string");
    return Graph(static_cast<int>(n), std::move(edges));
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == kHeader) continue;
        try {
            out.push_back(from_graph6(line));
        } catch (const parse_error& e) {
            throw parse_error(std::string(e.what()), lineno);
        }
    }
    return out;
}

} // namespace specrig
