#include <string>
#include <vector>

#include "clut/errors.hpp"
#include "clut/graph.hpp"

namespace clut {

// graph6: byte 0 encodes n as chr(n+63) for 0 <= n <= 62; the long form for
// 63 <= n <= 258047 starts with chr(126) followed by three bytes holding n in
// 6-bit groups, most significant first.  The upper triangle bits x(0,1),
// x(0,2), x(1,2), x(0,3), ... follow in 6-bit groups, each stored as
// chr(group+63), zero-padded to a multiple of 6.

namespace {
[[noreturn]] void parse_fail(const std::string& line, size_t offset, const std::string& what) {
    throw InputError("graph6 parse error at byte " + std::to_string(offset) + ": " + what +
                     " (line \"" + line + "\")");
}
} // namespace

Graph from_graph6(const std::string& line) {
    if (line.empty()) parse_fail(line, 0, "empty line");
    size_t head = 1;
    int n;
    unsigned char c0 = static_cast<unsigned char>(line[0]);
    if (c0 == 126) {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
            parse_fail(line, 1, "graphs beyond 258047 vertices are not supported");
        if (line.size() < 4) parse_fail(line, line.size(), "truncated long-form vertex count");
        n = 0;
        for (size_t i = 1; i < 4; ++i) {
            unsigned char ch = static_cast<unsigned char>(line[i]);
            if (ch < 63 || ch > 126) parse_fail(line, i, "byte outside graph6 range [63,126]");
            n = (n << 6) | (ch - 63);
        }
        if (n < 63) parse_fail(line, 1, "long form used for a short-form vertex count");
        head = 4;
    } else {
        if (c0 < 63 || c0 > 125) parse_fail(line, 0, "byte outside graph6 range [63,125]");
        n = c0 - 63;
    }
    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t ngroups = (nbits + 5) / 6;
    if (line.size() != head + ngroups)
        parse_fail(line, line.size(),
                   "expected " + std::to_string(head + ngroups) + " bytes for n=" +
                       std::to_string(n) + ", got " + std::to_string(line.size()));
    std::vector<std::pair<int, int>> edges;
    size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            size_t byte_index = head + bit / 6;
            unsigned char ch = static_cast<unsigned char>(line[byte_index]);
            if (ch < 63 || ch > 126) parse_fail(line, byte_index, "byte outside graph6 range [63,126]");
            int group = ch - 63;
            if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    // Padding bits must be zero.
    for (size_t pad = nbits; pad < ngroups * 6; ++pad) {
        size_t byte_index = head + pad / 6;
        int group = static_cast<unsigned char>(line[byte_index]) - 63;
        if ((group >> (5 - pad % 6)) & 1) parse_fail(line, byte_index, "non-zero padding bit");
    }
    return Graph::from_edges(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
    const int n = g.n();
    if (n > 258047)
        throw InputError("graph6 supports at most 258047 vertices, graph has " +
                         std::to_string(n));
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int group = 0, used = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                used = 0;
            }
        }
    }
    if (used) out.push_back(static_cast<char>((group << (6 - used)) + 63));
    return out;
}

} // namespace clut
