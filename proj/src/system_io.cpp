#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "tripart/errors.hpp"
#include "tripart/triple_system.hpp"

namespace tripart {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_int(std::string_view tok, long long& out) {
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

} // namespace

TripleSystem parse_system(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::size_t start = 0; start <= text.size();) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    // Trailing blank lines are tolerated.
    while (!lines.empty() && split_ws(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw ParseError(1, "missing header \"n m\"");

    const auto header = split_ws(lines[0]);
    long long n = 0;
    long long m = 0;
    if (header.size() != 2 || !parse_int(header[0], n) || !parse_int(header[1], m)) {
        throw ParseError(1, "malformed header, expected \"n m\"");
    }
    if (n < 0 || n > kMaxVertices) throw ParseError(1, "vertex count out of range 0.." + std::to_string(kMaxVertices));
    if (m < 0 || static_cast<std::size_t>(m) > triple_slots(static_cast<int>(n))) {
        throw ParseError(1, "edge count exceeds C(n,3)");
    }
    if (lines.size() - 1 != static_cast<std::size_t>(m)) {
        throw ParseError(lines.size(), "header announces " + std::to_string(m) + " edges, found " +
                                           std::to_string(lines.size() - 1));
    }

    std::vector<Triple> edges;
    std::vector<bool> seen(triple_slots(static_cast<int>(n)), false);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto toks = split_ws(lines[i]);
        if (toks.size() != 3) throw ParseError(i + 1, "edge line must hold exactly three vertices");
        long long v[3];
        for (int k = 0; k < 3; ++k) {
            if (!parse_int(toks[static_cast<std::size_t>(k)], v[k])) throw ParseError(i + 1, "vertex is not an integer");
            if (v[k] < 1 || v[k] > n) {
                throw ParseError(i + 1, "vertex " + std::to_string(v[k]) + " out of range 1.." + std::to_string(n));
            }
        }
        if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) {
            throw ParseError(i + 1, "edge is not 3-uniform (repeated vertex)");
        }
        const Triple t = Triple::of(static_cast<Vertex>(v[0] - 1), static_cast<Vertex>(v[1] - 1),
                                    static_cast<Vertex>(v[2] - 1));
        const std::size_t r = triple_rank(t);
        if (seen[r]) throw ParseError(i + 1, "duplicate edge " + to_string(t));
        seen[r] = true;
        edges.push_back(t);
    }
    return TripleSystem(static_cast<int>(n), edges);
}

std::string serialize_system(const TripleSystem& h) {
    std::ostringstream os;
    os << h.order() << ' ' << h.size() << '\n';
    for (const Triple& t : h.edges()) os << t.a + 1 << ' ' << t.b + 1 << ' ' << t.c + 1 << '\n';
    return os.str();
}

TripleSystem read_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
}

void write_system_file(const std::string& path, const TripleSystem& h) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_system(h);
}

} // namespace tripart
