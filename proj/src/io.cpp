#include "balanced/io.hpp"

#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace balanced {

namespace {

struct Line {
    int number;  // 1-based
    std::string_view text;
};

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        ++number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty() && line.front() != '#') out.push_back({number, line});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

// Parses exactly `count` integer fields from the line; nullopt on anything else.
std::optional<std::vector<long long>> parse_fields(std::string_view line, std::size_t count) {
    std::istringstream in{std::string(line)};
    std::vector<long long> fields;
    long long value;
    while (in >> value) fields.push_back(value);
    if (!in.eof()) return std::nullopt;  // non-numeric token
    if (fields.size() != count) return std::nullopt;
    return fields;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.empty())
        throw ParseError(ParseError::Kind::MalformedHeader, 1, "missing header line 'n m s t'");

    auto header = parse_fields(lines[0].text, 4);
    if (!header)
        throw ParseError(ParseError::Kind::MalformedHeader, lines[0].number,
                         "header must be four integers 'n m s t'");
    long long n = (*header)[0], m = (*header)[1], s = (*header)[2], t = (*header)[3];
    if (n < 0 || m < 0)
        throw ParseError(ParseError::Kind::MalformedHeader, lines[0].number,
                         "n and m must be non-negative");
    if (s < 0 || s >= n)
        throw ParseError(ParseError::Kind::OutOfRangeId, lines[0].number,
                         "s out of range: " + std::to_string(s));
    if (t < 0 || t >= n)
        throw ParseError(ParseError::Kind::OutOfRangeId, lines[0].number,
                         "t out of range: " + std::to_string(t));

    if (static_cast<std::size_t>(m) + 1 > lines.size()) {
        int last = lines.back().number;
        throw ParseError(ParseError::Kind::MalformedEdge, last + 1,
                         "expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(lines.size() - 1));
    }
    if (lines.size() > static_cast<std::size_t>(m) + 1) {
        const Line& extra = lines[static_cast<std::size_t>(m) + 1];
        throw ParseError(ParseError::Kind::MalformedEdge, extra.number,
                         "unexpected line after " + std::to_string(m) + " edges");
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::set<std::pair<long long, long long>> seen;
    for (long long i = 0; i < m; ++i) {
        const Line& line = lines[static_cast<std::size_t>(i) + 1];
        auto fields = parse_fields(line.text, 2);
        if (!fields)
            throw ParseError(ParseError::Kind::MalformedEdge, line.number,
                             "edge line must be two integers 'u v'");
        long long u = (*fields)[0], v = (*fields)[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(ParseError::Kind::OutOfRangeId, line.number,
                             "edge endpoint out of range: (" + std::to_string(u) + ", " +
                                 std::to_string(v) + ")");
        if (u == v)
            throw ParseError(ParseError::Kind::SelfLoop, line.number,
                             "self-loop: (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        if (!seen.insert({u, v}).second)
            throw ParseError(ParseError::Kind::DuplicateEdge, line.number,
                             "duplicate directed edge: (" + std::to_string(u) + ", " +
                                 std::to_string(v) + ")");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }

    return Instance(DirectedGraph(static_cast<int>(n), std::move(edges)),
                    static_cast<Vertex>(s), static_cast<Vertex>(t));
}

std::string serialize_instance(const Instance& instance, std::span<const std::string> comments) {
    std::ostringstream out;
    for (const auto& comment : comments) out << "# " << comment << "\n";
    out << instance.graph.vertex_count() << ' ' << instance.graph.edge_count() << ' '
        << instance.s << ' ' << instance.t << '\n';
    for (const auto& [u, v] : instance.graph.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Walk parse_walk(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.empty())
        throw ParseError(ParseError::Kind::MalformedWalk, 1, "missing walk line");
    if (lines.size() > 1)
        throw ParseError(ParseError::Kind::MalformedWalk, lines[1].number,
                         "walk must be a single line of vertex ids");
    std::istringstream in{std::string(lines[0].text)};
    Walk walk;
    long long id;
    while (in >> id) {
        if (id < 0 || id > std::numeric_limits<Vertex>::max())
            throw ParseError(ParseError::Kind::OutOfRangeId, lines[0].number,
                             "vertex id out of range: " + std::to_string(id));
        walk.push_back(static_cast<Vertex>(id));
    }
    if (!in.eof())
        throw ParseError(ParseError::Kind::MalformedWalk, lines[0].number,
                         "walk line must contain only integers");
    if (walk.empty())
        throw ParseError(ParseError::Kind::MalformedWalk, lines[0].number,
                         "walk must contain at least one vertex id");
    return walk;
}

std::string serialize_walk(const Walk& walk) {
    std::ostringstream out;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        if (i) out << ' ';
        out << walk[i];
    }
    out << '\n';
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw std::runtime_error("error reading file: " + path);
    return buffer.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("error writing file: " + path);
}

Instance load_instance(const std::string& path) { return parse_instance(read_text_file(path)); }

Walk load_walk(const std::string& path) { return parse_walk(read_text_file(path)); }

}  // namespace balanced
