#include "streamcd/edge_stream.hpp"

#include <cctype>
#include <charconv>

#include "streamcd/rng.hpp"

namespace streamcd {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

std::size_t skip_spaces(std::string_view s, std::size_t pos) {
    while (pos < s.size() && is_space(s[pos]))
        ++pos;
    return pos;
}

NodeId parse_node_id(std::string_view s, std::size_t &pos) {
    NodeId value = 0;
    const char *begin = s.data() + pos;
    const char *end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin)
        throw ParseError("expected a non-negative integer node id");
    if (ptr != end && !is_space(*ptr))
        throw ParseError("malformed node id token");
    if (value >= kDummyRoot)
        throw ParseError("node id out of range");
    pos += static_cast<std::size_t>(ptr - begin);
    return value;
}

} // namespace

ParsedLine parse_edge_line(std::string_view line) {
    std::size_t pos = skip_spaces(line, 0);
    if (pos == line.size() || line[pos] == '#')
        return {LineKind::skipped, {}};

    EdgeRecord e;
    e.u = parse_node_id(line, pos);
    pos = skip_spaces(line, pos);
    if (pos == line.size())
        throw ParseError("expected two node ids, got one");
    e.v = parse_node_id(line, pos);
    pos = skip_spaces(line, pos);
    if (pos != line.size())
        throw ParseError("trailing tokens after the two node ids");

    if (e.u == e.v)
        return {LineKind::self_loop, e};
    return {LineKind::edge, e};
}

EdgeStreamReader::EdgeStreamReader(const std::filesystem::path &path)
    : path_(path), in_(path) {
    if (!in_)
        throw std::runtime_error("cannot open edge stream: " + path.string());
}

std::optional<EdgeRecord> EdgeStreamReader::next() {
    while (std::getline(in_, line_)) {
        ++lines_read_;
        ParsedLine parsed;
        try {
            parsed = parse_edge_line(line_);
        } catch (const ParseError &err) {
            throw ParseError(path_.string() + ":" + std::to_string(lines_read_) + ": " +
                             err.what());
        }
        switch (parsed.kind) {
        case LineKind::edge:
            ++edges_read_;
            return parsed.edge;
        case LineKind::self_loop:
            ++self_loops_;
            break;
        case LineKind::skipped:
            break;
        }
    }
    if (in_.bad())
        throw std::runtime_error("I/O error while reading " + path_.string());
    return std::nullopt;
}

std::vector<EdgeRecord> read_edge_list(const std::filesystem::path &path) {
    EdgeStreamReader reader(path);
    std::vector<EdgeRecord> edges;
    while (auto e = reader.next())
        edges.push_back(*e);
    return edges;
}

void write_edge_list(const std::filesystem::path &path, const std::vector<EdgeRecord> &edges) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output: " + path.string());
    for (const EdgeRecord &e : edges)
        out << e.u << '\t' << e.v << '\n';
    out.flush();
    if (!out)
        throw std::runtime_error("I/O error while writing " + path.string());
}

std::uint64_t shuffle_stream(const std::filesystem::path &input, std::uint64_t seed,
                             const std::filesystem::path &output) {
    std::vector<EdgeRecord> edges = read_edge_list(input);
    SeededRng rng(seed);
    rng.shuffle(edges);
    write_edge_list(output, edges);
    return edges.size();
}

} // namespace streamcd
