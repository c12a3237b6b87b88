#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "streamcd/types.hpp"

namespace streamcd {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class LineKind {
    edge,      // two valid node ids
    skipped,   // comment or blank line
    self_loop, // u == v, dropped but counted by the reader
};

struct ParsedLine {
    LineKind kind = LineKind::skipped;
    EdgeRecord edge;
};

// SNAP ungraph.txt line: two whitespace-separated decimal node ids.
// '#'-prefixed and blank lines are skipped. Throws ParseError on anything else.
ParsedLine parse_edge_line(std::string_view line);

// Sequential line-at-a-time reader; per-line memory only, never the whole file.
class EdgeStreamReader {
public:
    explicit EdgeStreamReader(const std::filesystem::path &path);

    // next non-skipped edge, or nullopt at end of stream
    std::optional<EdgeRecord> next();

    std::uint64_t lines_read() const { return lines_read_; }
    std::uint64_t edges_read() const { return edges_read_; }
    std::uint64_t self_loops_skipped() const { return self_loops_; }
    const std::filesystem::path &path() const { return path_; }

private:
    std::filesystem::path path_;
    std::ifstream in_;
    std::string line_;
    std::uint64_t lines_read_ = 0;
    std::uint64_t edges_read_ = 0;
    std::uint64_t self_loops_ = 0;
};

// In-memory stream source with the same pull interface, for synthetic runs.
class VectorEdgeSource {
public:
    explicit VectorEdgeSource(std::vector<EdgeRecord> edges) : edges_(std::move(edges)) {}

    std::optional<EdgeRecord> next() {
        if (pos_ >= edges_.size())
            return std::nullopt;
        return edges_[pos_++];
    }

    std::size_t position() const { return pos_; }
    void rewind() { pos_ = 0; }

private:
    std::vector<EdgeRecord> edges_;
    std::size_t pos_ = 0;
};

// Whole-file load, skipping comments and self-loops. Offline helper.
std::vector<EdgeRecord> read_edge_list(const std::filesystem::path &path);

// Seeded uniform permutation of the input edges, one "u\tv" line each.
// Offline preprocessing: holds the full edge list in memory and is therefore
// exempt from the streaming budget. Returns the number of edges written.
std::uint64_t shuffle_stream(const std::filesystem::path &input, std::uint64_t seed,
                             const std::filesystem::path &output);

void write_edge_list(const std::filesystem::path &path, const std::vector<EdgeRecord> &edges);

} // namespace streamcd
