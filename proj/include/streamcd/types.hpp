#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace streamcd {

using NodeId = std::uint64_t;
using NodeList = std::vector<NodeId>;

// Reserved sentinel used as the dummy root of the distance tree.
// Input node ids must be strictly smaller; the parser enforces this.
inline constexpr NodeId kDummyRoot = std::numeric_limits<NodeId>::max();

using Hops = std::uint32_t;
inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

// One undirected edge of the stream; (u,v) and (v,u) denote the same edge.
struct EdgeRecord {
    NodeId u = 0;
    NodeId v = 0;

    friend bool operator==(const EdgeRecord &, const EdgeRecord &) = default;
};

} // namespace streamcd
