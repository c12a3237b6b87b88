#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "streamcd/types.hpp"

namespace streamcd {

// Ground-truth communities, one per file line, whitespace-separated node ids.
struct CommunityTable {
    std::vector<NodeList> communities; // each sorted ascending, duplicates removed
    std::string source;
};

// Keeps communities with at least min_size distinct members, in file order.
CommunityTable load_communities(const std::filesystem::path &path, std::size_t min_size = 20);

struct TestCase {
    std::size_t community_index = 0; // position in the CommunityTable
    NodeList truth;                  // the full ground-truth community, sorted
    NodeList queries;                // q distinct members, sorted
};

// min(n, |table|) distinct communities chosen uniformly without replacement,
// each with q distinct member nodes as queries. Deterministic for a fixed seed.
std::vector<TestCase> select_test_cases(const CommunityTable &table, std::size_t n, std::size_t q,
                                        std::uint64_t seed);

// JSON-lines test-case file: {"community_index":i,"truth":[...],"queries":[...]}
void write_test_cases(const std::filesystem::path &path, const std::vector<TestCase> &cases);
std::vector<TestCase> read_test_cases(const std::filesystem::path &path);

} // namespace streamcd
