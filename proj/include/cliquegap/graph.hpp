#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliquegap/errors.hpp"
#include "cliquegap/linalg.hpp"

namespace cg {

using VertexId = std::uint32_t;

// k-partite graph with cross-part edges only; every part is an independent
// set by construction (add_edge rejects intra-part pairs).
class PartitionedGraph {
public:
    explicit PartitionedGraph(std::size_t k = 0) : parts_(k) {}

    std::size_t part_count() const { return parts_.size(); }
    std::size_t vertex_count() const { return part_of_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::vector<VertexId>>& parts() const { return parts_; }

    void add_vertex(std::size_t part, VertexId id);
    void add_edge(VertexId a, VertexId b);

    bool has_vertex(VertexId id) const;
    bool has_edge(VertexId a, VertexId b) const;
    std::size_t part_of(VertexId id) const;

    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    std::vector<std::pair<std::string, std::string>> metadata;

private:
    std::vector<std::vector<VertexId>> parts_;
    std::vector<std::pair<VertexId, VertexId>> edges_; // stored as (min, max)
    // Dense bookkeeping for adjacency tests.
    std::vector<VertexId> ids_;                  // dense -> id
    std::vector<std::size_t> part_of_;           // dense -> part
    std::vector<std::vector<bool>> adj_;         // dense x dense
    std::size_t dense_of(VertexId id) const;
    std::vector<std::int64_t> id_to_dense_;      // id -> dense (-1 when absent)

    friend struct CliqueSearch;
};

struct CliqueResult {
    std::uint64_t size = 0;
    std::vector<VertexId> witness; // ascending ids
    std::uint64_t nodes_explored = 0;
};

// Exact maximum clique by branch and bound over parts (at most one vertex
// per part, parts visited smallest first). Throws BudgetExceeded carrying
// the best size found when the node budget runs out.
CliqueResult max_clique(const PartitionedGraph& g, std::uint64_t node_budget = 10'000'000);

// Text format:
//   p kclique <k> <total_vertices> <edges>
//   v <part> <id>          (parts are 0-based)
//   e <id> <id>
//   m <key> <value...>
// serialize_graph emits the canonical form: v lines grouped by part with ids
// ascending, e lines sorted with the smaller endpoint first.
PartitionedGraph parse_graph(const std::string& text);
std::string serialize_graph(const PartitionedGraph& g);

} // namespace cg
