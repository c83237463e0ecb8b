#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <vector>

namespace dpsm {

using NodeId = std::uint32_t;

struct Edge {
    NodeId u;
    NodeId v;
    double w;
};

/// A neighbor reference inside the adjacency structure.
struct Neighbor {
    NodeId to;
    double w;
};

/// Undirected sparse graph with strictly positive finite edge weights.
/// Each unordered pair is stored once (u < v); adjacency is exposed both
/// ways through a CSR index. Immutable after construction and safe to
/// share read-only across threads.
class WeightedGraph {
public:
    /// Validates and takes ownership of the edge list. Throws
    /// invariant_error on self-loops, duplicate unordered pairs,
    /// non-positive or non-finite weights, or ids >= node_count.
    WeightedGraph(NodeId node_count, std::vector<Edge> edges);

    NodeId node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Canonical edges, u < v, sorted lexicographically.
    std::span<const Edge> edges() const { return edges_; }

    std::span<const Neighbor> neighbors(NodeId v) const {
        return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
    double weighted_degree(NodeId v) const { return weighted_degree_[v]; }

    /// Weight of (u,v), or 0 when the edge does not exist.
    double weight(NodeId u, NodeId v) const;

    bool is_isolated(NodeId v) const { return degree(v) == 0; }

    /// Node ids of every connected component, one sorted vector each,
    /// ordered by smallest member.
    std::vector<std::vector<NodeId>> connected_components() const;

private:
    NodeId node_count_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> adj_;
    std::vector<double> weighted_degree_;
};

/// Parses "u v w" edge lines (0-based ids, positive finite weights).
/// '#'-prefixed lines are ignored. node_count defaults to 1 + max id.
/// Throws input_error with the offending line number on negative or
/// zero weights, self-loops, duplicate unordered pairs, or ids beyond a
/// declared node_count.
WeightedGraph load_edges(std::istream& in, std::optional<NodeId> node_count = std::nullopt);

} // namespace dpsm
