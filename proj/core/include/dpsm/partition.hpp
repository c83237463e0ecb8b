#pragma once

#include "dpsm/density.hpp"
#include "dpsm/weighted_graph.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dpsm {

/// cluster_of value for nodes outside every cluster.
inline constexpr std::int64_t kUnassigned = -1;

/// Root-anchored clusters, their margin sets and the unassigned pool.
/// An unassigned node adjacent to no cluster is "gray": it appears in
/// `unassigned` but in no margin set.
struct PartitionState {
    std::size_t node_count = 0;
    std::vector<NodeId> roots;                       // sorted
    std::vector<std::int64_t> cluster_of;            // node -> root id, or kUnassigned
    std::map<NodeId, std::vector<NodeId>> members;   // root -> sorted member list
    std::map<NodeId, std::vector<NodeId>> margin_sets; // root -> sorted margin nodes
    std::vector<NodeId> unassigned;                  // sorted

    std::size_t cluster_count() const { return roots.size(); }
};

/// Single sweep in descending density. A node with no denser neighbor
/// founds a cluster; a node whose denser neighbors all sit in one cluster
/// joins it; any denser neighbor that is unassigned, or denser neighbors
/// spanning two clusters, leaves the node unassigned. Margin sets are the
/// unassigned neighbors of each cluster.
PartitionState partition(const WeightedGraph& graph, const DensityRank& rank);

struct PropertyCheck {
    bool passed = true;
    std::string witness; // empty when passed
};

/// pass/fail per structural property, with a witness on failure.
struct PropertyReport {
    PropertyCheck cluster_disjointness;   // no node in two clusters, roots in their own
    PropertyCheck margins_outside_clusters;
    PropertyCheck no_intercluster_edge;   // every cluster-to-cluster path crosses unassigned
    PropertyCheck shared_margin_witness;  // per component with >= 2 clusters

    bool all_passed() const {
        return cluster_disjointness.passed && margins_outside_clusters.passed &&
               no_intercluster_edge.passed && shared_margin_witness.passed;
    }
};

/// Re-derives the four properties from the raw member/margin sets, so a
/// corrupted state is caught rather than assumed away.
PropertyReport verify_properties(const PartitionState& state, const WeightedGraph& graph);

} // namespace dpsm
