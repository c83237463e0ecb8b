#pragma once

#include "dpsm/weighted_graph.hpp"

#include <span>
#include <vector>

namespace dpsm {

/// Column-normalized propagation weights: p_ij = w(j,i) / sum_t w(j,t)
/// for every edge, 0 elsewhere. Stored row-compressed so that applying
/// the matrix to a density vector gathers each node's incoming mass.
/// Nonzero columns sum to 1; the diagonal is zero; isolated nodes have
/// empty rows and columns and are flagged.
class PropagationMatrix {
public:
    std::size_t size() const { return offsets_.size() - 1; }
    std::size_t entry_count() const { return cols_.size(); }

    std::span<const NodeId> row_cols(NodeId i) const {
        return {cols_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }
    std::span<const double> row_values(NodeId i) const {
        return {values_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }

    std::span<const NodeId> isolated() const { return isolated_; }

    /// out = P * in. Isolated rows receive zero; the propagate() driver is
    /// responsible for their retention rule.
    void apply(std::span<const double> in, std::span<double> out) const;

    friend PropagationMatrix propagation_matrix(const WeightedGraph& graph);

private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> cols_;
    std::vector<double> values_;
    std::vector<NodeId> isolated_;
};

/// Throws input_error when the graph has no edges.
PropagationMatrix propagation_matrix(const WeightedGraph& graph);

/// Iterates f <- lazy * f + (1 - lazy) * P f from f = all-ones. The
/// paper's pure update is lazy = 0; lazy in (0,1) damps the period-2
/// oscillation of bipartite graphs without moving the fixed point.
/// Isolated nodes keep their mass unchanged at every step, so total mass
/// is conserved. Throws input_error unless 0 <= lazy < 1.
std::vector<double> propagate(const PropagationMatrix& P, std::size_t iterations,
                              double lazy = 0.0);

/// Densities plus the strict total order they induce: descending f,
/// ties broken by ascending node id. order[0] is the densest node and
/// rank is its inverse (rank[order[p]] == p).
struct DensityRank {
    std::vector<double> f;
    std::vector<NodeId> order;
    std::vector<std::uint32_t> rank;

    std::size_t size() const { return f.size(); }
    bool denser(NodeId u, NodeId v) const { return rank[u] < rank[v]; }
};

DensityRank density_order(std::vector<double> f);

} // namespace dpsm
