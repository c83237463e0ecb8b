#pragma once

#include "dpsm/density.hpp"
#include "dpsm/knn.hpp"
#include "dpsm/merge.hpp"
#include "dpsm/partition.hpp"
#include "dpsm/point_set.hpp"
#include "dpsm/weighted_graph.hpp"

#include <cstdint>
#include <vector>

namespace dpsm {

/// End-to-end configuration. The defaults reproduce the reference
/// protocol: k = 20, sigma_scale = 0.1, product kernel, 100 propagation
/// iterations, auto termination at half drop, 5% pruning, nearest
/// remainder assignment.
struct PipelineConfig {
    KnnParams knn;
    std::size_t iterations = 100;
    double lazy = 0.0;
    MergeOptions merge;
    RemainderPolicy remainder = RemainderPolicy::nearest;
};

struct PipelineResult {
    DensityRank rank;
    PartitionState initial_partition;
    PartitionState final_partition;
    MergeTrace trace;
    std::vector<std::int64_t> labels;
    std::size_t clusters_found = 0;
    std::size_t noise_count = 0;
};

/// density -> partition -> merge -> remainder over a prebuilt graph.
PipelineResult run_pipeline(const WeightedGraph& graph, const PipelineConfig& config);

/// Builds the kNN graph first, then runs the graph pipeline.
PipelineResult run_pipeline(const PointSet& points, const PipelineConfig& config);

} // namespace dpsm
