#pragma once

#include "dpsm/point_set.hpp"
#include "dpsm/weighted_graph.hpp"

namespace dpsm {

/// Similarity kernel applied to Euclidean distances before row
/// normalization. `product` is exp(-sigma * d) with sigma = sigma_scale *
/// d_max; `ratio` is the conventional exp(-d / sigma) and is invariant
/// under uniform coordinate scaling.
enum class KernelForm { product, ratio };

struct KnnParams {
    std::size_t k = 20;
    double sigma_scale = 0.1;
    KernelForm kernel = KernelForm::product;
};

/// Builds the symmetrized weighted kNN graph: per-row kernel values are
/// normalized over each node's k nearest neighbors (ties at the k-th
/// distance broken by smaller node index) and combined as
/// w = a~(i,j) + a~(j,i) - a~(i,j) * a~(j,i). Edges below 1e-12 are
/// dropped. Throws input_error unless 1 <= k < n and sigma_scale > 0.
WeightedGraph knn_graph(const PointSet& points, const KnnParams& params = {});

/// Maximum pairwise distance. Exact scan for n <= 20000; beyond that the
/// diameter of a fixed 1000-point sample is used as an approximation.
double max_pairwise_distance(const PointSet& points);

} // namespace dpsm
