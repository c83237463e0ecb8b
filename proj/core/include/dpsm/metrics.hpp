#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dpsm {

/// Joint counts of (true class, predicted cluster) with marginals.
struct ContingencyTable {
    std::vector<std::size_t> counts; // row-major, rows = true classes
    std::vector<std::size_t> row_marginals;
    std::vector<std::size_t> col_marginals;
    std::size_t total = 0;

    std::size_t rows() const { return row_marginals.size(); }
    std::size_t cols() const { return col_marginals.size(); }
    std::size_t at(std::size_t i, std::size_t j) const { return counts[i * cols() + j]; }

    /// Builds the table from parallel label vectors; positions where
    /// either label is -1 are excluded pairwise unless noise_as_cluster.
    /// Throws metric_undefined_error when nothing survives exclusion.
    static ContingencyTable from_labels(std::span<const std::int64_t> truth,
                                        std::span<const std::int64_t> pred,
                                        bool noise_as_cluster = false);
};

struct MetricOptions {
    bool noise_as_cluster = false;
};

/// Harmonic mean of homogeneity and completeness (natural-log entropies).
double v_measure(std::span<const std::int64_t> truth, std::span<const std::int64_t> pred,
                 const MetricOptions& opts = {});

/// Hubert-Arabie adjusted Rand index.
double adjusted_rand_index(std::span<const std::int64_t> truth,
                           std::span<const std::int64_t> pred,
                           const MetricOptions& opts = {});

/// AMI with the exact hypergeometric expected-MI correction and
/// max-entropy normalization.
double adjusted_mutual_info(std::span<const std::int64_t> truth,
                            std::span<const std::int64_t> pred,
                            const MetricOptions& opts = {});

/// Expected mutual information of two fixed marginal vectors under the
/// permutation (hypergeometric) model. Exposed for the oracle suite.
double expected_mutual_info(std::span<const std::size_t> row_marginals,
                            std::span<const std::size_t> col_marginals);

struct MetricReport {
    double vm = 0.0;
    double ari = 0.0;
    double ami = 0.0;
    std::size_t clusters_found = 0; // distinct non-noise predicted labels
    double noise_fraction = 0.0;    // fraction of pred labels equal to -1
    std::size_t excluded = 0;       // pairs dropped from the metric computation
};

MetricReport evaluate_labels(std::span<const std::int64_t> truth,
                             std::span<const std::int64_t> pred,
                             const MetricOptions& opts = {});

} // namespace dpsm
