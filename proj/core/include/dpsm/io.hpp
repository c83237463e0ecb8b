#pragma once

#include "dpsm/density.hpp"
#include "dpsm/merge.hpp"
#include "dpsm/partition.hpp"
#include "dpsm/point_set.hpp"

#include <cstdint>
#include <istream>
#include <ostream>
#include <vector>

namespace dpsm {

/// Point file: comma-separated features per row, label appended as the
/// last column when present. Floats are written round-trippable.
void write_points(std::ostream& out, const PointSet& points);

/// "node_id,label" per line, -1 for noise.
void write_labels(std::ostream& out, std::span<const std::int64_t> labels);

/// Accepts either single-column label files or the "node_id,label" form
/// written by write_labels; '#' comment lines are skipped.
std::vector<std::int64_t> read_labels(std::istream& in);

/// "node_id f_value rank" per line.
void write_density_dump(std::ostream& out, const DensityRank& rank);

/// "node_id status roots" with status ROOT/MEMBER/MARGIN/GRAY. Margin
/// nodes list every root whose margin set contains them (comma-joined);
/// gray nodes show -1.
void write_partition_dump(std::ostream& out, const PartitionState& state);

/// "step,root_a,root_b,clucut,clusters_after" per merge record.
void write_trace(std::ostream& out, const MergeTrace& trace);

} // namespace dpsm
