#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <vector>

namespace dpsm {

/// Row-major matrix of n points in d dimensions, optionally carrying
/// ground-truth labels (evaluation only, never consumed by clustering).
class PointSet {
public:
    PointSet(std::size_t dim, std::vector<double> coords,
             std::optional<std::vector<std::int64_t>> labels = std::nullopt);

    std::size_t size() const { return coords_.size() / dim_; }
    std::size_t dim() const { return dim_; }

    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * dim_, dim_};
    }
    const std::vector<double>& coords() const { return coords_; }

    bool has_labels() const { return labels_.has_value(); }
    const std::vector<std::int64_t>& labels() const { return *labels_; }

private:
    std::size_t dim_;
    std::vector<double> coords_;
    std::optional<std::vector<std::int64_t>> labels_;
};

/// Parses delimiter-separated text (comma or whitespace), one point per row.
/// Lines whose first non-blank character is '#' are ignored. When
/// `label_column` is given that column is stripped from the features and
/// stored as integer labels; a negative index counts from the end (-1 =
/// last column).
///
/// Throws input_error naming the offending data row on malformed input,
/// and on empty input.
PointSet load_points(std::istream& in, std::optional<int> label_column = std::nullopt);

} // namespace dpsm
