#include "dpsm/point_set.hpp"

#include "dpsm/error.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

namespace dpsm {

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#';
    }
    return true;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

double parse_finite_double(const std::string& tok, std::size_t row) {
    double v{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
        throw input_error("row " + std::to_string(row) + ": field '" + tok +
                          "' is not a finite number");
    }
    return v;
}

std::int64_t parse_label(const std::string& tok, std::size_t row) {
    std::int64_t v{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw input_error("row " + std::to_string(row) + ": label '" + tok +
                          "' is not an integer");
    }
    return v;
}

} // namespace

PointSet::PointSet(std::size_t dim, std::vector<double> coords,
                   std::optional<std::vector<std::int64_t>> labels)
    : dim_(dim), coords_(std::move(coords)), labels_(std::move(labels)) {
    if (dim_ == 0 || coords_.empty() || coords_.size() % dim_ != 0) {
        throw invariant_error("PointSet: n >= 1 and d >= 1 required");
    }
    for (double c : coords_) {
        if (!std::isfinite(c)) throw invariant_error("PointSet: non-finite coordinate");
    }
    if (labels_ && labels_->size() != size()) {
        throw invariant_error("PointSet: label count does not match point count");
    }
}

PointSet load_points(std::istream& in, std::optional<int> label_column) {
    std::vector<double> coords;
    std::vector<std::int64_t> labels;
    std::size_t columns = 0;
    std::size_t label_index = 0;
    bool with_labels = false;
    std::size_t row = 0;

    std::string line;
    while (std::getline(in, line)) {
        if (is_comment_or_blank(line)) continue;
        ++row;
        auto fields = split_fields(line);
        if (columns == 0) {
            columns = fields.size();
            if (label_column) {
                int idx = *label_column;
                if (idx < 0) idx += static_cast<int>(columns);
                if (idx < 0 || idx >= static_cast<int>(columns)) {
                    throw input_error("label column " + std::to_string(*label_column) +
                                      " out of range for " + std::to_string(columns) +
                                      " columns");
                }
                if (columns == 1) throw input_error("label column leaves no feature columns");
                label_index = static_cast<std::size_t>(idx);
                with_labels = true;
            }
        } else if (fields.size() != columns) {
            throw input_error("row " + std::to_string(row) + ": expected " +
                              std::to_string(columns) + " columns, got " +
                              std::to_string(fields.size()));
        }
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (with_labels && c == label_index) {
                labels.push_back(parse_label(fields[c], row));
            } else {
                coords.push_back(parse_finite_double(fields[c], row));
            }
        }
    }
    if (row == 0) throw input_error("empty input: no data rows");

    std::size_t dim = columns - (with_labels ? 1 : 0);
    return PointSet(dim, std::move(coords),
                    with_labels ? std::optional(std::move(labels)) : std::nullopt);
}

} // namespace dpsm
