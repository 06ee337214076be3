#pragma once

#include <cstddef>
#include <vector>

#include "mlab/grid.hpp"

namespace mlab {

/// Half-open index range [begin, end).
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t length() const { return end - begin; }
    bool contains(std::size_t i) const { return i >= begin && i < end; }
};

/// Maximal runs of indices where values[i] > floor.
std::vector<IndexRange> segments_above(const std::vector<double>& values, double floor);

/// Interior strict local minima with value below threshold. For a sampled
/// amplitude or density this locates nodes, including nodes that fall between
/// grid points (the adjacent sample is a small local minimum).
std::vector<std::size_t> node_indices(const std::vector<double>& values, double threshold);

/// Node-detection threshold for a nonnegative field: a node between samples
/// leaves a local minimum no larger than ~(spacing/2)*max|f'|; 3x that with a
/// small absolute floor catches it without flagging smooth interior minima.
double node_threshold(const Field& f);

/// Runs where values > floor, with `radius` points dropped around every node.
/// Stencil results within reach of a zero crossing are unusable; the default
/// radius of 3 keeps 5-point stencils clear of it.
std::vector<IndexRange> node_free_segments(const std::vector<double>& values, double floor,
                                           double node_thresh, std::size_t radius = 3);

/// Largest |values[i]| over [margin, n - margin) restricted to the given
/// segments (all indices when segments is empty).
double max_abs_interior(const std::vector<double>& values, std::size_t margin,
                        const std::vector<IndexRange>& segments = {});

}  // namespace mlab
