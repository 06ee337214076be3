#include "mlab/segments.hpp"

#include <algorithm>
#include <cmath>

#include "mlab/derivative.hpp"

namespace mlab {

std::vector<IndexRange> segments_above(const std::vector<double>& values, double floor) {
    std::vector<IndexRange> out;
    const std::size_t n = values.size();
    std::size_t i = 0;
    while (i < n) {
        while (i < n && !(values[i] > floor)) ++i;
        if (i == n) break;
        std::size_t begin = i;
        while (i < n && values[i] > floor) ++i;
        out.push_back({begin, i});
    }
    return out;
}

std::vector<std::size_t> node_indices(const std::vector<double>& values, double threshold) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        if (values[i] < threshold && values[i] <= values[i - 1] && values[i] <= values[i + 1])
            nodes.push_back(i);
    }
    return nodes;
}

double node_threshold(const Field& f) {
    double max_slope = 0.0;
    const Field df = derivative(f, 1);
    for (double v : df.values) max_slope = std::max(max_slope, std::abs(v));
    double max_val = 0.0;
    for (double v : f.values) max_val = std::max(max_val, std::abs(v));
    return std::max(3.0 * f.grid.spacing() * max_slope, 1e-13 * max_val);
}

std::vector<IndexRange> node_free_segments(const std::vector<double>& values, double floor,
                                           double node_thresh, std::size_t radius) {
    const std::size_t n = values.size();
    std::vector<bool> excluded(n, false);
    for (std::size_t node : node_indices(values, node_thresh)) {
        const std::size_t lo = node >= radius ? node - radius : 0;
        const std::size_t hi = std::min(n - 1, node + radius);
        for (std::size_t i = lo; i <= hi; ++i) excluded[i] = true;
    }

    std::vector<IndexRange> out;
    std::size_t i = 0;
    while (i < n) {
        while (i < n && (excluded[i] || !(values[i] > floor))) ++i;
        if (i == n) break;
        std::size_t begin = i;
        while (i < n && !excluded[i] && values[i] > floor) ++i;
        out.push_back({begin, i});
    }
    return out;
}

double max_abs_interior(const std::vector<double>& values, std::size_t margin,
                        const std::vector<IndexRange>& segments) {
    const std::size_t n = values.size();
    if (n <= 2 * margin) return 0.0;
    double m = 0.0;
    auto in_segments = [&](std::size_t i) {
        if (segments.empty()) return true;
        return std::any_of(segments.begin(), segments.end(),
                           [&](const IndexRange& r) { return r.contains(i); });
    };
    for (std::size_t i = margin; i + margin < n; ++i) {
        if (in_segments(i)) m = std::max(m, std::abs(values[i]));
    }
    return m;
}

}  // namespace mlab
