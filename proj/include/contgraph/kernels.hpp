#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "contgraph/graph.hpp"
#include "contgraph/grid.hpp"
#include "contgraph/rational.hpp"

// Data-parallel kernels over grid points. Each has a serial reference and an
// OpenMP version that must produce identical output.
namespace contgraph::kernels {

inline constexpr std::int64_t unreachable = std::numeric_limits<std::int64_t>::max();

/// Pairwise grid distances in units of 1/D.
class DistanceTable {
public:
    DistanceTable() = default;
    DistanceTable(int size, std::int64_t denominator)
        : size_(size), denominator_(denominator), data_(static_cast<std::size_t>(size) * size, unreachable) {}

    int size() const { return size_; }
    std::int64_t denominator() const { return denominator_; }

    std::int64_t at(int i, int j) const { return data_[static_cast<std::size_t>(i) * size_ + j]; }
    std::int64_t& at(int i, int j) { return data_[static_cast<std::size_t>(i) * size_ + j]; }

    friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

private:
    int size_ = 0;
    std::int64_t denominator_ = 1;
    std::vector<std::int64_t> data_;
};

/// Distance between two grid sites in units of 1/D.
std::int64_t site_distance(const ContinuousGraph& g, std::int64_t denominator, const GridSite& a, const GridSite& b);

DistanceTable grid_distances_serial(const ContinuousGraph& g, const Grid& grid);
DistanceTable grid_distances_parallel(const ContinuousGraph& g, const Grid& grid);

/// Exact comparison of a table entry (in 1/D units) against a rational threshold.
/// Returns <0, 0, >0 like a three-way compare of units/D against threshold.
int compare_units(std::int64_t units, std::int64_t denominator, const Rational& threshold);

/// Row-major 0/1 matrix: entry (i,j) set iff i != j and distance(i,j) < threshold (strict)
/// or <= threshold (non-strict).
std::vector<std::uint8_t> threshold_matrix_serial(const DistanceTable& table, const Rational& threshold, bool strict);
std::vector<std::uint8_t> threshold_matrix_parallel(const DistanceTable& table, const Rational& threshold, bool strict);

}  // namespace contgraph::kernels
