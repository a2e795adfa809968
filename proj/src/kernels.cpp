#include "contgraph/kernels.hpp"

#include <algorithm>
#include <array>

namespace contgraph::kernels {

namespace {

struct Anchor {
    int endpoint;
    std::int64_t cost;
};

// Endpoints through which a site leaves its edge, with the cost of getting there.
int anchors_of(const ContinuousGraph& g, std::int64_t denominator, const GridSite& s, std::array<Anchor, 2>& out)
{
    if (s.edge < 0) {
        out[0] = {s.endpoint, 0};
        return 1;
    }
    const Edge& e = g.edge(s.edge);
    out[0] = {e.u, s.step};
    out[1] = {e.v, denominator - s.step};
    return 2;
}

}  // namespace

std::int64_t site_distance(const ContinuousGraph& g, std::int64_t denominator, const GridSite& a, const GridSite& b)
{
    std::int64_t best = unreachable;
    if (a.edge >= 0 && a.edge == b.edge)
        best = a.step > b.step ? a.step - b.step : b.step - a.step;
    std::array<Anchor, 2> pa{}, pb{};
    int na = anchors_of(g, denominator, a, pa);
    int nb = anchors_of(g, denominator, b, pb);
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j) {
            int h = g.hops(pa[i].endpoint, pb[j].endpoint);
            if (h == ContinuousGraph::unreachable)
                continue;
            best = std::min(best, pa[i].cost + denominator * h + pb[j].cost);
        }
    }
    return best;
}

DistanceTable grid_distances_serial(const ContinuousGraph& g, const Grid& grid)
{
    DistanceTable table(grid.size(), grid.denominator());
    for (int i = 0; i < grid.size(); ++i)
        for (int j = 0; j < grid.size(); ++j)
            table.at(i, j) = site_distance(g, grid.denominator(), grid.site(i), grid.site(j));
    return table;
}

DistanceTable grid_distances_parallel(const ContinuousGraph& g, const Grid& grid)
{
    DistanceTable table(grid.size(), grid.denominator());
    const int size = grid.size();
    const std::int64_t den = grid.denominator();
#pragma omp parallel for schedule(static)
    for (int i = 0; i < size; ++i) {
        for (int j = i; j < size; ++j) {
            std::int64_t d = site_distance(g, den, grid.site(i), grid.site(j));
            table.at(i, j) = d;
            table.at(j, i) = d;
        }
    }
    return table;
}

int compare_units(std::int64_t units, std::int64_t denominator, const Rational& threshold)
{
    if (units == unreachable)
        return 1;
    __int128 lhs = static_cast<__int128>(units) * threshold.denominator_i64();
    __int128 rhs = static_cast<__int128>(threshold.numerator_i64()) * denominator;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

namespace {

bool passes(std::int64_t units, std::int64_t den, std::int64_t tnum, std::int64_t tden, bool strict)
{
    if (units == unreachable)
        return false;
    __int128 lhs = static_cast<__int128>(units) * tden;
    __int128 rhs = static_cast<__int128>(tnum) * den;
    return strict ? lhs < rhs : lhs <= rhs;
}

}  // namespace

std::vector<std::uint8_t> threshold_matrix_serial(const DistanceTable& table, const Rational& threshold, bool strict)
{
    const int size = table.size();
    const std::int64_t tnum = threshold.numerator_i64();
    const std::int64_t tden = threshold.denominator_i64();
    std::vector<std::uint8_t> out(static_cast<std::size_t>(size) * size, 0);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            if (i != j && passes(table.at(i, j), table.denominator(), tnum, tden, strict))
                out[static_cast<std::size_t>(i) * size + j] = 1;
    return out;
}

std::vector<std::uint8_t> threshold_matrix_parallel(const DistanceTable& table, const Rational& threshold, bool strict)
{
    const int size = table.size();
    const std::int64_t tnum = threshold.numerator_i64();
    const std::int64_t tden = threshold.denominator_i64();
    const std::int64_t den = table.denominator();
    std::vector<std::uint8_t> out(static_cast<std::size_t>(size) * size, 0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            if (i != j && passes(table.at(i, j), den, tnum, tden, strict))
                out[static_cast<std::size_t>(i) * size + j] = 1;
    return out;
}

}  // namespace contgraph::kernels
