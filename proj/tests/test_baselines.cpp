#include "doctest.h"

#include <algorithm>

#include "contgraph/baselines.hpp"
#include "oracles.hpp"

using namespace contgraph;

namespace {

CombinatorialGraph comb(const char* family, int n)
{
    return CombinatorialGraph(generate(family, n));
}

}  // namespace

TEST_CASE("alpha and beta on named graphs")
{
    for (int n = 2; n <= 8; ++n) {
        CHECK(alpha_exact(comb("complete", n)) == 1);
        CHECK(beta_exact(comb("complete", n)) == n - 1);
    }
    CHECK(alpha_exact(comb("envelope", 0)) == 2);
    CHECK(beta_exact(comb("envelope", 0)) == 4);
    CHECK(alpha_exact(comb("empty", 5)) == 5);
    CHECK(beta_exact(comb("empty", 5)) == 0);
}

TEST_CASE("chromatic number")
{
    CHECK(chi_exact(comb("complete", 4)) == 4);
    CHECK(chi_exact(comb("cycle", 4)) == 2);
    CHECK(chi_exact(comb("cycle", 5)) == 3);
    CHECK(chi_exact(comb("empty", 3)) == 1);
}

TEST_CASE("maximum matching")
{
    CHECK(max_matching(comb("complete", 6)).size() == 3);
    CHECK(max_matching(comb("star", 4)).size() == 1);
    CHECK(max_matching(comb("path", 2)).size() == 1);
    // odd cycle with a pendant path needs a blossom
    CombinatorialGraph blossom(6);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {0, 5}})
        blossom.add_edge(u, v);
    CHECK(max_matching(blossom).size() == 3);
}

TEST_CASE("treewidth")
{
    CHECK(treewidth_exact(comb("path", 5)) == 1);
    CHECK(treewidth_exact(comb("star", 6)) == 1);
    CHECK(treewidth_exact(comb("cycle", 3)) == 2);
    CHECK(treewidth_exact(comb("complete", 4)) == 3);
    CHECK_THROWS_AS(treewidth_exact(comb("path", 11)), CapExceeded);
    CHECK_THROWS_AS(alpha_exact(comb("path", 21)), CapExceeded);
}

TEST_CASE("baselines equal enumeration on every graph with n <= 5 (oracle)")
{
    for (int n = 1; n <= 5; ++n)
        for (const ContinuousGraph& g : oracle::all_graphs(n)) {
            CombinatorialGraph cg(g);
            const int a = alpha_exact(cg), b = beta_exact(cg);
            REQUIRE(a == oracle::alpha(cg));
            REQUIRE(b == oracle::beta(cg));
            REQUIRE(a + b == n);
            REQUIRE(chi_exact(cg) == oracle::chi(cg));
            REQUIRE(treewidth_exact(cg) == oracle::treewidth(cg));

            auto m = max_matching(cg);
            REQUIRE(static_cast<int>(m.size()) == oracle::matching(cg));
            std::vector<int> used;
            for (const Edge& e : m) {
                REQUIRE(cg.adjacent(e.u, e.v));
                used.push_back(e.u);
                used.push_back(e.v);
            }
            std::sort(used.begin(), used.end());
            REQUIRE(std::adjacent_find(used.begin(), used.end()) == used.end());
            REQUIRE(static_cast<int>(m.size()) <= b);
            REQUIRE(b <= 2 * static_cast<int>(m.size()));

            // complement of a maximum independent set covers every edge
            auto indep = max_independent_vertices(cg);
            for (const Edge& e : cg.edges())
                REQUIRE_FALSE((std::count(indep.begin(), indep.end(), e.u) && std::count(indep.begin(), indep.end(), e.v)));
        }
}

TEST_CASE("matching on larger graphs matches enumeration up to 12 vertices (oracle)")
{
    for (int n = 6; n <= 12; n += 2) {
        CombinatorialGraph cyc = comb("cycle", n + 1);
        REQUIRE(static_cast<int>(max_matching(cyc).size()) == n / 2);
    }
    CombinatorialGraph k = comb("complete", 7);
    CHECK(static_cast<int>(max_matching(k).size()) == 3);
    CombinatorialGraph two_triangles(6);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}})
        two_triangles.add_edge(u, v);
    CHECK(static_cast<int>(max_matching(two_triangles).size()) == oracle::matching(two_triangles));
}
