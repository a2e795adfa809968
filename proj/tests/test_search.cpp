#include "doctest.h"

#include <random>

#include "contgraph/search.hpp"
#include "oracles.hpp"

using namespace contgraph;

namespace {

std::vector<Bitset> random_conflicts(std::mt19937& rng, int k, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Bitset> rows(static_cast<std::size_t>(k), Bitset(k));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (coin(rng)) {
                rows[i].set(j);
                rows[j].set(i);
            }
    return rows;
}

std::vector<Bitset> random_cover(std::mt19937& rng, int candidates, int elements, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Bitset> out;
    for (int e = 0; e < elements; ++e) {
        Bitset b(candidates);
        for (int c = 0; c < candidates; ++c)
            if (coin(rng))
                b.set(c);
        out.push_back(b);
    }
    return out;
}

SearchOptions with_threads(int t)
{
    SearchOptions o;
    o.threads = t;
    return o;
}

}  // namespace

TEST_CASE("bitset basics")
{
    Bitset b(130);
    b.set(0);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 3);
    CHECK(b.next() == 0);
    CHECK(b.next(1) == 64);
    CHECK(b.next(65) == 129);
    CHECK(b.next(130) == -1);
    Bitset all(130);
    all.set_all();
    CHECK(all.count() == 130);
    CHECK(b.is_subset_of(all));
    all.subtract(b);
    CHECK(all.count() == 127);
    CHECK_FALSE(all.intersects(b));
}

TEST_CASE("independent set matches exhaustive search (oracle)")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int k = 1 + trial % 14;
        auto rows = random_conflicts(rng, k, 0.15 + 0.7 * (trial % 5) / 4.0);
        IndependentSetResult res = max_independent_set(rows, with_threads(1));
        REQUIRE(res.status == SearchStatus::optimal);
        REQUIRE(static_cast<int>(res.members.size()) == oracle::mis(rows));
        for (std::size_t a = 0; a < res.members.size(); ++a)
            for (std::size_t b = a + 1; b < res.members.size(); ++b)
                REQUIRE_FALSE(rows[res.members[a]].test(res.members[b]));
    }
}

TEST_CASE("set cover matches exhaustive search (oracle)")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int k = 1 + trial % 12;
        auto elems = random_cover(rng, k, 1 + trial % 20, 0.1 + 0.5 * (trial % 4) / 3.0);
        SetCoverResult res = min_set_cover(k, elems, with_threads(1));
        int expect = oracle::set_cover(k, elems);
        if (expect < 0) {
            REQUIRE(res.status == SearchStatus::infeasible);
            continue;
        }
        REQUIRE(res.status == SearchStatus::optimal);
        REQUIRE(static_cast<int>(res.chosen.size()) == expect);
        for (const Bitset& e : elems) {
            bool hit = false;
            for (int c : res.chosen)
                hit = hit || e.test(c);
            REQUIRE(hit);
        }
    }
}

TEST_CASE("worker count changes neither value nor witness")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto rows = random_conflicts(rng, 30 + trial, 0.3);
        auto one = max_independent_set(rows, with_threads(1));
        auto four = max_independent_set(rows, with_threads(4));
        REQUIRE(one.members == four.members);

        auto elems = random_cover(rng, 24, 40, 0.15);
        auto c1 = min_set_cover(24, elems, with_threads(1));
        auto c4 = min_set_cover(24, elems, with_threads(4));
        REQUIRE(c1.status == c4.status);
        REQUIRE(c1.chosen == c4.chosen);
    }
}

TEST_CASE("node cap yields an incumbent and a bound")
{
    std::mt19937 rng(5);
    auto rows = random_conflicts(rng, 60, 0.5);
    SearchOptions tiny;
    tiny.node_cap = 3;
    tiny.threads = 1;
    auto capped = max_independent_set(rows, tiny);
    auto full = max_independent_set(rows, with_threads(1));
    CHECK(capped.status == SearchStatus::node_cap);
    CHECK(static_cast<int>(capped.members.size()) <= static_cast<int>(full.members.size()));
    CHECK(capped.upper_bound >= static_cast<int>(full.members.size()));

    auto elems = random_cover(rng, 40, 80, 0.1);
    auto ccap = min_set_cover(40, elems, tiny);
    auto cfull = min_set_cover(40, elems, with_threads(1));
    if (cfull.status == SearchStatus::optimal && ccap.status == SearchStatus::node_cap) {
        CHECK(ccap.lower_bound <= static_cast<int>(cfull.chosen.size()));
        CHECK(ccap.chosen.size() >= cfull.chosen.size());
    }
}

TEST_CASE("node cap from the environment")
{
    setenv("CONTGRAPH_NODE_CAP", "1234", 1);
    CHECK(default_node_cap() == 1234);
    unsetenv("CONTGRAPH_NODE_CAP");
    CHECK(default_node_cap() == 50'000'000);
}
