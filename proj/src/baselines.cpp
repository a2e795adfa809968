#include "contgraph/baselines.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <limits>
#include <string>

#include "contgraph/search.hpp"

namespace contgraph {

namespace {

void check_cap(const CombinatorialGraph& g, int cap, const char* what)
{
    if (g.size() > cap)
        throw CapExceeded(std::string(what) + ": " + std::to_string(g.size()) + " vertices exceeds the cap of " + std::to_string(cap));
}

}  // namespace

CombinatorialGraph::CombinatorialGraph(int n) : n_(n), rows_(static_cast<std::size_t>(n), Bitset(n)) {}

CombinatorialGraph::CombinatorialGraph(const ContinuousGraph& g) : CombinatorialGraph(g.num_endpoints())
{
    for (const Edge& e : g.edges())
        add_edge(e.u, e.v);
}

void CombinatorialGraph::add_edge(int u, int v)
{
    if (u == v)
        throw InvalidInput("self-loop in combinatorial graph");
    rows_[static_cast<std::size_t>(u)].set(v);
    rows_[static_cast<std::size_t>(v)].set(u);
}

std::vector<Edge> CombinatorialGraph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v))
                out.push_back({u, v});
    return out;
}

std::vector<int> max_independent_vertices(const CombinatorialGraph& g, int cap)
{
    check_cap(g, cap, "alpha");
    std::vector<Bitset> rows;
    for (int v = 0; v < g.size(); ++v)
        rows.push_back(g.neighbours(v));
    SearchOptions serial;
    serial.threads = 1;
    return max_independent_set(rows, serial).members;
}

int alpha_exact(const CombinatorialGraph& g, int cap)
{
    return static_cast<int>(max_independent_vertices(g, cap).size());
}

std::vector<int> min_vertex_cover(const CombinatorialGraph& g, int cap)
{
    check_cap(g, cap, "beta");
    std::vector<Bitset> elements;
    for (const Edge& e : g.edges()) {
        Bitset s(g.size());
        s.set(e.u);
        s.set(e.v);
        elements.push_back(std::move(s));
    }
    SearchOptions serial;
    serial.threads = 1;
    return min_set_cover(g.size(), elements, serial).chosen;
}

int beta_exact(const CombinatorialGraph& g, int cap)
{
    int beta = static_cast<int>(min_vertex_cover(g, cap).size());
    int alpha = alpha_exact(g, cap);
    if (alpha + beta != g.size())
        throw std::logic_error("alpha + beta != n: " + std::to_string(alpha) + " + " + std::to_string(beta) + " != " + std::to_string(g.size()));
    return beta;
}

bool colourable(const std::vector<Bitset>& adjacency, int colours, std::vector<int>* assignment)
{
    const int n = static_cast<int>(adjacency.size());
    if (n == 0)
        return true;
    if (colours <= 0)
        return false;
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    std::vector<int> degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        degree[static_cast<std::size_t>(v)] = adjacency[static_cast<std::size_t>(v)].count();

    std::function<bool(int, int)> solve = [&](int coloured, int used) -> bool {
        if (coloured == n)
            return true;
        // DSATUR: most distinct neighbour colours, then highest degree, then lowest id
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[static_cast<std::size_t>(v)] != 0)
                continue;
            std::vector<bool> seen(static_cast<std::size_t>(colours) + 1, false);
            int sat = 0;
            adjacency[static_cast<std::size_t>(v)].for_each([&](int w) {
                int c = colour[static_cast<std::size_t>(w)];
                if (c && !seen[static_cast<std::size_t>(c)]) {
                    seen[static_cast<std::size_t>(c)] = true;
                    ++sat;
                }
            });
            if (sat > pick_sat || (sat == pick_sat && degree[static_cast<std::size_t>(v)] > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = degree[static_cast<std::size_t>(v)];
            }
        }
        const int limit = std::min(colours, used + 1);
        for (int c = 1; c <= limit; ++c) {
            bool clash = false;
            adjacency[static_cast<std::size_t>(pick)].for_each([&](int w) {
                if (colour[static_cast<std::size_t>(w)] == c)
                    clash = true;
            });
            if (clash)
                continue;
            colour[static_cast<std::size_t>(pick)] = c;
            if (solve(coloured + 1, std::max(used, c)))
                return true;
            colour[static_cast<std::size_t>(pick)] = 0;
        }
        return false;
    };

    if (!solve(0, 0))
        return false;
    if (assignment)
        *assignment = colour;
    return true;
}

int chi_exact(const CombinatorialGraph& g, int cap)
{
    check_cap(g, cap, "chi");
    std::vector<Bitset> rows;
    for (int v = 0; v < g.size(); ++v)
        rows.push_back(g.neighbours(v));
    for (int c = 0;; ++c)
        if (colourable(rows, c))
            return c;
}

std::vector<Edge> max_matching(const CombinatorialGraph& g)
{
    const int n = g.size();
    std::vector<int> match(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n)), base(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n)), blossom(static_cast<std::size_t>(n));

    auto at = [](auto& vec, int i) -> decltype(auto) { return vec[static_cast<std::size_t>(i)]; };

    auto lca = [&](int a, int b) {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        while (true) {
            a = at(base, a);
            seen[static_cast<std::size_t>(a)] = true;
            if (at(match, a) == -1)
                break;
            a = at(parent, at(match, a));
        }
        while (true) {
            b = at(base, b);
            if (seen[static_cast<std::size_t>(b)])
                return b;
            b = at(parent, at(match, b));
        }
    };

    auto mark_path = [&](int v, int b, int child) {
        while (at(base, v) != b) {
            blossom[static_cast<std::size_t>(at(base, v))] = true;
            blossom[static_cast<std::size_t>(at(base, at(match, v)))] = true;
            at(parent, v) = child;
            child = at(match, v);
            v = at(parent, at(match, v));
        }
    };

    auto find_path = [&](int root) -> int {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i)
            at(base, i) = i;
        used[static_cast<std::size_t>(root)] = true;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int to = g.neighbours(v).next(); to >= 0; to = g.neighbours(v).next(to + 1)) {
                if (at(base, v) == at(base, to) || at(match, v) == to)
                    continue;
                if (to == root || (at(match, to) != -1 && at(parent, at(match, to)) != -1)) {
                    int cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[static_cast<std::size_t>(at(base, i))]) {
                            at(base, i) = cur;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (at(parent, to) == -1) {
                    at(parent, to) = v;
                    if (at(match, to) == -1)
                        return to;
                    int next = at(match, to);
                    used[static_cast<std::size_t>(next)] = true;
                    queue.push_back(next);
                }
            }
        }
        return -1;
    };

    for (int root = 0; root < n; ++root) {
        if (at(match, root) != -1)
            continue;
        int v = find_path(root);
        while (v != -1) {
            int pv = at(parent, v);
            int ppv = at(match, pv);
            at(match, v) = pv;
            at(match, pv) = v;
            v = ppv;
        }
    }

    std::vector<Edge> out;
    for (int u = 0; u < n; ++u)
        if (at(match, u) > u)
            out.push_back({u, at(match, u)});
    return out;
}

int treewidth_exact(const CombinatorialGraph& g, int cap)
{
    check_cap(g, cap, "treewidth");
    const int n = g.size();
    if (n == 0)
        return 0;
    const std::uint32_t full = (1u << n) - 1;

    // vertices outside S + {v} reachable from v through S
    auto q_size = [&](std::uint32_t s, int v) {
        std::uint32_t seen = 1u << v;
        std::uint32_t frontier = 1u << v;
        std::uint32_t outside = 0;
        while (frontier) {
            int x = std::countr_zero(frontier);
            frontier &= frontier - 1;
            for (int y = g.neighbours(x).next(); y >= 0; y = g.neighbours(x).next(y + 1)) {
                std::uint32_t bit = 1u << y;
                if (seen & bit)
                    continue;
                seen |= bit;
                if (s & bit)
                    frontier |= bit;
                else
                    outside |= bit;
            }
        }
        return std::popcount(outside);
    };

    constexpr int minus_inf = std::numeric_limits<int>::min();
    std::vector<int> tw(static_cast<std::size_t>(full) + 1, std::numeric_limits<int>::max());
    tw[0] = minus_inf;
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = std::numeric_limits<int>::max();
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            std::uint32_t without = s & ~(1u << v);
            best = std::min(best, std::max(tw[without], q_size(without, v)));
        }
        tw[s] = best;
    }
    return tw[full];
}

int bramble_number_exact(const CombinatorialGraph& g, int cap)
{
    check_cap(g, cap, "bramble number");
    const int n = g.size();
    if (n == 0)
        return 0;
    std::vector<Bitset> sets;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Bitset s(n), reached(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u)
                s.set(v);
        std::vector<int> stack{std::countr_zero(mask)};
        reached.set(stack.back());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            Bitset step = g.neighbours(v) & s;
            step.subtract(reached);
            step.for_each([&](int w) {
                reached.set(w);
                stack.push_back(w);
            });
        }
        if (reached == s)
            sets.push_back(std::move(s));
    }
    const int k = static_cast<int>(sets.size());
    std::vector<Bitset> touch(static_cast<std::size_t>(k), Bitset(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            bool t = sets[static_cast<std::size_t>(i)].intersects(sets[static_cast<std::size_t>(j)]);
            sets[static_cast<std::size_t>(i)].for_each([&](int v) { t = t || g.neighbours(v).intersects(sets[static_cast<std::size_t>(j)]); });
            if (t && i != j)
                touch[static_cast<std::size_t>(i)].set(j);
        }

    SearchOptions serial;
    serial.threads = 1;
    int best = 0;
    std::vector<int> clique;
    // Bron-Kerbosch with pivoting; score each maximal touching family
    auto expand = [&](auto&& self, Bitset p, Bitset x) -> void {
        if (p.none() && x.none()) {
            std::vector<Bitset> elements;
            for (int i : clique)
                elements.push_back(sets[static_cast<std::size_t>(i)]);
            best = std::max(best, static_cast<int>(min_set_cover(n, elements, serial).chosen.size()));
            return;
        }
        int pivot = (p | x).next();
        Bitset branch = p;
        branch.subtract(touch[static_cast<std::size_t>(pivot)]);
        branch.for_each([&](int v) {
            clique.push_back(v);
            self(self, p & touch[static_cast<std::size_t>(v)], x & touch[static_cast<std::size_t>(v)]);
            clique.pop_back();
            p.reset(v);
            x.set(v);
        });
    };
    Bitset all(k);
    all.set_all();
    expand(expand, all, Bitset(k));
    return best;
}

}  // namespace contgraph
