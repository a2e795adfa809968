#include "contgraph/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

#include <omp.h>

#include "contgraph/grid.hpp"
#include "contgraph/kernels.hpp"
#include "contgraph/metric.hpp"

namespace contgraph {

int ColoredCover::colors_used() const
{
    int c = 0;
    for (const ColoredBall& b : entries)
        c = std::max(c, b.color);
    return c;
}

std::vector<Point> ColoredCover::centers() const
{
    std::vector<Point> out;
    for (const ColoredBall& b : entries)
        out.push_back(b.center);
    return out;
}

bool balls_intersect(const ContinuousGraph& g, const Point& p, const Point& q, const Rational& r)
{
    if (r.sign() <= 0)
        throw InvalidInput("ball radius must be positive");
    Distance d = point_distance(g, p, q);
    return d.is_finite() && d.value() <= Rational(2) * r;
}

std::optional<ColoringViolation> find_coloring_violation(const ContinuousGraph& g, const ColoredCover& cc)
{
    for (const ColoredBall& b : cc.entries)
        if (b.color < 1)
            return ColoringViolation{"colour " + std::to_string(b.color) + " of ball at " + b.center.literal() + " is not positive"};
    if (auto gap = find_coverage_gap(g, cc.radius, cc.centers()))
        return ColoringViolation{"uncovered " + gap->str()};
    for (std::size_t i = 0; i < cc.entries.size(); ++i) {
        for (std::size_t j = i + 1; j < cc.entries.size(); ++j) {
            const ColoredBall& a = cc.entries[i];
            const ColoredBall& b = cc.entries[j];
            if (a.color == b.color && balls_intersect(g, a.center, b.center, cc.radius)) {
                return ColoringViolation{"balls at " + a.center.literal() + " and " + b.center.literal() + " share colour "
                                         + std::to_string(a.color) + " at distance " + point_distance(g, a.center, b.center).str()};
            }
        }
    }
    return std::nullopt;
}

bool verify_coloring(const ContinuousGraph& g, const ColoredCover& cc)
{
    return !find_coloring_violation(g, cc).has_value();
}

namespace {

// ball at distance t from endpoint a along edge {a,b}
Point along(const ContinuousGraph& g, int a, int b, const Rational& t)
{
    int e = *g.find_edge(a, b);
    return Point::on_edge(g, e, g.edge(e).u == a ? t : Rational(1) - t);
}

ColoredCover even_complete_coloring(const ContinuousGraph& g)
{
    const int n = g.num_endpoints();
    const Rational quarter(1, 4), three_quarters(3, 4), half(1, 2);
    ColoredCover cc;
    for (int i = 0; 2 * i + 1 < n; ++i)
        cc.entries.push_back({along(g, 2 * i, 2 * i + 1, half), i + 1});
    for (int i = 0; 2 * i + 1 < n; ++i) {
        for (int j = i + 1; 2 * j + 1 < n; ++j) {
            const int u = 2 * i, v = 2 * i + 1, x = 2 * j, y = 2 * j + 1;
            const int blue = i + 1, red = j + 1;
            cc.entries.push_back({along(g, u, x, three_quarters), blue});
            cc.entries.push_back({along(g, v, y, three_quarters), blue});
            cc.entries.push_back({along(g, u, y, quarter), red});
            cc.entries.push_back({along(g, v, x, quarter), red});
        }
    }
    return cc;
}

void sort_entries(ColoredCover& cc)
{
    std::sort(cc.entries.begin(), cc.entries.end(), [](const ColoredBall& a, const ColoredBall& b) {
        if (a.center != b.center)
            return a.center < b.center;
        return a.color < b.color;
    });
}

}  // namespace

ColoredCover kn_half_coloring(int n)
{
    if (n < 2)
        throw InvalidInput("kn_half_coloring needs n >= 2");
    ContinuousGraph kn = generate("complete", n);
    if (n % 2 == 0) {
        ColoredCover cc = even_complete_coloring(kn);
        sort_entries(cc);
        return cc;
    }

    // colour K_{n+1}; endpoint n is the phantom
    ContinuousGraph big = generate("complete", n + 1);
    ColoredCover source = even_complete_coloring(big);
    ColoredCover kept, moved;
    for (const ColoredBall& b : source.entries) {
        const Edge& e = big.edge(b.center.edge_index());
        Rational from_u = b.center.offset();
        if (e.u != n && e.v != n) {
            Point p = along(kn, e.u, e.v, from_u);
            kept.entries.push_back({p, b.color});
            moved.entries.push_back({p, b.color});
            continue;
        }
        // on a phantom edge: only its real end can matter inside K_n
        int real = e.u == n ? e.v : e.u;
        Rational from_real = e.u == real ? from_u : Rational(1) - from_u;
        if (from_real < Rational(1, 2))
            moved.entries.push_back({Point::endpoint(real), b.color});
    }
    sort_entries(kept);
    if (verify_coloring(kn, kept))
        return kept;
    sort_entries(moved);
    if (verify_coloring(kn, moved))
        return moved;
    throw std::logic_error("restricted colouring of K_" + std::to_string(n + 1) + " is not valid on K_" + std::to_string(n));
}

bool single_color_impossible(const ContinuousGraph& g)
{
    Components comp = components(g);
    std::vector<int> length(static_cast<std::size_t>(comp.count), 0);
    std::vector<int> max_deg(static_cast<std::size_t>(comp.count), 2);
    for (int e = 0; e < g.num_edges(); ++e)
        ++length[static_cast<std::size_t>(comp.of_edge[static_cast<std::size_t>(e)])];
    for (int v = 0; v < g.num_endpoints(); ++v) {
        auto& d = max_deg[static_cast<std::size_t>(comp.of_endpoint[static_cast<std::size_t>(v)])];
        d = std::max(d, g.degree(v));
    }
    for (int c = 0; c < comp.count; ++c) {
        Rational capacity = Rational(max_deg[static_cast<std::size_t>(c)], 2);
        if (Rational(length[static_cast<std::size_t>(c)]) > capacity)
            return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// coloured cover search

namespace {

struct ColoringProblem {
    int colors = 0;
    int budget = 0;
    int num_candidates = 0;
    std::vector<Bitset> elem_cands;   // per element
    std::vector<Bitset> cand_cover;   // per candidate, over elements
    std::vector<Bitset> intersects;   // per candidate, candidates whose balls meet it (itself included)
};

struct Ball {
    int candidate;
    int color;
};

class ColoringSearch {
public:
    ColoringSearch(const ColoringProblem& p, std::uint64_t cap, std::atomic<std::uint64_t>& nodes, std::atomic<bool>& capped)
        : p_(p), cap_(cap), nodes_(nodes), capped_(capped) {}

    struct State {
        Bitset uncovered;
        Bitset chosen;
        std::vector<Bitset> blocked;   // per colour (index 0 = colour 1)
        std::vector<Bitset> excluded;  // per colour, pairs ruled out by failed siblings
        int used = 0;
        std::vector<Ball> balls;
    };

    State root() const
    {
        State s;
        s.uncovered = Bitset(static_cast<int>(p_.elem_cands.size()));
        s.uncovered.set_all();
        s.chosen = Bitset(p_.num_candidates);
        s.blocked.assign(static_cast<std::size_t>(p_.colors), Bitset(p_.num_candidates));
        s.excluded.assign(static_cast<std::size_t>(p_.colors), Bitset(p_.num_candidates));
        return s;
    }

    Bitset options_for(const State& s, int element, int color) const
    {
        Bitset o = p_.elem_cands[static_cast<std::size_t>(element)];
        o.subtract(s.chosen);
        o.subtract(s.blocked[static_cast<std::size_t>(color - 1)]);
        o.subtract(s.excluded[static_cast<std::size_t>(color - 1)]);
        return o;
    }

    // Options at this node in branching order; empty when the node is dead or solved.
    std::vector<Ball> branches(const State& s, bool& dead) const
    {
        dead = false;
        const int limit = std::min(p_.colors, s.used + 1);
        int pick = -1, pick_count = 0;
        Bitset any_option(p_.num_candidates);
        Bitset used_by_lb(p_.num_candidates);
        int lb = 0;
        for (int e = s.uncovered.next(); e >= 0; e = s.uncovered.next(e + 1)) {
            int count = 0;
            Bitset all(p_.num_candidates);
            for (int c = 1; c <= limit; ++c) {
                Bitset o = options_for(s, e, c);
                count += o.count();
                all |= o;
            }
            if (count == 0) {
                dead = true;
                return {};
            }
            if (!all.intersects(used_by_lb)) {
                ++lb;
                used_by_lb |= all;
            }
            if (pick < 0 || count < pick_count) {
                pick = e;
                pick_count = count;
            }
        }
        if (static_cast<int>(s.balls.size()) + lb > p_.budget) {
            dead = true;
            return {};
        }
        std::vector<Ball> out;
        for (int c = 1; c <= limit; ++c) {
            std::vector<int> cands;
            options_for(s, pick, c).for_each([&](int x) { cands.push_back(x); });
            std::stable_sort(cands.begin(), cands.end(), [&](int a, int b) {
                return p_.cand_cover[static_cast<std::size_t>(a)].count_and(s.uncovered)
                     > p_.cand_cover[static_cast<std::size_t>(b)].count_and(s.uncovered);
            });
            for (int x : cands)
                out.push_back({x, c});
        }
        return out;
    }

    State apply(const State& s, const Ball& b) const
    {
        State t = s;
        t.uncovered.subtract(p_.cand_cover[static_cast<std::size_t>(b.candidate)]);
        t.chosen.set(b.candidate);
        t.blocked[static_cast<std::size_t>(b.color - 1)] |= p_.intersects[static_cast<std::size_t>(b.candidate)];
        t.used = std::max(t.used, b.color);
        t.balls.push_back(b);
        return t;
    }

    // Rule out a failed option for the remaining siblings. A failed fresh
    // colour rules the candidate out of every colour still unused here.
    void exclude(State& s, const Ball& b) const
    {
        if (b.color <= s.used) {
            s.excluded[static_cast<std::size_t>(b.color - 1)].set(b.candidate);
            return;
        }
        for (int c = s.used + 1; c <= p_.colors; ++c)
            s.excluded[static_cast<std::size_t>(c - 1)].set(b.candidate);
    }

    bool tick()
    {
        if (capped_.load(std::memory_order_relaxed) || stop_.load(std::memory_order_relaxed))
            return false;
        if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > cap_) {
            capped_.store(true);
            return false;
        }
        return true;
    }

    bool search(State s, std::vector<Ball>& found)
    {
        if (!tick())
            return false;
        if (s.uncovered.none()) {
            found = s.balls;
            return true;
        }
        if (static_cast<int>(s.balls.size()) >= p_.budget)
            return false;
        bool dead = false;
        for (const Ball& b : branches(s, dead)) {
            if (search(apply(s, b), found))
                return true;
            if (capped_.load(std::memory_order_relaxed) || stop_.load(std::memory_order_relaxed))
                return false;
            exclude(s, b);
        }
        return false;
    }

    std::atomic<bool>& stop() { return stop_; }

private:
    const ColoringProblem& p_;
    std::uint64_t cap_;
    std::atomic<std::uint64_t>& nodes_;
    std::atomic<bool>& capped_;
    std::atomic<bool> stop_{false};
};

ColoringProblem build_problem(const ContinuousGraph& g, const Grid& grid, int colors, int budget)
{
    const Rational r(1, 2);
    ColoringProblem p;
    p.colors = colors;
    p.budget = budget;
    p.num_candidates = grid.size();
    CoverUniverse u = cover_universe(g, r, grid.points());

    // drop elements implied by another element's candidate set
    const int m = static_cast<int>(u.element_candidates.size());
    for (int e = 0; e < m; ++e) {
        const Bitset& se = u.element_candidates[static_cast<std::size_t>(e)];
        bool dominated = false;
        for (int f = 0; f < m && !dominated; ++f) {
            if (f == e)
                continue;
            const Bitset& sf = u.element_candidates[static_cast<std::size_t>(f)];
            if (sf.is_subset_of(se) && (f < e || !se.is_subset_of(sf)))
                dominated = true;
        }
        if (!dominated)
            p.elem_cands.push_back(se);
    }
    const int num_elements = static_cast<int>(p.elem_cands.size());
    p.cand_cover.assign(static_cast<std::size_t>(p.num_candidates), Bitset(num_elements));
    for (int e = 0; e < num_elements; ++e)
        p.elem_cands[static_cast<std::size_t>(e)].for_each([&](int c) { p.cand_cover[static_cast<std::size_t>(c)].set(e); });

    kernels::DistanceTable table = kernels::grid_distances_parallel(g, grid);
    std::vector<std::uint8_t> meet = kernels::threshold_matrix_parallel(table, Rational(1), false);
    p.intersects.assign(static_cast<std::size_t>(p.num_candidates), Bitset(p.num_candidates));
    for (int a = 0; a < p.num_candidates; ++a) {
        p.intersects[static_cast<std::size_t>(a)].set(a);
        for (int b = 0; b < p.num_candidates; ++b)
            if (meet[static_cast<std::size_t>(a) * p.num_candidates + b])
                p.intersects[static_cast<std::size_t>(a)].set(b);
    }
    return p;
}

int effective_budget(const ContinuousGraph& g, const ColoringSearchOptions& options)
{
    return options.center_budget > 0 ? options.center_budget : 2 * g.num_edges();
}

}  // namespace

ColorabilityResult find_colored_cover(const ContinuousGraph& g, int colors, const ColoringSearchOptions& options)
{
    if (options.denominator < 4 || options.denominator % 4 != 0)
        throw InvalidInput("colouring search needs a grid denominator that is a multiple of 4");
    if (colors < 1)
        throw InvalidInput("colour count must be positive");
    Grid grid(g, options.denominator);
    ColoringProblem problem = build_problem(g, grid, colors, effective_budget(g, options));

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> capped{false};
    ColorabilityResult result;

    ColoringSearch search(problem, options.search.node_cap, nodes, capped);
    ColoringSearch::State root = search.root();
    std::vector<Ball> found;
    bool ok = false;

    int workers = options.search.threads > 0 ? options.search.threads : std::max(1, omp_get_max_threads());
    if (root.uncovered.none()) {
        ok = true;
    } else if (workers <= 1) {
        ok = search.search(root, found);
    } else {
        // root branches in parallel; branch i assumes branches before it failed,
        // and the lowest successful branch wins, as in the serial order
        nodes += 1;
        bool dead = false;
        std::vector<Ball> top = search.branches(root, dead);
        const int count = static_cast<int>(top.size());
        std::vector<int> outcome(static_cast<std::size_t>(count), 0);  // 1 found, -1 failed, 0 aborted
        std::vector<std::vector<Ball>> witnesses(static_cast<std::size_t>(count));
        std::atomic<int> best_index{count};
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (int i = 0; i < count; ++i) {
            if (i > best_index.load() || capped.load())
                continue;
            ColoringSearch::State s = root;
            for (int j = 0; j < i; ++j)
                search.exclude(s, top[static_cast<std::size_t>(j)]);
            ColoringSearch local(problem, options.search.node_cap, nodes, capped);
            std::vector<Ball> w;
            if (local.search(search.apply(s, top[static_cast<std::size_t>(i)]), w)) {
                outcome[static_cast<std::size_t>(i)] = 1;
                witnesses[static_cast<std::size_t>(i)] = std::move(w);
                int cur = best_index.load();
                while (i < cur && !best_index.compare_exchange_weak(cur, i)) {}
            } else if (!capped.load()) {
                outcome[static_cast<std::size_t>(i)] = -1;
            }
        }
        bool undecided = false;
        for (int i = 0; i < count && !ok && !undecided; ++i) {
            if (outcome[static_cast<std::size_t>(i)] == 1) {
                ok = true;
                found = witnesses[static_cast<std::size_t>(i)];
            } else if (outcome[static_cast<std::size_t>(i)] == 0) {
                undecided = true;
            }
        }
        if (!ok && !undecided)
            capped.store(false);
    }

    result.nodes = nodes.load();
    if (ok) {
        ColoredCover cc;
        for (const Ball& b : found)
            cc.entries.push_back({grid.point(b.candidate), b.color});
        sort_entries(cc);
        if (!verify_coloring(g, cc))
            throw std::logic_error("coloured grid cover failed exact verification");
        result.status = SearchStatus::optimal;
        result.witness = std::move(cc);
    } else {
        result.status = capped.load() ? SearchStatus::node_cap : SearchStatus::infeasible;
    }
    return result;
}

ColoringSearchResult min_colors_exact(const ContinuousGraph& g, const ColoringSearchOptions& options)
{
    if (options.max_colors < 1)
        throw InvalidInput("max colours must be positive");
    ColoringSearchResult out;
    out.denominator = options.denominator;
    out.center_budget = effective_budget(g, options);
    bool settled_below = true;
    for (int c = 1; c <= options.max_colors; ++c) {
        ColorabilityResult r = find_colored_cover(g, c, options);
        out.nodes += r.nodes;
        if (r.status == SearchStatus::optimal) {
            out.attempts.push_back("found");
            out.upper_bound = c;
            out.witness = r.witness;
            if (settled_below)
                out.colors = c;
            break;
        }
        if (r.status == SearchStatus::infeasible) {
            out.attempts.push_back("exhausted");
            if (settled_below)
                out.lower_bound = c + 1;
        } else {
            out.attempts.push_back("node-cap");
            settled_below = false;
        }
    }
    return out;
}

PlanarExperiment planar_candidate_experiment(std::int64_t denominator, int center_budget, const SearchOptions& search)
{
    PlanarExperiment exp;
    exp.graph = generate("planar8", 0);
    ColoringSearchOptions options;
    options.denominator = denominator;
    options.max_colors = 3;
    options.center_budget = center_budget;
    options.search = search;
    exp.search = min_colors_exact(exp.graph, options);
    if (exp.search.upper_bound)
        exp.outcome = "(1/2," + std::to_string(*exp.search.upper_bound) + ")-colouring witness";
    else if (exp.search.lower_bound > options.max_colors)
        exp.outcome = "exhausted: no grid cover within budget is (1/2,c)-colourable for c <= 3";
    else
        exp.outcome = "undecided: node cap reached";
    return exp;
}

}  // namespace contgraph
