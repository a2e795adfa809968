#include "contgraph/bramble.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include <omp.h>

#include "contgraph/bitset.hpp"
#include "contgraph/grid.hpp"
#include "contgraph/metric.hpp"

namespace contgraph {

Subtree::Subtree(const ContinuousGraph& g, std::vector<Segment> segments, std::vector<int> endpoints)
{
    const Rational zero(0), one(1);
    for (const Segment& s : segments) {
        if (!g.valid_edge(s.edge))
            throw InvalidInput("segment on edge " + std::to_string(s.edge) + " which does not exist");
        if (s.lo < zero || s.hi > one || s.lo > s.hi)
            throw InvalidInput("segment [" + s.lo.str() + ", " + s.hi.str() + "] is not a subinterval of [0,1]");
    }
    for (int v : endpoints)
        if (!g.valid_endpoint(v))
            throw InvalidInput("endpoint " + std::to_string(v) + " out of range");

    std::sort(segments.begin(), segments.end(), [](const Segment& a, const Segment& b) {
        return a.edge != b.edge ? a.edge < b.edge : a.lo < b.lo;
    });
    std::vector<Segment> merged;
    for (Segment& s : segments) {
        if (!merged.empty() && merged.back().edge == s.edge && s.lo <= merged.back().hi)
            merged.back().hi = max(merged.back().hi, s.hi);
        else
            merged.push_back(std::move(s));
    }
    for (Segment& s : merged) {
        if (s.lo == s.hi && (s.lo == zero || s.hi == one))
            endpoints.push_back(s.lo == zero ? g.edge(s.edge).u : g.edge(s.edge).v);
        else
            segments_.push_back(std::move(s));
    }
    std::sort(endpoints.begin(), endpoints.end());
    endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
    for (int v : endpoints) {
        bool inside = false;
        for (const Segment& s : segments_) {
            const Edge& e = g.edge(s.edge);
            if ((e.u == v && s.lo == zero) || (e.v == v && s.hi == one))
                inside = true;
        }
        if (!inside)
            endpoints_.push_back(v);
    }
}

bool Subtree::contains(const ContinuousGraph& g, const Point& p) const
{
    if (p.is_endpoint()) {
        int v = p.endpoint_id();
        if (std::binary_search(endpoints_.begin(), endpoints_.end(), v))
            return true;
        for (const Segment& s : segments_) {
            const Edge& e = g.edge(s.edge);
            if ((e.u == v && s.lo.is_zero()) || (e.v == v && s.hi == Rational(1)))
                return true;
        }
        return false;
    }
    for (const Segment& s : segments_)
        if (s.edge == p.edge_index() && s.lo <= p.offset() && p.offset() <= s.hi)
            return true;
    return false;
}

std::vector<Point> Subtree::boundary_points(const ContinuousGraph& g) const
{
    std::vector<Point> out;
    for (const Segment& s : segments_) {
        out.push_back(Point::on_edge(g, s.edge, s.lo));
        out.push_back(Point::on_edge(g, s.edge, s.hi));
    }
    for (int v : endpoints_)
        out.push_back(Point::endpoint(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string Subtree::literal() const
{
    std::string out;
    auto frac = [](const Rational& r) { return r.raw().get_num().get_str() + "/" + r.raw().get_den().get_str(); };
    for (const Segment& s : segments_) {
        if (!out.empty())
            out += "; ";
        out += "e " + std::to_string(s.edge) + " " + frac(s.lo) + " " + frac(s.hi);
    }
    for (int v : endpoints_) {
        if (!out.empty())
            out += "; ";
        out += "v " + std::to_string(v);
    }
    return out;
}

namespace {

std::set<int> touched_endpoints(const ContinuousGraph& g, const Subtree& t)
{
    std::set<int> out(t.endpoints().begin(), t.endpoints().end());
    for (const Segment& s : t.segments()) {
        if (s.lo.is_zero())
            out.insert(g.edge(s.edge).u);
        if (s.hi == Rational(1))
            out.insert(g.edge(s.edge).v);
    }
    return out;
}

int find_root(std::vector<int>& parent, int x)
{
    while (parent[static_cast<std::size_t>(x)] != x)
        x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
}

}  // namespace

bool subtree_valid(const ContinuousGraph& g, const Subtree& t)
{
    if (t.empty())
        return false;
    // incidence graph: segment nodes 0..S-1, endpoint v is node S+v
    const int s_count = static_cast<int>(t.segments().size());
    std::vector<int> parent(static_cast<std::size_t>(s_count + g.num_endpoints()));
    std::iota(parent.begin(), parent.end(), 0);
    std::set<int> nodes;
    int incidences = 0;
    auto link = [&](int seg, int v) {
        ++incidences;
        nodes.insert(s_count + v);
        int a = find_root(parent, seg), b = find_root(parent, s_count + v);
        if (a != b)
            parent[static_cast<std::size_t>(a)] = b;
    };
    for (int i = 0; i < s_count; ++i) {
        const Segment& s = t.segments()[static_cast<std::size_t>(i)];
        nodes.insert(i);
        if (s.lo.is_zero())
            link(i, g.edge(s.edge).u);
        if (s.hi == Rational(1))
            link(i, g.edge(s.edge).v);
    }
    for (int v : t.endpoints())
        nodes.insert(s_count + v);

    int root = find_root(parent, *nodes.begin());
    for (int x : nodes)
        if (find_root(parent, x) != root)
            return false;
    return incidences == static_cast<int>(nodes.size()) - 1;
}

Distance subtree_distance(const ContinuousGraph& g, const Subtree& a, const Subtree& b)
{
    for (const Segment& x : a.segments())
        for (const Segment& y : b.segments())
            if (x.edge == y.edge && max(x.lo, y.lo) <= min(x.hi, y.hi))
                return Distance(Rational(0));
    std::set<int> ta = touched_endpoints(g, a), tb = touched_endpoints(g, b);
    for (int v : ta)
        if (tb.count(v))
            return Distance(Rational(0));

    // min of affine route lengths over a box of offsets sits at a corner
    Distance best = Distance::infinite();
    for (const Point& p : a.boundary_points(g))
        for (const Point& q : b.boundary_points(g))
            best = std::min(best, point_distance(g, p, q));
    return best;
}

bool is_r_bramble(const ContinuousGraph& g, const Rational& r, const std::vector<Subtree>& subtrees)
{
    for (std::size_t i = 0; i < subtrees.size(); ++i)
        if (!subtree_valid(g, subtrees[i]))
            throw InvalidInput("subtree " + std::to_string(i) + " is not a connected cycle-free subgraph");
    const Distance limit(r);
    for (std::size_t i = 0; i < subtrees.size(); ++i)
        for (std::size_t j = i + 1; j < subtrees.size(); ++j)
            if (subtree_distance(g, subtrees[i], subtrees[j]) > limit)
                return false;
    return true;
}

BrambleOrder bramble_order(const ContinuousGraph& g, const std::vector<Subtree>& subtrees, std::int64_t denominator, const SearchOptions& options)
{
    for (std::size_t i = 0; i < subtrees.size(); ++i)
        if (!subtree_valid(g, subtrees[i]))
            throw InvalidInput("subtree " + std::to_string(i) + " is not a connected cycle-free subgraph");
    Grid grid(g, denominator);
    std::set<Point> pool(grid.points().begin(), grid.points().end());
    for (const Subtree& t : subtrees)
        for (const Point& p : t.boundary_points(g))
            pool.insert(p);
    std::vector<Point> candidates(pool.begin(), pool.end());

    std::vector<Bitset> elements;
    for (const Subtree& t : subtrees) {
        Bitset hit(static_cast<int>(candidates.size()));
        for (int c = 0; c < static_cast<int>(candidates.size()); ++c)
            if (t.contains(g, candidates[static_cast<std::size_t>(c)]))
                hit.set(c);
        elements.push_back(std::move(hit));
    }
    SetCoverResult sc = min_set_cover(static_cast<int>(candidates.size()), elements, options);
    BrambleOrder out;
    out.status = sc.status;
    out.lower_bound = sc.lower_bound;
    for (int c : sc.chosen)
        out.hitting_set.push_back(candidates[static_cast<std::size_t>(c)]);
    out.order = static_cast<int>(out.hitting_set.size());
    return out;
}

std::vector<Subtree> grid_aligned_subtrees(const ContinuousGraph& g, std::int64_t denominator, int max_segments)
{
    if (denominator < 1)
        throw InvalidInput("grid denominator must be positive");
    if (max_segments < 1)
        throw InvalidInput("max_segments must be positive");
    struct Atom {
        std::vector<Segment> segments;
        std::vector<int> endpoints;
    };
    std::vector<Atom> atoms;
    for (int v = 0; v < g.num_endpoints(); ++v)
        atoms.push_back({{}, {v}});
    for (int e = 0; e < g.num_edges(); ++e)
        for (std::int64_t i = 0; i <= denominator; ++i)
            for (std::int64_t j = i; j <= denominator; ++j)
                if (!(i == j && (i == 0 || i == denominator)))
                    atoms.push_back({{{e, Rational(i, denominator), Rational(j, denominator)}}, {}});

    std::vector<Subtree> out;
    std::set<std::string> seen;
    std::vector<int> pick;
    auto emit = [&]() {
        std::vector<Segment> segs;
        std::vector<int> ends;
        for (int a : pick) {
            const Atom& atom = atoms[static_cast<std::size_t>(a)];
            segs.insert(segs.end(), atom.segments.begin(), atom.segments.end());
            ends.insert(ends.end(), atom.endpoints.begin(), atom.endpoints.end());
        }
        Subtree t(g, std::move(segs), std::move(ends));
        if (subtree_valid(g, t) && seen.insert(t.literal()).second)
            out.push_back(std::move(t));
    };
    auto rec = [&](auto&& self, int from) -> void {
        if (!pick.empty())
            emit();
        if (static_cast<int>(pick.size()) == max_segments)
            return;
        for (int a = from; a < static_cast<int>(atoms.size()); ++a) {
            pick.push_back(a);
            self(self, a + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

class BrambleSearch {
public:
    BrambleSearch(const std::vector<Bitset>& compat, const std::vector<Bitset>& hits, int grid_size, int max_subtrees,
                  std::uint64_t cap, int initial_best, int stop_at)
        : compat_(compat), hits_(hits), grid_size_(grid_size), max_subtrees_(max_subtrees), cap_(cap), best_(initial_best), stop_at_(stop_at) {}

    int order_of(const std::vector<int>& clique) const
    {
        std::vector<Bitset> elements;
        for (int i : clique)
            elements.push_back(hits_[static_cast<std::size_t>(i)]);
        SearchOptions serial;
        serial.threads = 1;
        return static_cast<int>(min_set_cover(grid_size_, elements, serial).chosen.size());
    }

    void dfs(std::vector<int>& clique, const Bitset& cand, int order)
    {
        if (!tick())
            return;
        if (order > best_.load())
            record(clique, order);
        const int slots = max_subtrees_ - static_cast<int>(clique.size());
        if (slots <= 0 || order + slots <= best_.load())
            return;
        for (int j = cand.next(); j >= 0; j = cand.next(j + 1)) {
            if (order + slots <= best_.load() || stopped())
                return;
            clique.push_back(j);
            int next_order = order_of(clique);
            Bitset next = cand & compat_[static_cast<std::size_t>(j)];
            for (int k = next.next(); k >= 0 && k <= j; k = next.next(k + 1))
                next.reset(k);
            dfs(clique, next, next_order);
            clique.pop_back();
        }
    }

    void start(int first, int pool)
    {
        std::vector<int> clique{first};
        Bitset cand = compat_[static_cast<std::size_t>(first)];
        for (int k = 0; k <= first && k < pool; ++k)
            cand.reset(k);
        dfs(clique, cand, 1);
    }

    int best() const { return best_.load(); }
    const std::vector<int>& witness() const { return witness_; }
    bool capped() const { return capped_.load(); }
    std::uint64_t nodes() const { return nodes_.load(); }

private:
    bool stopped() const { return capped_.load(std::memory_order_relaxed) || done_.load(std::memory_order_relaxed); }

    bool tick()
    {
        if (stopped())
            return false;
        if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > cap_) {
            capped_.store(true);
            return false;
        }
        return true;
    }

    void record(const std::vector<int>& clique, int order)
    {
        std::lock_guard lock(mutex_);
        if (order > best_.load()) {
            best_.store(order);
            witness_ = clique;
            if (stop_at_ > 0 && order >= stop_at_)
                done_.store(true);
        }
    }

    const std::vector<Bitset>& compat_;
    const std::vector<Bitset>& hits_;
    int grid_size_;
    int max_subtrees_;
    std::uint64_t cap_;
    std::atomic<int> best_;
    int stop_at_;
    std::vector<int> witness_;
    std::mutex mutex_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> capped_{false};
    std::atomic<bool> done_{false};
};

}  // namespace

BrambleNumberResult r_bramble_number_bruteforce(const ContinuousGraph& g, const Rational& r, std::int64_t denominator,
                                                const BrambleCaps& caps, const SearchOptions& options)
{
    if (r.sign() <= 0)
        throw InvalidInput("radius must be positive");
    if (caps.max_subtrees < 1)
        throw InvalidInput("max_subtrees must be positive");
    BrambleNumberResult out;
    out.denominator = denominator;
    out.caps = caps;

    std::vector<Subtree> pool = grid_aligned_subtrees(g, denominator, caps.max_segments);
    if (static_cast<int>(pool.size()) > caps.max_pool) {
        pool.resize(static_cast<std::size_t>(caps.max_pool));
        out.complete = false;
    }
    const int size = static_cast<int>(pool.size());
    out.pool_size = size;
    if (size == 0)
        return out;

    // every segment end of a grid-aligned subtree is a grid point
    Grid grid(g, denominator);
    std::vector<Bitset> hits(static_cast<std::size_t>(size), Bitset(grid.size()));
    std::vector<Bitset> compat(static_cast<std::size_t>(size), Bitset(size));
    const Distance limit(r);
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < size; ++i) {
        for (int p = 0; p < grid.size(); ++p)
            if (pool[static_cast<std::size_t>(i)].contains(g, grid.point(p)))
                hits[static_cast<std::size_t>(i)].set(p);
        for (int j = 0; j < size; ++j)
            if (subtree_distance(g, pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]) <= limit)
                compat[static_cast<std::size_t>(i)].set(j);
    }

    const int workers = options.threads > 0 ? options.threads : std::max(1, omp_get_max_threads());
    BrambleSearch search(compat, hits, grid.size(), caps.max_subtrees, options.node_cap, 0, 0);
    if (workers <= 1) {
        for (int i = 0; i < size; ++i)
            search.start(i, size);
    } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (int i = 0; i < size; ++i)
            search.start(i, size);
    }
    out.value = search.best();
    out.nodes = search.nodes();
    std::vector<int> witness = search.witness();
    if (search.capped()) {
        out.complete = false;
    } else if (workers > 1) {
        // replay serially for the witness the serial order meets first
        BrambleSearch replay(compat, hits, grid.size(), caps.max_subtrees, options.node_cap, out.value - 1, out.value);
        for (int i = 0; i < size && replay.best() < out.value; ++i)
            replay.start(i, size);
        out.nodes += replay.nodes();
        if (replay.best() == out.value)
            witness = replay.witness();
    }
    for (int i : witness)
        out.witness.push_back(pool[static_cast<std::size_t>(i)]);
    // order grows by at most one per subtree, so hitting the size cap may be what stopped us
    if (out.value >= caps.max_subtrees)
        out.complete = false;
    return out;
}

BrambleNumberResult treewidth_continuous(const ContinuousGraph& g, std::int64_t denominator, const BrambleCaps& caps,
                                         const SearchOptions& options)
{
    return r_bramble_number_bruteforce(g, Rational(1), denominator, caps, options);
}

}  // namespace contgraph
