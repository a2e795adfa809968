#include "contgraph/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include <omp.h>

namespace contgraph {

std::uint64_t default_node_cap()
{
    if (const char* env = std::getenv("CONTGRAPH_NODE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return 50'000'000;
}

std::string to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::optimal:
        return "optimal";
    case SearchStatus::node_cap:
        return "node-cap";
    case SearchStatus::infeasible:
        return "infeasible";
    }
    return "?";
}

namespace {

int worker_count(const SearchOptions& options)
{
    if (options.threads > 0)
        return options.threads;
    return std::max(1, omp_get_max_threads());
}

// Shared state of one search run; workers only touch it through atomics or the mutex.
struct Shared {
    explicit Shared(std::uint64_t cap) : node_cap(cap) {}
    std::uint64_t node_cap;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> capped{false};
    std::atomic<bool> done{false};
    std::mutex mutex;

    bool tick()
    {
        if (capped.load(std::memory_order_relaxed) || done.load(std::memory_order_relaxed))
            return false;
        if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > node_cap) {
            capped.store(true);
            return false;
        }
        return true;
    }
};

// ---------------------------------------------------------------------------
// maximum independent set = maximum clique in the complement

class CliqueSearch {
public:
    CliqueSearch(const std::vector<Bitset>& adj, Shared& shared, std::atomic<int>& best, std::vector<int>& best_members, int stop_at)
        : adj_(adj), shared_(shared), best_(best), best_members_(best_members), stop_at_(stop_at) {}

    // Sequential greedy colouring of P: each class is independent in the
    // complement, i.e. a clique of conflicts. Classes come out ascending.
    void colour_sort(Bitset p, std::vector<int>& vs, std::vector<int>& cs) const
    {
        vs.clear();
        cs.clear();
        int colour = 0;
        while (p.any()) {
            ++colour;
            Bitset q = p;
            for (int v = q.next(); v >= 0; v = q.next(v + 1)) {
                p.reset(v);
                q.subtract(adj_[static_cast<std::size_t>(v)]);
                vs.push_back(v);
                cs.push_back(colour);
            }
        }
    }

    void expand(std::vector<int>& cur, Bitset p)
    {
        if (!shared_.tick())
            return;
        std::vector<int> vs, cs;
        colour_sort(p, vs, cs);
        for (int i = static_cast<int>(vs.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(cur.size()) + cs[static_cast<std::size_t>(i)] <= best_.load(std::memory_order_relaxed))
                return;
            branch(cur, p, vs[static_cast<std::size_t>(i)]);
            if (shared_.capped.load(std::memory_order_relaxed) || shared_.done.load(std::memory_order_relaxed))
                return;
            p.reset(vs[static_cast<std::size_t>(i)]);
        }
    }

    void branch(std::vector<int>& cur, const Bitset& p, int v)
    {
        cur.push_back(v);
        Bitset next = p & adj_[static_cast<std::size_t>(v)];
        if (next.none())
            record(cur);
        else
            expand(cur, std::move(next));
        cur.pop_back();
    }

private:
    void record(const std::vector<int>& cur)
    {
        std::lock_guard lock(shared_.mutex);
        if (static_cast<int>(cur.size()) > best_.load()) {
            best_.store(static_cast<int>(cur.size()));
            best_members_ = cur;
            if (stop_at_ > 0 && static_cast<int>(cur.size()) >= stop_at_)
                shared_.done.store(true);
        }
    }

    const std::vector<Bitset>& adj_;
    Shared& shared_;
    std::atomic<int>& best_;
    std::vector<int>& best_members_;
    int stop_at_;
};

std::vector<int> greedy_independent_set(const std::vector<Bitset>& conflicts)
{
    const int n = static_cast<int>(conflicts.size());
    Bitset alive(n);
    alive.set_all();
    std::vector<int> out;
    while (alive.any()) {
        int pick = -1, pick_deg = 0;
        alive.for_each([&](int v) {
            int deg = conflicts[static_cast<std::size_t>(v)].count_and(alive);
            if (pick < 0 || deg < pick_deg) {
                pick = v;
                pick_deg = deg;
            }
        });
        out.push_back(pick);
        alive.reset(pick);
        alive.subtract(conflicts[static_cast<std::size_t>(pick)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct CliqueRun {
    int best = 0;
    std::vector<int> members;  // in order-space
    bool capped = false;
    std::uint64_t nodes = 0;
    int root_bound = 0;
};

CliqueRun run_clique(const std::vector<Bitset>& adj, int initial_best, int stop_at, std::uint64_t cap, int workers)
{
    const int n = static_cast<int>(adj.size());
    Shared shared(cap);
    std::atomic<int> best{initial_best};
    std::vector<int> members;
    CliqueSearch search(adj, shared, best, members, stop_at);

    Bitset all(n);
    all.set_all();
    std::vector<int> vs, cs;
    search.colour_sort(all, vs, cs);
    CliqueRun run;
    run.root_bound = cs.empty() ? 0 : cs.back();

    if (workers <= 1) {
        std::vector<int> cur;
        search.expand(cur, all);
    } else {
        // root branch i keeps only the vertices ordered before it
        const int branches = static_cast<int>(vs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (int k = 0; k < branches; ++k) {
            int i = branches - 1 - k;
            if (cs[static_cast<std::size_t>(i)] <= best.load())
                continue;
            Bitset p(n);
            for (int j = 0; j < i; ++j)
                p.set(vs[static_cast<std::size_t>(j)]);
            std::vector<int> cur;
            search.branch(cur, p, vs[static_cast<std::size_t>(i)]);
        }
        shared.nodes += 1;
    }
    run.best = best.load();
    run.members = members;
    run.capped = shared.capped.load();
    run.nodes = shared.nodes.load();
    return run;
}

}  // namespace

IndependentSetResult max_independent_set(const std::vector<Bitset>& conflicts, const SearchOptions& options)
{
    const int n = static_cast<int>(conflicts.size());
    IndependentSetResult result;
    if (n == 0)
        return result;

    // order by descending complement degree (= ascending conflict degree), ties by id
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> conflict_degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        Bitset row = conflicts[static_cast<std::size_t>(v)];
        row.reset(v);
        conflict_degree[static_cast<std::size_t>(v)] = row.count();
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return conflict_degree[static_cast<std::size_t>(a)] < conflict_degree[static_cast<std::size_t>(b)];
    });
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        position[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;

    std::vector<Bitset> adj(static_cast<std::size_t>(n), Bitset(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && !conflicts[static_cast<std::size_t>(order[static_cast<std::size_t>(a)])].test(order[static_cast<std::size_t>(b)]))
                adj[static_cast<std::size_t>(a)].set(b);

    std::vector<int> greedy = greedy_independent_set(conflicts);
    const int workers = worker_count(options);
    CliqueRun run = run_clique(adj, static_cast<int>(greedy.size()), 0, options.node_cap, workers);
    result.nodes = run.nodes;

    std::vector<int> members;
    if (run.best == static_cast<int>(greedy.size())) {
        members = greedy;
    } else if (workers <= 1 || run.capped) {
        for (int k : run.members)
            members.push_back(order[static_cast<std::size_t>(k)]);
    } else {
        // parallel runs agree on the value but not on which optimum they met
        // first; replay serially to return the serial witness
        CliqueRun replay = run_clique(adj, run.best - 1, run.best, options.node_cap, 1);
        result.nodes += replay.nodes;
        const auto& source = replay.best == run.best ? replay.members : run.members;
        for (int k : source)
            members.push_back(order[static_cast<std::size_t>(k)]);
    }
    std::sort(members.begin(), members.end());
    result.members = std::move(members);
    if (run.capped) {
        result.status = SearchStatus::node_cap;
        result.upper_bound = std::max(run.root_bound, static_cast<int>(result.members.size()));
    } else {
        result.status = SearchStatus::optimal;
        result.upper_bound = static_cast<int>(result.members.size());
    }
    return result;
}

// ---------------------------------------------------------------------------
// set cover

namespace {

class CoverSearch {
public:
    CoverSearch(const std::vector<Bitset>& elem_cands, const std::vector<Bitset>& cand_cover, Shared& shared,
                std::atomic<int>& best, std::vector<int>& best_chosen, int stop_at)
        : elem_cands_(elem_cands), cand_cover_(cand_cover), shared_(shared), best_(best), best_chosen_(best_chosen), stop_at_(stop_at) {}

    int disjoint_bound(const Bitset& uncovered, const Bitset& allowed, bool& dead) const
    {
        Bitset used(allowed.size());
        int count = 0;
        dead = false;
        for (int e = uncovered.next(); e >= 0; e = uncovered.next(e + 1)) {
            Bitset s = elem_cands_[static_cast<std::size_t>(e)] & allowed;
            if (s.none()) {
                dead = true;
                return 0;
            }
            if (!s.intersects(used)) {
                ++count;
                used |= s;
            }
        }
        return count;
    }

    // Branching element and its candidates, most-covering first.
    std::vector<int> branch_candidates(const Bitset& uncovered, const Bitset& allowed) const
    {
        int pick = -1, pick_count = 0;
        for (int e = uncovered.next(); e >= 0; e = uncovered.next(e + 1)) {
            int c = elem_cands_[static_cast<std::size_t>(e)].count_and(allowed);
            if (pick < 0 || c < pick_count) {
                pick = e;
                pick_count = c;
            }
        }
        std::vector<int> cands;
        (elem_cands_[static_cast<std::size_t>(pick)] & allowed).for_each([&](int c) { cands.push_back(c); });
        std::vector<int> gain(cands.size());
        for (std::size_t i = 0; i < cands.size(); ++i)
            gain[i] = cand_cover_[static_cast<std::size_t>(cands[i])].count_and(uncovered);
        std::vector<std::size_t> idx(cands.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return gain[a] > gain[b]; });
        std::vector<int> out;
        for (auto i : idx)
            out.push_back(cands[i]);
        return out;
    }

    void search(std::vector<int>& chosen, const Bitset& uncovered, Bitset allowed)
    {
        if (!shared_.tick())
            return;
        const int depth = static_cast<int>(chosen.size());
        if (uncovered.none()) {
            record(chosen);
            return;
        }
        if (depth + 1 >= best_.load(std::memory_order_relaxed))
            return;
        bool dead = false;
        int lb = disjoint_bound(uncovered, allowed, dead);
        if (dead || depth + lb >= best_.load(std::memory_order_relaxed))
            return;
        for (int c : branch_candidates(uncovered, allowed)) {
            step(chosen, uncovered, allowed, c);
            if (shared_.capped.load(std::memory_order_relaxed) || shared_.done.load(std::memory_order_relaxed))
                return;
            allowed.reset(c);
        }
    }

    void step(std::vector<int>& chosen, const Bitset& uncovered, const Bitset& allowed, int c)
    {
        chosen.push_back(c);
        Bitset rest = uncovered;
        rest.subtract(cand_cover_[static_cast<std::size_t>(c)]);
        search(chosen, rest, allowed);
        chosen.pop_back();
    }

private:
    void record(const std::vector<int>& chosen)
    {
        std::lock_guard lock(shared_.mutex);
        if (static_cast<int>(chosen.size()) < best_.load()) {
            best_.store(static_cast<int>(chosen.size()));
            best_chosen_ = chosen;
            if (stop_at_ >= 0 && static_cast<int>(chosen.size()) <= stop_at_)
                shared_.done.store(true);
        }
    }

    const std::vector<Bitset>& elem_cands_;
    const std::vector<Bitset>& cand_cover_;
    Shared& shared_;
    std::atomic<int>& best_;
    std::vector<int>& best_chosen_;
    int stop_at_;
};

struct CoverRun {
    int best = 0;
    std::vector<int> chosen;
    bool capped = false;
    std::uint64_t nodes = 0;
    int root_bound = 0;
};

CoverRun run_cover(const std::vector<Bitset>& elem_cands, const std::vector<Bitset>& cand_cover, const Bitset& allowed,
                   int initial_best, int stop_at, std::uint64_t cap, int workers)
{
    const int num_elements = static_cast<int>(elem_cands.size());
    Shared shared(cap);
    std::atomic<int> best{initial_best};
    std::vector<int> chosen_best;
    CoverSearch search(elem_cands, cand_cover, shared, best, chosen_best, stop_at);
    Bitset uncovered(num_elements);
    uncovered.set_all();

    CoverRun run;
    bool dead = false;
    run.root_bound = search.disjoint_bound(uncovered, allowed, dead);

    if (workers <= 1 || num_elements == 0) {
        std::vector<int> chosen;
        search.search(chosen, uncovered, allowed);
    } else {
        shared.nodes += 1;
        std::vector<int> cands = search.branch_candidates(uncovered, allowed);
        const int branches = static_cast<int>(cands.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (int i = 0; i < branches; ++i) {
            Bitset a = allowed;
            for (int j = 0; j < i; ++j)
                a.reset(cands[static_cast<std::size_t>(j)]);
            std::vector<int> chosen;
            search.step(chosen, uncovered, a, cands[static_cast<std::size_t>(i)]);
        }
    }
    run.best = best.load();
    run.chosen = chosen_best;
    run.capped = shared.capped.load();
    run.nodes = shared.nodes.load();
    return run;
}

std::vector<int> greedy_cover(const std::vector<Bitset>& cand_cover, const Bitset& allowed, int num_elements)
{
    Bitset uncovered(num_elements);
    uncovered.set_all();
    std::vector<int> chosen;
    while (uncovered.any()) {
        int pick = -1, pick_gain = 0;
        allowed.for_each([&](int c) {
            int g = cand_cover[static_cast<std::size_t>(c)].count_and(uncovered);
            if (g > pick_gain) {
                pick = c;
                pick_gain = g;
            }
        });
        if (pick < 0)
            break;
        chosen.push_back(pick);
        uncovered.subtract(cand_cover[static_cast<std::size_t>(pick)]);
    }
    return chosen;
}

}  // namespace

SetCoverResult min_set_cover(int num_candidates, const std::vector<Bitset>& element_candidates, const SearchOptions& options)
{
    SetCoverResult result;
    for (const Bitset& s : element_candidates) {
        if (s.size() != num_candidates)
            throw std::invalid_argument("set cover: element candidate set has the wrong size");
        if (s.none()) {
            result.status = SearchStatus::infeasible;
            return result;
        }
    }

    // drop elements implied by another element (a superset of its candidates)
    const int m = static_cast<int>(element_candidates.size());
    std::vector<int> kept;
    for (int e = 0; e < m; ++e) {
        bool dominated = false;
        for (int f = 0; f < m && !dominated; ++f) {
            if (f == e)
                continue;
            const Bitset& se = element_candidates[static_cast<std::size_t>(e)];
            const Bitset& sf = element_candidates[static_cast<std::size_t>(f)];
            if (sf.is_subset_of(se) && (f < e || !(se.is_subset_of(sf))))
                dominated = true;
        }
        if (!dominated)
            kept.push_back(e);
    }
    std::vector<Bitset> elem_cands;
    for (int e : kept)
        elem_cands.push_back(element_candidates[static_cast<std::size_t>(e)]);
    const int num_elements = static_cast<int>(elem_cands.size());

    std::vector<Bitset> cand_cover(static_cast<std::size_t>(num_candidates), Bitset(num_elements));
    for (int e = 0; e < num_elements; ++e)
        elem_cands[static_cast<std::size_t>(e)].for_each([&](int c) { cand_cover[static_cast<std::size_t>(c)].set(e); });

    // drop candidates whose coverage another candidate contains
    Bitset allowed(num_candidates);
    for (int c = 0; c < num_candidates; ++c) {
        const Bitset& sc = cand_cover[static_cast<std::size_t>(c)];
        if (sc.none())
            continue;
        bool dominated = false;
        for (int d = 0; d < num_candidates && !dominated; ++d) {
            if (d == c)
                continue;
            const Bitset& sd = cand_cover[static_cast<std::size_t>(d)];
            if (sc.is_subset_of(sd) && (d < c || !sd.is_subset_of(sc)))
                dominated = true;
        }
        if (!dominated)
            allowed.set(c);
    }

    std::vector<int> greedy = greedy_cover(cand_cover, allowed, num_elements);
    const int workers = worker_count(options);
    CoverRun run = run_cover(elem_cands, cand_cover, allowed, static_cast<int>(greedy.size()), -1, options.node_cap, workers);
    result.nodes = run.nodes;

    std::vector<int> chosen;
    if (run.best == static_cast<int>(greedy.size())) {
        chosen = greedy;
    } else if (workers <= 1 || run.capped) {
        chosen = run.chosen;
    } else {
        CoverRun replay = run_cover(elem_cands, cand_cover, allowed, run.best + 1, run.best, options.node_cap, 1);
        result.nodes += replay.nodes;
        chosen = replay.best == run.best ? replay.chosen : run.chosen;
    }
    std::sort(chosen.begin(), chosen.end());
    result.chosen = std::move(chosen);
    if (run.capped) {
        result.status = SearchStatus::node_cap;
        result.lower_bound = std::min(run.root_bound, static_cast<int>(result.chosen.size()));
    } else {
        result.status = SearchStatus::optimal;
        result.lower_bound = static_cast<int>(result.chosen.size());
    }
    return result;
}

}  // namespace contgraph
