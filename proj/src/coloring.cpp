#include "segchi/errors.hpp"
#include "segchi/graph.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

namespace segchi {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    std::optional<Clock::time_point> at;

    static Deadline from_budget(std::optional<double> seconds) {
        if (!seconds)
            return {};
        if (*seconds <= 0.0)
            throw InvalidBudget("budget must be positive, got " + std::to_string(*seconds));
        return {Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(*seconds))};
    }
    bool expired() const { return at && Clock::now() >= *at; }
};

std::vector<std::vector<int>> components(const IntersectionGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        std::vector<int> comp{s};
        seen[static_cast<std::size_t>(s)] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int u : g.neighbors(comp[head]))
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Greedy maximal clique, deterministic: highest degree first, ties to the
// lowest index.
std::vector<int> greedy_clique_local(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 0)
        return {};
    auto deg = [&](int v) { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); };
    auto better = [&](int a, int b) { return deg(a) != deg(b) ? deg(a) > deg(b) : a < b; };
    int start = 0;
    for (int v = 1; v < n; ++v)
        if (better(v, start))
            start = v;
    std::vector<int> clique{start};
    for (;;) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (std::find(clique.begin(), clique.end(), v) != clique.end())
                continue;
            bool ok = true;
            for (int c : clique)
                ok = ok && std::find(adj[static_cast<std::size_t>(v)].begin(),
                                     adj[static_cast<std::size_t>(v)].end(),
                                     c) != adj[static_cast<std::size_t>(v)].end();
            if (ok && (pick == -1 || better(v, pick)))
                pick = v;
        }
        if (pick == -1)
            break;
        clique.push_back(pick);
    }
    return clique;
}

// DSATUR greedy heuristic with an unbounded palette; yields the upper bound
// used by chromatic_number.
Coloring dsatur_greedy(const IntersectionGraph& g) {
    int n = g.n();
    Coloring c;
    c.colors.assign(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<bool>> nbr_cols(static_cast<std::size_t>(n));
    std::vector<int> sat(static_cast<std::size_t>(n), 0);
    for (auto& row : nbr_cols)
        row.assign(static_cast<std::size_t>(n) + 1, false);
    int palette = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (c.colors[static_cast<std::size_t>(u)] >= 0)
                continue;
            if (v == -1 || sat[static_cast<std::size_t>(u)] > sat[static_cast<std::size_t>(v)] ||
                (sat[static_cast<std::size_t>(u)] == sat[static_cast<std::size_t>(v)] &&
                 g.degree(u) > g.degree(v)))
                v = u;
        }
        int col = 0;
        while (nbr_cols[static_cast<std::size_t>(v)][static_cast<std::size_t>(col)])
            ++col;
        c.colors[static_cast<std::size_t>(v)] = col;
        palette = std::max(palette, col + 1);
        for (int u : g.neighbors(v))
            if (c.colors[static_cast<std::size_t>(u)] < 0 &&
                !nbr_cols[static_cast<std::size_t>(u)][static_cast<std::size_t>(col)]) {
                nbr_cols[static_cast<std::size_t>(u)][static_cast<std::size_t>(col)] = true;
                ++sat[static_cast<std::size_t>(u)];
            }
    }
    c.palette = palette;
    return c;
}

// Exact search over one component. DSATUR-ordered branch and bound with
// new-color symmetry breaking, plus two structural rules that matter on
// sparse recursive instances:
//  - dynamic deferral: a vertex whose active degree is below its remaining
//    palette always has a free color afterwards, so it leaves the search
//    and is colored greedily in reverse at the end;
//  - dynamic decomposition: once assignments disconnect the active
//    subgraph, the parts are independent and are solved one after another.
// Everything is undone through a single trail, so the search stays an
// exhaustive certificate.
struct CoreSolver {
    enum class Op : std::uint8_t { Assign, Forbid, Defer };
    struct Entry {
        Op op;
        int v;
        int c;
    };

    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> adj;
    std::vector<int> color;            // -1 while not assigned
    std::vector<std::uint64_t> forbid; // colors present among colored neighbours
    std::vector<int> sat;              // popcount(forbid)
    std::vector<int> deg_active;       // active = neither colored nor deferred
    std::vector<bool> deferred;
    std::vector<Entry> trail;
    std::vector<int> defer_order;
    std::vector<int> bfs_mark;
    int mark_stamp = 0;
    const Deadline* deadline = nullptr;
    std::uint64_t nodes = 0;
    bool out_of_time = false;

    void init(std::vector<std::vector<int>> adj_, int k_) {
        adj = std::move(adj_);
        n = static_cast<int>(adj.size());
        k = k_;
        color.assign(static_cast<std::size_t>(n), -1);
        forbid.assign(static_cast<std::size_t>(n), 0);
        sat.assign(static_cast<std::size_t>(n), 0);
        deg_active.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            deg_active[static_cast<std::size_t>(v)] =
                static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        deferred.assign(static_cast<std::size_t>(n), false);
        bfs_mark.assign(static_cast<std::size_t>(n), 0);
    }

    bool active(int v) const {
        return color[static_cast<std::size_t>(v)] < 0 && !deferred[static_cast<std::size_t>(v)];
    }

    // false on a wipeout: some active neighbour lost its last color
    bool do_assign(int v, int c) {
        color[static_cast<std::size_t>(v)] = c;
        trail.push_back({Op::Assign, v, c});
        bool ok = true;
        for (int u : adj[static_cast<std::size_t>(v)]) {
            if (color[static_cast<std::size_t>(u)] >= 0)
                continue;
            if (!deferred[static_cast<std::size_t>(u)])
                --deg_active[static_cast<std::size_t>(u)];
            if (!(forbid[static_cast<std::size_t>(u)] >> c & 1)) {
                forbid[static_cast<std::size_t>(u)] |= std::uint64_t(1) << c;
                ++sat[static_cast<std::size_t>(u)];
                trail.push_back({Op::Forbid, u, c});
                if (!deferred[static_cast<std::size_t>(u)] &&
                    sat[static_cast<std::size_t>(u)] >= k)
                    ok = false;
            }
        }
        return ok;
    }

    void do_defer(int v) {
        deferred[static_cast<std::size_t>(v)] = true;
        defer_order.push_back(v);
        trail.push_back({Op::Defer, v, 0});
        for (int u : adj[static_cast<std::size_t>(v)])
            if (color[static_cast<std::size_t>(u)] < 0 && !deferred[static_cast<std::size_t>(u)])
                --deg_active[static_cast<std::size_t>(u)];
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            Entry e = trail.back();
            trail.pop_back();
            switch (e.op) {
            case Op::Assign:
                color[static_cast<std::size_t>(e.v)] = -1;
                for (int u : adj[static_cast<std::size_t>(e.v)])
                    if (color[static_cast<std::size_t>(u)] < 0 &&
                        !deferred[static_cast<std::size_t>(u)])
                        ++deg_active[static_cast<std::size_t>(u)];
                break;
            case Op::Forbid:
                forbid[static_cast<std::size_t>(e.v)] &= ~(std::uint64_t(1) << e.c);
                --sat[static_cast<std::size_t>(e.v)];
                break;
            case Op::Defer:
                deferred[static_cast<std::size_t>(e.v)] = false;
                defer_order.pop_back();
                for (int u : adj[static_cast<std::size_t>(e.v)])
                    if (color[static_cast<std::size_t>(u)] < 0 &&
                        !deferred[static_cast<std::size_t>(u)])
                        ++deg_active[static_cast<std::size_t>(u)];
                break;
            }
        }
    }

    // Solves the given active vertices (a union of components); returns the
    // new max_used on success, -1 on failure or timeout. On failure the
    // trail is rewound to the entry state.
    int solve_set(const std::vector<int>& verts, int max_used) {
        std::size_t mark = trail.size();

        // deferral to a fixpoint
        std::vector<int> work;
        work.reserve(verts.size());
        for (int v : verts)
            if (active(v))
                work.push_back(v);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v : work)
                if (active(v) &&
                    deg_active[static_cast<std::size_t>(v)] < k - sat[static_cast<std::size_t>(v)]) {
                    do_defer(v);
                    changed = true;
                }
        }

        // split the remaining actives into connected components
        ++mark_stamp;
        std::vector<std::vector<int>> comps;
        for (int s : work) {
            if (!active(s) || bfs_mark[static_cast<std::size_t>(s)] == mark_stamp)
                continue;
            std::vector<int> comp{s};
            bfs_mark[static_cast<std::size_t>(s)] = mark_stamp;
            for (std::size_t head = 0; head < comp.size(); ++head)
                for (int u : adj[static_cast<std::size_t>(comp[head])])
                    if (active(u) && bfs_mark[static_cast<std::size_t>(u)] != mark_stamp) {
                        bfs_mark[static_cast<std::size_t>(u)] = mark_stamp;
                        comp.push_back(u);
                    }
            comps.push_back(std::move(comp));
        }

        for (const std::vector<int>& comp : comps) {
            max_used = solve_component_set(comp, max_used);
            if (max_used < 0) {
                undo_to(mark);
                return -1;
            }
        }
        return max_used;
    }

    // One connected block: branch on the most saturated vertex.
    int solve_component_set(const std::vector<int>& comp, int max_used) {
        ++nodes;
        if ((nodes & 0x3FF) == 0 && deadline->expired()) {
            out_of_time = true;
            return -1;
        }

        int v = -1;
        for (int u : comp) {
            if (!active(u))
                continue;
            if (v == -1 || sat[static_cast<std::size_t>(u)] > sat[static_cast<std::size_t>(v)] ||
                (sat[static_cast<std::size_t>(u)] == sat[static_cast<std::size_t>(v)] &&
                 (deg_active[static_cast<std::size_t>(u)] > deg_active[static_cast<std::size_t>(v)] ||
                  (deg_active[static_cast<std::size_t>(u)] ==
                       deg_active[static_cast<std::size_t>(v)] &&
                   u < v))))
                v = u;
        }
        if (v == -1)
            return max_used; // everything got deferred or colored

        std::vector<int> rest;
        rest.reserve(comp.size());
        for (int u : comp)
            if (u != v && active(u))
                rest.push_back(u);

        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (forbid[static_cast<std::size_t>(v)] >> c & 1)
                continue;
            std::size_t mark = trail.size();
            if (do_assign(v, c)) {
                int r = solve_set(rest, std::max(max_used, c));
                if (r >= 0)
                    return r;
            }
            undo_to(mark);
            if (out_of_time)
                return -1;
        }
        return -1;
    }

    // Colors for deferred vertices, in reverse deferral order.
    void materialize() {
        for (auto it = defer_order.rbegin(); it != defer_order.rend(); ++it) {
            std::uint64_t used = 0;
            for (int u : adj[static_cast<std::size_t>(*it)])
                if (color[static_cast<std::size_t>(u)] >= 0)
                    used |= std::uint64_t(1) << color[static_cast<std::size_t>(u)];
            used |= forbid[static_cast<std::size_t>(*it)];
            int c = 0;
            while (used >> c & 1)
                ++c;
            color[static_cast<std::size_t>(*it)] = c;
        }
    }
};

struct ComponentOutcome {
    Feasibility verdict = Feasibility::Unknown;
    std::vector<int> colors;
    std::uint64_t nodes = 0;
};

ComponentOutcome solve_component(const std::vector<std::vector<int>>& adj, int k,
                                 const Deadline& deadline) {
    int n = static_cast<int>(adj.size());
    ComponentOutcome out;
    out.colors.assign(static_cast<std::size_t>(n), -1);

    if (k == 0) {
        out.verdict = n == 0 ? Feasibility::Yes : Feasibility::No;
        return out;
    }
    if (k >= n) {
        for (int v = 0; v < n; ++v)
            out.colors[static_cast<std::size_t>(v)] = v;
        out.verdict = Feasibility::Yes;
        return out;
    }

    CoreSolver solver;
    solver.init(adj, k);
    solver.deadline = &deadline;

    // Fix a greedy maximal clique to the first colors.
    std::vector<int> clique = greedy_clique_local(adj);
    if (static_cast<int>(clique.size()) > k) {
        out.verdict = Feasibility::No;
        return out;
    }
    int max_used = -1;
    bool dead = false;
    for (std::size_t i = 0; i < clique.size(); ++i) {
        if (!solver.do_assign(clique[i], static_cast<int>(i)))
            dead = true;
        max_used = static_cast<int>(i);
    }

    int r = -1;
    if (!dead) {
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        r = solver.solve_set(all, max_used);
    }
    out.nodes = solver.nodes;
    if (solver.out_of_time) {
        out.verdict = Feasibility::Unknown;
        return out;
    }
    if (r < 0) {
        out.verdict = Feasibility::No;
        return out;
    }
    solver.materialize();
    out.colors = solver.color;
    out.verdict = Feasibility::Yes;
    return out;
}

} // namespace

ColorabilityResult is_k_colorable(const IntersectionGraph& g, int k,
                                  std::optional<double> budget_seconds) {
    if (k < 0)
        throw ValueError("is_k_colorable: k must be >= 0");
    if (k > 64 && k < g.n())
        throw TooLarge("is_k_colorable: palettes above 64 colors are not supported");
    Deadline deadline = Deadline::from_budget(budget_seconds);

    ColorabilityResult res;
    res.verdict = Feasibility::Yes;
    Coloring full;
    full.colors.assign(static_cast<std::size_t>(g.n()), 0);
    full.palette = k;

    for (const auto& comp : components(g)) {
        std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
        for (std::size_t i = 0; i < comp.size(); ++i)
            local[static_cast<std::size_t>(comp[i])] = static_cast<int>(i);
        std::vector<std::vector<int>> adj(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int u : g.neighbors(comp[i]))
                adj[i].push_back(local[static_cast<std::size_t>(u)]);

        ComponentOutcome oc = solve_component(adj, k, deadline);
        res.nodes += oc.nodes;
        if (oc.verdict == Feasibility::No) {
            res.verdict = Feasibility::No;
            res.coloring.reset();
            return res;
        }
        if (oc.verdict == Feasibility::Unknown) {
            res.verdict = Feasibility::Unknown;
            res.coloring.reset();
            return res;
        }
        for (std::size_t i = 0; i < comp.size(); ++i)
            full.colors[static_cast<std::size_t>(comp[i])] = oc.colors[i];
    }

    if (res.verdict == Feasibility::Yes) {
        if (!is_proper(g, full))
            throw Error("internal: solver returned an improper coloring");
        res.coloring = std::move(full);
    }
    return res;
}

ChromaticResult chromatic_number(const IntersectionGraph& g, std::optional<double> budget_seconds) {
    Deadline deadline = Deadline::from_budget(budget_seconds);
    ChromaticResult res;
    if (g.n() == 0) {
        res.exact = 0;
        res.lower = res.upper = 0;
        res.witness = Coloring{};
        return res;
    }
    Coloring greedy = dsatur_greedy(g);
    {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v)
            adj[static_cast<std::size_t>(v)] = g.neighbors(v);
        res.lower = static_cast<int>(greedy_clique_local(adj).size());
    }
    res.upper = greedy.palette;
    res.witness = greedy;

    for (int k = res.lower; k < res.upper; ++k) {
        std::optional<double> remaining;
        if (deadline.at) {
            double left = std::chrono::duration<double>(*deadline.at - Clock::now()).count();
            if (left <= 0.0)
                return res; // proven bracket so far
            remaining = left;
        }
        ColorabilityResult r = is_k_colorable(g, k, remaining);
        if (r.verdict == Feasibility::Yes) {
            res.exact = k;
            res.lower = res.upper = k;
            res.witness = r.coloring;
            return res;
        }
        if (r.verdict == Feasibility::No) {
            res.lower = k + 1;
            continue;
        }
        return res; // budget exhausted: honest bracket
    }
    res.exact = res.upper;
    res.lower = res.upper;
    return res;
}

CriticalityResult is_critical(const IntersectionGraph& g, int k,
                              std::optional<double> budget_seconds) {
    Deadline deadline = Deadline::from_budget(budget_seconds);
    CriticalityResult res;
    res.per_vertex.assign(static_cast<std::size_t>(g.n()), Feasibility::Unknown);
    bool any_unknown = false, any_no = false;
    for (int v = 0; v < g.n(); ++v) {
        std::optional<double> remaining;
        if (deadline.at) {
            double left = std::chrono::duration<double>(*deadline.at - Clock::now()).count();
            if (left <= 0.0) {
                any_unknown = true;
                break;
            }
            remaining = left;
        }
        ColorabilityResult r = is_k_colorable(g.without_vertex(v), k, remaining);
        res.per_vertex[static_cast<std::size_t>(v)] = r.verdict;
        any_unknown = any_unknown || r.verdict == Feasibility::Unknown;
        any_no = any_no || r.verdict == Feasibility::No;
    }
    if (any_no)
        res.critical = false;
    else if (!any_unknown)
        res.critical = true;
    return res;
}

} // namespace segchi
