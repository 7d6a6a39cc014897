#include "segchi/graph.hpp"

#include "segchi/errors.hpp"

#include <algorithm>
#include <sstream>

namespace segchi {

IntersectionGraph::IntersectionGraph(int n) : n_(n) {
    if (n < 0)
        throw ValueError("graph order must be non-negative");
    bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
    degree_.assign(static_cast<std::size_t>(n), 0);
    labels.resize(static_cast<std::size_t>(n));
}

void IntersectionGraph::add_edge(int u, int v) {
    if (u == v)
        throw ValueError("self-loops are not representable");
    if (adj(u, v))
        return;
    bits_[idx(u, v)] = bits_[idx(v, u)] = true;
    ++degree_[static_cast<std::size_t>(u)];
    ++degree_[static_cast<std::size_t>(v)];
    ++edges_;
}

std::vector<int> IntersectionGraph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree(v)));
    for (int u = 0; u < n_; ++u)
        if (adj(v, u))
            out.push_back(u);
    return out;
}

IntersectionGraph IntersectionGraph::without_vertex(int v) const {
    IntersectionGraph g(n_ - 1);
    auto map = [v](int u) { return u < v ? u : u - 1; };
    for (int u = 0; u < n_; ++u)
        if (u != v)
            g.labels[static_cast<std::size_t>(map(u))] = labels[static_cast<std::size_t>(u)];
    for (int u = 0; u < n_; ++u)
        for (int w = u + 1; w < n_; ++w)
            if (u != v && w != v && adj(u, w))
                g.add_edge(map(u), map(w));
    return g;
}

IntersectionGraph intersection_graph(std::span<const Segment> segments) {
    IntersectionGraph g(static_cast<int>(segments.size()));
    for (std::size_t i = 0; i < segments.size(); ++i)
        g.labels[i] = {segments[i].id, segments[i].role, segments[i].path};
    for (std::size_t i = 0; i < segments.size(); ++i)
        for (std::size_t j = i + 1; j < segments.size(); ++j)
            if (segments_intersect(segments[i], segments[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

std::optional<Triangle> find_triangle(const IntersectionGraph& g) {
    int n = g.n();
    if (n <= 5000) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (!g.adj(a, b))
                    continue;
                for (int c = b + 1; c < n; ++c)
                    if (g.adj(a, c) && g.adj(b, c))
                        return Triangle{a, b, c};
            }
        return std::nullopt;
    }
    // Neighborhood intersection for large graphs: for each edge (a,b) scan
    // the shorter neighbor list.
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        nbr[static_cast<std::size_t>(v)] = g.neighbors(v);
    for (int a = 0; a < n; ++a)
        for (int b : nbr[static_cast<std::size_t>(a)]) {
            if (b <= a)
                continue;
            const auto& small = nbr[static_cast<std::size_t>(
                g.degree(a) <= g.degree(b) ? a : b)];
            for (int c : small)
                if (c > b && g.adj(a, c) && g.adj(b, c))
                    return Triangle{a, b, c};
        }
    return std::nullopt;
}

bool is_proper(const IntersectionGraph& g, const Coloring& c) {
    if (c.colors.size() != static_cast<std::size_t>(g.n()))
        return false;
    for (int col : c.colors)
        if (col < 0 || col >= c.palette)
            return false;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adj(u, v) && c.colors[static_cast<std::size_t>(u)] ==
                                   c.colors[static_cast<std::size_t>(v)])
                return false;
    return true;
}

std::string export_dimacs(const IntersectionGraph& g) {
    std::ostringstream os;
    os << "p edge " << g.n() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adj(u, v))
                os << "e " << u + 1 << " " << v + 1 << "\n";
    return os.str();
}

} // namespace segchi
