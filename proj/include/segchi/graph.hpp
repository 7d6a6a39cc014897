#pragma once

#include "segchi/geometry.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace segchi {

struct VertexLabel {
    int segment_id = -1;
    SegmentRole role = SegmentRole::Base;
    std::vector<int> path;
};

// Simple undirected graph with a packed symmetric adjacency matrix.
class IntersectionGraph {
public:
    explicit IntersectionGraph(int n);

    int n() const { return n_; }
    bool adj(int u, int v) const { return bits_[idx(u, v)]; }
    void add_edge(int u, int v);
    int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }
    std::size_t edge_count() const { return edges_; }
    std::vector<int> neighbors(int v) const;

    // Induced subgraph without one vertex; labels follow.
    IntersectionGraph without_vertex(int v) const;

    std::vector<VertexLabel> labels;

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }
    int n_ = 0;
    std::size_t edges_ = 0;
    std::vector<bool> bits_;
    std::vector<int> degree_;
};

// Vertex u is segments[u]; edges are exactly the intersecting pairs.
IntersectionGraph intersection_graph(std::span<const Segment> segments);

struct Triangle {
    int a = -1, b = -1, c = -1;
};

// Exhaustive triple check below the size cutoff, neighborhood intersection
// above it; both exact.
std::optional<Triangle> find_triangle(const IntersectionGraph& g);
inline bool is_triangle_free(const IntersectionGraph& g) { return !find_triangle(g); }

struct Coloring {
    std::vector<int> colors; // 0-based
    int palette = 0;
};

bool is_proper(const IntersectionGraph& g, const Coloring& c);

enum class Feasibility { Yes, No, Unknown };

struct ColorabilityResult {
    Feasibility verdict = Feasibility::Unknown;
    std::optional<Coloring> coloring; // verified proper when verdict == Yes
    bool deterministic = true;        // sequential canonical search order
    std::uint64_t nodes = 0;          // search tree size, for reporting
};

// Exact decision by DSATUR-ordered branch and bound with greedy-clique
// seeding, new-color symmetry breaking, connected-component decomposition
// and peel-to-core preprocessing. No is an exhausted-search certificate.
// budget_seconds: wall clock; nullopt = unlimited; must be > 0.
ColorabilityResult is_k_colorable(const IntersectionGraph& g, int k,
                                  std::optional<double> budget_seconds = std::nullopt);

struct ChromaticResult {
    std::optional<int> exact;
    int lower = 0, upper = 0; // proven bracket; lower == upper == *exact when set
    std::optional<Coloring> witness;
};

// Smallest k admitting a proper coloring; on budget exhaustion the proven
// bracket so far, never a guess.
ChromaticResult chromatic_number(const IntersectionGraph& g,
                                 std::optional<double> budget_seconds = std::nullopt);

struct CriticalityResult {
    std::optional<bool> critical; // nullopt when the budget ran out first
    std::vector<Feasibility> per_vertex;
};

// For established chi(g) = k + 1: every single-vertex deletion must be
// k-colorable.
CriticalityResult is_critical(const IntersectionGraph& g, int k,
                              std::optional<double> budget_seconds = std::nullopt);

// DIMACS "p edge n m", 1-based, one "e u v" line per edge with u < v,
// sorted; canonical byte output.
std::string export_dimacs(const IntersectionGraph& g);

} // namespace segchi
