#pragma once

#include "segchi/geometry.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace segchi {

// Family sizes s_1..s_k and probe counts p_1..p_k from the recurrence
// s_1 = p_1 = 1, s_{i+1} = (p_i + 1) s_i + p_i^2, p_{i+1} = 2 p_i^2.
struct SizeTable {
    int k = 0;
    std::vector<mpz_class> s, p; // s[i-1] holds s_i

    mpz_class tilde(int i) const { return s[i - 1] + p[i - 1]; }
};

SizeTable sizes(int k);

// A level-k family: s_k segments strictly inside rect and, unless tilde,
// the p_k pairwise disjoint probes whose right boundary lies on rect's
// right boundary.
struct Construction {
    int k = 0;
    Rect rect;
    std::vector<Segment> segments;
    std::vector<Probe> probes;
    bool tilde = false;
    // Probe id -> chain of host probe ids (recursion-tree address). Covers
    // the surviving probes; segments carry their own chain in Segment::path.
    std::map<int, std::vector<int>> probe_tree;
};

// Builds (S_k, P_k) inside rect. Deterministic: identical inputs give
// bit-identical output.
Construction build(int k, const Rect& rect);

// Maximal left-anchored sub-rectangle of the band that is internally
// disjoint from every segment. band.x1 must be the enclosing rectangle's
// right boundary; every segment meeting the band must pierce it.
Rect root_of(const Rect& band, std::span<const Segment> segments);

// The lower/upper replacement probes for a consumed child probe q with
// diagonal diag: lower sees inner + outer, upper sees diag + outer. Both
// extend to rect.x1. Postconditions are checked against the passed
// segments.
std::pair<Probe, Probe> make_probe_pair(const Probe& q, const Segment& diag,
                                        std::span<const Segment> inner,
                                        std::span<const Segment> outer, const Rect& rect,
                                        int lower_id, int upper_id);

// S-tilde: drops the probes and adds one diagonal per probe, shrunk in x so
// it stays strictly inside rect while crossing exactly the pierced set.
Construction augment_tilde(const Construction& c);

} // namespace segchi
